#pragma once

// Charts, global frames, the product manifold M×M and the differentiation
// backend for Lie derivatives along lifted frame fields.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "infogeo/dual.hpp"
#include "infogeo/linalg.hpp"

namespace infogeo {

class Chart {
 public:
  using Predicate = std::function<bool(std::span<const double>)>;

  Chart(std::size_t dimension, Predicate domain, std::string label);

  std::size_t dimension() const { return dimension_; }
  const std::string& label() const { return label_; }

  // False for vectors of the wrong length or outside the chart domain.
  bool contains(std::span<const double> coords) const;

 private:
  std::size_t dimension_;
  Predicate domain_;
  std::string label_;
};

struct Point {
  std::vector<double> coords;
  std::string chart_label;
};

// Validated construction; throws DomainError outside the chart.
Point make_point(const Chart& chart, std::vector<double> coords);

// A global frame {X_j} on one chart, stored as coefficient functions.
// vector_coeffs(q) is the d×d matrix whose row j holds X_j^r; the coframe
// matrix Θ has rows θ^j_r with Θ·Xᵀ = I.
//
// Coefficients are available both in double and in D2 so lifted fields can be
// followed along curves with dual-number coordinates.
class Frame {
 public:
  using RealCoeffs = std::function<std::vector<double>(std::span<const double>)>;
  using DualCoeffs = std::function<std::vector<D2>(std::span<const D2>)>;
  using Coframe = std::function<Mat(std::span<const double>)>;

  Frame(std::string label, Chart chart, RealCoeffs real, DualCoeffs dual, Coframe coframe = {});

  // Build both coefficient variants from one generic callable
  // `f(std::span<const T>) -> std::vector<T>`.
  template <typename F>
  static Frame from_generic(std::string label, Chart chart, F f, Coframe coframe = {}) {
    RealCoeffs real = [f](std::span<const double> q) { return f(q); };
    DualCoeffs dual = [f](std::span<const D2> q) { return f(q); };
    return Frame(std::move(label), std::move(chart), std::move(real), std::move(dual), std::move(coframe));
  }

  const std::string& label() const { return label_; }
  const Chart& chart() const { return chart_; }
  std::size_t dimension() const { return chart_.dimension(); }

  Mat vector_coeffs(std::span<const double> q) const;
  std::vector<D2> vector_coeffs(std::span<const D2> q) const;
  bool has_explicit_coframe() const { return static_cast<bool>(coframe_); }
  // Explicit coframe if the frame was registered with one, else the inverse
  // transpose of the vector coefficients.
  Mat coframe_coeffs(std::span<const double> q) const;

 private:
  std::string label_;
  Chart chart_;
  RealCoeffs real_;
  DualCoeffs dual_;
  Coframe coframe_;
};

struct FrameAt {
  Mat vectors;  // X, rows X_j^r
  Mat coframe;  // Θ, rows θ^j_r
};

// Throws DomainError for points outside the chart and NumericError for a
// singular frame.
FrameAt eval_frame(const Frame& frame, const Point& p);

struct ProductPoint {
  Point left;
  Point right;
};

ProductPoint make_product_point(Point left, Point right);
ProductPoint diagonal(const Point& p);
bool is_diagonal(const ProductPoint& pp, double tol = 0.0);

enum class Side { left, right };

// Lifted field 𝕏_j (left) or 𝕐_j (right).
struct FieldRef {
  Side side;
  std::size_t index;
};

// The basis {𝕏_j, 𝕐_j} on M×M generated from a frame on M. Product indices
// run 0..d-1 for 𝕏 and d..2d-1 for 𝕐.
class ProductFrame {
 public:
  explicit ProductFrame(Frame base) : base_(std::move(base)) {}

  const Frame& base() const { return base_; }
  std::size_t base_dimension() const { return base_.dimension(); }
  std::size_t dimension() const { return 2 * base_.dimension(); }

  FieldRef field(std::size_t product_index) const;
  std::size_t index_of(FieldRef f) const;
  std::string field_label(std::size_t product_index) const;

  // Block-diagonal coefficient matrix of the lifted fields in the adapted
  // coordinates (x, y), and the matching coframe {α, β}.
  Mat vector_coeffs(const ProductPoint& pp) const;
  Mat coframe_coeffs(const ProductPoint& pp) const;

 private:
  Frame base_;
};

ProductFrame lift_frame(const Frame& frame);

enum class Scheme { forward_mode, richardson_central };

struct DifferentiationConfig {
  Scheme scheme = Scheme::forward_mode;
  double base_step = 1e-3;
  double relative_tolerance = 1e-6;

  // Throws ConfigError on base_step <= 0 or relative_tolerance outside (0, 1).
  void validate() const;
};

const char* scheme_name(Scheme s);

// A scalar function on M×M in the adapted coordinates (x, y) of a chart.
class TwoPointFunction {
 public:
  using Real = std::function<double(std::span<const double>, std::span<const double>)>;
  using DualFn = std::function<D2(std::span<const D2>, std::span<const D2>)>;

  TwoPointFunction(std::string label, std::string chart_label, Real real, DualFn dual);

  // Build from one generic callable `f(std::span<const T> x, std::span<const T> y) -> T`.
  template <typename F>
  static TwoPointFunction from_generic(std::string label, std::string chart_label, F f) {
    Real real = [f](std::span<const double> x, std::span<const double> y) { return f(x, y); };
    DualFn dual = [f](std::span<const D2> x, std::span<const D2> y) { return f(x, y); };
    return TwoPointFunction(std::move(label), std::move(chart_label), std::move(real), std::move(dual));
  }

  const std::string& label() const { return label_; }
  const std::string& chart_label() const { return chart_label_; }

  double operator()(const ProductPoint& pp) const;
  double evaluate(std::span<const double> x, std::span<const double> y) const { return real_(x, y); }
  D2 evaluate(std::span<const D2> x, std::span<const D2> y) const { return dual_(x, y); }

 private:
  std::string label_;
  std::string chart_label_;
  Real real_;
  DualFn dual_;
};

// L_Z f at pp for the lifted field Z.
double lie_derivative(const TwoPointFunction& f, const ProductFrame& frame, FieldRef field,
                      const ProductPoint& pp, const DifferentiationConfig& cfg);

// L_outer L_inner f at pp.
double second_lie_derivative(const TwoPointFunction& f, const ProductFrame& frame, FieldRef outer,
                             FieldRef inner, const ProductPoint& pp, const DifferentiationConfig& cfg);

// All first derivatives (length 2d) and all ordered second derivatives
// S(a, b) = L_{Z_a} L_{Z_b} f (2d × 2d) in product-index order.
struct DerivativeTable {
  Vec first;
  Mat second;
};
DerivativeTable lie_derivative_table(const TwoPointFunction& f, const ProductFrame& frame,
                                     const ProductPoint& pp, const DifferentiationConfig& cfg);

// Coefficients c^l of [X_j, X_k] = c^l X_l at p, from the coordinate formula
// [X,Y]^r = X^s ∂_s Y^r − Y^s ∂_s X^r contracted with the coframe.
std::vector<double> lie_bracket_coefficients(const Frame& frame, std::size_t j, std::size_t k, const Point& p);

// Full table c(l, j, k) stored as c[(l * d + j) * d + k].
std::vector<double> lie_bracket_table(const Frame& frame, const Point& p);

// The coordinate frame ∂/∂q^r on a chart.
Frame coordinate_frame(const Chart& chart);

// All of R^d, labelled "R^d".
std::string euclidean_chart_label(std::size_t d);
Chart euclidean_chart(std::size_t d);

}  // namespace infogeo
