#include "infogeo/core_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "infogeo/errors.hpp"

namespace infogeo {

Chart::Chart(std::size_t dimension, Predicate domain, std::string label)
    : dimension_(dimension), domain_(std::move(domain)), label_(std::move(label)) {
  if (dimension_ < 1) throw DomainError("chart dimension must be at least 1");
}

bool Chart::contains(std::span<const double> coords) const {
  if (coords.size() != dimension_) return false;
  for (double c : coords)
    if (!std::isfinite(c)) return false;
  return !domain_ || domain_(coords);
}

Point make_point(const Chart& chart, std::vector<double> coords) {
  if (!chart.contains(coords)) {
    std::ostringstream os;
    os << "point outside the domain of chart '" << chart.label() << "'";
    throw DomainError(os.str());
  }
  return Point{std::move(coords), chart.label()};
}

Frame::Frame(std::string label, Chart chart, RealCoeffs real, DualCoeffs dual, Coframe coframe)
    : label_(std::move(label)),
      chart_(std::move(chart)),
      real_(std::move(real)),
      dual_(std::move(dual)),
      coframe_(std::move(coframe)) {}

Mat Frame::vector_coeffs(std::span<const double> q) const {
  const std::vector<double> rm = real_(q);
  if (rm.size() != dimension() * dimension()) throw NumericError("frame coefficients have the wrong size");
  return to_mat(rm, dimension());
}

std::vector<D2> Frame::vector_coeffs(std::span<const D2> q) const { return dual_(q); }

Mat Frame::coframe_coeffs(std::span<const double> q) const {
  if (coframe_) return coframe_(q);
  const Mat x = vector_coeffs(q);
  Eigen::FullPivLU<Mat> lu(x.transpose());
  lu.setThreshold(1e-12);
  if (!lu.isInvertible()) throw NumericError("frame '" + label_ + "' is singular");
  return lu.inverse();
}

FrameAt eval_frame(const Frame& frame, const Point& p) {
  if (!frame.chart().contains(p.coords)) throw DomainError("point outside the domain of frame '" + frame.label() + "'");
  FrameAt out;
  out.vectors = frame.vector_coeffs(std::span<const double>(p.coords));
  Eigen::FullPivLU<Mat> lu(out.vectors);
  lu.setThreshold(1e-12);
  if (!lu.isInvertible()) throw NumericError("frame '" + frame.label() + "' is singular at the given point");
  out.coframe = frame.coframe_coeffs(p.coords);
  if (!out.coframe.allFinite()) throw NumericError("frame '" + frame.label() + "' has a non-finite coframe");
  return out;
}

ProductPoint make_product_point(Point left, Point right) {
  if (left.chart_label != right.chart_label)
    throw DomainError("product point factors live on different charts ('" + left.chart_label + "', '" +
                      right.chart_label + "')");
  if (left.coords.size() != right.coords.size()) throw DomainError("product point factors differ in dimension");
  return ProductPoint{std::move(left), std::move(right)};
}

ProductPoint diagonal(const Point& p) { return ProductPoint{p, p}; }

bool is_diagonal(const ProductPoint& pp, double tol) {
  if (pp.left.chart_label != pp.right.chart_label || pp.left.coords.size() != pp.right.coords.size()) return false;
  for (std::size_t i = 0; i < pp.left.coords.size(); ++i)
    if (std::abs(pp.left.coords[i] - pp.right.coords[i]) > tol) return false;
  return true;
}

FieldRef ProductFrame::field(std::size_t product_index) const {
  const std::size_t d = base_dimension();
  if (product_index >= 2 * d) throw DomainError("product field index out of range");
  return product_index < d ? FieldRef{Side::left, product_index} : FieldRef{Side::right, product_index - d};
}

std::size_t ProductFrame::index_of(FieldRef f) const {
  if (f.index >= base_dimension()) throw DomainError("field index out of range");
  return f.side == Side::left ? f.index : base_dimension() + f.index;
}

std::string ProductFrame::field_label(std::size_t product_index) const {
  const FieldRef f = field(product_index);
  return std::string(f.side == Side::left ? "X" : "Y") + std::to_string(f.index + 1);
}

Mat ProductFrame::vector_coeffs(const ProductPoint& pp) const {
  const auto d = static_cast<Eigen::Index>(base_dimension());
  Mat out = Mat::Zero(2 * d, 2 * d);
  out.topLeftCorner(d, d) = base_.vector_coeffs(std::span<const double>(pp.left.coords));
  out.bottomRightCorner(d, d) = base_.vector_coeffs(std::span<const double>(pp.right.coords));
  return out;
}

Mat ProductFrame::coframe_coeffs(const ProductPoint& pp) const {
  const auto d = static_cast<Eigen::Index>(base_dimension());
  Mat out = Mat::Zero(2 * d, 2 * d);
  out.topLeftCorner(d, d) = base_.coframe_coeffs(pp.left.coords);
  out.bottomRightCorner(d, d) = base_.coframe_coeffs(pp.right.coords);
  return out;
}

ProductFrame lift_frame(const Frame& frame) { return ProductFrame(frame); }

void DifferentiationConfig::validate() const {
  if (!(base_step > 0.0) || !std::isfinite(base_step)) throw ConfigError("base_step must be positive");
  if (!(relative_tolerance > 0.0 && relative_tolerance < 1.0))
    throw ConfigError("relative_tolerance must lie in (0, 1)");
}

const char* scheme_name(Scheme s) {
  return s == Scheme::forward_mode ? "forward_mode" : "richardson_central";
}

TwoPointFunction::TwoPointFunction(std::string label, std::string chart_label, Real real, DualFn dual)
    : label_(std::move(label)), chart_label_(std::move(chart_label)), real_(std::move(real)), dual_(std::move(dual)) {}

double TwoPointFunction::operator()(const ProductPoint& pp) const {
  if (pp.left.chart_label != chart_label_ || pp.right.chart_label != chart_label_)
    throw DomainError("function '" + label_ + "' is defined on chart '" + chart_label_ + "'");
  return real_(pp.left.coords, pp.right.coords);
}

namespace {

// Moves q along the flow line q + s·X_j(q). Its tangent at every q is X_j(q),
// which is all the nested derivative construction needs.
void flow(const Frame& frame, std::vector<double>& q, std::size_t j, double s) {
  const Mat x = frame.vector_coeffs(std::span<const double>(q));
  for (std::size_t r = 0; r < q.size(); ++r)
    q[r] += s * x(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(r));
}

void flow(const Frame& frame, std::vector<D2>& q, std::size_t j, const D2& s) {
  const std::size_t d = q.size();
  const bool constant = std::all_of(q.begin(), q.end(), [](const D2& v) { return is_constant(v); });
  if (constant) {
    std::vector<double> qv(d);
    for (std::size_t r = 0; r < d; ++r) qv[r] = value_of(q[r]);
    const Mat x = frame.vector_coeffs(std::span<const double>(qv));
    for (std::size_t r = 0; r < d; ++r)
      q[r] += s * D2(x(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(r)));
    return;
  }
  const std::vector<D2> x = frame.vector_coeffs(std::span<const D2>(q));
  for (std::size_t r = 0; r < d; ++r) q[r] += s * x[j * d + r];
}

template <typename T>
std::vector<T> lift(const std::vector<double>& v) {
  return std::vector<T>(v.begin(), v.end());
}

void check_chart(const TwoPointFunction& f, const ProductFrame& frame, const ProductPoint& pp) {
  const std::string& chart = frame.base().chart().label();
  if (f.chart_label() != chart)
    throw DomainError("function '" + f.label() + "' lives on chart '" + f.chart_label() + "', frame on '" + chart + "'");
  if (pp.left.chart_label != chart || pp.right.chart_label != chart)
    throw DomainError("product point is not on chart '" + chart + "'");
  if (pp.left.coords.size() != frame.base_dimension() || pp.right.coords.size() != frame.base_dimension())
    throw DomainError("product point has the wrong dimension");
}

double checked(double v, const char* what) {
  if (!std::isfinite(v)) throw NumericError(std::string("non-finite value while computing ") + what);
  return v;
}

struct Shifted {
  std::vector<double> x;
  std::vector<double> y;
};

class RealStencil {
 public:
  RealStencil(const TwoPointFunction& f, const ProductFrame& frame, const ProductPoint& pp)
      : f_(f), frame_(frame), pp_(pp) {}

  // Coordinates after following the given fields by the given amounts.
  std::optional<Shifted> shift(std::span<const FieldRef> fields, std::span<const double> amounts) const {
    Shifted s{pp_.left.coords, pp_.right.coords};
    for (std::size_t i = 0; i < fields.size(); ++i) {
      auto& q = fields[i].side == Side::left ? s.x : s.y;
      flow(frame_.base(), q, fields[i].index, amounts[i]);
      if (!frame_.base().chart().contains(q)) return std::nullopt;
    }
    return s;
  }

  double eval(std::span<const FieldRef> fields, std::span<const double> amounts) const {
    auto s = shift(fields, amounts);
    if (!s) throw NumericError("stencil point left the chart domain");
    return f_.evaluate(std::span<const double>(s->x), std::span<const double>(s->y));
  }

  bool fits(std::span<const FieldRef> fields, double h) const {
    const std::size_t n = fields.size();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<double> amounts(n);
      for (std::size_t i = 0; i < n; ++i) amounts[i] = (mask >> i) & 1u ? -h : h;
      if (!shift(fields, amounts)) return false;
    }
    return true;
  }

 private:
  const TwoPointFunction& f_;
  const ProductFrame& frame_;
  const ProductPoint& pp_;
};

struct Estimate {
  double value;
  double error;
};

constexpr int kRichardsonRefinements = 4;

// Two Richardson levels on a central difference with even-power error series.
template <typename D>
Estimate richardson(D difference, double h) {
  const double a0 = difference(h);
  const double a1 = difference(h / 2.0);
  const double a2 = difference(h / 4.0);
  const double b1 = (4.0 * a1 - a0) / 3.0;
  const double b2 = (4.0 * a2 - a1) / 3.0;
  const double c = (16.0 * b2 - b1) / 15.0;
  return {c, std::abs(c - b2)};
}

double coordinate_scale(const ProductPoint& pp, std::span<const FieldRef> fields) {
  double scale = 1.0;
  for (const auto& f : fields) {
    const auto& q = f.side == Side::left ? pp.left.coords : pp.right.coords;
    for (double c : q) scale = std::max(scale, std::abs(c));
  }
  return scale;
}

double richardson_derivative(const TwoPointFunction& f, const ProductFrame& frame, const ProductPoint& pp,
                             std::span<const FieldRef> fields, const DifferentiationConfig& cfg) {
  RealStencil stencil(f, frame, pp);
  double h = cfg.base_step * coordinate_scale(pp, fields);
  int shrink = 0;
  // Keep the outermost stencil points at most halfway to the chart boundary.
  while (!stencil.fits(fields, 2.0 * h)) {
    h /= 2.0;
    if (++shrink > 60) throw NumericError("no finite-difference step fits inside the chart domain");
  }

  auto difference = [&](double step) {
    if (fields.size() == 1) {
      const double plus[] = {step};
      const double minus[] = {-step};
      return (stencil.eval(fields, plus) - stencil.eval(fields, minus)) / (2.0 * step);
    }
    const double pp_[] = {step, step};
    const double pm[] = {step, -step};
    const double mp[] = {-step, step};
    const double mm[] = {-step, -step};
    return (stencil.eval(fields, pp_) - stencil.eval(fields, pm) - stencil.eval(fields, mp) + stencil.eval(fields, mm)) /
           (4.0 * step * step);
  };

  Estimate best = richardson(difference, h);
  // Refine while the level-to-level change exceeds the tolerance and keeps
  // shrinking; stops once rounding starts to dominate.
  for (int pass = 0; pass < kRichardsonRefinements && best.error > cfg.relative_tolerance * std::abs(best.value);
       ++pass) {
    h /= 4.0;
    const Estimate finer = richardson(difference, h);
    if (!std::isfinite(finer.value) || finer.error >= best.error) break;
    best = finer;
  }
  return checked(best.value, "a Richardson derivative");
}

}  // namespace

double lie_derivative(const TwoPointFunction& f, const ProductFrame& frame, FieldRef field, const ProductPoint& pp,
                      const DifferentiationConfig& cfg) {
  check_chart(f, frame, pp);
  frame.index_of(field);
  if (cfg.scheme == Scheme::richardson_central) {
    const FieldRef fields[] = {field};
    return richardson_derivative(f, frame, pp, fields, cfg);
  }
  auto x = lift<D2>(pp.left.coords);
  auto y = lift<D2>(pp.right.coords);
  flow(frame.base(), field.side == Side::left ? x : y, field.index, seed_inner(0.0));
  const D2 v = f.evaluate(std::span<const D2>(x), std::span<const D2>(y));
  return checked(inner_derivative(v), "a first Lie derivative");
}

double second_lie_derivative(const TwoPointFunction& f, const ProductFrame& frame, FieldRef outer, FieldRef inner,
                             const ProductPoint& pp, const DifferentiationConfig& cfg) {
  check_chart(f, frame, pp);
  frame.index_of(outer);
  frame.index_of(inner);
  if (cfg.scheme == Scheme::richardson_central) {
    const FieldRef fields[] = {outer, inner};
    return richardson_derivative(f, frame, pp, fields, cfg);
  }
  auto x = lift<D2>(pp.left.coords);
  auto y = lift<D2>(pp.right.coords);
  flow(frame.base(), outer.side == Side::left ? x : y, outer.index, seed_outer(0.0));
  flow(frame.base(), inner.side == Side::left ? x : y, inner.index, seed_inner(0.0));
  const D2 v = f.evaluate(std::span<const D2>(x), std::span<const D2>(y));
  return checked(mixed_derivative(v), "a second Lie derivative");
}

DerivativeTable lie_derivative_table(const TwoPointFunction& f, const ProductFrame& frame, const ProductPoint& pp,
                                     const DifferentiationConfig& cfg) {
  const std::size_t n = frame.dimension();
  DerivativeTable t{Vec(static_cast<Eigen::Index>(n)), Mat(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n))};
  for (std::size_t a = 0; a < n; ++a) {
    t.first(static_cast<Eigen::Index>(a)) = lie_derivative(f, frame, frame.field(a), pp, cfg);
    for (std::size_t b = 0; b < n; ++b)
      t.second(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
          second_lie_derivative(f, frame, frame.field(a), frame.field(b), pp, cfg);
  }
  return t;
}

std::vector<double> lie_bracket_table(const Frame& frame, const Point& p) {
  const std::size_t d = frame.dimension();
  if (!frame.chart().contains(p.coords)) throw DomainError("point outside the domain of frame '" + frame.label() + "'");
  const Mat x = frame.vector_coeffs(std::span<const double>(p.coords));
  const Mat theta = frame.coframe_coeffs(p.coords);

  // deriv[j](k, r) = X_j(X_k^r): derivative of the coefficients along X_j.
  std::vector<Mat> deriv(d, Mat(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d)));
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<D2> q(d);
    for (std::size_t r = 0; r < d; ++r)
      q[r] = D2(D1{p.coords[r], x(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(r))}, D1{0.0, 0.0});
    const std::vector<D2> c = frame.vector_coeffs(std::span<const D2>(q));
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t r = 0; r < d; ++r)
        deriv[j](static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(r)) =
            checked(inner_derivative(c[k * d + r]), "frame coefficient derivatives");
  }

  std::vector<double> table(d * d * d, 0.0);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) {
      const Vec bracket = (deriv[j].row(static_cast<Eigen::Index>(k)) - deriv[k].row(static_cast<Eigen::Index>(j)))
                              .transpose();
      const Vec c = theta * bracket;
      for (std::size_t l = 0; l < d; ++l) table[(l * d + j) * d + k] = c(static_cast<Eigen::Index>(l));
    }
  return table;
}

std::vector<double> lie_bracket_coefficients(const Frame& frame, std::size_t j, std::size_t k, const Point& p) {
  const std::size_t d = frame.dimension();
  if (j >= d || k >= d) throw DomainError("frame index out of range");
  const std::vector<double> table = lie_bracket_table(frame, p);
  std::vector<double> c(d);
  for (std::size_t l = 0; l < d; ++l) c[l] = table[(l * d + j) * d + k];
  return c;
}

Frame coordinate_frame(const Chart& chart) {
  const std::size_t d = chart.dimension();
  return Frame::from_generic("coordinate", chart, [d](auto q) {
    using T = typename decltype(q)::value_type;
    std::vector<std::remove_const_t<T>> x(d * d, 0.0);
    for (std::size_t i = 0; i < d; ++i) x[i * d + i] = 1.0;
    return x;
  });
}

}  // namespace infogeo

namespace infogeo {

std::string euclidean_chart_label(std::size_t d) { return "R^" + std::to_string(d); }

Chart euclidean_chart(std::size_t d) {
  if (d < 1) throw DomainError("a chart needs dimension >= 1");
  return Chart(
      d, [](std::span<const double> q) { return std::all_of(q.begin(), q.end(), [](double v) { return std::isfinite(v); }); },
      euclidean_chart_label(d));
}

}  // namespace infogeo
