#include "infogeo/tensor_extraction.hpp"

#include <algorithm>
#include <cmath>

#include "infogeo/errors.hpp"

namespace infogeo {

const char* symmetry_name(Symmetry s) {
  switch (s) {
    case Symmetry::antisymmetric: return "antisymmetric";
    case Symmetry::symmetric: return "symmetric";
    default: return "none";
  }
}

double CovariantTensor2::symmetry_defect() const {
  switch (symmetry) {
    case Symmetry::symmetric: return max_abs(components - components.transpose());
    case Symmetry::antisymmetric: return max_abs(components + components.transpose());
    default: return 0.0;
  }
}

std::vector<double> apply_J(std::span<const double> v) {
  if (v.size() % 2 != 0) throw DomainError("J acts on product components of even length");
  const std::size_t d = v.size() / 2;
  std::vector<double> out(v.size());
  for (std::size_t j = 0; j < d; ++j) {
    out[j] = -v[d + j];
    out[d + j] = v[j];
  }
  return out;
}

Mat j_matrix(std::size_t base_dimension) {
  const std::size_t n = 2 * base_dimension;
  Mat j = Mat::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  std::vector<double> e(n, 0.0);
  for (std::size_t b = 0; b < n; ++b) {
    std::fill(e.begin(), e.end(), 0.0);
    e[b] = 1.0;
    const auto col = apply_J(e);
    for (std::size_t c = 0; c < n; ++c) j(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(b)) = col[c];
  }
  return j;
}

namespace {

using Idx = Eigen::Index;

// Bracket coefficients of the lifted frame: C[(l * n + a) * n + b] with
// [Z_a, Z_b] = C^l_ab Z_l. Mixed brackets [𝕏, 𝕐] vanish.
std::vector<double> lifted_brackets(const ProductFrame& frame, const ProductPoint& pp) {
  const std::size_t d = frame.base_dimension();
  const std::size_t n = 2 * d;
  std::vector<double> c(n * n * n, 0.0);
  const auto left = lie_bracket_table(frame.base(), pp.left);
  const auto right = lie_bracket_table(frame.base(), pp.right);
  for (std::size_t l = 0; l < d; ++l)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        c[(l * n + i) * n + j] = left[(l * d + i) * d + j];
        c[((d + l) * n + d + i) * n + d + j] = right[(l * d + i) * d + j];
      }
  return c;
}

void require_chart(const TwoPointFunction& f, const ProductFrame& frame, const ProductPoint& pp) {
  const Chart& chart = frame.base().chart();
  if (!chart.contains(pp.left.coords) || !chart.contains(pp.right.coords))
    throw DomainError("product point outside the domain of chart '" + chart.label() + "'");
  if (f.chart_label() != chart.label())
    throw DomainError("function '" + f.label() + "' is not defined on chart '" + chart.label() + "'");
}

std::string product_tag(const ProductFrame& frame) { return "lift(" + frame.base().label() + ")"; }

}  // namespace

CovariantTensor2 omega_F(const TwoPointFunction& f, const ProductFrame& frame, const ProductPoint& pp,
                         const DifferentiationConfig& cfg) {
  require_chart(f, frame, pp);
  const std::size_t n = frame.dimension();
  const DerivativeTable t = lie_derivative_table(f, frame, pp, cfg);
  const Mat j = j_matrix(frame.base_dimension());
  const std::vector<double> brackets = lifted_brackets(frame, pp);

  // γ = dF∘J: γ(Z_b) = Σ_c J(c, b) L_{Z_c} F, and Z_a(γ(Z_b)) = Σ_c J(c, b) S(a, c).
  const Vec gamma = j.transpose() * t.first;
  const Mat z_gamma = t.second * j;

  Mat w(static_cast<Idx>(n), static_cast<Idx>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      double bracket_term = 0.0;
      for (std::size_t l = 0; l < n; ++l) bracket_term += brackets[(l * n + a) * n + b] * gamma(static_cast<Idx>(l));
      w(static_cast<Idx>(a), static_cast<Idx>(b)) =
          0.5 * (z_gamma(static_cast<Idx>(a), static_cast<Idx>(b)) - z_gamma(static_cast<Idx>(b), static_cast<Idx>(a)) -
                 bracket_term);
    }
  return CovariantTensor2{std::move(w), product_tag(frame), pp, Symmetry::antisymmetric};
}

CovariantTensor2 omega_F_block_expansion(const TwoPointFunction& f, const ProductFrame& frame,
                                         const ProductPoint& pp, const DifferentiationConfig& cfg) {
  require_chart(f, frame, pp);
  const std::size_t d = frame.base_dimension();
  const auto L = [&](FieldRef outer, FieldRef inner) { return second_lie_derivative(f, frame, outer, inner, pp, cfg); };
  const auto X = [](std::size_t i) { return FieldRef{Side::left, i}; };
  const auto Y = [](std::size_t i) { return FieldRef{Side::right, i}; };

  Vec xf(static_cast<Idx>(d)), yf(static_cast<Idx>(d));
  for (std::size_t l = 0; l < d; ++l) {
    xf(static_cast<Idx>(l)) = lie_derivative(f, frame, X(l), pp, cfg);
    yf(static_cast<Idx>(l)) = lie_derivative(f, frame, Y(l), pp, cfg);
  }
  const auto cl = lie_bracket_table(frame.base(), pp.left);
  const auto cr = lie_bracket_table(frame.base(), pp.right);
  auto contract = [d](const std::vector<double>& c, const Vec& v, std::size_t a, std::size_t b) {
    double s = 0.0;
    for (std::size_t l = 0; l < d; ++l) s += c[(l * d + a) * d + b] * v(static_cast<Idx>(l));
    return s;
  };

  // Coefficients of α^a∧α^b, β^a∧β^b and β^a∧α^b with ∧ = ½(⊗ − ⊗ᵀ).
  Mat w = Mat::Zero(static_cast<Idx>(2 * d), static_cast<Idx>(2 * d));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const double xy_ab = L(X(a), Y(b));
      const double xy_ba = L(X(b), Y(a));
      const double aa = xy_ab - 0.5 * contract(cl, yf, a, b);
      const double aa_t = xy_ba - 0.5 * contract(cl, yf, b, a);
      w(static_cast<Idx>(a), static_cast<Idx>(b)) = 0.5 * (aa - aa_t);

      const double bb = xy_ab + 0.5 * contract(cr, xf, a, b);
      const double bb_t = xy_ba + 0.5 * contract(cr, xf, b, a);
      w(static_cast<Idx>(d + a), static_cast<Idx>(d + b)) = 0.5 * (bb - bb_t);

      const double mixed = L(Y(a), Y(b)) + L(X(b), X(a));
      w(static_cast<Idx>(d + a), static_cast<Idx>(b)) = 0.5 * mixed;
      w(static_cast<Idx>(b), static_cast<Idx>(d + a)) = -0.5 * mixed;
    }
  return CovariantTensor2{std::move(w), product_tag(frame), pp, Symmetry::antisymmetric};
}

CovariantTensor2 g_from_omega(const CovariantTensor2& omega) {
  const auto n = static_cast<std::size_t>(omega.components.rows());
  const Mat j = j_matrix(n / 2);
  CovariantTensor2 g{j.transpose() * omega.components, omega.frame_tag, omega.base, Symmetry::none};
  return g;
}

CovariantTensor2 g_F(const TwoPointFunction& f, const ProductFrame& frame, const ProductPoint& pp,
                     const DifferentiationConfig& cfg) {
  return g_from_omega(omega_F(f, frame, pp, cfg));
}

CovariantTensor2 pullback_diagonal(const CovariantTensor2& t) {
  const auto* pp = std::get_if<ProductPoint>(&t.base);
  if (pp == nullptr) throw DomainError("pullback along the diagonal needs a tensor on M×M");
  if (!is_diagonal(*pp)) throw DomainError("pullback along the diagonal needs a diagonal base point");
  const Idx n = t.components.rows();
  if (n % 2 != 0 || t.components.cols() != n) throw DomainError("tensor is not a product-frame tensor");
  const Idx d = n / 2;
  Mat b(n, d);
  b << Mat::Identity(d, d), Mat::Identity(d, d);
  std::string tag = t.frame_tag;
  if (tag.rfind("lift(", 0) == 0 && tag.back() == ')') tag = tag.substr(5, tag.size() - 6);
  return CovariantTensor2{b.transpose() * t.components * b, tag, pp->left, t.symmetry};
}

CovariantTensor2 extract_divergence_metric(const TwoPointFunction& f, const Frame& frame, const Point& p,
                                           const DifferentiationConfig& cfg, MetricRoute route) {
  if (!frame.chart().contains(p.coords)) throw DomainError("point outside the domain of frame '" + frame.label() + "'");
  const ProductFrame lifted = lift_frame(frame);
  const ProductPoint pp = diagonal(p);
  const std::size_t d = frame.dimension();

  const double value = f(pp);
  if (std::abs(value) > 1e-10)
    throw PreconditionError("'" + f.label() + "' does not vanish on the diagonal at the given point");

  Mat g(static_cast<Idx>(d), static_cast<Idx>(d));
  double grad = 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    grad = std::max(grad, std::abs(lie_derivative(f, lifted, {Side::left, j}, pp, cfg)));
    grad = std::max(grad, std::abs(lie_derivative(f, lifted, {Side::right, j}, pp, cfg)));
  }

  const auto L = [&](FieldRef a, FieldRef b) { return second_lie_derivative(f, lifted, a, b, pp, cfg); };
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = j; k < d; ++k) {
      double v = 0.0;
      switch (route) {
        case MetricRoute::mixed:
          v = -(L({Side::left, j}, {Side::right, k}) + L({Side::left, k}, {Side::right, j}));
          break;
        case MetricRoute::left:
          v = L({Side::left, j}, {Side::left, k}) + L({Side::left, k}, {Side::left, j});
          break;
        case MetricRoute::right:
          v = L({Side::right, j}, {Side::right, k}) + L({Side::right, k}, {Side::right, j});
          break;
      }
      g(static_cast<Idx>(j), static_cast<Idx>(k)) = v;
      g(static_cast<Idx>(k), static_cast<Idx>(j)) = v;
    }

  // First derivatives must vanish relative to the curvature scale of F.
  const double scale = std::max(1.0, max_abs(g));
  if (grad > 1e-6 * scale)
    throw PreconditionError("'" + f.label() + "' has a non-vanishing first derivative on the diagonal");
  return CovariantTensor2{std::move(g), frame.label(), p, Symmetry::symmetric};
}

PsdReport psd_report(const CovariantTensor2& t, double tol) {
  const Mat sym = 0.5 * (t.components + t.components.transpose());
  Eigen::SelfAdjointEigenSolver<Mat> es(sym, Eigen::EigenvaluesOnly);
  const Vec ev = es.eigenvalues();
  PsdReport r;
  r.min_eigenvalue = ev.minCoeff();
  r.max_eigenvalue = ev.maxCoeff();
  for (Idx i = 0; i < ev.size(); ++i)
    if (std::abs(ev(i)) <= tol) ++r.null_directions;
  r.positive_semidefinite = r.min_eigenvalue >= -tol;
  return r;
}

Mat change_of_frame(const Frame& from, const Frame& to, const Point& p) {
  if (from.chart().label() != to.chart().label()) throw DomainError("frames live on different charts");
  const FrameAt a = eval_frame(from, p);
  const FrameAt b = eval_frame(to, p);
  // X' = A X  ⇒  A = X' X⁻¹ = X' Θᵀ.
  return b.vectors * a.coframe.transpose();
}

}  // namespace infogeo
