#include "infogeo/divergence.hpp"

#include <algorithm>
#include <cmath>

#include "infogeo/errors.hpp"

namespace infogeo {

namespace {

template <typename T>
T kl_sum(std::span<const T> pc, std::span<const T> qc) {
  using std::log;
  const std::vector<T> p = reconstruct_probabilities(pc);
  const std::vector<T> q = reconstruct_probabilities(qc);
  T s = T(0.0);
  for (std::size_t r = 0; r < p.size(); ++r) s = s + p[r] * (log(p[r]) - log(q[r]));
  return s;
}

template <typename T>
T umegaki_core(std::span<const T> p, std::span<const T> q, const CMatT<T>& w) {
  using std::log;
  T s = T(0.0);
  std::vector<T> log_q(q.size());
  for (std::size_t j = 0; j < q.size(); ++j) log_q[j] = log(q[j]);
  for (std::size_t i = 0; i < p.size(); ++i) {
    s = s + p[i] * log(p[i]);
    T cross = T(0.0);
    for (std::size_t j = 0; j < q.size(); ++j) cross = cross + log_q[j] * norm2(w(i, j));
    s = s - p[i] * cross;
  }
  return s;
}

}  // namespace

double kl_divergence(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) throw DomainError("probability vectors differ in length");
  const SimplexPoint a = make_simplex_point(std::vector<double>(p.begin(), p.end()));
  const SimplexPoint b = make_simplex_point(std::vector<double>(q.begin(), q.end()));
  double s = 0.0;
  for (std::size_t r = 0; r < a.size(); ++r) s += a.probs[r] * std::log(a.probs[r] / b.probs[r]);
  return s;
}

double quadratic_divergence(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw DomainError("vectors differ in length");
  double s = 0.0;
  for (std::size_t r = 0; r < x.size(); ++r) s += (x[r] - y[r]) * (x[r] - y[r]);
  return 0.5 * s;
}

double umegaki_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.rho.rows() != sigma.rho.rows()) throw DomainError("density matrices differ in size");
  const DensityMatrix a = make_density_matrix(rho.rho);
  const DensityMatrix b = make_density_matrix(sigma.rho);
  return (a.rho * (matrix_log_pd(a.rho) - matrix_log_pd(b.rho))).trace().real();
}

double umegaki_pullback(const UnfoldedQuantumPoint& a, const UnfoldedQuantumPoint& b) {
  const UnfoldedQuantumPoint pa = make_unfolded_point(a.u, a.p);
  const UnfoldedQuantumPoint pb = make_unfolded_point(b.u, b.p);
  if (pa.p.size() != pb.p.size()) throw DomainError("points live on different dimensions");
  const CMatT<double> w = CMatT<double>::from(pa.u.adjoint() * pb.u);
  return umegaki_core<double>(pa.p.probs, pb.p.probs, w);
}

TwoPointFunction kl_function(std::size_t n) {
  if (n < 2) throw DomainError("the simplex needs N >= 2 outcomes");
  return TwoPointFunction::from_generic("kl", simplex_chart_label(n), [](auto x, auto y) {
    using T = std::remove_const_t<typename decltype(x)::value_type>;
    return kl_sum<T>(x, y);
  });
}

TwoPointFunction quadratic_function(std::size_t d) {
  return TwoPointFunction::from_generic("quadratic", euclidean_chart(d).label(), [](auto x, auto y) {
    using T = std::remove_const_t<typename decltype(x)::value_type>;
    T s = T(0.0);
    for (std::size_t r = 0; r < x.size(); ++r) s = s + (x[r] - y[r]) * (x[r] - y[r]);
    return T(0.5) * s;
  });
}

TwoPointFunction signed_sum_function(const Chart& chart) {
  return TwoPointFunction::from_generic("signed-sum", chart.label(), [](auto x, auto y) {
    using T = std::remove_const_t<typename decltype(x)::value_type>;
    T s = T(0.0);
    for (std::size_t r = 0; r < x.size(); ++r) s = s + (x[r] - y[r]);
    return s;
  });
}

TwoPointFunction umegaki_function(const GellMannBasis& basis) {
  const std::size_t n = basis.n;
  const std::size_t dq = basis.size();
  // Generator entries flattened as entries[a][i * n + j].
  std::vector<std::vector<cplx>> entries(dq, std::vector<cplx>(n * n));
  for (std::size_t a = 0; a < dq; ++a)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        entries[a][i * n + j] = basis[a](static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));

  return TwoPointFunction::from_generic("umegaki", su_times_simplex_label(n), [entries, n, dq](auto x, auto y) {
    using T = std::remove_const_t<typename decltype(x)::value_type>;
    auto exp_of = [&](std::span<const T> t) {
      CMatT<T> m(n);
      for (std::size_t a = 0; a < dq; ++a) {
        if (value_of(t[a]) == 0.0 && is_constant(t[a])) continue;
        for (std::size_t k = 0; k < n * n; ++k) {
          const cplx e = entries[a][k];
          if (e == cplx(0.0, 0.0)) continue;
          m(k / n, k % n) += Cx<T>{T(e.real()) * t[a], T(e.imag()) * t[a]};
        }
      }
      return expm_taylor(m);
    };
    const CMatT<T> w = exp_of(x.subspan(0, dq)).adjoint() * exp_of(y.subspan(0, dq));
    const std::vector<T> p = reconstruct_probabilities(x.subspan(dq));
    const std::vector<T> q = reconstruct_probabilities(y.subspan(dq));
    return umegaki_core<T>(p, q, w);
  });
}

AxiomReport check_divergence_axioms(const TwoPointFunction& f, const Frame& frame, const PointSampler& sampler,
                                    std::size_t n, const DifferentiationConfig& cfg, std::uint64_t seed) {
  cfg.validate();
  Rng rng(seed);
  AxiomReport report;
  report.samples = n;
  report.min_offdiagonal_value = std::numeric_limits<double>::infinity();
  const ProductFrame lifted = lift_frame(frame);

  for (std::size_t i = 0; i < n; ++i) {
    const Point a = sampler(rng);
    const Point b = sampler(rng);
    const double v = f(make_product_point(a, b));
    report.min_offdiagonal_value = std::min(report.min_offdiagonal_value, v);
    if (!(v >= -kNonnegativitySlack)) ++report.nonnegativity_violations;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const ProductPoint pp = diagonal(sampler(rng));
    const double v = f(pp);
    report.max_diagonal_abs = std::max(report.max_diagonal_abs, std::abs(v));
    if (!(std::abs(v) <= kDiagonalZeroTolerance)) ++report.diagonal_zero_violations;
    for (std::size_t k = 0; k < lifted.dimension(); ++k) {
      const double g = lie_derivative(f, lifted, lifted.field(k), pp, cfg);
      report.diagonal_gradient_max = std::max(report.diagonal_gradient_max, std::abs(g));
    }
  }
  if (n == 0) report.min_offdiagonal_value = 0.0;
  return report;
}

}  // namespace infogeo
