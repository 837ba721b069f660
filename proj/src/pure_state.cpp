#include "infogeo/pure_state.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "infogeo/errors.hpp"
#include "infogeo/tensor_extraction.hpp"

namespace infogeo {

namespace {
using Idx = Eigen::Index;

// ψ_r(s) = √(p_r + s dp_r) e^{i(θ_r + s dθ_r)} for one component.
template <typename T>
Cx<T> amplitude(const T& p, const T& theta) {
  using std::cos;
  using std::sin;
  using std::sqrt;
  const T r = sqrt(p);
  return {r * cos(theta), r * sin(theta)};
}

double max_entry_step(const AmplitudeCoordinates& ac, std::span<const double> dp, double h) {
  // Keep every p_r ± h·dp_r inside the positive orthant.
  for (int i = 0; i < 60; ++i) {
    bool ok = true;
    for (std::size_t r = 0; r < dp.size(); ++r)
      if (!(ac.p.probs[r] - h * std::abs(dp[r]) > 0.0)) ok = false;
    if (ok) return h;
    h *= 0.5;
  }
  throw NumericError("no admissible finite-difference step for the amplitude pushforward");
}

CVec central_difference(const AmplitudeCoordinates& ac, std::span<const double> dp, std::span<const double> dth,
                        double h) {
  const std::size_t n = ac.p.size();
  CVec d(static_cast<Idx>(n));
  for (std::size_t r = 0; r < n; ++r) {
    const Cx<double> plus = amplitude(ac.p.probs[r] + h * dp[r], ac.theta[r] + h * dth[r]);
    const Cx<double> minus = amplitude(ac.p.probs[r] - h * dp[r], ac.theta[r] - h * dth[r]);
    d(static_cast<Idx>(r)) = cplx(plus.re - minus.re, plus.im - minus.im) / (2.0 * h);
  }
  return d;
}

bool within(double deviation, double expected_scale) { return deviation <= 1e-8 * std::max(1.0, expected_scale); }
}  // namespace

HilbertPoint make_hilbert_point(CVec psi) {
  if (psi.size() < 1) throw DomainError("state vector is empty");
  if (!psi.allFinite()) throw DomainError("state vector has non-finite entries");
  if (!(psi.norm() > 0.0)) throw DomainError("the zero vector is not in the punctured Hilbert space");
  return HilbertPoint{std::move(psi)};
}

std::vector<double> to_real(const CVec& v) {
  const auto n = static_cast<std::size_t>(v.size());
  std::vector<double> out(2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    out[k] = v(static_cast<Idx>(k)).real();
    out[n + k] = v(static_cast<Idx>(k)).imag();
  }
  return out;
}

CVec to_complex(std::span<const double> v) {
  if (v.size() % 2 != 0) throw DomainError("real tangent vector must have even length");
  const std::size_t n = v.size() / 2;
  CVec out(static_cast<Idx>(n));
  for (std::size_t k = 0; k < n; ++k) out(static_cast<Idx>(k)) = cplx(v[k], v[n + k]);
  return out;
}

cplx hermitian_tensor_h(const HilbertPoint& psi, const CVec& u, const CVec& v) {
  const CVec& s = psi.psi;
  if (u.size() != s.size() || v.size() != s.size()) throw DomainError("tangent vectors have the wrong length");
  const double nn = s.squaredNorm();
  if (!(nn > 0.0)) throw DomainError("h is undefined at the zero vector");
  return u.dot(v) / nn - u.dot(s) * s.dot(v) / (nn * nn);
}

HermitianParts hermitian_tensor_parts(const HilbertPoint& psi) {
  const auto n = static_cast<std::size_t>(psi.psi.size());
  const std::size_t d = 2 * n;
  std::vector<CVec> basis;
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<double> e(d, 0.0);
    e[k] = 1.0;
    basis.push_back(to_complex(e));
  }
  HermitianParts out{Mat(static_cast<Idx>(d), static_cast<Idx>(d)), Mat(static_cast<Idx>(d), static_cast<Idx>(d))};
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const cplx h = hermitian_tensor_h(psi, basis[a], basis[b]);
      out.re(static_cast<Idx>(a), static_cast<Idx>(b)) = h.real();
      out.im(static_cast<Idx>(a), static_cast<Idx>(b)) = h.imag();
    }
  return out;
}

std::vector<double> complex_structure_H0(std::span<const double> v) {
  if (v.size() % 2 != 0) throw DomainError("real tangent vector must have even length");
  const std::size_t n = v.size() / 2;
  std::vector<double> out(v.size());
  for (std::size_t k = 0; k < n; ++k) {
    out[k] = -v[n + k];
    out[n + k] = v[k];
  }
  return out;
}

Mat complex_structure_matrix(std::size_t n) {
  const auto m = static_cast<Idx>(n);
  Mat j = Mat::Zero(2 * m, 2 * m);
  j.block(m, 0, m, m) = Mat::Identity(m, m);
  j.block(0, m, m, m) = -Mat::Identity(m, m);
  return j;
}

double kahler_potential(const HilbertPoint& psi) { return std::log(psi.psi.squaredNorm()); }

KahlerTensors kahler_from_potential(const HilbertPoint& psi, const DifferentiationConfig& cfg) {
  cfg.validate();
  const auto n = static_cast<std::size_t>(psi.psi.size());
  const std::size_t d = 2 * n;
  const Chart chart = euclidean_chart(d);
  const ProductFrame frame = lift_frame(coordinate_frame(chart));
  // F depends on the left factor only; the product machinery then yields its
  // Hessian from second Lie derivatives along the lifted coordinate fields.
  const TwoPointFunction f = TwoPointFunction::from_generic("ln<psi|psi>", chart.label(), [](auto x, auto) {
    using T = std::remove_const_t<typename decltype(x)::value_type>;
    using std::log;
    T s = T(0.0);
    for (const auto& c : x) s = s + c * c;
    return log(s);
  });

  const ProductPoint pp = diagonal(make_point(chart, to_real(psi.psi)));
  Mat hess(static_cast<Idx>(d), static_cast<Idx>(d));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a; b < d; ++b) {
      const double v = second_lie_derivative(f, frame, {Side::left, a}, {Side::left, b}, pp, cfg);
      hess(static_cast<Idx>(a), static_cast<Idx>(b)) = v;
      hess(static_cast<Idx>(b), static_cast<Idx>(a)) = v;
    }

  const Mat j = complex_structure_matrix(n);
  const Mat hj = hess * j;
  KahlerTensors out;
  out.raw = 0.5 * (hj - hj.transpose());
  out.omega = -0.5 * out.raw;
  out.g = out.omega * j;
  return out;
}

AmplitudeCoordinates make_amplitude_coordinates(std::vector<double> p, std::vector<double> theta) {
  if (p.size() != theta.size()) throw DomainError("p and theta differ in length");
  for (double t : theta)
    if (!std::isfinite(t)) throw DomainError("phase is not finite");
  return AmplitudeCoordinates{make_simplex_point(std::move(p)), std::move(theta)};
}

HilbertPoint amplitude_embedding(const AmplitudeCoordinates& ac) {
  const std::size_t n = ac.p.size();
  if (ac.theta.size() != n) throw DomainError("p and theta differ in length");
  CVec psi(static_cast<Idx>(n));
  for (std::size_t r = 0; r < n; ++r) psi(static_cast<Idx>(r)) = std::polar(std::sqrt(ac.p.probs[r]), ac.theta[r]);
  return make_hilbert_point(std::move(psi));
}

CVec amplitude_pushforward(const AmplitudeCoordinates& ac, std::span<const double> dp, std::span<const double> dtheta,
                           const DifferentiationConfig& cfg) {
  cfg.validate();
  const std::size_t n = ac.p.size();
  if (dp.size() != n || dtheta.size() != n) throw DomainError("tangent has the wrong length");
  if (cfg.scheme == Scheme::forward_mode) {
    CVec d(static_cast<Idx>(n));
    for (std::size_t r = 0; r < n; ++r) {
      const Cx<D1> z = amplitude(D1{ac.p.probs[r], dp[r]}, D1{ac.theta[r], dtheta[r]});
      d(static_cast<Idx>(r)) = cplx(z.re.eps, z.im.eps);
    }
    return d;
  }
  // Two levels of Richardson extrapolation of the central difference.
  const double h = max_entry_step(ac, dp, cfg.base_step);
  const CVec d1 = central_difference(ac, dp, dtheta, h);
  const CVec d2 = central_difference(ac, dp, dtheta, h / 2);
  const CVec d4 = central_difference(ac, dp, dtheta, h / 4);
  const CVec r1 = (4.0 * d2 - d1) / 3.0;
  const CVec r2 = (4.0 * d4 - d2) / 3.0;
  return (16.0 * r2 - r1) / 15.0;
}

FisherRaoRecoveryReport verify_fisher_rao_recovery(const SimplexPoint& p, const DifferentiationConfig& cfg,
                                                   std::uint64_t seed) {
  cfg.validate();
  const SimplexPoint checked = make_simplex_point(p.probs);
  const std::size_t n = checked.size();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  std::normal_distribution<double> gauss(0.0, 1.0);

  std::vector<double> theta(n);
  for (auto& t : theta) t = phase(rng);
  const AmplitudeCoordinates ac{checked, theta};
  const HilbertPoint psi = amplitude_embedding(ac);
  const std::vector<double> zero(n, 0.0);

  FisherRaoRecoveryReport rep;
  const std::size_t d = n - 1;
  rep.re_h_p_frame = Mat(static_cast<Idx>(d), static_cast<Idx>(d));
  std::vector<CVec> pushed;
  for (std::size_t j = 0; j < d; ++j) pushed.push_back(amplitude_pushforward(ac, p_field_ambient(n, j), zero, cfg));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k)
      rep.re_h_p_frame(static_cast<Idx>(j), static_cast<Idx>(k)) = hermitian_tensor_h(psi, pushed[j], pushed[k]).real();
  rep.quarter_fisher_rao = 0.25 * fisher_rao_metric(checked).components;
  rep.re_h_relative = relative_deviation(rep.re_h_p_frame, rep.quarter_fisher_rao);

  auto expectation = [&](const std::vector<double>& f) {
    double s = 0.0;
    for (std::size_t r = 0; r < n; ++r) s += checked.probs[r] * f[r];
    return s;
  };
  auto random_vector = [&](bool sum_zero) {
    std::vector<double> v(n);
    double mean = 0.0;
    for (auto& x : v) {
      x = gauss(rng);
      mean += x;
    }
    if (sum_zero)
      for (auto& x : v) x -= mean / static_cast<double>(n);
    return v;
  };

  bool ok = rep.re_h_relative <= 1e-6;
  for (int trial = 0; trial < 8; ++trial) {
    // Mixed block: u moves only p, v only θ. With ∧ = ⊗ − ⊗ the covariance
    // term evaluates to ½(E[dln p(u) dθ(v)] − E[dln p(u)] E[dθ(v)]).
    const std::vector<double> a = random_vector(true);
    const std::vector<double> b = random_vector(false);
    const CVec u = amplitude_pushforward(ac, a, zero, cfg);
    const CVec v = amplitude_pushforward(ac, zero, b, cfg);
    std::vector<double> dlnp(n), prod(n);
    for (std::size_t r = 0; r < n; ++r) {
      dlnp[r] = a[r] / checked.probs[r];
      prod[r] = dlnp[r] * b[r];
    }
    const double expected_mixed = 0.5 * (expectation(prod) - expectation(dlnp) * expectation(b));
    const double dev_mixed = std::abs(hermitian_tensor_h(psi, u, v).imag() - expected_mixed);
    rep.im_h_mixed_deviation = std::max(rep.im_h_mixed_deviation, dev_mixed);
    ok = ok && within(dev_mixed, std::abs(expected_mixed));

    // Phase block: Re h on two dθ tangents is the covariance under p.
    const std::vector<double> b2 = random_vector(false);
    const CVec v2 = amplitude_pushforward(ac, zero, b2, cfg);
    std::vector<double> bb(n);
    for (std::size_t r = 0; r < n; ++r) bb[r] = b[r] * b2[r];
    const double expected_cov = expectation(bb) - expectation(b) * expectation(b2);
    const double dev_cov = std::abs(hermitian_tensor_h(psi, v, v2).real() - expected_cov);
    rep.phase_block_deviation = std::max(rep.phase_block_deviation, dev_cov);
    ok = ok && within(dev_cov, std::abs(expected_cov));
  }

  const std::vector<double> constant(n, 0.7);
  const CVec vc = amplitude_pushforward(ac, zero, constant, cfg);
  rep.constant_phase_value = std::abs(hermitian_tensor_h(psi, vc, vc).real());
  rep.passed = ok && rep.constant_phase_value <= 1e-9;
  return rep;
}

}  // namespace infogeo
