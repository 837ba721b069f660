#include "infogeo/suites.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <map>

#include "infogeo/divergence.hpp"
#include "infogeo/errors.hpp"
#include "infogeo/pure_state.hpp"
#include "infogeo/quantum.hpp"
#include "infogeo/sampling.hpp"
#include "infogeo/simplex.hpp"
#include "infogeo/tensor_extraction.hpp"

namespace infogeo {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {
using Idx = Eigen::Index;

// Independent stream for the partner points of off-diagonal checks, so that
// explicit and random point lists get the same partners for a given seed.
constexpr std::uint64_t kPartnerStream = 0x9e3779b97f4a7c15ULL;
constexpr double kUmegakiOffsetRadius = 0.5;

class SuiteBuilder {
 public:
  explicit SuiteBuilder(VerificationReport& r) : r_(r) {}

  void add(const std::string& id, const std::string& description, long point, const std::vector<double>& coords,
           double deviation, double tolerance) {
    CheckRow row{id, point, coords, deviation, tolerance, deviation <= tolerance};
    auto it = index_.find(id);
    if (it == index_.end()) {
      it = index_.emplace(id, r_.summaries.size()).first;
      r_.summaries.push_back(CheckSummary{id, description, 0, 0, 0.0, tolerance});
    }
    CheckSummary& s = r_.summaries[it->second];
    ++s.points;
    if (!row.pass) ++s.failures;
    // NaN deviations count as failures and are reported as such.
    if (std::isnan(deviation) || deviation > s.max_deviation) s.max_deviation = deviation;
    r_.rows.push_back(std::move(row));
  }

 private:
  VerificationReport& r_;
  std::map<std::string, std::size_t> index_;
};

// ---- point parsing ---------------------------------------------------------

std::vector<double> real_vector(const json& v, std::size_t n, const std::string& what) {
  if (!v.is_array() || v.size() != n)
    throw ConfigError(what + " must be a list of " + std::to_string(n) + " numbers");
  std::vector<double> out;
  for (const auto& x : v) {
    if (!x.is_number()) throw ConfigError(what + " must contain numbers only");
    out.push_back(x.get<double>());
  }
  return out;
}

cplx complex_number(const json& v, const std::string& what) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return {v[0].get<double>(), v[1].get<double>()};
  throw ConfigError(what + " entries must be numbers or [re, im] pairs");
}

CVec complex_vector(const json& v, std::size_t n, const std::string& what) {
  if (!v.is_array() || v.size() != n) throw ConfigError(what + " must have " + std::to_string(n) + " entries");
  CVec out(static_cast<Idx>(n));
  for (std::size_t i = 0; i < n; ++i) out(static_cast<Idx>(i)) = complex_number(v[i], what);
  return out;
}

CMat complex_matrix(const json& v, std::size_t n, const std::string& what) {
  if (!v.is_array() || v.size() != n) throw ConfigError(what + " must have " + std::to_string(n) + " rows");
  CMat out(static_cast<Idx>(n), static_cast<Idx>(n));
  for (std::size_t i = 0; i < n; ++i) out.row(static_cast<Idx>(i)) = complex_vector(v[i], n, what).transpose();
  return out;
}

SimplexPoint simplex_point_from(const json& v, std::size_t n) {
  return make_simplex_point(real_vector(v, n, "simplex point"));
}

UnfoldedQuantumPoint quantum_point_from(const json& v, std::size_t n) {
  if (!v.is_object() || !v.contains("p")) throw ConfigError("su_times_simplex points are objects {\"p\": [...], \"U\": ...}");
  for (auto it = v.begin(); it != v.end(); ++it)
    if (it.key() != "p" && it.key() != "U") throw ConfigError("unknown key '" + it.key() + "' in a su_times_simplex point");
  const SimplexPoint p = simplex_point_from(v["p"], n);
  const CMat u = v.contains("U") ? complex_matrix(v["U"], n, "U") : CMat::Identity(static_cast<Idx>(n), static_cast<Idx>(n));
  return make_unfolded_point(u, p);
}

HilbertPoint hilbert_point_from(const json& v, std::size_t n) {
  const json& psi = v.is_object() && v.contains("psi") ? v["psi"] : v;
  return make_hilbert_point(complex_vector(psi, n, "psi"));
}

// ---- shared checks for a divergence on a single chart ----------------------

struct DivergenceContext {
  const TwoPointFunction& f;
  const Frame& frame;
  const Frame* second_frame;  // for the frame-independence check, may be null
  const DifferentiationConfig& scheme;
  const Tolerances& tol;
};

double frame_duality_error(const Frame& frame, const Point& p) {
  const FrameAt at = eval_frame(frame, p);
  return max_abs(at.coframe * at.vectors.transpose() - Mat::Identity(at.vectors.rows(), at.vectors.cols()));
}

double nonnegativity_shortfall(double v) { return v >= 0.0 ? 0.0 : -v; }

void divergence_checks(SuiteBuilder& b, const DivergenceContext& c, long i, const std::vector<double>& coords,
                       const Point& p, const Point& q, const Mat& closed_form, const std::string& closed_name) {
  const ProductFrame lifted = lift_frame(c.frame);
  const ProductPoint diag = diagonal(p);
  const ProductPoint off = make_product_point(p, q);

  b.add("frame_duality", "Theta X^T = I for the frame", i, coords, frame_duality_error(c.frame, p), c.tol.duality);

  const Mat g = extract_divergence_metric(c.f, c.frame, p, c.scheme).components;
  b.add("metric_vs_closed_form", "extracted metric equals " + closed_name, i, coords,
        relative_deviation(g, closed_form), c.tol.relative);
  b.add("route_left_vs_mixed", "(L_X L_X) route equals the mixed route", i, coords,
        relative_deviation(extract_divergence_metric(c.f, c.frame, p, c.scheme, MetricRoute::left).components, g),
        c.tol.relative);
  b.add("route_right_vs_mixed", "(L_Y L_Y) route equals the mixed route", i, coords,
        relative_deviation(extract_divergence_metric(c.f, c.frame, p, c.scheme, MetricRoute::right).components, g),
        c.tol.relative);

  const CovariantTensor2 omega_diag = omega_F(c.f, lifted, diag, c.scheme);
  b.add("pullback_omega_vanishes", "diagonal pullback of omega_F vanishes", i, coords,
        max_abs(pullback_diagonal(omega_diag).components), c.tol.vanishing);
  b.add("pullback_g_vs_closed_form", "diagonal pullback of g_F equals " + closed_name, i, coords,
        relative_deviation(pullback_diagonal(g_from_omega(omega_diag)).components, closed_form), c.tol.relative);

  const CovariantTensor2 omega_off = omega_F(c.f, lifted, off, c.scheme);
  b.add("omega_antisymmetry", "omega_F + omega_F^T = 0 at an off-diagonal pair", i, coords,
        omega_off.symmetry_defect(), c.tol.antisymmetry);
  const Mat block = omega_F_block_expansion(c.f, lifted, off, c.scheme).components;
  const double block_dev = max_abs(block - omega_off.components);
  const double block_scale = max_abs(omega_off.components);
  b.add("omega_block_expansion", "block expansion equals the exterior-derivative route", i, coords,
        block_scale > 0.0 ? block_dev / block_scale : block_dev, block_scale > 0.0 ? c.tol.relative : c.tol.absolute);

  if (c.second_frame != nullptr) {
    const Mat a = change_of_frame(c.frame, *c.second_frame, p);
    const Mat g2 = extract_divergence_metric(c.f, *c.second_frame, p, c.scheme).components;
    b.add("frame_independence", "metric transforms as a (0,2) tensor between frames", i, coords,
          relative_deviation(g2, a * g * a.transpose()), c.tol.relative);
  }

  b.add("nonnegativity", "F(x, y) >= 0 at an off-diagonal pair", i, coords, nonnegativity_shortfall(c.f(off)),
        kNonnegativitySlack);
  b.add("diagonal_zero", "F(p, p) = 0", i, coords, std::abs(c.f(diag)), kDiagonalZeroTolerance);
  double grad = 0.0;
  for (std::size_t k = 0; k < lifted.dimension(); ++k)
    grad = std::max(grad, std::abs(lie_derivative(c.f, lifted, lifted.field(k), diag, c.scheme)));
  b.add("diagonal_gradient", "first Lie derivatives vanish on the diagonal", i, coords, grad, c.tol.gradient);
}

// ---- suites ----------------------------------------------------------------

void simplex_suite(const RunConfig& cfg, SuiteBuilder& b) {
  const std::size_t n = cfg.dimension;
  const Frame frame = simplex_frame(n);
  const Frame sheared = sheared_simplex_frame(n);
  const TwoPointFunction f = kl_function(n);
  const DivergenceContext ctx{f, frame, &sheared, cfg.scheme, cfg.tolerances};
  Rng rng(cfg.seed);
  Rng partner(cfg.seed ^ kPartnerStream);

  for (std::size_t i = 0; i < cfg.count; ++i) {
    const SimplexPoint sp = cfg.has_explicit_points() ? simplex_point_from(cfg.explicit_points[i], n)
                                                      : sample_simplex(n, rng);
    const SimplexPoint sq = sample_simplex(n, partner);
    const long idx = static_cast<long>(i);
    const Point p = to_chart_point(sp);
    const Mat closed = kl_metric_closed_form(sp).components;
    divergence_checks(b, ctx, idx, sp.probs, p, to_chart_point(sq), closed, "the closed-form KL metric");

    const Mat g = extract_divergence_metric(f, frame, p, cfg.scheme).components;
    b.add("metric_vs_2_fisher_rao", "extracted KL metric equals 2 x Fisher-Rao", idx, sp.probs,
          relative_deviation(g, 2.0 * fisher_rao_metric(sp).components), cfg.tolerances.relative);
    const double kl = kl_divergence(sp.probs, sq.probs);
    double split = 0.0;
    for (std::size_t r = 0; r < n; ++r)
      split += sp.probs[r] * std::log(sp.probs[r]) - sp.probs[r] * std::log(sq.probs[r]);
    b.add("kl_split_identity", "KL equals sum p ln p - sum p ln q", idx, sp.probs, std::abs(kl - split), 1e-12);
  }
}

void euclidean_suite(const RunConfig& cfg, SuiteBuilder& b) {
  const std::size_t d = cfg.dimension;
  const Chart chart = euclidean_chart(d);
  const Frame frame = coordinate_frame(chart);
  const TwoPointFunction f = quadratic_function(d);
  const DivergenceContext ctx{f, frame, nullptr, cfg.scheme, cfg.tolerances};
  Rng rng(cfg.seed);
  Rng partner(cfg.seed ^ kPartnerStream);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto sample = [&](Rng& r) {
    std::vector<double> v(d);
    for (auto& x : v) x = gauss(r);
    return v;
  };
  const Mat two_identity = 2.0 * Mat::Identity(static_cast<Idx>(d), static_cast<Idx>(d));
  for (std::size_t i = 0; i < cfg.count; ++i) {
    const std::vector<double> x =
        cfg.has_explicit_points() ? real_vector(cfg.explicit_points[i], d, "euclidean point") : sample(rng);
    const std::vector<double> y = sample(partner);
    const long idx = static_cast<long>(i);
    const Point p = make_point(chart, x);
    divergence_checks(b, ctx, idx, x, p, make_point(chart, y), two_identity, "2 x identity");
    b.add("quadratic_value", "F(x, y) equals half the squared distance", idx, x,
          std::abs(f(make_product_point(p, make_point(chart, y))) - quadratic_divergence(x, y)), 1e-12);
  }
}

void quantum_suite(const RunConfig& cfg, SuiteBuilder& b) {
  const std::size_t n = cfg.dimension;
  const GellMannBasis basis = gell_mann_basis(n);
  const ChartWithFrame pc = product_chart(basis);
  const TwoPointFunction f = umegaki_function(basis);
  const DivergenceContext ctx{f, pc.frame, nullptr, cfg.scheme, cfg.tolerances};
  const Tolerances& tol = cfg.tolerances;
  Rng rng(cfg.seed);
  Rng partner(cfg.seed ^ kPartnerStream);

  for (std::size_t i = 0; i < cfg.count; ++i) {
    UnfoldedQuantumPoint up = cfg.has_explicit_points()
                                  ? quantum_point_from(cfg.explicit_points[i], n)
                                  : make_unfolded_point(sample_special_unitary(n, rng),
                                                        sample_simplex(n, rng, kProbabilityFloor, kDistinctEigenvalueGap));
    if (min_eigenvalue_gap(up.p) < kDistinctEigenvalueGap)
      throw ConfigError("point " + std::to_string(i) + " has repeated probabilities; the closed form needs a gap of 1e-6");
    const long idx = static_cast<long>(i);
    const std::vector<double>& coords = up.p.probs;

    // Chart centred on U: the point sits at t = 0. The partner is expressed
    // in the same chart at a random offset.
    const std::vector<double> offset = sample_ball(basis.size(), kUmegakiOffsetRadius, partner);
    const UnfoldedQuantumPoint uq = make_unfolded_point(up.u * expm_antihermitian(lie_algebra_element(basis, offset)),
                                                        sample_simplex(n, partner));
    std::vector<double> pcoords(basis.size(), 0.0);
    pcoords.insert(pcoords.end(), up.p.probs.begin(), up.p.probs.end() - 1);
    std::vector<double> qcoords = offset;
    qcoords.insert(qcoords.end(), uq.p.probs.begin(), uq.p.probs.end() - 1);
    const Point p = make_point(pc.chart, pcoords);
    const Point q = make_point(pc.chart, qcoords);

    const Mat closed = umegaki_metric_closed_form(up.p, basis).components;
    divergence_checks(b, ctx, idx, coords, p, q, closed, "the closed-form Umegaki metric");

    const std::vector<double> t_offset = sample_ball(basis.size(), kUmegakiOffsetRadius, rng);
    const QuantumPointResult r = evaluate_quantum_point(basis, up.p, cfg.scheme, t_offset);
    b.add("umegaki_metric_total", "extracted Umegaki metric equals the closed form", idx, coords, r.total_relative,
          tol.quantum_relative);
    b.add("classical_block_2_fisher_rao", "classical block equals 2 x Fisher-Rao", idx, coords, r.classical_relative,
          tol.relative);
    b.add("cross_block_zero", "quantum/classical cross block vanishes", idx, coords, r.cross_block, tol.vanishing);
    b.add("quantum_block_diagonal", "quantum block is diagonal in the Gell-Mann frame", idx, coords,
          r.quantum_offdiagonal, tol.vanishing);
    b.add("cartan_entries_zero", "Cartan-direction entries vanish", idx, coords, r.cartan_entry, tol.vanishing);
    b.add("lambda_sigma_equal", "lambda and sigma diagonal entries agree", idx, coords, r.lambda_sigma_mismatch,
          tol.vanishing);
    b.add("positive_semidefinite", "metric has no negative eigenvalue below -1e-8", idx, coords,
          r.min_eigenvalue >= 0.0 ? 0.0 : -r.min_eigenvalue, tol.vanishing);
    b.add("left_invariance", "metric is unchanged at a translated chart point", idx, coords, r.left_invariance,
          tol.vanishing);

    const double direct = umegaki_entropy(unfold(up), unfold(uq));
    b.add("pullback_matches_entropy", "pulled-back entropy equals the entropy of the unfolded states", idx, coords,
          std::abs(umegaki_pullback(up, uq) - direct), 1e-10);
  }
}

void pure_state_suite(const RunConfig& cfg, SuiteBuilder& b) {
  const std::size_t n = cfg.dimension;
  const Tolerances& tol = cfg.tolerances;
  Rng rng(cfg.seed);
  const Mat j = complex_structure_matrix(n);

  for (std::size_t i = 0; i < cfg.count; ++i) {
    const HilbertPoint psi = cfg.has_explicit_points() ? hilbert_point_from(cfg.explicit_points[i], n)
                                                       : make_hilbert_point(sample_complex_vector(n, rng));
    const long idx = static_cast<long>(i);
    const std::vector<double> coords = to_real(psi.psi);
    const KahlerTensors k = kahler_from_potential(psi, cfg.scheme);
    const HermitianParts h = hermitian_tensor_parts(psi);
    const double scale = std::max(1.0, std::max(max_abs(h.re), max_abs(h.im)));

    b.add("g_equals_re_h", "g_F equals Re h", idx, coords, max_abs(k.g - h.re) / scale, tol.absolute);
    b.add("omega_equals_im_h", "omega_F equals Im h", idx, coords, max_abs(k.omega - h.im) / scale, tol.absolute);
    b.add("raw_equals_minus_2_im_h", "d(J o dF) equals -2 Im h", idx, coords, max_abs(k.raw + 2.0 * h.im) / scale,
          tol.absolute);
    b.add("compatibility", "omega(u, v) = g(Ju, v)", idx, coords,
          max_abs(k.omega - j.transpose() * k.g) / scale, tol.degeneracy);
    b.add("omega_antisymmetry", "omega_F is antisymmetric", idx, coords, max_abs(k.omega + k.omega.transpose()),
          tol.antisymmetry);

    const Vec dil = Eigen::Map<const Vec>(coords.data(), static_cast<Idx>(coords.size()));
    const Vec phase = j * dil;
    const double degeneracy = std::max({(k.g * dil).cwiseAbs().maxCoeff(), (k.g * phase).cwiseAbs().maxCoeff(),
                                        (k.omega * dil).cwiseAbs().maxCoeff(),
                                        (k.omega * phase).cwiseAbs().maxCoeff()});
    b.add("degenerate_along_psi_and_i_psi", "g_F and omega_F annihilate psi and i psi", idx, coords, degeneracy,
          tol.degeneracy);

    const double norm2 = psi.psi.squaredNorm();
    std::vector<double> probs(n);
    for (std::size_t r = 0; r < n; ++r) probs[r] = std::norm(psi.psi(static_cast<Idx>(r))) / norm2;
    double sum = 0.0;
    for (double v : probs) sum += v;
    for (double& v : probs) v /= sum;
    if (*std::min_element(probs.begin(), probs.end()) <= kProbabilityFloor) continue;
    const FisherRaoRecoveryReport fr =
        verify_fisher_rao_recovery(make_simplex_point(probs), cfg.scheme, cfg.seed + i);
    b.add("re_h_quarter_fisher_rao", "Re h on P-field pushforwards equals 1/4 Fisher-Rao", idx, coords,
          fr.re_h_relative, tol.relative);
    b.add("im_h_mixed_covariance", "Im h on (dp, dtheta) equals the covariance term", idx, coords,
          fr.im_h_mixed_deviation, tol.absolute);
    b.add("re_h_phase_covariance", "Re h on dtheta tangents equals the phase covariance", idx, coords,
          fr.phase_block_deviation, tol.absolute);
    b.add("constant_phase_null", "Re h vanishes on a constant phase shift", idx, coords, fr.constant_phase_value,
          tol.degeneracy);
  }
}

// ---- tensor dump helpers ---------------------------------------------------

ordered_json matrix_json(const Mat& m) {
  ordered_json rows = ordered_json::array();
  for (Idx i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Idx k = 0; k < m.cols(); ++k) row.push_back(m(i, k) == 0.0 ? 0.0 : m(i, k));  // no negative zero
    rows.push_back(row);
  }
  return rows;
}

ordered_json tensor_entry(const Mat& m, const std::vector<std::string>& labels, const char* symmetry) {
  ordered_json e;
  e["labels"] = labels;
  e["symmetry"] = symmetry;
  e["components"] = matrix_json(m);
  return e;
}

std::vector<std::string> product_labels(const ProductFrame& f) {
  std::vector<std::string> l;
  for (std::size_t a = 0; a < f.dimension(); ++a) l.push_back(f.field_label(a));
  return l;
}

std::vector<std::string> frame_labels(const std::string& prefix, std::size_t d) {
  std::vector<std::string> l;
  for (std::size_t a = 0; a < d; ++a) l.push_back(prefix + std::to_string(a + 1));
  return l;
}

constexpr const char* kConvention =
    "evaluation convention: components are T(Z_a, Z_b) on ordered pairs of frame fields; "
    "d gamma(Z, W) = 1/2 (Z gamma(W) - W gamma(Z) - gamma([Z, W])); g_F(Z, W) = omega_F(J Z, W); "
    "pullbacks evaluate on X_j + Y_j";

ordered_json divergence_dump(const TwoPointFunction& f, const Frame& frame, const Point& p, const Mat& closed,
                             const std::vector<std::string>& base_labels, const DifferentiationConfig& scheme) {
  const ProductFrame lifted = lift_frame(frame);
  const ProductPoint pp = diagonal(p);
  const CovariantTensor2 omega = omega_F(f, lifted, pp, scheme);
  const CovariantTensor2 g = g_from_omega(omega);
  const std::vector<std::string> plabels = product_labels(lifted);
  ordered_json t;
  t["omega_F"] = tensor_entry(omega.components, plabels, "antisymmetric");
  t["g_F"] = tensor_entry(g.components, plabels, "none");
  t["pullback_omega_F"] = tensor_entry(pullback_diagonal(omega).components, base_labels, "antisymmetric");
  t["pullback_g_F"] = tensor_entry(pullback_diagonal(g).components, base_labels, "symmetric");
  t["extracted_metric"] = tensor_entry(extract_divergence_metric(f, frame, p, scheme).components, base_labels, "symmetric");
  t["closed_form_metric"] = tensor_entry(closed, base_labels, "symmetric");
  return t;
}

}  // namespace

bool VerificationReport::passed() const {
  for (const auto& s : summaries)
    if (!s.passed()) return false;
  return !summaries.empty();
}

VerificationReport run_suite(const RunConfig& cfg) {
  cfg.scheme.validate();
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.config = cfg;
  report.suite = std::string(manifold_name(cfg.manifold)) + "/" + divergence_name(cfg.divergence);
  SuiteBuilder b(report);
  switch (cfg.manifold) {
    case ManifoldKind::simplex: simplex_suite(cfg, b); break;
    case ManifoldKind::euclidean: euclidean_suite(cfg, b); break;
    case ManifoldKind::su_times_simplex: quantum_suite(cfg, b); break;
    case ManifoldKind::pure_states: pure_state_suite(cfg, b); break;
  }
  report.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

ordered_json tensor_dump(const RunConfig& cfg, const json* point) {
  const std::size_t n = cfg.dimension;
  const json* chosen = point;
  if (chosen == nullptr && cfg.has_explicit_points()) chosen = &cfg.explicit_points[0];
  Rng rng(cfg.seed);

  ordered_json out;
  out["manifold"] = manifold_name(cfg.manifold);
  out["dimension"] = n;
  out["divergence"] = divergence_name(cfg.divergence);
  out["scheme"] = {{"type", scheme_name(cfg.scheme.scheme)},
                   {"base_step", cfg.scheme.base_step},
                   {"relative_tolerance", cfg.scheme.relative_tolerance}};
  out["seed"] = cfg.seed;
  out["convention"] = kConvention;

  switch (cfg.manifold) {
    case ManifoldKind::simplex: {
      const SimplexPoint sp = chosen ? simplex_point_from(*chosen, n) : sample_simplex(n, rng);
      const Frame frame = simplex_frame(n);
      out["base_point"] = {{"p", sp.probs}, {"chart_coordinates", to_chart_point(sp).coords}};
      out["frame"] = frame.label();
      out["tensors"] = divergence_dump(kl_function(n), frame, to_chart_point(sp), kl_metric_closed_form(sp).components,
                                       frame_labels("P", n - 1), cfg.scheme);
      break;
    }
    case ManifoldKind::euclidean: {
      std::normal_distribution<double> gauss(0.0, 1.0);
      std::vector<double> x(n);
      if (chosen)
        x = real_vector(*chosen, n, "euclidean point");
      else
        for (auto& v : x) v = gauss(rng);
      const Chart chart = euclidean_chart(n);
      const Frame frame = coordinate_frame(chart);
      out["base_point"] = {{"x", x}};
      out["frame"] = frame.label();
      out["tensors"] = divergence_dump(quadratic_function(n), frame, make_point(chart, x),
                                       2.0 * Mat::Identity(static_cast<Idx>(n), static_cast<Idx>(n)),
                                       frame_labels("d", n), cfg.scheme);
      break;
    }
    case ManifoldKind::su_times_simplex: {
      const GellMannBasis basis = gell_mann_basis(n);
      const UnfoldedQuantumPoint up =
          chosen ? quantum_point_from(*chosen, n)
               : make_unfolded_point(sample_special_unitary(n, rng),
                                     sample_simplex(n, rng, kProbabilityFloor, kDistinctEigenvalueGap));
      const ChartWithFrame pc = product_chart(basis);
      std::vector<double> coords(basis.size(), 0.0);
      coords.insert(coords.end(), up.p.probs.begin(), up.p.probs.end() - 1);
      std::vector<std::string> labels;
      for (const auto& g : basis.generators) labels.push_back(g.label);
      for (std::size_t k = 1; k < n; ++k) labels.push_back("P" + std::to_string(k));
      ordered_json u = ordered_json::array();
      for (Idx r = 0; r < up.u.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (Idx c = 0; c < up.u.cols(); ++c) row.push_back({up.u(r, c).real(), up.u(r, c).imag()});
        u.push_back(row);
      }
      out["base_point"] = {{"p", up.p.probs}, {"U", u}, {"chart", "exponential chart centred on U, t = 0"}};
      out["frame"] = pc.frame.label();
      out["tensors"] = divergence_dump(umegaki_function(basis), pc.frame, make_point(pc.chart, coords),
                                       umegaki_metric_closed_form(up.p, basis).components, labels, cfg.scheme);
      break;
    }
    case ManifoldKind::pure_states: {
      const HilbertPoint psi = chosen ? hilbert_point_from(*chosen, n) : make_hilbert_point(sample_complex_vector(n, rng));
      ordered_json pj = ordered_json::array();
      for (Idx r = 0; r < psi.psi.size(); ++r) pj.push_back({psi.psi(r).real(), psi.psi(r).imag()});
      std::vector<std::string> labels = frame_labels("q", n);
      for (const auto& l : frame_labels("p", n)) labels.push_back(l);
      const KahlerTensors k = kahler_from_potential(psi, cfg.scheme);
      const HermitianParts h = hermitian_tensor_parts(psi);
      out["base_point"] = {{"psi", pj}};
      out["frame"] = "real coordinates (q, p), psi = q + i p";
      out["convention"] = "evaluation convention on the real coordinate basis; omega_F = -1/2 d(J o dF) with "
                          "F = ln<psi|psi>; g_F(X, Y) = omega_F(X, J Y)";
      ordered_json t;
      t["re_h"] = tensor_entry(h.re, labels, "symmetric");
      t["im_h"] = tensor_entry(h.im, labels, "antisymmetric");
      t["omega_F"] = tensor_entry(k.omega, labels, "antisymmetric");
      t["g_F"] = tensor_entry(k.g, labels, "symmetric");
      out["tensors"] = t;
      break;
    }
  }
  return out;
}

}  // namespace infogeo
