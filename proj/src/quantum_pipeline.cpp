#include <algorithm>
#include <cmath>
#include <limits>

#include "infogeo/divergence.hpp"
#include "infogeo/quantum.hpp"
#include "infogeo/sampling.hpp"
#include "infogeo/tensor_extraction.hpp"

namespace infogeo {

namespace {
using Idx = Eigen::Index;

Mat extract_at(const GellMannBasis& basis, const ChartWithFrame& pc, const TwoPointFunction& f,
               const SimplexPoint& p, std::span<const double> t, const DifferentiationConfig& cfg) {
  std::vector<double> coords(t.begin(), t.end());
  if (coords.empty()) coords.assign(basis.size(), 0.0);
  coords.insert(coords.end(), p.probs.begin(), p.probs.end() - 1);
  return extract_divergence_metric(f, pc.frame, make_point(pc.chart, coords), cfg).components;
}
}  // namespace

QuantumPointResult evaluate_quantum_point(const GellMannBasis& basis, const SimplexPoint& p,
                                          const DifferentiationConfig& cfg, std::span<const double> t_offset) {
  const ChartWithFrame pc = product_chart(basis);
  const TwoPointFunction f = umegaki_function(basis);
  const auto dq = static_cast<Idx>(basis.size());
  const auto dc = static_cast<Idx>(basis.n - 1);

  QuantumPointResult r;
  r.closed = umegaki_metric_closed_form(p, basis).components;
  r.numeric = extract_at(basis, pc, f, p, {}, cfg);
  const Mat& g = r.numeric;
  const Mat fr2 = 2.0 * fisher_rao_metric(p).components;

  r.total_relative = relative_deviation(g, r.closed);
  r.quantum_relative = relative_deviation(g.topLeftCorner(dq, dq), r.closed.topLeftCorner(dq, dq));
  r.classical_relative = relative_deviation(g.bottomRightCorner(dc, dc), fr2);
  r.cross_block = std::max(max_abs(g.topRightCorner(dq, dc)), max_abs(g.bottomLeftCorner(dc, dq)));
  for (Idx a = 0; a < dq; ++a)
    for (Idx b = 0; b < dq; ++b)
      if (a != b) r.quantum_offdiagonal = std::max(r.quantum_offdiagonal, std::abs(g(a, b)));

  const std::size_t pairs = basis.n * (basis.n - 1) / 2;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    const auto ia = static_cast<Idx>(a);
    if (basis.generators[a].kind == GeneratorKind::cartan) r.cartan_entry = std::max(r.cartan_entry, std::abs(g(ia, ia)));
    if (basis.generators[a].kind == GeneratorKind::symmetric) {
      const auto is = static_cast<Idx>(a + pairs);
      r.lambda_sigma_mismatch = std::max(r.lambda_sigma_mismatch, std::abs(g(ia, ia) - g(is, is)));
    }
  }

  const CovariantTensor2 t{g, "gell-mann+P", Point{}, Symmetry::symmetric};
  r.min_eigenvalue = psd_report(t).min_eigenvalue;

  if (t_offset.empty()) {
    r.left_invariance = std::numeric_limits<double>::quiet_NaN();
  } else {
    r.left_invariance = relative_deviation(extract_at(basis, pc, f, p, t_offset, cfg), g);
  }
  return r;
}

QuantumPipelineReport verify_quantum_pipeline(std::size_t n, std::size_t n_points, const DifferentiationConfig& cfg,
                                              std::uint64_t seed) {
  cfg.validate();
  const GellMannBasis basis = gell_mann_basis(n);

  QuantumPipelineReport rep;
  rep.n = n;
  rep.points = n_points;
  rep.seed = seed;
  rep.min_eigenvalue = std::numeric_limits<double>::infinity();

  Rng rng(seed);
  for (std::size_t i = 0; i < n_points; ++i) {
    // U is the chart centre; it cancels from the pullback, which the
    // left-invariance comparison at a nonzero offset confirms.
    const CMat u = sample_special_unitary(n, rng);
    const SimplexPoint p = sample_simplex(n, rng, kProbabilityFloor, kDistinctEigenvalueGap);
    (void)make_unfolded_point(u, p);
    const std::vector<double> t = sample_ball(basis.size(), 0.5, rng);
    const QuantumPointResult r = evaluate_quantum_point(basis, p, cfg, t);

    rep.max_total_relative = std::max(rep.max_total_relative, r.total_relative);
    rep.max_quantum_relative = std::max(rep.max_quantum_relative, r.quantum_relative);
    rep.max_classical_relative = std::max(rep.max_classical_relative, r.classical_relative);
    rep.max_cross_block = std::max(rep.max_cross_block, r.cross_block);
    rep.max_quantum_offdiagonal = std::max(rep.max_quantum_offdiagonal, r.quantum_offdiagonal);
    rep.max_cartan_entry = std::max(rep.max_cartan_entry, r.cartan_entry);
    rep.max_lambda_sigma_mismatch = std::max(rep.max_lambda_sigma_mismatch, r.lambda_sigma_mismatch);
    rep.max_left_invariance = std::max(rep.max_left_invariance, r.left_invariance);
    rep.min_eigenvalue = std::min(rep.min_eigenvalue, r.min_eigenvalue);
  }
  if (n_points == 0) rep.min_eigenvalue = 0.0;

  rep.passed = rep.max_total_relative <= rep.tolerance && rep.max_classical_relative <= 1e-6 &&
               rep.max_cross_block <= 1e-8 && rep.max_quantum_offdiagonal <= 1e-8 && rep.max_cartan_entry <= 1e-8 &&
               rep.max_left_invariance <= 1e-8 && rep.min_eigenvalue >= -1e-8;
  return rep;
}

}  // namespace infogeo
