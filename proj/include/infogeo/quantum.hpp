#pragma once

// The unfolded manifold of faithful states SU(N) × Δ₊: generalized Gell-Mann
// basis of su(N), exponential charts with left-invariant frames, the unfolding
// map (U, p) ↦ U diag(p) U†, spectral matrix functions, and the closed-form
// metric blocks extracted from the Umegaki relative entropy.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "infogeo/core_geometry.hpp"
#include "infogeo/simplex.hpp"
#include "infogeo/tensor_extraction.hpp"

namespace infogeo {

enum class GeneratorKind { symmetric, antisymmetric, cartan };

// λ_{jμ} = (i/√2)(|j⟩⟨μ| + |μ⟩⟨j|), σ_{jμ} = −(1/√2)(|j⟩⟨μ| − |μ⟩⟨j|) for j < μ,
// and e_j = i α_j (j |j+1⟩⟨j+1| − Σ_{r≤j} |r⟩⟨r|), α_j = 1/√(j(j+1)).
// Ordered: all λ (lexicographic), then all σ, then all e. Tr(τ_a τ_b) = −δ_ab.
struct GellMannBasis {
  struct Generator {
    CMat matrix;
    GeneratorKind kind;
    std::size_t j;   // 1-based row index (λ, σ) or Cartan index
    std::size_t mu;  // 1-based column index (λ, σ); j + 1 for Cartan
    std::string label;
  };

  std::size_t n = 0;
  std::vector<Generator> generators;

  std::size_t size() const { return generators.size(); }
  const CMat& operator[](std::size_t a) const { return generators[a].matrix; }
};

GellMannBasis gell_mann_basis(std::size_t n);

// c(a, b, c) with [τ_b, τ_c] = Σ_a c^a_bc τ_a.
class StructureConstants {
 public:
  StructureConstants(std::size_t dim, std::vector<double> values) : dim_(dim), values_(std::move(values)) {}
  std::size_t dimension() const { return dim_; }
  double operator()(std::size_t a, std::size_t b, std::size_t c) const { return values_[(a * dim_ + b) * dim_ + c]; }

 private:
  std::size_t dim_;
  std::vector<double> values_;
};

StructureConstants structure_constants(const GellMannBasis& basis);

struct DensityMatrix {
  CMat rho;
};

// Hermitian within 1e-12, positive definite, unit trace within 1e-12.
DensityMatrix make_density_matrix(CMat rho);

struct UnfoldedQuantumPoint {
  CMat u;
  SimplexPoint p;
};

// U†U = I and det U = 1 within 1e-10, p strictly positive and normalized.
UnfoldedQuantumPoint make_unfolded_point(CMat u, SimplexPoint p);

DensityMatrix unfold(const UnfoldedQuantumPoint& pt);

// Spectral logarithm of a Hermitian positive-definite matrix; eigenvalues must
// exceed 1e-12.
CMat matrix_log_pd(const CMat& h);

// exp of an anti-Hermitian matrix via the Hermitian eigendecomposition of iA.
CMat expm_antihermitian(const CMat& a);

// Σ t^a τ_a.
CMat lie_algebra_element(const GellMannBasis& basis, std::span<const double> t);

// Exponential coordinates t ↦ U₀ exp(Σ t^a τ_a), radius-limited so the chart
// is a diffeomorphism onto its image.
inline constexpr double kExpChartRadius = 1.5;

std::string su_chart_label(std::size_t n);
std::string su_times_simplex_label(std::size_t n);

struct ChartWithFrame {
  Chart chart;
  Frame frame;
};

// Left-invariant frame in exponential coordinates around U₀. The frame fields
// are U ↦ U τ_a; the coframe is the Maurer-Cartan form (1 − e^{−ad})/ad.
ChartWithFrame su_chart_at(const CMat& u0, const GellMannBasis& basis);
CMat su_chart_point(const CMat& u0, const GellMannBasis& basis, std::span<const double> t);

// Chart on SU(N) × Δ₊ with coordinates (t¹…t^{N²−1}, p¹…p^{N−1}) and frame
// {left-invariant X_a} ⊕ {P_k}. Coordinates are relative to a chart centre U₀
// that does not enter the frame or the Umegaki pullback.
ChartWithFrame product_chart(const GellMannBasis& basis);

// Point of SU(N) × Δ₊ from product-chart coordinates around U₀.
UnfoldedQuantumPoint product_chart_point(const CMat& u0, const GellMannBasis& basis, const Point& p);

// Closed-form metric on SU(N) × Δ₊ in the frame {X_a; P_k}: quantum block
// −2 Tr([ρ₀, τ_a][τ_b, ln ρ₀]), classical block 2 × Fisher-Rao, zero cross
// block. Throws PreconditionError when two entries of p are closer than 1e-6.
inline constexpr double kDistinctEigenvalueGap = 1e-6;
CovariantTensor2 umegaki_metric_closed_form(const SimplexPoint& p, const GellMannBasis& basis);

// min_{r≠s} |p^r − p^s|.
double min_eigenvalue_gap(const SimplexPoint& p);

// Deviations of the generically extracted Umegaki metric at one point from the
// closed form. The chart is recentred on the point (t = 0) so that the frame
// curves are exactly U exp(s τ_a); `left_invariance` repeats the extraction at
// the chart offset `t_offset` and compares.
struct QuantumPointResult {
  Mat numeric;
  Mat closed;
  double total_relative = 0.0;       // ‖G_num − G_closed‖_max / ‖G_closed‖_max
  double quantum_relative = 0.0;
  double classical_relative = 0.0;   // classical block vs 2 × Fisher-Rao
  double cross_block = 0.0;          // absolute
  double quantum_offdiagonal = 0.0;  // absolute
  double cartan_entry = 0.0;         // absolute
  double lambda_sigma_mismatch = 0.0;  // max |G(λ_jμ, λ_jμ) − G(σ_jμ, σ_jμ)|
  double min_eigenvalue = 0.0;
  double left_invariance = 0.0;      // relative, NaN when no offset was given
};

QuantumPointResult evaluate_quantum_point(const GellMannBasis& basis, const SimplexPoint& p,
                                          const DifferentiationConfig& cfg,
                                          std::span<const double> t_offset = {});

struct QuantumPipelineReport {
  std::size_t n = 0;
  std::size_t points = 0;
  std::uint64_t seed = 0;
  double max_total_relative = 0.0;
  double max_quantum_relative = 0.0;
  double max_classical_relative = 0.0;
  double max_cross_block = 0.0;
  double max_quantum_offdiagonal = 0.0;
  double max_cartan_entry = 0.0;
  double max_lambda_sigma_mismatch = 0.0;
  double max_left_invariance = 0.0;
  double min_eigenvalue = 0.0;  // over all points
  double tolerance = 1e-5;
  bool passed = false;
};

// Runs the generic extraction on the Umegaki pullback at random (U, p) with
// distinct p entries and compares with the closed form. U is the chart centre;
// the left-invariance check moves the point to a random offset of norm <= 0.5.
QuantumPipelineReport verify_quantum_pipeline(std::size_t n, std::size_t n_points, const DifferentiationConfig& cfg,
                                              std::uint64_t seed);

}  // namespace infogeo
