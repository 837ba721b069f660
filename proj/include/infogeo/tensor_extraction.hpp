#pragma once

// The almost-complex structure J on M×M built from a frame, the closed
// 2-form ω_F = d(J∘dF), the tensor g_F(Z, W) = ω_F(J Z, W), and their
// pullbacks along the diagonal immersion.
//
// Components are always evaluations on ordered pairs of frame fields,
// G_ab = T(Z_a, Z_b). The exterior derivative uses the halved normalization
//   dγ(Z, W) = ½ (Z γ(W) − W γ(Z) − γ([Z, W])),
// under which the diagonal pullback of g_F equals the mixed-derivative metric
// −(L_Xj L_Yk F + L_Xk L_Yj F) (so the KL divergence yields 2·Fisher-Rao).

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "infogeo/core_geometry.hpp"
#include "infogeo/linalg.hpp"

namespace infogeo {

enum class Symmetry { antisymmetric, symmetric, none };

const char* symmetry_name(Symmetry s);

struct CovariantTensor2 {
  Mat components;
  std::string frame_tag;
  std::variant<Point, ProductPoint> base;
  Symmetry symmetry = Symmetry::none;

  // max |G − Gᵀ| (symmetric), max |G + Gᵀ| (antisymmetric), 0 otherwise.
  double symmetry_defect() const;
};

// J acting on product-frame components (a, b) ↦ (−b, a): J𝕏_j = 𝕐_j, J𝕐_j = −𝕏_j.
// Throws DomainError on odd length.
std::vector<double> apply_J(std::span<const double> v);

// Matrix of J in the product frame (column b holds the components of J Z_b).
Mat j_matrix(std::size_t base_dimension);

// ω_F at pp via the invariant exterior-derivative evaluation on lifted fields.
CovariantTensor2 omega_F(const TwoPointFunction& f, const ProductFrame& frame, const ProductPoint& pp,
                         const DifferentiationConfig& cfg);

// ω_F assembled from the explicit block expansion (second Lie derivatives plus
// bracket terms). Independent route used as a cross-check of omega_F.
CovariantTensor2 omega_F_block_expansion(const TwoPointFunction& f, const ProductFrame& frame,
                                         const ProductPoint& pp, const DifferentiationConfig& cfg);

// g_F(Z_a, Z_b) = ω_F(J Z_a, Z_b).
CovariantTensor2 g_F(const TwoPointFunction& f, const ProductFrame& frame, const ProductPoint& pp,
                     const DifferentiationConfig& cfg);
CovariantTensor2 g_from_omega(const CovariantTensor2& omega);

// (i_d* t)_jk = t(𝕏_j + 𝕐_j, 𝕏_k + 𝕐_k). Throws DomainError if t is not
// based at a diagonal product point.
CovariantTensor2 pullback_diagonal(const CovariantTensor2& t);

enum class MetricRoute {
  mixed,  // −(L_Xj L_Yk + L_Xk L_Yj) F
  left,   // (L_Xj L_Xk + L_Xk L_Xj) F
  right,  // (L_Yj L_Yk + L_Yk L_Yj) F
};

// Metric on M extracted from a divergence at p. Throws PreconditionError when
// F(p, p) ≠ 0 or a first Lie derivative at (p, p) does not vanish.
CovariantTensor2 extract_divergence_metric(const TwoPointFunction& f, const Frame& frame, const Point& p,
                                           const DifferentiationConfig& cfg,
                                           MetricRoute route = MetricRoute::mixed);

struct PsdReport {
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
  std::size_t null_directions = 0;  // eigenvalues within tol of zero
  bool positive_semidefinite = false;
};

// Spectrum of the symmetric part. Degenerate tensors are reported, not rejected.
PsdReport psd_report(const CovariantTensor2& t, double tol = 1e-8);

// A with X'_j = A_j^i X_i at p, for two frames on the same chart. Components of
// a (0,2) tensor transform as G' = A G Aᵀ.
Mat change_of_frame(const Frame& from, const Frame& to, const Point& p);

}  // namespace infogeo
