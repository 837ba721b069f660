#pragma once

// Concrete two-point functions (KL, a quadratic baseline, the Umegaki relative
// entropy pulled back to SU(N) × Δ₊) and a checker for the divergence axioms.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "infogeo/core_geometry.hpp"
#include "infogeo/quantum.hpp"
#include "infogeo/sampling.hpp"
#include "infogeo/simplex.hpp"

namespace infogeo {

// Σ p ln(p/q). Both vectors are validated as simplex points.
double kl_divergence(std::span<const double> p, std::span<const double> q);

// ½‖x − y‖².
double quadratic_divergence(std::span<const double> x, std::span<const double> y);

// Tr ρ (ln ρ − ln σ).
double umegaki_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

// Σ p ln p − Σ_ij p_i ln q_j |W_ij|² with W = U_a† U_b; never forms ρ or σ.
double umegaki_pullback(const UnfoldedQuantumPoint& a, const UnfoldedQuantumPoint& b);

// Two-point functions in adapted chart coordinates.
TwoPointFunction kl_function(std::size_t n);                 // on simplex_chart(n)
TwoPointFunction quadratic_function(std::size_t d);          // on euclidean_chart(d)
TwoPointFunction signed_sum_function(const Chart& chart);    // Σ (x − y), not a divergence
TwoPointFunction umegaki_function(const GellMannBasis& basis);  // on product_chart(basis)

struct AxiomReport {
  std::size_t samples = 0;
  std::size_t nonnegativity_violations = 0;  // F(x, y) < −1e-12 at off-diagonal pairs
  std::size_t diagonal_zero_violations = 0;  // |F(p, p)| > 1e-10
  double diagonal_gradient_max = 0.0;        // max |L_Z F| over lifted fields at (p, p)
  double min_offdiagonal_value = 0.0;
  double max_diagonal_abs = 0.0;

  bool passed(double gradient_tolerance = 1e-7) const {
    return nonnegativity_violations == 0 && diagonal_zero_violations == 0 &&
           diagonal_gradient_max <= gradient_tolerance;
  }
};

inline constexpr double kNonnegativitySlack = 1e-12;
inline constexpr double kDiagonalZeroTolerance = 1e-10;

using PointSampler = std::function<Point(Rng&)>;

// n off-diagonal pairs and n diagonal points drawn from `sampler`.
AxiomReport check_divergence_axioms(const TwoPointFunction& f, const Frame& frame, const PointSampler& sampler,
                                    std::size_t n, const DifferentiationConfig& cfg, std::uint64_t seed);

}  // namespace infogeo
