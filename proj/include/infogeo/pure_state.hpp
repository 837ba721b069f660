#pragma once

// Pure states on the punctured Hilbert space H₀ = ℂᴺ \ {0}: the Hermitian
// tensor h, the complex structure, the Kähler pair obtained from the potential
// F = ln⟨ψ|ψ⟩, and amplitude coordinates ψ = Σ e^{iθ_j} √p_j |e_j⟩.
//
// Real coordinates are (q₁…q_N, p₁…p_N) with ψ_j = q_j + i p_j; a real tangent
// vector (a, b) corresponds to the complex vector a + i b.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "infogeo/core_geometry.hpp"
#include "infogeo/linalg.hpp"
#include "infogeo/simplex.hpp"

namespace infogeo {

struct HilbertPoint {
  CVec psi;
};

// Throws DomainError for ψ = 0 or non-finite entries.
HilbertPoint make_hilbert_point(CVec psi);

std::vector<double> to_real(const CVec& v);
CVec to_complex(std::span<const double> v);

// h(u, v) = ⟨u|v⟩/⟨ψ|ψ⟩ − ⟨u|ψ⟩⟨ψ|v⟩/⟨ψ|ψ⟩², antilinear in u.
cplx hermitian_tensor_h(const HilbertPoint& psi, const CVec& u, const CVec& v);

// Re h and Im h as real 2N×2N matrices on the real coordinate basis.
struct HermitianParts {
  Mat re;
  Mat im;
};
HermitianParts hermitian_tensor_parts(const HilbertPoint& psi);

// (a, b) ↦ (−b, a), i.e. multiplication by i.
std::vector<double> complex_structure_H0(std::span<const double> v);

// Matrix of the complex structure on the real basis (column k = J e_k).
Mat complex_structure_matrix(std::size_t n);

// Kähler pair from F = ln⟨ψ|ψ⟩ on the real coordinate basis.
//   raw   = d(J∘dF) with the halved exterior derivative of tensor_extraction,
//   omega = −½ raw, normalized so that omega = Im h,
//   g     = omega(·, J·), which then equals Re h.
// The Hessian of F is obtained through the Lie-derivative backend.
struct KahlerTensors {
  Mat raw;
  Mat omega;
  Mat g;
};
KahlerTensors kahler_from_potential(const HilbertPoint& psi, const DifferentiationConfig& cfg);

// ln⟨ψ|ψ⟩.
double kahler_potential(const HilbertPoint& psi);

struct AmplitudeCoordinates {
  SimplexPoint p;
  std::vector<double> theta;
};

AmplitudeCoordinates make_amplitude_coordinates(std::vector<double> p, std::vector<double> theta);

HilbertPoint amplitude_embedding(const AmplitudeCoordinates& ac);

// Pushforward of a tangent (dp, dθ) through the amplitude embedding.
CVec amplitude_pushforward(const AmplitudeCoordinates& ac, std::span<const double> dp, std::span<const double> dtheta,
                           const DifferentiationConfig& cfg);

struct FisherRaoRecoveryReport {
  Mat re_h_p_frame;           // Re h on pushed-forward P-fields (dθ = 0)
  Mat quarter_fisher_rao;     // ¼ × Fisher-Rao on the P-frame
  double re_h_relative = 0.0;
  double im_h_mixed_deviation = 0.0;   // Im h(dp, dθ) vs the phase covariance term
  double phase_block_deviation = 0.0;  // Re h on dθ tangents vs Cov_p(dθ, dθ')
  double constant_phase_value = 0.0;   // |Re h| on a constant dθ
  bool passed = false;
};

// Random tangent choices are seeded from `seed`; θ is drawn uniformly.
FisherRaoRecoveryReport verify_fisher_rao_recovery(const SimplexPoint& p, const DifferentiationConfig& cfg,
                                                   std::uint64_t seed = 1);

}  // namespace infogeo
