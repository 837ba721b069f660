#pragma once

// Seeded random points for property checks and verification suites.

#include <cstddef>
#include <cstdint>
#include <random>

#include "infogeo/linalg.hpp"
#include "infogeo/simplex.hpp"

namespace infogeo {

using Rng = std::mt19937_64;

// Symmetric Dirichlet(1) sample, redrawn until every entry exceeds `floor`
// and, when min_gap > 0, all entries differ pairwise by at least min_gap.
SimplexPoint sample_simplex(std::size_t n, Rng& rng, double floor = kProbabilityFloor, double min_gap = 0.0);

// Haar-distributed special-unitary matrix: QR of a complex Gaussian matrix with
// the R-diagonal phases removed, then a global phase fixing det U = 1.
CMat sample_special_unitary(std::size_t n, Rng& rng);

// Complex Gaussian vector (never exactly zero).
CVec sample_complex_vector(std::size_t n, Rng& rng);

// Uniform vector in the ball of the given radius in R^n.
std::vector<double> sample_ball(std::size_t n, double radius, Rng& rng);

}  // namespace infogeo
