#pragma once

// The open probability simplex Δ₊ with the chart (p¹, …, p^{N−1}),
// p^N = 1 − Σ p^r, the frame P_j = ∂/∂p^j − ∂/∂p^{j+1}, and closed forms of
// the Fisher-Rao metric and of the metric extracted from KL.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "infogeo/core_geometry.hpp"
#include "infogeo/tensor_extraction.hpp"

namespace infogeo {

inline constexpr double kProbabilityFloor = 1e-9;
inline constexpr double kNormalizationTolerance = 1e-12;

struct SimplexPoint {
  std::vector<double> probs;

  std::size_t size() const { return probs.size(); }
};

// Checks positivity above `floor` and Σp = 1 within 1e-12, then renormalizes.
SimplexPoint make_simplex_point(std::vector<double> probs, double floor = kProbabilityFloor);

std::string simplex_chart_label(std::size_t n);
Chart simplex_chart(std::size_t n, double floor = kProbabilityFloor);

// All N probabilities from the N−1 chart coordinates.
template <typename T>
std::vector<T> reconstruct_probabilities(std::span<const T> coords) {
  std::vector<T> p(coords.begin(), coords.end());
  T last = T(1.0);
  for (const auto& c : coords) last = last - c;
  p.push_back(last);
  return p;
}

Point to_chart_point(const SimplexPoint& p);
SimplexPoint from_chart_point(const Point& p);

// Rows are the P_j in chart coordinates: e_j − e_{j+1} for j < N−1, and
// e_{N−1} for the last field (p^N is not a coordinate).
Mat simplex_frame_matrix(std::size_t n);

// The P-frame. Its coframe is the inverse of the coefficient matrix.
Frame simplex_frame(std::size_t n);

// A second registered frame on the same chart with point-dependent,
// non-commuting fields X_j = P_j + p^j P_{j+1} (X_{N−1} = P_{N−1}).
Frame sheared_simplex_frame(std::size_t n);

// Ambient tangent vector (length N, sum zero) of the P-frame field j.
std::vector<double> p_field_ambient(std::size_t n, std::size_t j);

// Σ_r u^r v^r / p^r for ambient tangent vectors u, v.
double fisher_rao_ambient(const SimplexPoint& p, std::span<const double> u, std::span<const double> v);

// Fisher-Rao evaluations on the P-frame: tridiagonal, diagonal 1/p^j + 1/p^{j+1},
// off-diagonal −1/p^{j+1} at (j, j+1).
CovariantTensor2 fisher_rao_metric(const SimplexPoint& p);

// Metric extracted from KL, in closed form: diagonal 2(1/p^j + 1/p^{j+1}),
// (j, j−1) → −2/p^j, (j, j+1) → −2/p^{j+1}.
CovariantTensor2 kl_metric_closed_form(const SimplexPoint& p);

}  // namespace infogeo
