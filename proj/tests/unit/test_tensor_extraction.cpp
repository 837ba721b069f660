#include <doctest.h>

#include "../oracles.hpp"
#include "infogeo/divergence.hpp"
#include "infogeo/errors.hpp"
#include "infogeo/simplex.hpp"
#include "infogeo/tensor_extraction.hpp"

using namespace infogeo;

namespace {

DifferentiationConfig richardson() {
  DifferentiationConfig cfg;
  cfg.scheme = Scheme::richardson_central;
  return cfg;
}

}  // namespace

TEST_CASE("J squares to minus the identity") {
  for (std::size_t d : {1u, 2u, 5u}) {
    const Mat j = j_matrix(d);
    CHECK((j * j + Mat::Identity(2 * d, 2 * d)).cwiseAbs().maxCoeff() == 0.0);
  }
  const std::vector<double> v{1, 2, 3, 4};
  CHECK(apply_J(v) == std::vector<double>{-3, -4, 1, 2});
  CHECK_THROWS_AS(apply_J(std::vector<double>{1, 2, 3}), DomainError);
}

TEST_CASE("KL metric on the 2-simplex at the uniform point") {
  const Point p = to_chart_point(make_simplex_point({0.5, 0.5}));
  for (const DifferentiationConfig& cfg : {DifferentiationConfig{}, richardson()}) {
    const Mat g = extract_divergence_metric(kl_function(2), simplex_frame(2), p, cfg).components;
    REQUIRE(g.rows() == 1);
    CHECK(g(0, 0) == doctest::Approx(oracles::kKlMetricUniform2).epsilon(1e-9));
  }
}

TEST_CASE("KL metric on the P-frame at (0.2, 0.3, 0.5)") {
  const Point p = to_chart_point(make_simplex_point({0.2, 0.3, 0.5}));
  for (MetricRoute r : {MetricRoute::mixed, MetricRoute::left, MetricRoute::right}) {
    const Mat g = extract_divergence_metric(kl_function(3), simplex_frame(3), p, {}, r).components;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) CHECK(g(a, b) == doctest::Approx(oracles::kKlMetricP235[a][b]).epsilon(1e-12));
  }
}

TEST_CASE("quadratic divergence on R^2 gives twice the identity") {
  const Point p = make_point(euclidean_chart(2), {0.3, -1.2});
  const Mat g = extract_divergence_metric(quadratic_function(2), coordinate_frame(euclidean_chart(2)), p, {}).components;
  CHECK((g - 2.0 * Mat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("omega_F, g_F and their diagonal pullbacks") {
  const ProductFrame pf = lift_frame(sheared_simplex_frame(4));
  const Point x = to_chart_point(make_simplex_point({0.1, 0.2, 0.3, 0.4}));
  const Point y = to_chart_point(make_simplex_point({0.25, 0.15, 0.35, 0.25}));
  const TwoPointFunction f = kl_function(4);

  SUBCASE("off the diagonal") {
    const ProductPoint pp = make_product_point(x, y);
    const CovariantTensor2 w = omega_F(f, pf, pp, {});
    CHECK(w.symmetry_defect() < 1e-12);
    const CovariantTensor2 block = omega_F_block_expansion(f, pf, pp, {});
    CHECK(max_abs(w.components - block.components) < 1e-10 * max_abs(w.components));
    const CovariantTensor2 wr = omega_F(f, pf, pp, richardson());
    CHECK(max_abs(w.components - wr.components) < 1e-6 * max_abs(w.components));
    CHECK_THROWS_AS(pullback_diagonal(w), DomainError);
  }

  SUBCASE("on the diagonal") {
    const ProductPoint pp = diagonal(x);
    const CovariantTensor2 w = omega_F(f, pf, pp, {});
    CHECK(max_abs(pullback_diagonal(w).components) < 1e-12);
    const Mat pulled = pullback_diagonal(g_F(f, pf, pp, {})).components;
    const Mat extracted = extract_divergence_metric(f, sheared_simplex_frame(4), x, {}).components;
    CHECK(max_abs(pulled - extracted) < 1e-10 * max_abs(extracted));
  }
}

TEST_CASE("g_from_omega applies J in the first slot") {
  // ω = α¹∧β¹ evaluated: ω(X, Y) = 1, ω(Y, X) = −1.
  Mat w = Mat::Zero(2, 2);
  w(0, 1) = 1.0;
  w(1, 0) = -1.0;
  const Point p = make_point(euclidean_chart(1), {0.0});
  const Mat g = g_from_omega({w, "t", diagonal(p), Symmetry::antisymmetric}).components;
  // g(X, X) = ω(Y, X) = −1, g(Y, Y) = ω(−X, Y) = −1.
  CHECK(g(0, 0) == -1.0);
  CHECK(g(1, 1) == -1.0);
  CHECK(g(0, 1) == 0.0);
}

TEST_CASE("metric components transform as a (0,2) tensor") {
  const Point p = to_chart_point(make_simplex_point({0.1, 0.2, 0.3, 0.4}));
  const Mat g = extract_divergence_metric(kl_function(4), simplex_frame(4), p, {}).components;
  const Mat gs = extract_divergence_metric(kl_function(4), sheared_simplex_frame(4), p, {}).components;
  const Mat a = change_of_frame(simplex_frame(4), sheared_simplex_frame(4), p);
  CHECK(max_abs(a * g * a.transpose() - gs) < 1e-10 * max_abs(gs));
}

TEST_CASE("extraction preconditions") {
  const Chart c = euclidean_chart(2);
  const Point p = make_point(c, {0.1, 0.2});
  CHECK_THROWS_AS(extract_divergence_metric(signed_sum_function(c), coordinate_frame(c), p, {}), PreconditionError);
  CHECK_THROWS_AS(extract_divergence_metric(kl_function(3), coordinate_frame(c), p, {}), DomainError);
}

TEST_CASE("psd report flags degenerate tensors") {
  Mat m = Mat::Zero(3, 3);
  m(0, 0) = 2.0;
  m(1, 1) = 1.0;
  const Point p = make_point(euclidean_chart(3), {0, 0, 0});
  const PsdReport r = psd_report({m, "t", p, Symmetry::symmetric});
  CHECK(r.positive_semidefinite);
  CHECK(r.null_directions == 1);
  m(2, 2) = -1.0;
  CHECK_FALSE(psd_report({m, "t", p, Symmetry::symmetric}).positive_semidefinite);
}
