#include <doctest.h>

#include <cmath>

#include "../analytic_functions.hpp"
#include "../oracles.hpp"
#include "infogeo/core_geometry.hpp"
#include "infogeo/errors.hpp"
#include "infogeo/simplex.hpp"

using namespace infogeo;

namespace {

DifferentiationConfig scheme(Scheme s) {
  DifferentiationConfig cfg;
  cfg.scheme = s;
  return cfg;
}

ProductPoint test_pair() {
  const Chart c = euclidean_chart(2);
  return make_product_point(make_point(c, {oracles::kTestX[0], oracles::kTestX[1]}),
                            make_point(c, {oracles::kTestY[0], oracles::kTestY[1]}));
}

}  // namespace

TEST_CASE("charts reject points outside their domain") {
  const Chart c = simplex_chart(3);
  CHECK(c.contains(std::vector<double>{0.2, 0.3}));
  CHECK_FALSE(c.contains(std::vector<double>{0.2}));
  CHECK_FALSE(c.contains(std::vector<double>{0.7, 0.4}));
  CHECK_THROWS_AS(make_point(c, {0.7, 0.4}), DomainError);
  CHECK_FALSE(euclidean_chart(2).contains(std::vector<double>{NAN, 0.0}));
}

TEST_CASE("frames and coframes are dual") {
  const Point p = make_point(simplex_chart(4), {0.1, 0.2, 0.3});
  for (const Frame& f : {simplex_frame(4), sheared_simplex_frame(4), coordinate_frame(simplex_chart(4))}) {
    const FrameAt at = eval_frame(f, p);
    CHECK(max_abs(at.coframe * at.vectors.transpose() - Mat::Identity(3, 3)) < 1e-12);
  }
}

TEST_CASE("product frame indexing") {
  const ProductFrame pf = lift_frame(coordinate_frame(euclidean_chart(3)));
  CHECK(pf.dimension() == 6);
  CHECK(pf.field(4).side == Side::right);
  CHECK(pf.field(4).index == 1);
  CHECK(pf.index_of(FieldRef{Side::left, 2}) == 2);
  CHECK(pf.field_label(0) == "X1");
  CHECK(pf.field_label(3) == "Y1");
}

TEST_CASE("Lie brackets") {
  const Point p = make_point(simplex_chart(4), {0.1, 0.2, 0.3});
  for (double c : lie_bracket_table(coordinate_frame(simplex_chart(4)), p)) CHECK(c == 0.0);

  // Sheared frame X_0 = P_0 + q0 P_1, X_1 = P_1 + q1 P_2, X_2 = P_2 gives
  // [X_1, X_0] = (1 − q0) X_2.
  const auto c10 = lie_bracket_coefficients(sheared_simplex_frame(4), 1, 0, p);
  CHECK(c10[0] == doctest::Approx(0.0));
  CHECK(c10[1] == doctest::Approx(0.0));
  CHECK(c10[2] == doctest::Approx(0.9).epsilon(1e-12));
  const auto c01 = lie_bracket_coefficients(sheared_simplex_frame(4), 0, 1, p);
  CHECK(c01[2] == doctest::Approx(-0.9).epsilon(1e-12));
}

TEST_CASE("second Lie derivatives of analytic functions match frozen oracles") {
  const ProductPoint pp = test_pair();
  const ProductFrame pf = lift_frame(coordinate_frame(euclidean_chart(2)));
  const double (*refs[])[4] = {oracles::kPolyHessian, oracles::kLogSumHessian, oracles::kTraceHessian};
  const auto fns = testfns::analytic_functions();
  for (std::size_t k = 0; k < fns.size(); ++k) {
    // The hand-coded closed forms agree with the sympy values.
    const testfns::Hessian closed = fns[k].hessian(pp.left.coords, pp.right.coords);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) CHECK(closed[a][b] == doctest::Approx(refs[k][a][b]).epsilon(1e-13));

    for (Scheme s : {Scheme::forward_mode, Scheme::richardson_central}) {
      CAPTURE(fns[k].name);
      CAPTURE(scheme_name(s));
      const DerivativeTable t = lie_derivative_table(fns[k].f, pf, pp, scheme(s));
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) CHECK(t.second(a, b) == doctest::Approx(refs[k][a][b]).epsilon(1e-7).scale(1.0));
    }
  }
}

TEST_CASE("second Lie derivatives along a constant skew frame") {
  const ProductPoint pp = test_pair();
  const ProductFrame pf = lift_frame(testfns::skew_frame());
  for (const auto& fn : testfns::analytic_functions()) {
    const testfns::Hessian ref = testfns::in_frame(fn.hessian(pp.left.coords, pp.right.coords), testfns::kSkew);
    const DerivativeTable t = lie_derivative_table(fn.f, pf, pp, scheme(Scheme::forward_mode));
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) CHECK(t.second(a, b) == doctest::Approx(ref[a][b]).epsilon(1e-10).scale(1.0));
    CHECK(second_lie_derivative(fn.f, pf, {Side::left, 1}, {Side::right, 0}, pp, {}) ==
          doctest::Approx(ref[1][2]).epsilon(1e-10).scale(1.0));
  }
}

TEST_CASE("first Lie derivatives") {
  const ProductPoint pp = test_pair();
  const ProductFrame pf = lift_frame(coordinate_frame(euclidean_chart(2)));
  const auto fns = testfns::analytic_functions();
  // ∂/∂y0 of x0² y1 + 3 x1 y0³ + x0 x1 y0 y1
  const double x0 = oracles::kTestX[0], x1 = oracles::kTestX[1], y0 = oracles::kTestY[0], y1 = oracles::kTestY[1];
  const double ref = 9 * x1 * y0 * y0 + x0 * x1 * y1;
  for (Scheme s : {Scheme::forward_mode, Scheme::richardson_central})
    CHECK(lie_derivative(fns[0].f, pf, {Side::right, 0}, pp, scheme(s)) == doctest::Approx(ref).epsilon(1e-9));
}

TEST_CASE("differentiation config validation") {
  DifferentiationConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.base_step = 0.0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg.base_step = 1e-3;
  cfg.relative_tolerance = 1.5;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
}

TEST_CASE("diagonal product points") {
  const Point p = make_point(euclidean_chart(2), {1.0, 2.0});
  CHECK(is_diagonal(diagonal(p)));
  CHECK_FALSE(is_diagonal(make_product_point(p, make_point(euclidean_chart(2), {1.0, 2.5}))));
}
