#include <doctest.h>

#include <cmath>

#include "../oracles.hpp"
#include "infogeo/divergence.hpp"
#include "infogeo/errors.hpp"
#include "infogeo/quantum.hpp"
#include "infogeo/sampling.hpp"

using namespace infogeo;

TEST_CASE("Gell-Mann basis") {
  for (std::size_t n : {2u, 3u, 4u}) {
    const GellMannBasis b = gell_mann_basis(n);
    REQUIRE(b.size() == n * n - 1);
    for (std::size_t a = 0; a < b.size(); ++a) {
      CHECK(cmax_abs(b[a] + b[a].adjoint()) < 1e-15);
      CHECK(std::abs(b[a].trace()) < 1e-15);
      for (std::size_t c = 0; c < b.size(); ++c) {
        const cplx t = (b[a] * b[c]).trace();
        CHECK(std::abs(t + (a == c ? 1.0 : 0.0)) < 1e-14);
      }
    }
  }
  const GellMannBasis b3 = gell_mann_basis(3);
  CHECK(b3.generators[0].label == "lambda_12");
  CHECK(b3.generators[3].label == "sigma_12");
  CHECK(b3.generators[6].label == "e_1");
  CHECK(b3.generators[7].kind == GeneratorKind::cartan);
  CHECK_THROWS_AS(gell_mann_basis(1), DomainError);
}

TEST_CASE("structure constants") {
  const StructureConstants c2 = structure_constants(gell_mann_basis(2));
  CHECK(c2(0, 1, 2) == doctest::Approx(oracles::kSu2C012).epsilon(1e-14));
  CHECK(c2(0, 2, 1) == doctest::Approx(-oracles::kSu2C012).epsilon(1e-14));
  CHECK(c2(2, 0, 1) == doctest::Approx(oracles::kSu2C012).epsilon(1e-14));
  CHECK(c2(0, 0, 1) == 0.0);

  const GellMannBasis b = gell_mann_basis(3);
  const StructureConstants c = structure_constants(b);
  double worst = 0.0;
  for (std::size_t p = 0; p < b.size(); ++p)
    for (std::size_t q = 0; q < b.size(); ++q) {
      CMat rec = CMat::Zero(3, 3);
      for (std::size_t a = 0; a < b.size(); ++a) rec += c(a, p, q) * b[a];
      worst = std::max(worst, cmax_abs(b[p] * b[q] - b[q] * b[p] - rec));
      for (std::size_t a = 0; a < b.size(); ++a) CHECK(c(a, p, q) == -c(a, q, p));
    }
  CHECK(worst < 1e-10);
}

TEST_CASE("density matrices and unfolded points") {
  CMat rho(2, 2);
  rho << 0.6, cplx(0.1, 0.2), cplx(0.1, -0.2), 0.4;
  CHECK_NOTHROW(make_density_matrix(rho));
  CMat bad = rho;
  bad(0, 1) = cplx(0.3, 0.0);
  CHECK_THROWS_AS(make_density_matrix(bad), DomainError);
  CHECK_THROWS_AS(make_density_matrix(rho * 2.0), DomainError);

  Rng rng(3);
  const CMat u = sample_special_unitary(3, rng);
  CHECK(cmax_abs(u.adjoint() * u - CMat::Identity(3, 3)) < 1e-12);
  CHECK(std::abs(u.determinant() - 1.0) < 1e-12);
  const UnfoldedQuantumPoint pt = make_unfolded_point(u, make_simplex_point({0.5, 0.3, 0.2}));
  const DensityMatrix r = unfold(pt);
  CHECK(std::abs(r.rho.trace() - 1.0) < 1e-14);
  CHECK_THROWS_AS(make_unfolded_point(2.0 * u, pt.p), DomainError);
}

TEST_CASE("matrix log and exponential") {
  CMat h(2, 2);
  h << 2.0, cplx(0.5, 0.5), cplx(0.5, -0.5), 1.0;
  const CMat l = matrix_log_pd(h);
  // log is monotone, so sorted spectra correspond.
  Eigen::SelfAdjointEigenSolver<CMat> es(h), el(l);
  for (int k = 0; k < 2; ++k) CHECK(std::log(es.eigenvalues()(k)) == doctest::Approx(el.eigenvalues()(k)).epsilon(1e-14));

  const GellMannBasis b = gell_mann_basis(3);
  const std::vector<double> t{0.1, -0.2, 0.3, 0.05, 0.0, -0.4, 0.2, 0.1};
  const CMat u = expm_antihermitian(lie_algebra_element(b, t));
  CHECK(cmax_abs(u.adjoint() * u - CMat::Identity(3, 3)) < 1e-13);
  CHECK(std::abs(u.determinant() - 1.0) < 1e-13);
}

TEST_CASE("Umegaki relative entropy") {
  const DensityMatrix r = make_density_matrix(CMat(Eigen::Vector2cd(0.75, 0.25).asDiagonal()));
  const DensityMatrix s = make_density_matrix(CMat(Eigen::Vector2cd(0.5, 0.5).asDiagonal()));
  CHECK(umegaki_entropy(r, r) == doctest::Approx(0.0));
  // Commuting states reduce to KL.
  CHECK(umegaki_entropy(r, s) == doctest::Approx(kl_divergence(std::vector<double>{0.75, 0.25},
                                                               std::vector<double>{0.5, 0.5}))
                                     .epsilon(1e-13));

  Rng rng(11);
  const UnfoldedQuantumPoint a = make_unfolded_point(sample_special_unitary(3, rng), sample_simplex(3, rng));
  const UnfoldedQuantumPoint c = make_unfolded_point(sample_special_unitary(3, rng), sample_simplex(3, rng));
  CHECK(umegaki_pullback(a, c) == doctest::Approx(umegaki_entropy(unfold(a), unfold(c))).epsilon(1e-10));
  CHECK(umegaki_pullback(a, c) > 0.0);
}

TEST_CASE("closed-form Umegaki metric") {
  const GellMannBasis b2 = gell_mann_basis(2);
  const Mat g2 = umegaki_metric_closed_form(make_simplex_point({0.75, 0.25}), b2).components;
  REQUIRE(g2.rows() == 4);
  CHECK(g2(0, 0) == doctest::Approx(oracles::kUmegakiLambda2).epsilon(1e-14));
  CHECK(g2(1, 1) == doctest::Approx(oracles::kUmegakiLambda2).epsilon(1e-14));
  CHECK(std::abs(g2(2, 2)) < 1e-15);
  CHECK(g2(3, 3) == doctest::Approx(oracles::kUmegakiClassical2).epsilon(1e-14));

  const Mat g3 = umegaki_metric_closed_form(make_simplex_point({0.5, 0.3, 0.2}), gell_mann_basis(3)).components;
  for (int k = 0; k < 3; ++k) {
    CHECK(g3(k, k) == doctest::Approx(oracles::kUmegakiPairs3[k]).epsilon(1e-13));
    CHECK(g3(3 + k, 3 + k) == doctest::Approx(oracles::kUmegakiPairs3[k]).epsilon(1e-13));
  }
  CHECK_THROWS_AS(umegaki_metric_closed_form(make_simplex_point({0.4, 0.4, 0.2}), gell_mann_basis(3)),
                  PreconditionError);
}

TEST_CASE("generic extraction reproduces the Umegaki oracle") {
  const GellMannBasis b = gell_mann_basis(2);
  const std::vector<double> offset{0.2, -0.3, 0.1};
  const QuantumPointResult r = evaluate_quantum_point(b, make_simplex_point({0.75, 0.25}), {}, offset);
  CHECK(r.numeric(0, 0) == doctest::Approx(oracles::kUmegakiLambda2).epsilon(1e-10));
  CHECK(r.numeric(3, 3) == doctest::Approx(oracles::kUmegakiClassical2).epsilon(1e-10));
  CHECK(r.cross_block < 1e-10);
  CHECK(r.cartan_entry < 1e-10);
  CHECK(r.left_invariance < 1e-10);

  DifferentiationConfig rich;
  rich.scheme = Scheme::richardson_central;
  const QuantumPointResult rr = evaluate_quantum_point(b, make_simplex_point({0.75, 0.25}), rich);
  CHECK(rr.total_relative < 1e-6);
}

TEST_CASE("left-invariant frame in exponential coordinates") {
  const GellMannBasis b = gell_mann_basis(2);
  const ChartWithFrame cf = su_chart_at(CMat::Identity(2, 2), b);
  const Point origin = make_point(cf.chart, {0.0, 0.0, 0.0});
  const FrameAt at = eval_frame(cf.frame, origin);
  CHECK(max_abs(at.vectors - Mat::Identity(3, 3)) < 1e-15);
  // Bracket coefficients of left-invariant fields are the structure constants.
  const Point q = make_point(cf.chart, {0.3, 0.1, -0.2});
  const auto c = lie_bracket_table(cf.frame, q);
  const StructureConstants sc = structure_constants(b);
  for (std::size_t l = 0; l < 3; ++l)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) CHECK(c[(l * 3 + i) * 3 + j] == doctest::Approx(sc(l, i, j)).epsilon(1e-9).scale(1.0));
  CHECK_FALSE(cf.chart.contains(std::vector<double>{2.0, 0.0, 0.0}));
}

TEST_CASE("quantum pipeline for N = 2 and 3") {
  for (std::size_t n : {2u, 3u}) {
    const QuantumPipelineReport r = verify_quantum_pipeline(n, 4, {}, 5);
    CHECK(r.passed);
    CHECK(r.max_total_relative < 1e-10);
  }
}
