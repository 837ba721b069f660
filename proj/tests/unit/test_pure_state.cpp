#include <doctest.h>

#include <cmath>

#include "../oracles.hpp"
#include "infogeo/errors.hpp"
#include "infogeo/pure_state.hpp"
#include "infogeo/sampling.hpp"
#include "infogeo/simplex.hpp"

using namespace infogeo;

TEST_CASE("Hermitian tensor at (1, 1)/sqrt(2)") {
  CVec psi(2);
  psi << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  const HilbertPoint hp = make_hilbert_point(psi);
  const HermitianParts h = hermitian_tensor_parts(hp);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      CHECK(h.re(a, b) == doctest::Approx(oracles::kReHHalf[a][b]).epsilon(1e-15).scale(1.0));
      CHECK(h.im(a, b) == doctest::Approx(oracles::kImHHalf[a][b]).epsilon(1e-15).scale(1.0));
    }
  const KahlerTensors k = kahler_from_potential(hp, {});
  CHECK(max_abs(k.g - h.re) < 1e-12);
  CHECK(max_abs(k.omega - h.im) < 1e-12);
  CHECK(max_abs(k.raw + 2.0 * h.im) < 1e-12);
}

TEST_CASE("h under rescaling of psi") {
  Rng rng(5);
  const CVec psi = sample_complex_vector(3, rng);
  const HermitianParts a = hermitian_tensor_parts(make_hilbert_point(psi));
  const HermitianParts b = hermitian_tensor_parts(make_hilbert_point(psi * cplx(2.0, -1.0)));
  // Fixed tangent vectors: h scales by 1/|c|².
  CHECK(max_abs(a.re - 5.0 * b.re) < 1e-13);
  CHECK(max_abs(a.im - 5.0 * b.im) < 1e-13);
}

TEST_CASE("Kaehler pair from the potential at random states") {
  Rng rng(9);
  for (std::size_t n : {2u, 4u}) {
    for (int k = 0; k < 5; ++k) {
      const HilbertPoint hp = make_hilbert_point(sample_complex_vector(n, rng));
      const HermitianParts h = hermitian_tensor_parts(hp);
      for (Scheme s : {Scheme::forward_mode, Scheme::richardson_central}) {
        DifferentiationConfig cfg;
        cfg.scheme = s;
        const KahlerTensors kt = kahler_from_potential(hp, cfg);
        CHECK(max_abs(kt.g - h.re) < 1e-8);
        CHECK(max_abs(kt.omega - h.im) < 1e-8);
      }
      // Degenerate along ψ and iψ.
      const std::vector<double> v = to_real(hp.psi);
      const std::vector<double> iv = complex_structure_H0(v);
      const Eigen::Map<const Vec> mv(v.data(), static_cast<Eigen::Index>(v.size()));
      const Eigen::Map<const Vec> miv(iv.data(), static_cast<Eigen::Index>(iv.size()));
      CHECK((h.re * mv).cwiseAbs().maxCoeff() < 1e-12);
      CHECK((h.re * miv).cwiseAbs().maxCoeff() < 1e-12);
      // Compatibility g(u, v) = ω(u, J v).
      const Mat j = complex_structure_matrix(n);
      CHECK(max_abs(h.im * j - h.re) < 1e-12);
    }
  }
}

TEST_CASE("complex structure") {
  CHECK(complex_structure_H0(std::vector<double>{1, 2, 3, 4}) == std::vector<double>{-3, -4, 1, 2});
  const Mat j = complex_structure_matrix(3);
  CHECK(max_abs(j * j + Mat::Identity(6, 6)) == 0.0);
  CHECK(to_complex(std::vector<double>{1, 2, 3, 4})(1) == cplx(2.0, 4.0));
}

TEST_CASE("invalid states") {
  CHECK_THROWS_AS(make_hilbert_point(CVec::Zero(3)), DomainError);
  CVec v = CVec::Ones(2);
  v(0) = cplx(NAN, 0.0);
  CHECK_THROWS_AS(make_hilbert_point(v), DomainError);
}

TEST_CASE("Fisher-Rao recovery through amplitude coordinates") {
  const FisherRaoRecoveryReport r = verify_fisher_rao_recovery(make_simplex_point({0.5, 0.5}), {});
  CHECK(r.passed);
  CHECK(r.re_h_p_frame(0, 0) == doctest::Approx(1.0).epsilon(1e-12));

  DifferentiationConfig rich;
  rich.scheme = Scheme::richardson_central;
  const FisherRaoRecoveryReport r3 = verify_fisher_rao_recovery(make_simplex_point({0.2, 0.3, 0.1, 0.4}), rich, 3);
  CHECK(r3.passed);
  CHECK(r3.re_h_relative < 1e-6);
  CHECK(r3.constant_phase_value < 1e-9);
}

TEST_CASE("amplitude embedding") {
  const AmplitudeCoordinates ac = make_amplitude_coordinates({0.25, 0.75}, {0.0, M_PI / 2});
  const HilbertPoint hp = amplitude_embedding(ac);
  CHECK(std::abs(hp.psi(0) - cplx(0.5, 0.0)) < 1e-15);
  CHECK(std::abs(hp.psi(1) - cplx(0.0, std::sqrt(0.75))) < 1e-15);
  CHECK_THROWS_AS(make_amplitude_coordinates({0.25, 0.75}, {0.0}), DomainError);
}
