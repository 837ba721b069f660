#include "infogeo/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "infogeo/quantum.hpp"

namespace infogeo {

SimplexPoint sample_simplex(std::size_t n, Rng& rng, double floor, double min_gap) {
  std::exponential_distribution<double> expo(1.0);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<double> p(n);
    double sum = 0.0;
    for (auto& v : p) {
      v = expo(rng);
      sum += v;
    }
    for (auto& v : p) v /= sum;
    if (*std::min_element(p.begin(), p.end()) <= floor) continue;
    if (min_gap > 0.0) {
      SimplexPoint candidate{p};
      if (min_eigenvalue_gap(candidate) < min_gap) continue;
    }
    return make_simplex_point(std::move(p), floor);
  }
  throw NumericError("could not sample a simplex point satisfying the constraints");
}

CMat sample_special_unitary(std::size_t n, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  const auto m = static_cast<Eigen::Index>(n);
  CMat z(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      z(i, j) = cplx(re, im);
    }
  Eigen::HouseholderQR<CMat> qr(z);
  CMat q = qr.householderQ() * CMat::Identity(m, m);
  const CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < m; ++j) {
    const cplx d = r(j, j);
    const double a = std::abs(d);
    if (a > 0.0) q.col(j) *= d / a;
  }
  const cplx det = q.determinant();
  const double phase = std::arg(det);
  q *= std::polar(1.0, -phase / static_cast<double>(n));
  return q;
}

CVec sample_complex_vector(std::size_t n, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CVec v(static_cast<Eigen::Index>(n));
  do {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      v(i) = cplx(re, im);
    }
  } while (v.norm() < 1e-3);
  return v;
}

std::vector<double> sample_ball(std::size_t n, double radius, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> v(n);
  double norm = 0.0;
  do {
    norm = 0.0;
    for (auto& x : v) {
      x = gauss(rng);
      norm += x * x;
    }
    norm = std::sqrt(norm);
  } while (norm == 0.0);
  const double r = radius * std::pow(unit(rng), 1.0 / static_cast<double>(n));
  for (auto& x : v) x *= r / norm;
  return v;
}

}  // namespace infogeo
