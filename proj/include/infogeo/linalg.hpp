#pragma once

// Dense linear algebra shared by the modules. Double-precision work goes
// through Eigen; the small templated types below exist so the same code path
// can run on dual numbers for forward-mode differentiation.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "infogeo/dual.hpp"
#include "infogeo/errors.hpp"

namespace infogeo {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using cplx = std::complex<double>;

// Minimal complex number over an arbitrary real scalar (std::complex is only
// specified for the built-in floating types).
template <typename T>
struct Cx {
  T re{};
  T im{};

  friend Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
  friend Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
  friend Cx operator*(const Cx& a, const Cx& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Cx operator*(const T& s, const Cx& a) { return {s * a.re, s * a.im}; }
  Cx& operator+=(const Cx& b) { return *this = *this + b; }
};

template <typename T>
Cx<T> conj(const Cx<T>& a) {
  return {a.re, -a.im};
}

template <typename T>
T norm2(const Cx<T>& a) {
  return a.re * a.re + a.im * a.im;
}

// Square complex matrix, row-major, over scalar T.
template <typename T>
class CMatT {
 public:
  CMatT() = default;
  explicit CMatT(std::size_t n) : n_(n), a_(n * n) {}

  static CMatT identity(std::size_t n) {
    CMatT m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Cx<T>{T(1.0), T(0.0)};
    return m;
  }

  static CMatT from(const CMat& m) {
    CMatT out(static_cast<std::size_t>(m.rows()));
    for (std::size_t i = 0; i < out.n_; ++i)
      for (std::size_t j = 0; j < out.n_; ++j)
        out(i, j) = Cx<T>{T(m(i, j).real()), T(m(i, j).imag())};
    return out;
  }

  std::size_t size() const { return n_; }
  Cx<T>& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Cx<T>& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  friend CMatT operator*(const CMatT& a, const CMatT& b) {
    CMatT c(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t k = 0; k < a.n_; ++k) {
        const Cx<T> aik = a(i, k);
        for (std::size_t j = 0; j < a.n_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }
  friend CMatT operator+(const CMatT& a, const CMatT& b) {
    CMatT c(a.n_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] + b.a_[i];
    return c;
  }
  friend CMatT operator*(const T& s, const CMatT& a) {
    CMatT c(a.n_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = s * a.a_[i];
    return c;
  }

  CMatT adjoint() const {
    CMatT c(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) c(i, j) = conj((*this)(j, i));
    return c;
  }

  // Largest absolute row sum of the real values (induced inf-norm).
  double value_norm_inf() const {
    double best = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
      double row = 0.0;
      for (std::size_t j = 0; j < n_; ++j) {
        const auto& z = (*this)(i, j);
        row += std::hypot(value_of(z.re), value_of(z.im));
      }
      best = std::max(best, row);
    }
    return best;
  }

  CMat values() const {
    CMat m(static_cast<Eigen::Index>(n_), static_cast<Eigen::Index>(n_));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            cplx(value_of((*this)(i, j).re), value_of((*this)(i, j).im));
    return m;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Cx<T>> a_;
};

// Matrix exponential by scaling and squaring of a truncated Taylor series.
// Works for any scalar; the truncation (18 terms at norm <= 1/2) is below
// double rounding.
template <typename T>
CMatT<T> expm_taylor(const CMatT<T>& a) {
  const std::size_t n = a.size();
  const double norm = a.value_norm_inf();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const T scale = T(std::ldexp(1.0, -squarings));
  const CMatT<T> x = scale * a;

  CMatT<T> result = CMatT<T>::identity(n);
  CMatT<T> term = CMatT<T>::identity(n);
  for (int k = 1; k <= 18; ++k) {
    term = T(1.0 / k) * (term * x);
    result = result + term;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

// Inverse of a row-major real n×n matrix over scalar T, Gauss-Jordan with
// partial pivoting on the real values.
template <typename T>
std::vector<T> invert_row_major(std::vector<T> a, std::size_t n) {
  std::vector<T> inv(n * n, T(0.0));
  for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = T(1.0);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    double best = std::abs(value_of(a[col * n + col]));
    for (std::size_t r = col + 1; r < n; ++r) {
      const double v = std::abs(value_of(a[r * n + col]));
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (!(best > 1e-300)) throw NumericError("matrix is singular");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a[pivot * n + j], a[col * n + j]);
        std::swap(inv[pivot * n + j], inv[col * n + j]);
      }
    }
    const T d = T(1.0) / a[col * n + col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col * n + j] = a[col * n + j] * d;
      inv[col * n + j] = inv[col * n + j] * d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const T f = a[r * n + col];
      if (value_of(f) == 0.0 && is_constant(f)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a[r * n + j] = a[r * n + j] - f * a[col * n + j];
        inv[r * n + j] = inv[r * n + j] - f * inv[col * n + j];
      }
    }
  }
  return inv;
}

inline Mat to_mat(std::span<const double> row_major, std::size_t n) {
  Mat m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = row_major[i * n + j];
  return m;
}

inline std::vector<double> to_row_major(const Mat& m) {
  std::vector<double> out(static_cast<std::size_t>(m.size()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out[static_cast<std::size_t>(i * m.cols() + j)] = m(i, j);
  return out;
}

inline double max_abs(const Mat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }
inline double cmax_abs(const CMat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

// Deviation of `actual` from `expected` relative to the size of `expected`.
inline double relative_deviation(const Mat& actual, const Mat& expected) {
  const double scale = max_abs(expected);
  const double diff = max_abs(actual - expected);
  return scale > 0.0 ? diff / scale : diff;
}

}  // namespace infogeo
