#pragma once

// Analytic two-point functions on R^2 with hand-coded second derivatives,
// used to check the differentiation backend.

#include <array>
#include <cmath>
#include <span>
#include <string>

#include "infogeo/core_geometry.hpp"
#include "infogeo/dual.hpp"

namespace testfns {

using infogeo::Mat;

// Full Hessian in (x0, x1, y0, y1).
using Hessian = std::array<std::array<double, 4>, 4>;

struct Analytic {
  std::string name;
  infogeo::TwoPointFunction f;
  Hessian (*hessian)(std::span<const double> x, std::span<const double> y);
};

// x0² y1 + 3 x1 y0³ + x0 x1 y0 y1
inline Hessian poly_hessian(std::span<const double> x, std::span<const double> y) {
  Hessian h{};
  h[0][0] = 2 * y[1];
  h[0][1] = y[0] * y[1];
  h[0][2] = x[1] * y[1];
  h[0][3] = 2 * x[0] + x[1] * y[0];
  h[1][1] = 0;
  h[1][2] = 9 * y[0] * y[0] + x[0] * y[1];
  h[1][3] = x[0] * y[0];
  h[2][2] = 18 * x[1] * y[0];
  h[2][3] = x[0] * x[1];
  h[3][3] = 0;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < r; ++c) h[r][c] = h[c][r];
  return h;
}

// ln(e^{x0+y0} + e^{x1+y1} + 1); with s the softmax of u = x + y against the
// constant term, every block equals diag(s) − s sᵀ.
inline Hessian logsum_hessian(std::span<const double> x, std::span<const double> y) {
  const double e0 = std::exp(x[0] + y[0]);
  const double e1 = std::exp(x[1] + y[1]);
  const double z = e0 + e1 + 1.0;
  const double s[2] = {e0 / z, e1 / z};
  Hessian h{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const double v = (i == j ? s[i] : 0.0) - s[i] * s[j];
      h[i][j] = h[i][2 + j] = h[2 + i][j] = h[2 + i][2 + j] = v;
    }
  return h;
}

inline constexpr double kM[2][4] = {{1, 2, 0, -1}, {0, 1, 1, 0.5}};
inline constexpr double kN[2][4] = {{2, 0, 1, 1}, {0, -1, 3, 0}};

template <typename T>
std::array<T, 4> mat2_mul(const std::array<T, 4>& a, const std::array<T, 4>& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}

template <typename T>
std::array<T, 4> combine(const double (*basis)[4], std::span<const T> c) {
  std::array<T, 4> out{};
  for (int k = 0; k < 4; ++k) out[k] = c[0] * T(basis[0][k]) + c[1] * T(basis[1][k]);
  return out;
}

inline double trace_of(const std::array<double, 4>& a) { return a[0] + a[3]; }

// Tr(A(x)² B(y)). ∂x_i∂x_j = Tr((M_i M_j + M_j M_i) B), ∂x_i∂y_k = Tr((M_i A + A M_i) N_k), ∂y∂y = 0.
inline Hessian trace_hessian(std::span<const double> x, std::span<const double> y) {
  const std::array<double, 4> a = combine<double>(kM, x);
  const std::array<double, 4> b = combine<double>(kN, y);
  auto m = [](int i) { return std::array<double, 4>{kM[i][0], kM[i][1], kM[i][2], kM[i][3]}; };
  auto n = [](int i) { return std::array<double, 4>{kN[i][0], kN[i][1], kN[i][2], kN[i][3]}; };
  auto add = [](const std::array<double, 4>& p, const std::array<double, 4>& q) {
    return std::array<double, 4>{p[0] + q[0], p[1] + q[1], p[2] + q[2], p[3] + q[3]};
  };
  Hessian h{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) h[i][j] = trace_of(mat2_mul(add(mat2_mul(m(i), m(j)), mat2_mul(m(j), m(i))), b));
    for (int k = 0; k < 2; ++k) {
      h[i][2 + k] = trace_of(mat2_mul(add(mat2_mul(m(i), a), mat2_mul(a, m(i))), n(k)));
      h[2 + k][i] = h[i][2 + k];
    }
  }
  return h;
}

inline std::vector<Analytic> analytic_functions() {
  const std::string chart = infogeo::euclidean_chart_label(2);
  std::vector<Analytic> out;
  out.push_back({"polynomial",
                 infogeo::TwoPointFunction::from_generic("poly", chart,
                                                         [](auto x, auto y) {
                                                           return x[0] * x[0] * y[1] + 3.0 * x[1] * y[0] * y[0] * y[0] +
                                                                  x[0] * x[1] * y[0] * y[1];
                                                         }),
                 &poly_hessian});
  out.push_back({"log-sum",
                 infogeo::TwoPointFunction::from_generic("logsum", chart,
                                                         [](auto x, auto y) {
                                                           using std::exp;
                                                           using std::log;
                                                           return log(exp(x[0] + y[0]) + exp(x[1] + y[1]) + 1.0);
                                                         }),
                 &logsum_hessian});
  out.push_back({"bilinear-trace",
                 infogeo::TwoPointFunction::from_generic("trace", chart,
                                                         [](auto x, auto y) {
                                                           using T = std::remove_const_t<
                                                               typename decltype(x)::value_type>;
                                                           const auto a = combine<T>(kM, x);
                                                           const auto b = combine<T>(kN, y);
                                                           const auto m = mat2_mul(mat2_mul(a, a), b);
                                                           return m[0] + m[3];
                                                         }),
                 &trace_hessian});
  return out;
}

// Constant non-coordinate frame X_1 = ∂_1 + ∂_2, X_2 = −½ ∂_1 + 2 ∂_2 with
// coefficient matrix A (row j = X_j). Second Lie derivatives are A H Aᵀ blockwise.
inline constexpr double kSkew[2][2] = {{1.0, 1.0}, {-0.5, 2.0}};

inline infogeo::Frame skew_frame() {
  return infogeo::Frame::from_generic("skew", infogeo::euclidean_chart(2), [](auto q) {
    using T = std::remove_const_t<typename decltype(q)::value_type>;
    return std::vector<T>{T(kSkew[0][0]), T(kSkew[0][1]), T(kSkew[1][0]), T(kSkew[1][1])};
  });
}

// L_{Z_a} L_{Z_b} F in product indices for a constant frame with matrix A.
inline Hessian in_frame(const Hessian& h, const double (*a)[2]) {
  Hessian out{};
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q) {
      const int bp = p / 2 * 2, bq = q / 2 * 2;
      double s = 0.0;
      for (int r = 0; r < 2; ++r)
        for (int t = 0; t < 2; ++t) s += a[p % 2][r] * a[q % 2][t] * h[bp + r][bq + t];
      out[p][q] = s;
    }
  return out;
}

}  // namespace testfns
