#pragma once

#include <cmath>
#include <ostream>
#include <type_traits>

namespace infogeo {

// Forward-mode dual number value + eps·ε with ε² = 0.
//
// Nesting (Dual<Dual<double>>) carries two independent infinitesimals, which
// is what the Lie-derivative backend uses to get exact mixed second
// derivatives of a function along two curves.
template <typename T>
struct Dual {
  T value{};
  T eps{};

  constexpr Dual() = default;
  constexpr Dual(double v) : value(v), eps(0.0) {}  // NOLINT: implicit lift of constants
  constexpr Dual(T v, T e) : value(v), eps(e) {}
  template <typename U = T, typename = std::enable_if_t<!std::is_same_v<U, double>>>
  constexpr Dual(int v) : value(static_cast<double>(v)), eps(0.0) {}  // NOLINT
  template <typename U = T, typename = std::enable_if_t<!std::is_same_v<U, double>>>
  constexpr Dual(const T& v) : value(v), eps(0.0) {}  // NOLINT

  friend constexpr Dual operator+(const Dual& a, const Dual& b) { return {a.value + b.value, a.eps + b.eps}; }
  friend constexpr Dual operator-(const Dual& a, const Dual& b) { return {a.value - b.value, a.eps - b.eps}; }
  friend constexpr Dual operator*(const Dual& a, const Dual& b) {
    return {a.value * b.value, a.eps * b.value + a.value * b.eps};
  }
  friend constexpr Dual operator/(const Dual& a, const Dual& b) {
    const T inv = T(1.0) / b.value;
    return {a.value * inv, (a.eps - a.value * inv * b.eps) * inv};
  }
  friend constexpr Dual operator-(const Dual& a) { return {-a.value, -a.eps}; }

  constexpr Dual& operator+=(const Dual& b) { return *this = *this + b; }
  constexpr Dual& operator-=(const Dual& b) { return *this = *this - b; }
  constexpr Dual& operator*=(const Dual& b) { return *this = *this * b; }
  constexpr Dual& operator/=(const Dual& b) { return *this = *this / b; }
};

using D1 = Dual<double>;
using D2 = Dual<D1>;

template <typename T>
struct is_dual : std::false_type {};
template <typename T>
struct is_dual<Dual<T>> : std::true_type {};

// Innermost real value.
constexpr double value_of(double x) { return x; }
template <typename T>
constexpr double value_of(const Dual<T>& x) {
  return value_of(x.value);
}

// True when no infinitesimal component is populated.
constexpr bool is_constant(double) { return true; }
template <typename T>
constexpr bool is_constant(const Dual<T>& x) {
  return is_constant(x.value) && value_of(x.eps) == 0.0 && is_constant(x.eps);
}

// Largest absolute value over every component (value and all infinitesimal
// parts). Used for truncation decisions that must respect derivatives too.
inline double magnitude(double x) { return std::abs(x); }
template <typename T>
double magnitude(const Dual<T>& x) {
  const double a = magnitude(x.value);
  const double b = magnitude(x.eps);
  return a > b ? a : b;
}

template <typename T>
Dual<T> log(const Dual<T>& x) {
  using std::log;
  return {log(x.value), x.eps / x.value};
}

template <typename T>
Dual<T> exp(const Dual<T>& x) {
  using std::exp;
  const T e = exp(x.value);
  return {e, e * x.eps};
}

template <typename T>
Dual<T> sqrt(const Dual<T>& x) {
  using std::sqrt;
  const T r = sqrt(x.value);
  return {r, x.eps / (T(2.0) * r)};
}

template <typename T>
Dual<T> sin(const Dual<T>& x) {
  using std::cos;
  using std::sin;
  return {sin(x.value), cos(x.value) * x.eps};
}

template <typename T>
Dual<T> cos(const Dual<T>& x) {
  using std::cos;
  using std::sin;
  return {cos(x.value), -sin(x.value) * x.eps};
}

template <typename T>
bool isfinite(const Dual<T>& x) {
  using std::isfinite;
  return isfinite(x.value) && isfinite(x.eps);
}

template <typename T>
std::ostream& operator<<(std::ostream& os, const Dual<T>& x) {
  return os << '(' << x.value << " + " << x.eps << "e)";
}

// Seeds for the two infinitesimals of D2. The inner slot (value.eps) is used
// for first derivatives and for the inner curve of a second derivative; the
// outer slot (eps.value) for the outer curve.
inline D2 seed_inner(double v) { return D2{D1{v, 1.0}, D1{0.0, 0.0}}; }
inline D2 seed_outer(double v) { return D2{D1{v, 0.0}, D1{1.0, 0.0}}; }
inline double inner_derivative(const D2& x) { return x.value.eps; }
inline double outer_derivative(const D2& x) { return x.eps.value; }
inline double mixed_derivative(const D2& x) { return x.eps.eps; }

}  // namespace infogeo
