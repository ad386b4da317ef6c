#pragma once

#include <array>
#include <cmath>

#include "mavals/algebra/quaternion.hpp"

namespace mav {

/// q = sum_i c[i] e_i with e_0 = 1.
///
/// The product is the Cayley-Dickson doubling of the quaternions: writing
/// p = (a, b) and q = (c, d) with a = c[0..3], b = c[4..7],
///   (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c)).
/// The span of e_0..e_3 is then a copy of the quaternions (e_1 e_2 = e_3).
struct Octonion {
  std::array<double, 8> c{};

  constexpr Octonion() = default;
  constexpr explicit Octonion(double real) { c[0] = real; }
  constexpr explicit Octonion(const std::array<double, 8>& coeffs) : c(coeffs) {}

  static constexpr Octonion unit(int index) {
    Octonion e;
    e.c[index] = 1.0;
    return e;
  }
  static constexpr Octonion from_quaternion(const Quaternion& q) {
    Octonion o;
    o.c = {q.t, q.x, q.y, q.z, 0, 0, 0, 0};
    return o;
  }
  constexpr Quaternion low() const { return {c[0], c[1], c[2], c[3]}; }
  constexpr Quaternion high() const { return {c[4], c[5], c[6], c[7]}; }
  static constexpr Octonion from_pair(const Quaternion& a, const Quaternion& b) {
    Octonion o;
    o.c = {a.t, a.x, a.y, a.z, b.t, b.x, b.y, b.z};
    return o;
  }

  constexpr double real() const { return c[0]; }
  constexpr double operator[](int i) const { return c[i]; }
  constexpr double& operator[](int i) { return c[i]; }

  constexpr Octonion conj() const {
    Octonion o;
    o.c[0] = c[0];
    for (int i = 1; i < 8; ++i) o.c[i] = -c[i];
    return o;
  }
  constexpr double norm2() const {
    double s = 0;
    for (double v : c) s += v * v;
    return s;
  }
  double norm() const { return std::sqrt(norm2()); }

  constexpr Octonion& operator+=(const Octonion& o) {
    for (int i = 0; i < 8; ++i) c[i] += o.c[i];
    return *this;
  }
  constexpr Octonion& operator-=(const Octonion& o) {
    for (int i = 0; i < 8; ++i) c[i] -= o.c[i];
    return *this;
  }
  constexpr Octonion& operator*=(double s) {
    for (double& v : c) v *= s;
    return *this;
  }

  friend constexpr Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
  friend constexpr Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
  friend constexpr Octonion operator-(Octonion a) { return a *= -1.0; }
  friend constexpr Octonion operator*(Octonion a, double s) { return a *= s; }
  friend constexpr Octonion operator*(double s, Octonion a) { return a *= s; }
  friend constexpr bool operator==(const Octonion&, const Octonion&) = default;
};

/// Cayley-Dickson product (non-associative).
Octonion oct_mul(const Octonion& p, const Octonion& q);

inline Octonion operator*(const Octonion& p, const Octonion& q) { return oct_mul(p, q); }

}  // namespace mav
