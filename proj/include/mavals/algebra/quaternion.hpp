#pragma once

#include <cmath>

namespace mav {

/// q = t + x i + y j + z k.
struct Quaternion {
  double t = 0, x = 0, y = 0, z = 0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double t_, double x_ = 0, double y_ = 0, double z_ = 0)
      : t(t_), x(x_), y(y_), z(z_) {}

  static constexpr Quaternion i() { return {0, 1, 0, 0}; }
  static constexpr Quaternion j() { return {0, 0, 1, 0}; }
  static constexpr Quaternion k() { return {0, 0, 0, 1}; }

  constexpr double operator[](int c) const {
    return c == 0 ? t : c == 1 ? x : c == 2 ? y : z;
  }

  constexpr Quaternion conj() const { return {t, -x, -y, -z}; }
  constexpr double norm2() const { return t * t + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm2()); }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    t += o.t; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    t -= o.t; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    t *= s; x *= s; y *= s; z *= s;
    return *this;
  }

  friend constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend constexpr Quaternion operator-(const Quaternion& a) { return {-a.t, -a.x, -a.y, -a.z}; }
  friend constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
  friend constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }

  // Hamilton product; i^2 = j^2 = k^2 = -1, ij = k.
  friend constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.t * b.t - a.x * b.x - a.y * b.y - a.z * b.z,
            a.t * b.x + a.x * b.t + a.y * b.z - a.z * b.y,
            a.t * b.y - a.x * b.z + a.y * b.t + a.z * b.x,
            a.t * b.z + a.x * b.y - a.y * b.x + a.z * b.t};
  }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

}  // namespace mav
