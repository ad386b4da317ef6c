#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "mavals/algebra/octonion.hpp"
#include "mavals/algebra/quaternion.hpp"

namespace mav {

/// Scalar field of a Hermitian matrix. O2 is the octonions, restricted to
/// matrices of size 2.
enum class Field { R, C, H, O2 };

/// Number of real coefficients per scalar: 1, 2, 4 or 8.
constexpr int field_rank(Field f) {
  switch (f) {
    case Field::R: return 1;
    case Field::C: return 2;
    case Field::H: return 4;
    case Field::O2: return 8;
  }
  return 0;
}

std::string_view field_name(Field f);
Field parse_field(std::string_view name);

/// Dense quaternionic matrix, not necessarily Hermitian.
class QuaternionMatrix {
 public:
  QuaternionMatrix() = default;
  QuaternionMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QuaternionMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Quaternion& operator()(int i, int j) { return data_[i * cols_ + j]; }
  const Quaternion& operator()(int i, int j) const { return data_[i * cols_ + j]; }

  /// Conjugate transpose.
  QuaternionMatrix adjoint() const;

  friend QuaternionMatrix operator*(const QuaternionMatrix& a, const QuaternionMatrix& b);

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Quaternion> data_;
};

/// Square Hermitian matrix over R, C, H or O (size 2). Every field is stored
/// with octonion entries; components beyond field_rank(field) stay zero, so
/// C sits in span{e0, e1} and H in span{e0..e3}.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  HermitianMatrix(Field field, int n);

  static HermitianMatrix identity(Field field, int n);
  /// E_p = diag(0, .., 1, .., 0) with the 1 in (0-based) slot p.
  static HermitianMatrix unit_diagonal(Field field, int n, int p);
  static HermitianMatrix from_real(const Eigen::MatrixXd& m);
  static HermitianMatrix from_complex(const Eigen::MatrixXcd& m);
  /// Throws DimensionError if `m` is not square Hermitian.
  static HermitianMatrix from_quaternion(const QuaternionMatrix& m, double tol = 1e-12);

  Field field() const { return field_; }
  int size() const { return n_; }

  const Octonion& operator()(int i, int j) const { return data_[i * n_ + j]; }

  /// Sets a_ij = v and a_ji = conj(v). On the diagonal only the real part is kept.
  void set(int i, int j, const Octonion& v);
  void set(int i, int j, double v) { set(i, j, Octonion(v)); }

  HermitianMatrix& operator+=(const HermitianMatrix& o);
  HermitianMatrix& operator-=(const HermitianMatrix& o);
  HermitianMatrix& operator*=(double s);
  friend HermitianMatrix operator+(HermitianMatrix a, const HermitianMatrix& b) { return a += b; }
  friend HermitianMatrix operator-(HermitianMatrix a, const HermitianMatrix& b) { return a -= b; }
  friend HermitianMatrix operator*(HermitianMatrix a, double s) { return a *= s; }
  friend HermitianMatrix operator*(double s, HermitianMatrix a) { return a *= s; }

  /// Frobenius norm over all real coefficients.
  double norm() const;
  /// max |a_ji - conj(a_ij)| together with off-field components.
  double hermitian_defect() const;

  Eigen::MatrixXd to_real() const;
  Eigen::MatrixXcd to_complex() const;
  QuaternionMatrix to_quaternion() const;

 private:
  Field field_ = Field::R;
  int n_ = 0;
  std::vector<Octonion> data_;
};

}  // namespace mav
