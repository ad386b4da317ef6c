#include "mavals/algebra/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mavals/error.hpp"

namespace mav {

std::string_view field_name(Field f) {
  switch (f) {
    case Field::R: return "R";
    case Field::C: return "C";
    case Field::H: return "H";
    case Field::O2: return "O2";
  }
  return "?";
}

Field parse_field(std::string_view name) {
  if (name == "R") return Field::R;
  if (name == "C") return Field::C;
  if (name == "H") return Field::H;
  if (name == "O2" || name == "O") return Field::O2;
  throw ConfigError("unknown field '" + std::string(name) + "' (expected R, C, H or O2)");
}

QuaternionMatrix QuaternionMatrix::identity(int n) {
  QuaternionMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Quaternion(1.0);
  return m;
}

QuaternionMatrix QuaternionMatrix::adjoint() const {
  QuaternionMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j).conj();
  return out;
}

QuaternionMatrix operator*(const QuaternionMatrix& a, const QuaternionMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("quaternion matrix product: inner sizes differ");
  QuaternionMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      Quaternion s;
      for (int k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      out(i, j) = s;
    }
  return out;
}

HermitianMatrix::HermitianMatrix(Field field, int n) : field_(field), n_(n), data_(n * n) {
  if (n < 1) throw DimensionError("Hermitian matrix size must be positive");
  if (field == Field::O2 && n != 2)
    throw DimensionError("octonionic Hermitian matrices are only supported for size 2");
}

HermitianMatrix HermitianMatrix::identity(Field field, int n) {
  HermitianMatrix m(field, n);
  for (int i = 0; i < n; ++i) m.data_[i * n + i] = Octonion(1.0);
  return m;
}

HermitianMatrix HermitianMatrix::unit_diagonal(Field field, int n, int p) {
  if (p < 0 || p >= n) throw DimensionError("unit_diagonal: slot out of range");
  HermitianMatrix m(field, n);
  m.data_[p * n + p] = Octonion(1.0);
  return m;
}

HermitianMatrix HermitianMatrix::from_real(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw DimensionError("from_real: matrix not square");
  const int n = static_cast<int>(m.rows());
  HermitianMatrix out(Field::R, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.data_[i * n + j] = Octonion(0.5 * (m(i, j) + m(j, i)));
  return out;
}

HermitianMatrix HermitianMatrix::from_complex(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) throw DimensionError("from_complex: matrix not square");
  const int n = static_cast<int>(m.rows());
  HermitianMatrix out(Field::C, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const std::complex<double> v = 0.5 * (m(i, j) + std::conj(m(j, i)));
      Octonion o;
      o[0] = v.real();
      o[1] = i == j ? 0.0 : v.imag();
      out.data_[i * n + j] = o;
    }
  return out;
}

HermitianMatrix HermitianMatrix::from_quaternion(const QuaternionMatrix& m, double tol) {
  if (m.rows() != m.cols()) throw DimensionError("from_quaternion: matrix not square");
  const int n = m.rows();
  HermitianMatrix out(Field::H, n);
  const double scale = std::max(1.0, [&] {
    double s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s = std::max(s, m(i, j).norm());
    return s;
  }());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if ((m(j, i) - m(i, j).conj()).norm() > tol * scale)
        throw DimensionError("from_quaternion: matrix is not Hermitian");
      Octonion o = Octonion::from_quaternion(m(i, j));
      if (i == j) o = Octonion(o.real());
      out.data_[i * n + j] = o;
    }
  return out;
}

void HermitianMatrix::set(int i, int j, const Octonion& v) {
  Octonion w = v;
  for (int c = field_rank(field_); c < 8; ++c) w[c] = 0.0;
  if (i == j) {
    data_[i * n_ + i] = Octonion(w.real());
    return;
  }
  data_[i * n_ + j] = w;
  data_[j * n_ + i] = w.conj();
}

HermitianMatrix& HermitianMatrix::operator+=(const HermitianMatrix& o) {
  if (o.field_ != field_ || o.n_ != n_) throw DimensionError("HermitianMatrix +: field or size mismatch");
  for (size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

HermitianMatrix& HermitianMatrix::operator-=(const HermitianMatrix& o) {
  if (o.field_ != field_ || o.n_ != n_) throw DimensionError("HermitianMatrix -: field or size mismatch");
  for (size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

HermitianMatrix& HermitianMatrix::operator*=(double s) {
  for (auto& v : data_) v *= s;
  return *this;
}

double HermitianMatrix::norm() const {
  double s = 0;
  for (const auto& v : data_) s += v.norm2();
  return std::sqrt(s);
}

double HermitianMatrix::hermitian_defect() const {
  double d = 0;
  const int rank = field_rank(field_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      const Octonion& a = (*this)(i, j);
      d = std::max(d, ((*this)(j, i) - a.conj()).norm());
      for (int c = rank; c < 8; ++c) d = std::max(d, std::abs(a[c]));
      if (i == j)
        for (int c = 1; c < 8; ++c) d = std::max(d, std::abs(a[c]));
    }
  return d;
}

Eigen::MatrixXd HermitianMatrix::to_real() const {
  Eigen::MatrixXd m(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m(i, j) = (*this)(i, j)[0];
  return m;
}

Eigen::MatrixXcd HermitianMatrix::to_complex() const {
  Eigen::MatrixXcd m(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m(i, j) = {(*this)(i, j)[0], (*this)(i, j)[1]};
  return m;
}

QuaternionMatrix HermitianMatrix::to_quaternion() const {
  QuaternionMatrix m(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m(i, j) = (*this)(i, j).low();
  return m;
}

}  // namespace mav
