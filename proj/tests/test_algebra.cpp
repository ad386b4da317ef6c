#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "mavals/algebra/determinants.hpp"
#include "mavals/algebra/hermitian.hpp"
#include "mavals/algebra/jacobi.hpp"
#include "mavals/algebra/mixed_det.hpp"
#include "mavals/algebra/octonion.hpp"
#include "mavals/error.hpp"

using namespace mav;

namespace {

std::mt19937_64 rng(12345);
double uni() { return std::uniform_real_distribution<double>(-1.0, 1.0)(rng); }

Quaternion rand_quat() { return {uni(), uni(), uni(), uni()}; }
Octonion rand_oct() {
  Octonion o;
  for (int i = 0; i < 8; ++i) o[i] = uni();
  return o;
}

HermitianMatrix rand_herm(Field f, int n) {
  HermitianMatrix m(f, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m.set(i, j, rand_oct());
  return m;
}

}  // namespace

TEST_CASE("quaternion multiplication table") {
  const auto i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k();
  CHECK(i * i == Quaternion(-1.0));
  CHECK(j * j == Quaternion(-1.0));
  CHECK(k * k == Quaternion(-1.0));
  CHECK(i * j == k);
  CHECK(j * i == -k);
  for (int t = 0; t < 50; ++t) {
    const auto p = rand_quat(), q = rand_quat(), r = rand_quat();
    CHECK(((p * q) * r - p * (q * r)).norm() < 1e-14);
    CHECK(((p * q).conj() - q.conj() * p.conj()).norm() < 1e-14);
  }
}

TEST_CASE("octonion product") {
  CHECK(Octonion::unit(1) * Octonion::unit(2) == Octonion::unit(3));
  for (int t = 0; t < 100; ++t) {
    const Octonion p = rand_oct(), q = rand_oct();
    CHECK((Octonion(1.0) * q - q).norm() == 0.0);
    CHECK((q * Octonion(1.0) - q).norm() == 0.0);
    const Octonion qq = q * q.conj();
    CHECK(std::abs(qq.real() - q.norm2()) < 1e-12);
    CHECK((qq - Octonion(qq.real())).norm() < 1e-12);
    CHECK(std::abs((p * q).norm() - p.norm() * q.norm()) < 1e-12);
    // quaternionic subalgebra
    const Quaternion a = rand_quat(), b = rand_quat();
    CHECK((Octonion::from_quaternion(a) * Octonion::from_quaternion(b) - Octonion::from_quaternion(a * b)).norm() <
          1e-14);
  }
  // not associative
  const Octonion e1 = Octonion::unit(1), e2 = Octonion::unit(2), e4 = Octonion::unit(4);
  CHECK(((e1 * e2) * e4 - e1 * (e2 * e4)).norm() > 1.0);
}

TEST_CASE("hermitian matrix invariants") {
  for (Field f : {Field::R, Field::C, Field::H}) {
    const auto m = rand_herm(f, 3);
    CHECK(m.hermitian_defect() == 0.0);
    for (int i = 0; i < 3; ++i) CHECK((m(i, i) - Octonion(m(i, i).real())).norm() == 0.0);
  }
  CHECK_THROWS_AS(HermitianMatrix(Field::O2, 3), DimensionError);
  QuaternionMatrix q(2, 2);
  q(0, 1) = Quaternion::i();
  CHECK_THROWS_AS(HermitianMatrix::from_quaternion(q), DimensionError);
  q(1, 0) = -Quaternion::i();
  CHECK_NOTHROW(HermitianMatrix::from_quaternion(q));
}

TEST_CASE("jacobi eigenvalues match Eigen") {
  Eigen::MatrixXd a = Eigen::MatrixXd::Random(7, 7);
  a = (a + a.transpose()).eval();
  Eigen::VectorXd ev = jacobi_eigenvalues(a);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  CHECK((ev - es.eigenvalues()).norm() < 1e-12);
}

TEST_CASE("realization") {
  CHECK(realize_quat_matrix(QuaternionMatrix::identity(3)).isIdentity(0.0));
  QuaternionMatrix a(1, 1);
  a(0, 0) = Quaternion::i();
  const Eigen::MatrixXd r = realize_quat_matrix(a);
  Eigen::Matrix4d expected;
  expected << 0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0;
  CHECK(r.isApprox(expected));
  CHECK(std::abs(r.determinant() - 1.0) < 1e-15);

  // realize is multiplicative
  QuaternionMatrix b(2, 2), c(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      b(i, j) = rand_quat();
      c(i, j) = rand_quat();
    }
  CHECK((realize_quat_matrix(b * c) - realize_quat_matrix(b) * realize_quat_matrix(c)).norm() < 1e-13);
}

TEST_CASE("moore determinant") {
  for (int n = 1; n <= 4; ++n) CHECK(moore_det(HermitianMatrix::identity(Field::H, n)) == 1.0);

  for (int t = 0; t < 100; ++t) {
    HermitianMatrix a(Field::H, 2);
    const double x = 3 * uni(), y = 3 * uni();
    const Quaternion q = rand_quat();
    a.set(0, 0, x);
    a.set(1, 1, y);
    a.set(0, 1, Octonion::from_quaternion(q));
    CHECK(std::abs(moore_det(a) - (x * y - q.norm2())) < 1e-10);
  }

  // complex input gives the complex determinant
  const auto c = rand_herm(Field::C, 3);
  CHECK(std::abs(moore_det(c) - c.to_complex().determinant().real()) < 1e-10);

  for (int t = 0; t < 20; ++t) {
    const auto a = rand_herm(Field::H, 3);
    const double p = moore_det(a);
    const double d = realize_quat_matrix(a.to_quaternion()).determinant();
    CHECK(std::abs(d - std::pow(p, 4)) <= 1e-8 * std::max(1.0, std::abs(d)));
  }
}

TEST_CASE("moore determinant sign follows eigenvalues") {
  HermitianMatrix a = HermitianMatrix::identity(Field::H, 3);
  a.set(1, 1, -2.0);
  CHECK(moore_det(a) == doctest::Approx(-2.0));
}

TEST_CASE("octonionic 2x2 determinant") {
  CHECK(oct_det2(HermitianMatrix::identity(Field::O2, 2)) == 1.0);
  HermitianMatrix a(Field::O2, 2);
  a.set(0, 0, 3.0);
  a.set(1, 1, 5.0);
  CHECK(oct_det2(a) == 15.0);
  const Octonion q = rand_oct();
  a.set(0, 1, q);
  CHECK(oct_det2(a) == doctest::Approx(15.0 - q.norm2()));
}

TEST_CASE("mixed determinant") {
  SUBCASE("hand value") {
    const std::vector<HermitianMatrix> args = {HermitianMatrix::unit_diagonal(Field::R, 2, 0),
                                               HermitianMatrix::unit_diagonal(Field::R, 2, 1)};
    CHECK(mixed_det(MixedDetForm{Field::R, 2}, args) == doctest::Approx(0.5));
  }
  SUBCASE("diagonal restoration and symmetry, all fields") {
    for (Field f : {Field::R, Field::C, Field::H, Field::O2}) {
      const int n = f == Field::O2 ? 2 : 3;
      const auto h = rand_herm(f, n);
      std::vector<HermitianMatrix> same(n, h);
      CHECK(std::abs(mixed_det(MixedDetForm{f, n}, same) - det(h)) < 1e-9 * std::max(1.0, std::pow(h.norm(), n)));

      std::vector<HermitianMatrix> args;
      for (int k = 0; k < n; ++k) args.push_back(rand_herm(f, n));
      const double v = mixed_det(MixedDetForm{f, n}, args);
      std::swap(args[0], args[n - 1]);
      CHECK(std::abs(mixed_det(MixedDetForm{f, n}, args) - v) <= 1e-12 * std::max(1.0, std::abs(v)));
    }
  }
  SUBCASE("minor identity") {
    const int n = 4;
    Eigen::MatrixXd m = Eigen::MatrixXd::Random(n, n);
    const auto h = HermitianMatrix::from_real(m + m.transpose());
    for (int i = 1; i < n; ++i) {
      std::vector<HermitianMatrix> rest;
      for (int k = 0; k < n - i; ++k) rest.push_back(HermitianMatrix::unit_diagonal(Field::R, n, k));
      const double minor = h.to_real().bottomRightCorner(i, i).determinant();
      // i!/n!: the coefficient of t_1..t_n in det(sum t_k x_k) is i! det(H_i).
      double ratio = 1;
      for (int k = i + 1; k <= n; ++k) ratio /= k;
      CHECK(mixed_det_repeated(h, i, rest) == doctest::Approx(minor * ratio).epsilon(1e-10));
    }
  }
  SUBCASE("positivity") {
    for (int t = 0; t < 20; ++t) {
      std::vector<Eigen::MatrixXd> args;
      for (int k = 0; k < 3; ++k) {
        Eigen::MatrixXd g = Eigen::MatrixXd::Random(3, 2);
        args.push_back(g * g.transpose());
      }
      CHECK(mixed_det(args) >= -1e-10);
    }
  }
  SUBCASE("errors") {
    std::vector<HermitianMatrix> args = {HermitianMatrix::identity(Field::R, 2),
                                         HermitianMatrix::identity(Field::C, 2)};
    CHECK_THROWS_AS(mixed_det(MixedDetForm{Field::R, 2}, args), DimensionError);
    args.pop_back();
    CHECK_THROWS_AS(mixed_det(MixedDetForm{Field::R, 2}, args), DimensionError);
  }
}

TEST_CASE("weak multiplicativity of the Moore determinant") {
  for (int t = 0; t < 20; ++t) {
    const auto a = rand_herm(Field::H, 3);
    QuaternionMatrix c(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) c(i, j) = rand_quat();
    const auto cac = HermitianMatrix::from_quaternion(c.adjoint() * a.to_quaternion() * c, 1e-10);
    const auto cc = HermitianMatrix::from_quaternion(c.adjoint() * c, 1e-10);
    CHECK(std::abs(moore_det(cac) - moore_det(a) * moore_det(cc)) <= 1e-8);
  }
}
