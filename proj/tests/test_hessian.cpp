#include <doctest.h>

#include <cmath>
#include <random>

#include "mavals/algebra/determinants.hpp"
#include "mavals/error.hpp"
#include "mavals/hessian/fd_hessian.hpp"
#include "mavals/hessian/structured.hpp"

using namespace mav;

TEST_CASE("fd hessian on quadratics") {
  ScalarField half_sq{3, [](const Eigen::VectorXd& x) { return 0.5 * x.squaredNorm(); }, 1e-2};
  Eigen::VectorXd x(3);
  x << 0.3, -0.2, 0.7;
  CHECK((fd_hessian_matrix(half_sq, x) - Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() <= 1e-10);

  Eigen::MatrixXd q = Eigen::MatrixXd::Random(4, 4);
  q = (q + q.transpose()).eval();
  ScalarField quad{4, [q](const Eigen::VectorXd& y) { return 0.5 * y.dot(q * y); }, 1e-2};
  CHECK((fd_hessian_matrix(quad, Eigen::VectorXd::Random(4)) - q).cwiseAbs().maxCoeff() <= 1e-9);
}

TEST_CASE("fd hessian of the norm") {
  ScalarField norm{3, [](const Eigen::VectorXd& x) { return x.norm(); }};
  Eigen::VectorXd v(3);
  v << 0.6, 0.0, 0.8;
  const Eigen::MatrixXd expected = Eigen::MatrixXd::Identity(3, 3) - v * v.transpose();
  const Eigen::MatrixXd h = fd_hessian_matrix(norm, v);
  CHECK((h - expected).cwiseAbs().maxCoeff() <= 1e-4);
  CHECK((h * v).norm() <= 1e-6);
}

TEST_CASE("fd hessian is second order") {
  Eigen::VectorXd c(2);
  c << 0.7, -0.4;
  auto err = [&](double h) {
    ScalarField f{2, [c](const Eigen::VectorXd& x) { return std::exp(c.dot(x)); }, h};
    Eigen::VectorXd x(2);
    x << 0.1, 0.2;
    const Eigen::MatrixXd exact = std::exp(c.dot(x)) * c * c.transpose();
    return (fd_hessian_matrix(f, x) - exact).norm();
  };
  const double ratio = err(2e-2) / err(1e-2);
  CHECK(ratio == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("fd hessian rejects non-finite values") {
  ScalarField f{1, [](const Eigen::VectorXd& x) { return std::log(x(0)); }, 1e-3};
  CHECK_THROWS_AS(fd_hessian_matrix(f, Eigen::VectorXd::Zero(1)), NumericalError);
}

TEST_CASE("structured hessians of squared norms") {
  auto sq = [](int d) { return ScalarField{d, [](const Eigen::VectorXd& x) { return x.squaredNorm(); }, 1e-2}; };

  const auto hc = structured_hessian(Field::C, sq(4), Eigen::VectorXd::Random(4));
  CHECK((hc - HermitianMatrix::identity(Field::C, 2)).norm() <= 1e-6);

  const auto hh = structured_hessian(Field::H, sq(4), Eigen::VectorXd::Random(4));
  CHECK(hh.size() == 1);
  CHECK(std::abs(hh(0, 0).real() - 8.0) <= 1e-6);

  const auto ho = structured_hessian(Field::O2, sq(16), Eigen::VectorXd::Random(16));
  CHECK((ho - 16.0 * HermitianMatrix::identity(Field::O2, 2)).norm() <= 1e-6);

  CHECK_THROWS_AS(structured_hessian(Field::H, sq(6), Eigen::VectorXd::Zero(6)), DimensionError);
}

TEST_CASE("structured hessians are Hermitian") {
  std::mt19937_64 rng(7);
  for (Field f : {Field::C, Field::H, Field::O2}) {
    const int d = f == Field::O2 ? 16 : 8 / (f == Field::C ? 2 : 1);
    Eigen::VectorXd w = Eigen::VectorXd::Random(d);
    ScalarField g{d, [w](const Eigen::VectorXd& x) { return std::exp(0.3 * w.dot(x)) + x.squaredNorm() * x(0); }};
    const auto h = structured_hessian(f, g, 0.5 * Eigen::VectorXd::Random(d));
    CHECK(h.hermitian_defect() <= 1e-8);
  }
}

TEST_CASE("complex hessian matches the analytic Levi form") {
  // f = |z1|^2 |z2|^2 on C^2: d^2 f / dz_a dzbar_b = [[|z2|^2, z1bar z2]...]; check determinant
  ScalarField f{4, [](const Eigen::VectorXd& x) {
                  return (x(0) * x(0) + x(1) * x(1)) * (x(2) * x(2) + x(3) * x(3));
                }, 1e-3};
  Eigen::VectorXd x(4);
  x << 0.3, 0.4, -0.5, 0.2;
  const auto h = structured_hessian(Field::C, f, x);
  const double r1 = 0.25, r2 = 0.29;
  CHECK(h(0, 0).real() == doctest::Approx(r2).epsilon(1e-6));
  CHECK(h(1, 1).real() == doctest::Approx(r1).epsilon(1e-6));
  CHECK(det(h) == doctest::Approx(0.0).epsilon(1e-6));
}
