#include <algorithm>
#include <cmath>
#include <random>

#include "mavals/algebra/determinants.hpp"
#include "mavals/algebra/mixed_det.hpp"
#include "mavals/hessian/structured.hpp"
#include "mavals/verify/experiments.hpp"
#include "helpers.hpp"

namespace mav {

namespace {

using detail::binomial;

HermitianMatrix random_hermitian(Field f, int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  HermitianMatrix m(f, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Octonion o;
      for (int c = 0; c < field_rank(f); ++c) o[c] = u(rng);
      m.set(i, j, o);
    }
  return m;
}

}  // namespace

ExperimentReport run_mixed_det_identity(const ExperimentOptions& opt) {
  ExperimentReport r;
  const int trials = opt.trials.value_or(200);
  r.parameters = {{"seed", opt.seed}, {"trials", trials}, {"n_range", {3, 6}}};
  std::mt19937_64 rng(opt.seed);

  double worst_binom = 0, worst_fact = 0, worst_adjacent = 0;
  int adjacent_trials = 0;
  for (int t = 0; t < trials; ++t) {
    const int n = std::uniform_int_distribution<int>(3, 6)(rng);
    const int i = std::uniform_int_distribution<int>(1, n - 1)(rng);
    const HermitianMatrix h = random_hermitian(Field::R, n, rng);
    std::vector<HermitianMatrix> rest;
    for (int k = 0; k < n - i; ++k) rest.push_back(HermitianMatrix::unit_diagonal(Field::R, n, k));
    const double value = mixed_det_repeated(h, i, rest);
    const double minor = h.to_real().bottomRightCorner(i, i).determinant();
    const double scale = std::max(1.0, std::pow(h.norm(), n));
    const double fact = detail::factorial_ratio(i, n);
    const double res_binom = std::abs(value - minor / binomial(n, i)) / scale;
    worst_binom = std::max(worst_binom, res_binom);
    worst_fact = std::max(worst_fact, std::abs(value - fact * minor) / scale);
    if (n - i == 1) {
      worst_adjacent = std::max(worst_adjacent, res_binom);
      ++adjacent_trials;
    }
  }
  r.check("max |D(H[i],E_1..E_{n-i}) - C(n,i)^-1 det H_i| / max(1,|H|^n)", worst_binom, 0.0, 1e-9);
  r.check("same, trials with n-i = 1 only", worst_adjacent, 0.0, 1e-9);
  r.check("max |D(H[i],E_1..E_{n-i}) - (i!/n!) det H_i| / max(1,|H|^n)", worst_fact, 0.0, 1e-9);
  r.details["trials_with_n_minus_i_1"] = adjacent_trials;
  return r;
}

ExperimentReport run_moore_determinant(const ExperimentOptions& opt) {
  ExperimentReport r;
  const int trials = opt.trials.value_or(500);
  r.parameters = {{"seed", opt.seed}, {"trials_2x2", trials}};
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);

  double closed = 0;
  for (int t = 0; t < trials; ++t) {
    HermitianMatrix a(Field::H, 2);
    const double x = 2 * u(rng), y = 2 * u(rng);
    const Quaternion q(u(rng), u(rng), u(rng), u(rng));
    a.set(0, 0, x);
    a.set(1, 1, y);
    a.set(0, 1, Octonion::from_quaternion(q));
    closed = std::max(closed, std::abs(moore_det(a) - (x * y - q.conj().norm2())));
  }
  r.check("max |P(A) - (ab - |q|^2)| over 2x2", closed, 0.0, 1e-10);

  double ident = 0;
  for (int n = 1; n <= 4; ++n) ident = std::max(ident, std::abs(moore_det(HermitianMatrix::identity(Field::H, n)) - 1.0));
  r.check("max |P(I_n) - 1|, n <= 4", ident, 0.0, 0.0);

  double complex_gap = 0, realize = 0, weak = 0;
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + t % 3;
    const auto c = random_hermitian(Field::C, n, rng);
    const double cd = c.to_complex().determinant().real();
    complex_gap = std::max(complex_gap, std::abs(moore_det(c) - cd) / std::max(1.0, std::abs(cd)));

    const auto a = random_hermitian(Field::H, n, rng);
    const double p = moore_det(a);
    const double d = realize_quat_matrix(a.to_quaternion()).determinant();
    realize = std::max(realize, std::abs(d - std::pow(p, 4)) / std::max(1.0, std::abs(d)));

    QuaternionMatrix cm(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) cm(i, j) = Quaternion(u(rng), u(rng), u(rng), u(rng));
    const auto cac = HermitianMatrix::from_quaternion(cm.adjoint() * a.to_quaternion() * cm, 1e-10);
    const auto cc = HermitianMatrix::from_quaternion(cm.adjoint() * cm, 1e-10);
    weak = std::max(weak, std::abs(moore_det(cac) - p * moore_det(cc)));
  }
  r.check("max relative |P(A) - det_C(A)| for complex A", complex_gap, 0.0, 1e-10);
  r.check("max relative |det(RA) - P(A)^4|", realize, 0.0, 1e-8);
  r.check("max |P(C*AC) - P(A) P(C*C)|", weak, 0.0, 1e-8);
  return r;
}

ExperimentReport run_structured_hessians(const ExperimentOptions& opt) {
  ExperimentReport r;
  const double step = opt.fd_step.value_or(1e-2);
  r.parameters = {{"seed", opt.seed}, {"fd_step", step}};
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto point = [&](int d) {
    Eigen::VectorXd x(d);
    for (int i = 0; i < d; ++i) x(i) = u(rng);
    return x;
  };
  auto sq = [step](int d) { return ScalarField{d, [](const Eigen::VectorXd& x) { return x.squaredNorm(); }, step}; };

  // symbolic values: the exact real Hessian of |x|^2 is 2I
  const auto sym_c = assemble_structured(Field::C, 2.0 * Eigen::MatrixXd::Identity(4, 4));
  const auto sym_h = assemble_structured(Field::H, 2.0 * Eigen::MatrixXd::Identity(4, 4));
  const auto sym_o = assemble_structured(Field::O2, 2.0 * Eigen::MatrixXd::Identity(16, 16));
  r.check("|symbolic Hess_C(|z|^2) - I|", (sym_c - HermitianMatrix::identity(Field::C, 2)).norm(), 0.0, 1e-6);
  r.check("|symbolic Hess_H(|q|^2) - 8|", std::abs(sym_h(0, 0).real() - 8.0), 0.0, 1e-6);
  r.check("|symbolic Hess_O(|q1|^2+|q2|^2) - 16 I|", (sym_o - 16.0 * HermitianMatrix::identity(Field::O2, 2)).norm(), 0.0,
          1e-6);

  double fc = 0, fh = 0, fo = 0;
  for (int t = 0; t < 5; ++t) {
    fc = std::max(fc, (structured_hessian(Field::C, sq(4), point(4)) - sym_c).norm());
    fh = std::max(fh, (structured_hessian(Field::H, sq(4), point(4)) - sym_h).norm());
    fo = std::max(fo, (structured_hessian(Field::O2, sq(16), point(16)) - sym_o).norm());
  }
  r.check("finite differences vs symbolic, C", fc, 0.0, 1e-6);
  r.check("finite differences vs symbolic, H", fh, 0.0, 1e-6);
  r.check("finite differences vs symbolic, O2", fo, 0.0, 1e-6);

  // a non-quadratic function: structured Hessian of FD vs of the analytic real Hessian
  double cross = 0, herm = 0;
  for (Field f : {Field::C, Field::H, Field::O2}) {
    const int d = f == Field::O2 ? 16 : 4;
    Eigen::VectorXd w = point(d);
    ScalarField g{d, [w](const Eigen::VectorXd& x) { return std::exp(0.5 * w.dot(x)); }, 1e-3};
    const Eigen::VectorXd x = point(d);
    const Eigen::MatrixXd exact = 0.25 * std::exp(0.5 * w.dot(x)) * w * w.transpose();
    const auto fd = structured_hessian(f, g, x);
    cross = std::max(cross, (fd - assemble_structured(f, exact)).norm());
    herm = std::max(herm, fd.hermitian_defect());
  }
  r.check("exp(<w,x>/2): FD-assembled vs analytic-assembled", cross, 0.0, 1e-6);
  r.check("Hermitian defect of FD-assembled Hessians", herm, 0.0, 1e-8);
  return r;
}

}  // namespace mav
