#include "mavals/algebra/mixed_det.hpp"

#include <complex>
#include <string>

#include "mavals/algebra/determinants.hpp"
#include "mavals/error.hpp"

namespace mav {

namespace {

double factorial(int n) {
  double f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// Generic inclusion-exclusion over a vector space with a determinant.
template <class T, class Det>
double polarize(const std::vector<T>& x, const T& zero, Det det_fn) {
  const int n = static_cast<int>(x.size());
  double total = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    T s = zero;
    int count = 0;
    for (int k = 0; k < n; ++k)
      if (mask & (1u << k)) {
        s += x[k];
        ++count;
      }
    const double d = det_fn(s);
    total += ((n - count) % 2 == 0) ? d : -d;
  }
  return total / factorial(n);
}

struct Oct2 {
  double a = 0, b = 0;
  Octonion q;
  Oct2& operator+=(const Oct2& o) {
    a += o.a;
    b += o.b;
    q += o.q;
    return *this;
  }
};

}  // namespace

double mixed_det(const MixedDetForm& form, std::span<const HermitianMatrix> args) {
  const int n = form.n;
  if (static_cast<int>(args.size()) != n)
    throw DimensionError("mixed_det: expected " + std::to_string(n) + " arguments, got " +
                         std::to_string(args.size()));
  if (n < 1 || n > 20) throw DimensionError("mixed_det: arity out of range");
  for (const auto& h : args)
    if (h.field() != form.field || h.size() != n)
      throw DimensionError("mixed_det: argument field or size does not match the form");

  switch (form.field) {
    case Field::R: {
      std::vector<Eigen::MatrixXd> x;
      for (const auto& h : args) x.push_back(h.to_real());
      return polarize(x, Eigen::MatrixXd::Zero(n, n).eval(),
                      [](const Eigen::MatrixXd& m) { return m.determinant(); });
    }
    case Field::C: {
      std::vector<Eigen::MatrixXcd> x;
      for (const auto& h : args) x.push_back(h.to_complex());
      return polarize(x, Eigen::MatrixXcd::Zero(n, n).eval(),
                      [](const Eigen::MatrixXcd& m) { return m.determinant().real(); });
    }
    case Field::H: {
      std::vector<HermitianMatrix> x(args.begin(), args.end());
      return polarize(x, HermitianMatrix(Field::H, n), [](const HermitianMatrix& m) { return det(m); });
    }
    case Field::O2: {
      std::vector<Oct2> x;
      for (const auto& h : args) x.push_back({h(0, 0).real(), h(1, 1).real(), h(0, 1)});
      return polarize(x, Oct2{}, [](const Oct2& m) { return m.a * m.b - m.q.norm2(); });
    }
  }
  return 0.0;
}

double mixed_det(std::span<const Eigen::MatrixXd> args) {
  const int n = static_cast<int>(args.size());
  if (n < 1) throw DimensionError("mixed_det: no arguments");
  for (const auto& m : args)
    if (m.rows() != n || m.cols() != n) throw DimensionError("mixed_det: argument size does not match arity");
  std::vector<Eigen::MatrixXd> x(args.begin(), args.end());
  return polarize(x, Eigen::MatrixXd::Zero(n, n).eval(), [](const Eigen::MatrixXd& m) { return m.determinant(); });
}

double mixed_det_repeated(const HermitianMatrix& h, int i, std::span<const HermitianMatrix> rest) {
  const int n = h.size();
  if (i < 0 || i > n || static_cast<int>(rest.size()) != n - i)
    throw DimensionError("mixed_det_repeated: degree and weight count do not add up to n");
  if (i == n) return det(h);
  std::vector<HermitianMatrix> args(i, h);
  args.insert(args.end(), rest.begin(), rest.end());
  return mixed_det(MixedDetForm{h.field(), n}, args);
}

}  // namespace mav
