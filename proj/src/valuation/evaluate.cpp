#include "mavals/valuation/evaluate.hpp"

#include <cmath>
#include <memory>
#include <optional>

#include "mavals/algebra/mixed_det.hpp"
#include "mavals/error.hpp"
#include "mavals/hessian/structured.hpp"
#include "mavals/parallel.hpp"
#include "mavals/valuation/smoothing.hpp"

namespace mav {

QuadratureGrid QuadratureGrid::cube(int dim, double half_width, int cells_per_axis, double sigma) {
  QuadratureGrid g;
  g.lo = Eigen::VectorXd::Constant(dim, -half_width);
  g.hi = Eigen::VectorXd::Constant(dim, half_width);
  g.cells.assign(dim, cells_per_axis);
  g.sigma = sigma;
  return g;
}

Eigen::VectorXd QuadratureGrid::cell_size() const {
  Eigen::VectorXd h(dim());
  for (int a = 0; a < dim(); ++a) h(a) = (hi(a) - lo(a)) / cells[a];
  return h;
}

double QuadratureGrid::cell_volume() const { return cell_size().prod(); }

long QuadratureGrid::cell_count() const {
  long c = 1;
  for (int n : cells) c *= n;
  return c;
}

double QuadratureGrid::effective_sigma() const {
  const double hmax = cell_size().maxCoeff();
  const double s = sigma > 0 ? sigma : 3.0 * hmax;
  if (s < hmax * (1 - 1e-12)) throw ConfigError("smoothing width below one grid cell");
  return s;
}

void QuadratureGrid::validate() const {
  if (hi.size() != lo.size() || static_cast<int>(cells.size()) != lo.size())
    throw ConfigError("grid bounds and resolution differ in dimension");
  for (int a = 0; a < dim(); ++a) {
    if (!(hi(a) > lo(a))) throw ConfigError("grid box is empty");
    if (cells[a] < 1) throw ConfigError("grid resolution must be positive");
  }
  if (sigma < 0) throw ConfigError("smoothing width must be non-negative");
}

namespace {

// B(x) * D(H[i], A_1(x), ..) with the exact atom (if any) taken at full weight.
// hess_fn is only called when the weights do not vanish at x.
template <class HessFn>
double integrand(const ValuationSpec& spec, const Eigen::VectorXd& x, HessFn&& hess_fn) {
  const double bx = spec.b(x);
  if (bx == 0.0) return 0.0;
  std::vector<HermitianMatrix> rest;
  rest.reserve(spec.a.size());
  for (const auto& w : spec.a) {
    if (w.exact_atom()) {
      rest.push_back(w.matrix);
      continue;
    }
    const double s = w.scalar_factor()(x);
    if (s == 0.0) return 0.0;
    rest.push_back(s * w.matrix);
  }
  if (spec.degree == 0) return bx * mixed_det(MixedDetForm{spec.field, spec.n}, rest);
  const HermitianMatrix h = assemble_structured(spec.field, hess_fn());
  return bx * mixed_det_repeated(h, spec.degree, rest);
}

bool contains_origin(const Eigen::VectorXd& lo, const Eigen::VectorXd& hi) {
  return (lo.array() <= 0.0).all() && (hi.array() >= 0.0).all();
}

void check_dims(const ValuationSpec& spec, const Function& f) {
  spec.validate();
  if (f.dim != spec.real_dim())
    throw DimensionError("function dimension " + std::to_string(f.dim) + " does not match the valuation (" +
                         std::to_string(spec.real_dim()) + ")");
}

Eigen::MatrixXd point_hessian(const Function& f, const Eigen::VectorXd& x, double sigma) {
  switch (f.regularity) {
    case Regularity::Smooth:
      return f.hessian_at(x);
    case Regularity::SmoothOffOrigin:
      if (x.norm() == 0.0) throw Error("Hessian requested at the singular point 0");
      return f.hessian_at(x);
    case Regularity::Nonsmooth:
      if (f.smoothed_hessian && sigma > 0) return f.smoothed_hessian(x, sigma);
      throw Error("point evaluation of a non-smooth function needs a closed-form smoothed Hessian");
  }
  return {};
}

}  // namespace

double eval_valuation(const ValuationSpec& spec, const Function& f, const QuadratureGrid& grid, int threads) {
  check_dims(spec, f);
  grid.validate();
  if (grid.dim() != f.dim) throw DimensionError("grid dimension does not match the function");
  const int d = f.dim;

  if (const int ai = spec.atom_index(); ai >= 0) {
    const Eigen::VectorXd& p = spec.a[ai].location;
    const double sigma = f.regularity == Regularity::Nonsmooth ? grid.effective_sigma() : 0.0;
    return integrand(spec, p, [&] { return point_hessian(f, p, sigma); });
  }

  auto [blo, bhi] = spec.support_box();
  for (int a = 0; a < d; ++a) {
    if (!std::isfinite(blo(a)) || !std::isfinite(bhi(a))) throw Error("weight support is unbounded");
    if (blo(a) > bhi(a)) return 0.0;
    const double slack = 1e-12 * (1.0 + std::abs(grid.lo(a)) + std::abs(grid.hi(a)));
    if (blo(a) < grid.lo(a) - slack || bhi(a) > grid.hi(a) + slack)
      throw Error("weight support exceeds the grid box along axis " + std::to_string(a));
  }

  const Eigen::VectorXd h = grid.cell_size();
  std::vector<long> k0(d), k1(d);
  std::size_t count = 1;
  for (int a = 0; a < d; ++a) {
    k0[a] = std::max(0L, static_cast<long>(std::ceil((blo(a) - grid.lo(a)) / h(a) - 0.5)));
    k1[a] = std::min<long>(grid.cells[a] - 1, static_cast<long>(std::floor((bhi(a) - grid.lo(a)) / h(a) - 0.5)));
    if (k0[a] > k1[a]) return 0.0;
    count *= static_cast<std::size_t>(k1[a] - k0[a] + 1);
  }

  bool use_field = false;
  double sigma = 0.0;
  if (spec.degree > 0) {
    if (f.regularity == Regularity::Nonsmooth) {
      sigma = grid.effective_sigma();
      use_field = !f.smoothed_hessian;
    } else if (f.regularity == Regularity::SmoothOffOrigin && contains_origin(blo, bhi)) {
      if (grid.sigma <= 0) throw Error("weight support contains the origin; set a smoothing width");
      sigma = grid.effective_sigma();
      use_field = true;
    }
  }
  std::unique_ptr<SmoothedHessianField> field;
  if (use_field) field = std::make_unique<SmoothedHessianField>(f, grid.lo, h, k0, k1, sigma, threads);

  std::vector<double> contrib(count, 0.0);
  parallel_for(count, threads, [&](std::size_t b, std::size_t e) {
    Eigen::VectorXd x(d);
    for (std::size_t flat = b; flat < e; ++flat) {
      std::size_t rem = flat;
      for (int a = d - 1; a >= 0; --a) {
        const long span = k1[a] - k0[a] + 1;
        const long k = static_cast<long>(rem % span) + k0[a];
        rem /= span;
        x(a) = grid.lo(a) + (k + 0.5) * h(a);
      }
      contrib[flat] = integrand(spec, x, [&]() -> Eigen::MatrixXd {
        if (field) return field->at(flat);
        if (sigma > 0) return f.smoothed_hessian(x, sigma);
        return f.hessian_at(x);
      });
    }
  });

  double total = 0;
  for (double c : contrib) total += c;
  return total * grid.cell_volume();
}

double eval_valuation(const ValuationSpec& spec, const Function& f, const ProbeSet& probes, int threads) {
  check_dims(spec, f);
  if (probes.points.size() != probes.weights.size()) throw DimensionError("probe points and weights differ in count");
  if (const int ai = spec.atom_index(); ai >= 0) {
    const Eigen::VectorXd& p = spec.a[ai].location;
    return integrand(spec, p, [&] { return point_hessian(f, p, probes.sigma); });
  }
  std::vector<double> contrib(probes.points.size(), 0.0);
  parallel_for(contrib.size(), threads, [&](std::size_t b, std::size_t e) {
    for (std::size_t k = b; k < e; ++k) {
      const auto& x = probes.points[k];
      if (x.size() != f.dim) throw DimensionError("probe point has wrong dimension");
      contrib[k] = probes.weights[k] * integrand(spec, x, [&] { return point_hessian(f, x, probes.sigma); });
    }
  });
  double total = 0;
  for (double c : contrib) total += c;
  return total;
}

double body_valuation(const ValuationSpec& spec, const ConvexBody& k, const QuadratureGrid& grid, int threads) {
  return eval_valuation(spec, Function::from_body(k), grid, threads);
}

}  // namespace mav
