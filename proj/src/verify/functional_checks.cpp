#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "helpers.hpp"
#include "mavals/convex/convexity.hpp"
#include "mavals/convex/slabs.hpp"
#include "mavals/error.hpp"
#include "mavals/valuation/evaluate.hpp"
#include "mavals/valuation/hull.hpp"
#include "mavals/valuation/smoothing.hpp"
#include "mavals/verify/experiments.hpp"
#include "mavals/verify/oracles.hpp"

namespace mav {

namespace {

using detail::field_weight;
using detail::make_weight;

std::vector<Field> fields_of(const ExperimentOptions& opt) {
  if (opt.field) return {*opt.field};
  return {Field::R, Field::C, Field::H, Field::O2};
}

int real_dim_of(Field f) {
  switch (f) {
    case Field::R:
      return 3;
    case Field::C:
    case Field::H:
      return 4;
    case Field::O2:
      return 16;
  }
  return 0;
}

Eigen::VectorXd random_unit(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::VectorXd u(d);
  for (int a = 0; a < d; ++a) u(a) = g(rng);
  return u.normalized();
}

// Rows: a unit vector in each octonion coordinate, so the plane meets both.
Eigen::MatrixXd octonion_plane(std::mt19937_64& rng) {
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(2, 16);
  p.row(0).head(8) = random_unit(8, rng).transpose();
  p.row(1).tail(8) = random_unit(8, rng).transpose();
  return p;
}

ProbeSet plane_probes(const Eigen::MatrixXd& frame, int m, double sigma) {
  ProbeSet ps;
  ps.sigma = sigma;
  const double h = 2.0 / m;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const Eigen::Vector2d z(-1 + (i + 0.5) * h, -1 + (j + 0.5) * h);
      ps.points.push_back(frame.transpose() * z);
      ps.weights.push_back(h * h);
    }
  return ps;
}

struct PairOutcome {
  double residual = 0, control = 0, lattice = 0;
};

// Phi(max) + Phi(min) - Phi(f) - Phi(g) relative to the pair's value scale,
// together with the same quantity for Phi'(f) = Phi(f) + sum_a f(e_a) f(-e_a).
// Each added term is >= 0 on a lattice pair and > 0 once some axis sees the
// two functions in opposite orders at e_a and -e_a.
template <class Eval, class Support>
PairOutcome pair_outcome(const UnionConvexPair& pair, const Polytope& k, const Eval& phi, const Support& hfun,
                         int dim) {
  const double va = phi(pair.a), vb = phi(pair.b), vk = phi(k), vm = phi(pair.meet);
  const double scale = std::max({std::abs(va), std::abs(vb), std::abs(vk), std::abs(vm)});
  auto prod = [&](const Polytope& q) {
    double s = 0;
    for (int a = 0; a < dim; ++a) {
      const Eigen::VectorXd e = Eigen::VectorXd::Unit(dim, a);
      s += hfun(q, e) * hfun(q, Eigen::VectorXd(-e));
    }
    return s;
  };
  const double extra = prod(k) + prod(pair.meet) - prod(pair.a) - prod(pair.b);
  const double res = vk + vm - va - vb;
  PairOutcome out;
  out.residual = std::abs(res) / scale;
  out.control = std::abs(res + extra) / scale;
  for (const auto& u : sphere_directions(k.dim(), 64)) {
    const double ha = hfun(pair.a, u), hb = hfun(pair.b, u);
    out.lattice = std::max(out.lattice, std::abs(std::max(ha, hb) - hfun(k, u)));
    out.lattice = std::max(out.lattice, std::abs(std::min(ha, hb) - hfun(pair.meet, u)));
  }
  return out;
}

}  // namespace

ExperimentReport run_valuation_identity(const ExperimentOptions& opt) {
  ExperimentReport r;
  const int pairs = opt.trials.value_or(20);
  if (pairs < 1) throw ConfigError("trials must be positive");
  const auto fields = fields_of(opt);
  r.parameters = {{"seed", opt.seed}, {"pairs_per_field", pairs}, {"fields", nlohmann::ordered_json::array()}};
  for (Field f : fields) r.parameters["fields"].push_back(std::string(field_name(f)));
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);

  for (Field field : fields) {
    const std::string fname(field_name(field));
    const int d = real_dim_of(field);
    const int n = d / field_rank(field);
    ValuationSpec spec;
    spec.field = field;
    spec.n = n;
    spec.degree = n;
    PairOutcome worst;
    nlohmann::ordered_json setup;

    if (field == Field::O2) {
      const int m = opt.cells.value_or(64);
      const double sigma = opt.sigma.value_or(0.1);
      spec.b = make_weight(Profile::Bump, Eigen::VectorXd::Zero(d), 1.0);
      setup = {{"probes", "plane grid"}, {"probes_per_axis", m}, {"sigma", sigma}, {"bodies", "polygons in a plane"}};
      for (int t = 0; t < pairs; ++t) {
        const Eigen::MatrixXd frame = octonion_plane(rng);
        const ProbeSet probes = plane_probes(frame, m, sigma);
        Polytope k;
        k.vertices = random_polygon(7, 0.6, 0.3, rng);
        const Eigen::VectorXd dir = random_unit(2, rng);
        const double s = -0.2 + 0.2 * u01(rng), w = 0.05 + 0.15 * u01(rng);
        const auto pair = generate_union_convex_pair(k, dir, s, s + w);
        const auto phi = [&](const Polytope& q) {
          return eval_valuation(spec, embedded_polygon(q.vertices, frame), probes, opt.threads);
        };
        const auto hfun = [&](const Polytope& q, const Eigen::VectorXd& x) {
          return x.size() == 2 ? q.support(x) : q.support(frame * x);
        };
        const auto o = pair_outcome(pair, k, phi, hfun, d);
        worst.residual = std::max(worst.residual, o.residual);
        worst.control = std::max(worst.control, o.control);
        worst.lattice = std::max(worst.lattice, o.lattice);
      }
    } else {
      const int cells = opt.cells.value_or(d == 3 ? 48 : 20);
      const double sigma = opt.sigma.value_or(4.0 / cells);
      spec.b = make_weight(Profile::Plateau, Eigen::VectorXd::Zero(d), 1.0, 0.8);
      const auto grid = QuadratureGrid::cube(d, 1.0, cells, sigma);
      setup = {{"cells_per_axis", cells}, {"sigma", sigma}, {"bodies", "rotated cube slabs"}};
      for (int t = 0; t < pairs; ++t) {
        const Eigen::MatrixXd rot = random_rotation(d, rng);
        Polytope k = Polytope::centered_cube(d);
        for (auto& v : k.vertices) v = 0.5 * (rot * v);
        const Eigen::VectorXd dir = random_unit(d, rng);
        const double s = -0.2 + 0.2 * u01(rng), w = 0.05 + 0.15 * u01(rng);
        const auto pair = generate_union_convex_pair(k, dir, s, s + w);
        const auto phi = [&](const Polytope& q) { return body_valuation(spec, ConvexBody(q), grid, opt.threads); };
        const auto hfun = [](const Polytope& q, const Eigen::VectorXd& x) { return q.support(x); };
        const auto o = pair_outcome(pair, k, phi, hfun, d);
        worst.residual = std::max(worst.residual, o.residual);
        worst.control = std::max(worst.control, o.control);
        worst.lattice = std::max(worst.lattice, o.lattice);
      }
    }
    r.check("max relative residual, " + fname, worst.residual, 0.0, 0.02);
    r.check("max lattice defect max/min vs h_K/h_meet, " + fname, worst.lattice, 0.0, 1e-9);
    r.check_flag("control Phi + sum f(e_a) f(-e_a) exceeds the tolerance, " + fname, worst.control > 0.02, true);
    setup["control_max_relative_residual"] = worst.control;
    setup["rejected_pairs"] = 0;
    r.details[fname] = setup;
  }
  return r;
}

ExperimentReport run_linear_invariance(const ExperimentOptions& opt) {
  ExperimentReport r;
  const int trials = opt.trials.value_or(50);
  const double step = opt.fd_step.value_or(1e-2);
  r.parameters = {{"seed", opt.seed}, {"functionals", trials}, {"fd_step", step},
                  {"fields", nlohmann::ordered_json::array()}};
  for (Field f : fields_of(opt)) r.parameters["fields"].push_back(std::string(field_name(f)));
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);

  for (Field field : fields_of(opt)) {
    const std::string fname(field_name(field));
    const int d = real_dim_of(field);
    const int n = d / field_rank(field);
    ValuationSpec spec;
    spec.field = field;
    spec.n = n;
    spec.degree = n == 1 ? 1 : n - 1;
    const Eigen::VectorXd zero = Eigen::VectorXd::Zero(d);
    spec.b = make_weight(Profile::Plateau, zero, 1.0, 0.6);
    for (int l = spec.degree; l < n; ++l)
      spec.a.push_back(field_weight(HermitianMatrix::identity(field, n), make_weight(Profile::Bump, zero, 1.0)));

    Eigen::MatrixXd g(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) g(i, j) = u(rng);
    const Eigen::MatrixXd q = g * g.transpose() / d + Eigen::MatrixXd::Identity(d, d);
    Function f = Function::smooth(d, [q](const Eigen::VectorXd& x) { return 0.5 * x.dot(q * x); });
    f.fd_step = step;

    std::function<double(const Function&)> phi;
    if (field == Field::O2) {
      ProbeSet probes;
      for (int k = 0; k < 32; ++k) {
        Eigen::VectorXd x(d);
        for (int a = 0; a < d; ++a) x(a) = 0.12 * u(rng);
        probes.points.push_back(x);
        probes.weights.push_back(1.0 / 32);
      }
      phi = [spec, probes, &opt](const Function& h) { return eval_valuation(spec, h, probes, opt.threads); };
    } else {
      const auto grid = QuadratureGrid::cube(d, 1.0, d == 3 ? 8 : 6);
      phi = [spec, grid, &opt](const Function& h) { return eval_valuation(spec, h, grid, opt.threads); };
    }

    const Eigen::VectorXd x0 = 0.5 * Eigen::VectorXd::Unit(d, 0);
    const double base = phi(f);
    double worst = 0, control = 0;
    for (int t = 0; t < trials; ++t) {
      Eigen::VectorXd l(d);
      for (int a = 0; a < d; ++a) l(a) = u(rng);
      const Function fl = f.plus_affine(l);
      const double v = phi(fl);
      worst = std::max(worst, std::abs(v - base) / std::abs(base));
      control = std::max(control, std::abs((v + fl(x0)) - (base + f(x0))) / std::abs(base + f(x0)));
    }
    r.check("max |Phi(f+l) - Phi(f)| / |Phi(f)|, " + fname, worst, 0.0, 1e-9);
    r.check_flag("control Phi + f(x0) exceeds the tolerance, " + fname, control > 1e-9, true);
    r.details[fname] = {{"phi_f", base}, {"degree", spec.degree}, {"n", n}, {"control_max_relative", control}};
  }
  return r;
}

ExperimentReport run_kernel_laplacian(const ExperimentOptions& opt) {
  ExperimentReport r;
  const int cells = opt.cells.value_or(256);
  const std::vector<double> eps = opt.sigmas.empty() ? std::vector<double>{1e-2, 5e-3, 2.5e-3} : opt.sigmas;
  if (eps.size() < 2) throw ConfigError("kernel-laplacian needs at least two values of epsilon");
  const Eigen::Vector2d c(0.1, 0.05);
  const double s = 0.3;
  r.parameters = {{"seed", opt.seed}, {"cells_per_axis", cells}, {"epsilons", eps}, {"psi_center", {c(0), c(1)}},
                  {"psi_width", s}};

  auto psi = [c, s](const Eigen::VectorXd& x) { return std::exp(-(x - c).squaredNorm() / (2 * s * s)); };
  auto psi_hess = [c, s, psi](const Eigen::VectorXd& x) -> Eigen::MatrixXd {
    const Eigen::Vector2d y = x - c;
    return psi(x) * (y * y.transpose() / std::pow(s, 4) - Eigen::Matrix2d::Identity() / (s * s));
  };
  auto f_eps = [&](double e, bool with_psi) {
    return Function::smooth(
        2, [=](const Eigen::VectorXd& x) { return 0.5 * x.squaredNorm() + (with_psi ? e * psi(x) : 0.0); },
        [=](const Eigen::VectorXd& x) -> Eigen::MatrixXd {
          Eigen::MatrixXd h = Eigen::Matrix2d::Identity();
          if (with_psi) h += e * psi_hess(x);
          return h;
        },
        "quadratic+eps*psi");
  };

  ValuationSpec spec;
  spec.field = Field::R;
  spec.n = 2;
  spec.degree = 2;
  spec.b = make_weight(Profile::Bump, Eigen::Vector2d::Zero(), 0.8);
  const auto grid = QuadratureGrid::cube(2, 1.0, cells);

  double e_max = 0;
  for (double e : eps) {
    if (!(e > 0)) throw ConfigError("epsilons must be positive");
    e_max = std::max(e_max, e);
  }
  const auto verdict = midpoint_convexity(f_eps(e_max, true).value, grid.lo, grid.hi, 10000, 1e-12, opt.seed);
  if (!verdict.convex) throw ConvexityError("quadratic + eps psi is not convex at the largest epsilon");

  // reference: integral of B times the five-point Laplacian of psi
  const double hfd = 1e-3;
  const Eigen::VectorXd hc = grid.cell_size();
  double ref = 0;
  for (int i = 0; i < cells; ++i)
    for (int j = 0; j < cells; ++j) {
      const Eigen::Vector2d x(grid.lo(0) + (i + 0.5) * hc(0), grid.lo(1) + (j + 0.5) * hc(1));
      const double bx = spec.b(x);
      if (bx == 0.0) continue;
      double lap = -4 * psi(x);
      for (int a = 0; a < 2; ++a)
        for (double sg : {1.0, -1.0}) lap += psi(x + sg * hfd * Eigen::Vector2d::Unit(a));
      ref += bx * lap / (hfd * hfd);
    }
  ref *= grid.cell_volume();

  const double base = eval_valuation(spec, f_eps(0, false), grid, opt.threads);
  std::vector<double> d_eps, gaps, ratios;
  for (double e : eps) {
    d_eps.push_back((eval_valuation(spec, f_eps(e, true), grid, opt.threads) - base) / e);
    gaps.push_back(std::abs(d_eps.back() - ref));
  }
  for (size_t k = 1; k < gaps.size(); ++k) {
    ratios.push_back(gaps[k - 1] / gaps[k]);
    r.check("gap ratio eps " + std::to_string(k - 1) + " -> " + std::to_string(k), ratios.back(), 2.0, 0.5);
  }
  const double d_zero = (eval_valuation(spec, f_eps(eps.back(), false), grid, opt.threads) - base) / eps.back();
  r.check("D(eps) with psi = 0", d_zero, 0.0, 0.0);
  r.check_flag("reference integral of Laplacian(psi) B is nonzero", std::abs(ref) > 1e-6, true);
  r.details["reference"] = ref;
  r.details["D"] = d_eps;
  r.details["gaps"] = gaps;
  r.details["convexity_worst_violation"] = verdict.worst_violation;

  // kernel elements: bumps vanishing at 0
  std::mt19937_64 rng(opt.seed);
  const int kcells = 128;
  const auto kgrid = QuadratureGrid::cube(2, 1.0, kcells, 4.0 / kcells);
  std::vector<ValuationSpec> kernel;
  std::vector<Eigen::Vector2d> dirs;
  for (int m = 0; m < 3; ++m) {
    const double th = 2 * std::numbers::pi * m / 3;
    dirs.emplace_back(std::cos(th), std::sin(th));
    ValuationSpec k = spec;
    k.b = make_weight(Profile::Bump, 0.6 * dirs.back(), 0.3);
    kernel.push_back(k);
  }
  double worst_image = 0, min_quadratic = std::numeric_limits<double>::infinity();
  for (int b = 0; b < 5; ++b) {
    Polytope poly;
    poly.vertices = random_polygon(6, 0.5, 0.3, rng);
    const double vol = hull_volume(poly.vertices);
    for (const auto& k : kernel)
      worst_image = std::max(worst_image, std::abs(body_valuation(k, ConvexBody(poly), kgrid, opt.threads)) / vol);
  }
  Eigen::Matrix3d m;
  for (int a = 0; a < 3; ++a) {
    min_quadratic = std::min(min_quadratic, std::abs(eval_valuation(kernel[a], f_eps(0, false), kgrid, opt.threads)));
    for (int j = 0; j < 3; ++j) {
      const Eigen::Vector2d w = 2.0 * dirs[j];
      const Function q = Function::smooth(
          2, [w](const Eigen::VectorXd& x) { return 0.5 * x.squaredNorm() + 0.5 * std::exp(w.dot(x)); },
          [w](const Eigen::VectorXd& x) -> Eigen::MatrixXd {
            return Eigen::Matrix2d::Identity() + 0.5 * std::exp(w.dot(x)) * w * w.transpose();
          },
          "quadratic+exp");
      m(a, j) = eval_valuation(kernel[a], q, kgrid, opt.threads);
    }
  }
  const Eigen::Vector3d sv = Eigen::JacobiSVD<Eigen::Matrix3d>(m).singularValues();
  r.check("max |T-image| / (vol max B) over 3 kernel elements and 5 polygons", worst_image, 0.0, 0.02);
  r.check_flag("kernel elements are nonzero on the quadratic", min_quadratic > 1e-6, true);
  r.check_flag("kernel elements are linearly independent (sigma_min / sigma_max > 1e-3)", sv(2) / sv(0) > 1e-3,
               true);
  r.details["kernel_sigma_ratio"] = sv(2) / sv(0);
  r.details["kernel_min_value_on_quadratic"] = min_quadratic;
  return r;
}

}  // namespace mav
