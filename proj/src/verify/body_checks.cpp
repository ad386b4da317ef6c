#include <algorithm>
#include <cmath>
#include <random>

#include "helpers.hpp"
#include "mavals/error.hpp"
#include "mavals/valuation/decompose.hpp"
#include "mavals/valuation/evaluate.hpp"
#include "mavals/valuation/ma_measure.hpp"
#include "mavals/verify/experiments.hpp"
#include "mavals/verify/oracles.hpp"

namespace mav {

namespace {

using detail::atom_weight;
using detail::field_weight;
using detail::make_weight;

// B and psi are plateaus around v0 wide enough to contain every bump width used.
ValuationSpec parity_spec(int n, int degree, double width) {
  const Eigen::VectorXd v0 = Eigen::VectorXd::Unit(n, 0);
  const ScalarWeight plateau = make_weight(Profile::Plateau, v0, 0.5, 0.5);
  ValuationSpec s;
  s.field = Field::R;
  s.n = n;
  s.degree = degree;
  s.b = plateau;
  for (int l = 0; l < n - degree; ++l) {
    const auto e = HermitianMatrix::unit_diagonal(Field::R, n, l);
    s.a.push_back(l == 0 ? atom_weight(e, v0, width) : field_weight(e, plateau));
  }
  return s;
}

QuadratureGrid box_around(const Eigen::VectorXd& c, double half_width, int cells) {
  QuadratureGrid g;
  g.lo = c.array() - half_width;
  g.hi = c.array() + half_width;
  g.cells.assign(c.size(), cells);
  return g;
}

bool neither_even_nor_odd(double a, double b) {
  const double tol = 0.01 * std::max(std::abs(a), std::abs(b));
  return std::abs(b - a) > tol && std::abs(b + a) > tol;
}

int checked_dim(const ExperimentOptions& opt, int fallback, int min_dim) {
  const int n = opt.dim.value_or(fallback);
  if (n < min_dim) throw ConfigError("dimension must be at least " + std::to_string(min_dim));
  return n;
}

}  // namespace

ExperimentReport run_step6_parity(const ExperimentOptions& opt) {
  ExperimentReport r;
  const int n = checked_dim(opt, 3, 2);
  std::vector<int> degrees;
  if (opt.degree) {
    if (*opt.degree < 1 || *opt.degree > n - 1) throw ConfigError("degree out of range 1..n-1");
    degrees.push_back(*opt.degree);
  } else {
    for (int i = 1; i < n; ++i) degrees.push_back(i);
  }
  const std::vector<double> widths = opt.sigmas.empty() ? std::vector<double>{0.2, 0.1, 0.05} : opt.sigmas;
  const int cells = opt.cells.value_or(24);
  r.parameters = {{"dim", n}, {"degrees", degrees}, {"bump_widths", widths}, {"cells_per_axis", cells}};

  const ConvexBody k = make_two_ball_body(n);
  const ConvexBody ball = ConvexBody::ball(n);
  const Eigen::VectorXd v0 = Eigen::VectorXd::Unit(n, 0);
  const Function fk = Function::from_body(k), fnk = Function::from_body(k.negated());
  const QuadratureGrid atom_grid = box_around(v0, 0.5, 4);

  for (int i : degrees) {
    const std::string tag = "i=" + std::to_string(i);
    const double c = 1.0 / detail::binomial(n, i);
    const double twice = std::pow(2.0, i);
    const auto spec = parity_spec(n, i, 0.0);
    const double pk = eval_valuation(spec, fk, atom_grid, opt.threads);
    const double pnk = eval_valuation(spec, fnk, atom_grid, opt.threads);

    nlohmann::ordered_json bumps = nlohmann::ordered_json::array();
    double bk = 0, bnk = 0;
    for (double w : widths) {
      if (!(w > 0) || w > 0.25) throw ConfigError("bump widths must lie in (0, 0.25]");
      const auto bspec = parity_spec(n, i, w);
      const auto grid = box_around(v0, w, cells);
      bk = eval_valuation(bspec, fk, grid, opt.threads);
      bnk = eval_valuation(bspec, fnk, grid, opt.threads);
      bumps.push_back({{"width", w}, {"phi_K", bk}, {"phi_minus_K", bnk}});
    }

    const double bl = eval_valuation(spec, Function::from_body(ball), atom_grid, opt.threads);
    const double bnl = eval_valuation(spec, Function::from_body(ball.negated()), atom_grid, opt.threads);

    r.check("phi(K), atom, " + tag, pk, c, 0.01 * c);
    r.check("phi(-K), atom, " + tag, pnk, c * twice, 0.01 * c * twice);
    r.check("phi(K), bump at finest width, " + tag, bk, c, 0.03 * c);
    r.check("phi(-K), bump at finest width, " + tag, bnk, c * twice, 0.03 * c * twice);
    r.check("relative bump-atom gap at finest width, " + tag,
            std::max(detail::rel_gap(bk, pk), detail::rel_gap(bnk, pnk)), 0.0, 0.01);
    r.check_flag("neither even nor odd, " + tag, neither_even_nor_odd(pk, pnk), true);
    r.check_flag("neither even nor odd, ball control, " + tag, neither_even_nor_odd(bl, bnl), false);

    const double f = detail::factorial_ratio(i, n);
    r.details[tag] = {{"phi_K", pk},
                      {"phi_minus_K", pnk},
                      {"ratio", pnk / pk},
                      {"bump", bumps},
                      {"ball", {bl, bnl}},
                      {"polarization_constant_i_fact_over_n_fact", f},
                      {"expected_with_polarization_constant", {f, f * twice}}};
  }
  return r;
}

ExperimentReport run_volume_lemma(const ExperimentOptions& opt) {
  ExperimentReport r;
  const std::string body = opt.body.value_or("random");
  const int count = opt.trials.value_or(10);
  const int cells = opt.cells.value_or(64);
  const double sigma = opt.sigma.value_or(4.0 / cells);
  r.parameters = {{"seed", opt.seed}, {"body", body}, {"cells_per_axis", cells}, {"sigma", sigma}};
  if (body == "random") r.parameters["bodies"] = count;

  std::vector<Polytope> bodies;
  std::mt19937_64 rng(opt.seed);
  if (body == "random") {
    for (int k = 0; k < count; ++k) bodies.push_back(random_sphere_polytope(3, 12, 0.8, rng));
  } else if (body == "cube3") {
    bodies.push_back(Polytope::cube(3));
  } else if (body == "centered_cube3") {
    bodies.push_back(Polytope::centered_cube(3));
  } else {
    throw ConfigError("unknown body '" + body + "' (random, cube3, centered_cube3)");
  }

  const Eigen::VectorXd zero = Eigen::VectorXd::Zero(3);
  ValuationSpec spec;
  spec.field = Field::R;
  spec.n = 3;
  spec.degree = 3;
  spec.b = make_weight(Profile::Plateau, zero, 1.0, 0.8);
  const double b0 = spec.b(zero);
  const auto grid = QuadratureGrid::cube(3, 1.0, cells, sigma);

  auto exact = [](const ScalarWeight& b, const Polytope& p) {
    double s = 0;
    for (const auto& a : ma_measure_pl(PLConvexFunction::support_of(p)).atoms) s += b(a.location) * a.mass;
    return s;
  };

  double worst_exact = 0, worst_quad = 0, worst_kernel = 0, worst_scaled = 0;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& p : bodies) {
    const double vol = slice_volume_3d(p);
    const double e = exact(spec.b, p);
    const double q = body_valuation(spec, ConvexBody(p), grid, opt.threads);
    worst_exact = std::max(worst_exact, std::abs(e - b0 * vol) / std::max(1.0, vol));
    worst_quad = std::max(worst_quad, std::abs(q - b0 * vol) / (b0 * vol));

    ConvexBody doubled = ConvexBody(p).scaled(2.0);
    const double e2 = exact(spec.b, *doubled.polytope());
    worst_scaled = std::max(worst_scaled, std::abs(e2 - 8 * b0 * vol) / std::max(1.0, 8 * vol));

    const ScalarWeight off = make_weight(Profile::Bump, Eigen::Vector3d(0.5, 0.0, 0.0), 0.4);
    worst_kernel = std::max(worst_kernel, std::abs(exact(off, p)));
    rows.push_back({{"volume", vol}, {"exact", e}, {"quadrature", q}});
  }
  r.check("max |exact route - B(0) vol| / max(1, vol)", worst_exact, 0.0, 1e-9);
  r.check("max relative |quadrature route - B(0) vol|", worst_quad, 0.0, 0.02);
  r.check("max |exact route on 2K - 8 B(0) vol| / max(1, 8 vol)", worst_scaled, 0.0, 1e-9);
  r.check("max |exact route| with B(0) = 0", worst_kernel, 0.0, 1e-12);
  r.details["B0"] = b0;
  r.details["bodies"] = rows;
  return r;
}

ExperimentReport run_homogeneity(const ExperimentOptions& opt) {
  ExperimentReport r;
  const int n = checked_dim(opt, 3, 2);
  std::vector<int> degrees;
  if (opt.degree) {
    if (*opt.degree < 0 || *opt.degree > n - 1) throw ConfigError("degree out of range 0..n-1");
    degrees.push_back(*opt.degree);
  } else {
    for (int i = 0; i < n; ++i) degrees.push_back(i);
  }
  r.parameters = {{"seed", opt.seed}, {"dim", n}, {"degrees", degrees}, {"lambda_min", 1}, {"lambda_max", n + 1}};

  const ConvexBody k = make_two_ball_body(n);
  const QuadratureGrid grid = box_around(Eigen::VectorXd::Unit(n, 0), 0.5, 4);
  auto leakage = [](const std::vector<double>& c, int at) {
    double off = 0;
    for (int j = 0; j < static_cast<int>(c.size()); ++j)
      if (j != at) off = std::max(off, std::abs(c[j]));
    return off / std::abs(c[at]);
  };
  for (int i : degrees) {
    const auto c = homogeneous_components(parity_spec(n, i, 0.0), k, grid, n, opt.threads);
    r.check("relative off-degree leakage, degree-" + std::to_string(i) + " spec", leakage(c, i), 0.0, 1e-3);
    r.details["components_degree_" + std::to_string(i)] = c;
  }

  std::mt19937_64 rng(opt.seed);
  const ConvexBody p(random_sphere_polytope(n, 4 * n, 1.0, rng));
  const BodyValuation vol = [](const ConvexBody& b) {
    return ma_total_mass(PLConvexFunction::support_of(*b.polytope()));
  };
  const auto cv = homogeneous_components(vol, p, n);
  r.check("relative off-degree leakage, volume", leakage(cv, n), 0.0, 1e-3);
  r.details["components_volume"] = cv;
  return r;
}

ExperimentReport run_continuity(const ExperimentOptions& opt) {
  ExperimentReport r;
  std::vector<double> sigmas = opt.sigmas.empty() ? std::vector<double>{0.5, 0.25, 0.125, 0.0625} : opt.sigmas;
  for (size_t k = 0; k < sigmas.size(); ++k) {
    if (!(sigmas[k] > 0)) throw ConfigError("smoothing widths must be positive");
    if (k > 0 && !(sigmas[k] < sigmas[k - 1])) throw ConfigError("smoothing widths must decrease");
  }
  if (sigmas.size() < 2) throw ConfigError("continuity needs at least two smoothing widths");
  r.parameters = {{"body", "cube3"}, {"sigmas", sigmas}};
  if (opt.cells) r.parameters["cells_per_axis"] = *opt.cells;
  else r.parameters["cells_per_sigma"] = 2;

  const Polytope cube = Polytope::cube(3);
  ValuationSpec spec;
  spec.field = Field::R;
  spec.n = 3;
  spec.degree = 3;
  spec.b = make_weight(Profile::Bump, Eigen::VectorXd::Zero(3), 1.0);
  double oracle = 0;
  for (const auto& a : ma_measure_pl(PLConvexFunction::support_of(cube)).atoms) oracle += spec.b(a.location) * a.mass;

  const Function f = Function::from_body(ConvexBody(cube));
  auto value = [&](double s) {
    const int cells = opt.cells.value_or(static_cast<int>(std::ceil(4.0 / s - 1e-9)));
    return eval_valuation(spec, f, QuadratureGrid::cube(3, 1.0, cells, s), opt.threads);
  };
  std::vector<double> values, gaps, rates;
  for (double s : sigmas) {
    values.push_back(value(s));
    gaps.push_back(std::abs(values.back() - oracle) / std::abs(oracle));
  }
  bool monotone = true;
  for (size_t k = 1; k < gaps.size(); ++k) {
    if (gaps[k] > 1.1 * gaps[k - 1]) monotone = false;
    rates.push_back(std::log2(gaps[k - 1] / gaps[k]));
  }
  const double repeat = value(sigmas.back());

  r.check("final relative gap to the PL oracle", gaps.back(), 0.0, 0.02);
  r.check_flag("gaps decrease (10% noise band)", monotone, true);
  r.check_flag("repeated width gives the identical value", repeat == values.back(), true);
  r.details["oracle"] = oracle;
  r.details["values"] = values;
  r.details["gaps"] = gaps;
  r.details["log2_gap_ratios"] = rates;
  return r;
}

}  // namespace mav
