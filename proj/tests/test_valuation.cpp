#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "mavals/algebra/determinants.hpp"
#include "mavals/error.hpp"
#include "mavals/convex/slabs.hpp"
#include "mavals/valuation/decompose.hpp"
#include "mavals/valuation/evaluate.hpp"
#include "mavals/valuation/hull.hpp"
#include "mavals/valuation/ma_measure.hpp"
#include "mavals/valuation/smoothing.hpp"
#include "mavals/valuation/spec_io.hpp"

using namespace mav;

namespace {

ScalarWeight weight(Profile p, const Eigen::VectorXd& c, double r, double inner = 0.5) {
  ScalarWeight w;
  w.profile = p;
  w.center = c;
  w.radius = r;
  w.inner = inner;
  return w;
}

ValuationSpec top_degree(int d, ScalarWeight b) {
  ValuationSpec s;
  s.field = Field::R;
  s.n = d;
  s.degree = d;
  s.b = std::move(b);
  return s;
}

Function quadratic(const Eigen::MatrixXd& q) {
  return Function::smooth(
      static_cast<int>(q.rows()), [q](const Eigen::VectorXd& x) { return 0.5 * x.dot(q * x); },
      [q](const Eigen::VectorXd&) { return q; }, "quadratic");
}

}  // namespace

TEST_CASE("hull volume oracles") {
  for (int n = 1; n <= 4; ++n) {
    CHECK(hull_volume(Polytope::cube(n).vertices) == doctest::Approx(1.0).epsilon(1e-12));
    Points simplex{Eigen::VectorXd::Zero(n)};
    for (int i = 0; i < n; ++i) simplex.push_back(Eigen::VectorXd::Unit(n, i));
    CHECK(hull_volume(simplex) == doctest::Approx(1.0 / std::tgamma(n + 1.0)).epsilon(1e-12));
  }
  Points flat;
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int k = 0; k < 10; ++k) flat.push_back(Eigen::Vector3d(u(rng), u(rng), 0.3));
  CHECK(hull_volume(flat) == 0.0);

  // cross-polytope in R^2 and R^3, with interior points added
  Points cross2{Eigen::Vector2d(1, 0), Eigen::Vector2d(-1, 0), Eigen::Vector2d(0, 1), Eigen::Vector2d(0, -1),
                Eigen::Vector2d(0.1, 0.2)};
  CHECK(hull_volume(cross2) == doctest::Approx(2.0));
  Points cross3;
  for (int i = 0; i < 3; ++i)
    for (double s : {1.0, -1.0}) cross3.push_back(s * Eigen::Vector3d::Unit(i));
  CHECK(hull_volume(cross3) == doctest::Approx(4.0 / 3.0));
}

TEST_CASE("PL Monge-Ampere measure") {
  SUBCASE("affine") {
    const PLConvexFunction f({{Eigen::Vector3d(1, 2, 3), 0.5}});
    CHECK(ma_measure_pl(f).atoms.empty());
    CHECK(ma_measure_pl(f).total_mass == 0.0);
  }
  SUBCASE("cube support function") {
    const auto mu = ma_measure_pl(PLConvexFunction::support_of(Polytope::cube(3)));
    REQUIRE(mu.atoms.size() == 1);
    CHECK(mu.atoms[0].location.norm() <= 1e-12);
    CHECK(mu.atoms[0].mass == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("cross-polytope") {
    std::vector<AffinePiece> pieces;
    for (int i = 0; i < 2; ++i)
      for (double s : {1.0, -1.0}) pieces.push_back({s * Eigen::Vector2d::Unit(i), 0.0});
    const auto mu = ma_measure_pl(PLConvexFunction(pieces));
    REQUIRE(mu.atoms.size() == 1);
    CHECK(mu.total_mass == doctest::Approx(2.0));
  }
  SUBCASE("several atoms, total mass") {
    // |x| + |y - 1| style function: max of four pieces with two kinks
    std::vector<AffinePiece> pieces;
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int k = 0; k < 9; ++k) pieces.push_back({Eigen::Vector3d(u(rng), u(rng), u(rng)), u(rng)});
    const PLConvexFunction f(pieces);
    const auto mu = ma_measure_pl(f);
    CHECK(mu.atoms.size() > 1);
    double s = 0;
    for (const auto& a : mu.atoms) s += a.mass;
    CHECK(std::abs(s - mu.total_mass) <= 1e-12);
    CHECK(mu.total_mass == doctest::Approx(ma_total_mass(f)).epsilon(1e-9));
  }
  SUBCASE("dimension limit") {
    CHECK_THROWS_AS(ma_measure_pl(PLConvexFunction::support_of(Polytope::cube(4))), DimensionError);
    CHECK(ma_total_mass(PLConvexFunction::support_of(Polytope::cube(4))) == doctest::Approx(1.0));
  }
}

TEST_CASE("weights") {
  const Eigen::VectorXd c = Eigen::VectorXd::Zero(3);
  CHECK(weight(Profile::Bump, c, 0.5)(c) == 1.0);
  CHECK(weight(Profile::Plateau, c, 1.0, 0.8)(Eigen::Vector3d(0.7, 0, 0)) == 1.0);
  CHECK(weight(Profile::Plateau, c, 1.0, 0.8)(Eigen::Vector3d(1.0, 0, 0)) == 0.0);
  const double mid = weight(Profile::Plateau, c, 1.0, 0.8)(Eigen::Vector3d(0.9, 0, 0));
  CHECK(mid == doctest::Approx(0.5));

  // normalized bump integrates to 1 (midpoint rule on a fine grid)
  const auto nb = weight(Profile::NormalizedBump, Eigen::Vector2d(0.1, -0.2), 0.3);
  const int m = 400;
  double s = 0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) s += nb(Eigen::Vector2d(-0.2 + (i + 0.5) * 0.6 / m, -0.5 + (j + 0.5) * 0.6 / m));
  CHECK(s * (0.6 / m) * (0.6 / m) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("smoothing kernels reproduce polynomial derivatives") {
  const double h = 0.05, sigma = 0.1;
  const auto g0 = gaussian_kernel(0, h, sigma), g1 = gaussian_kernel(1, h, sigma), g2 = gaussian_kernel(2, h, sigma);
  const int r = static_cast<int>(g0.size() / 2);
  double s0 = 0, s1 = 0, s2 = 0, c2 = 0;
  for (int k = -r; k <= r; ++k) {
    const double x = 0.3 + k * h;
    s0 += g0[k + r];
    s1 += g1[k + r] * (2 * x + 1);
    s2 += g2[k + r] * (x * x + 3 * x - 2);
    c2 += g2[k + r];
  }
  CHECK(s0 == doctest::Approx(1.0));
  CHECK(s1 == doctest::Approx(2.0));
  CHECK(s2 == doctest::Approx(2.0));
  CHECK(std::abs(c2) < 1e-12);
}

TEST_CASE("eval_valuation basics") {
  const Eigen::VectorXd zero = Eigen::VectorXd::Zero(3);
  auto spec = top_degree(3, weight(Profile::NormalizedBump, zero, 0.8));
  const auto grid = QuadratureGrid::cube(3, 1.0, 32);

  SUBCASE("half squared norm") {
    const double v = eval_valuation(spec, quadratic(Eigen::MatrixXd::Identity(3, 3)), grid);
    CHECK(v == doctest::Approx(1.0).epsilon(0.02));
  }
  SUBCASE("general quadratic") {
    Eigen::MatrixXd g = Eigen::MatrixXd::Random(3, 3);
    const Eigen::MatrixXd q = g * g.transpose() + Eigen::MatrixXd::Identity(3, 3);
    const double v = eval_valuation(spec, quadratic(q), grid);
    CHECK(v == doctest::Approx(q.determinant()).epsilon(0.02));
  }
  SUBCASE("linear invariance is exact with analytic Hessians") {
    const auto f = quadratic(Eigen::MatrixXd::Identity(3, 3));
    const double v = eval_valuation(spec, f, grid);
    CHECK(eval_valuation(spec, f.plus_affine(Eigen::Vector3d(0.3, -2, 5), 1.0), grid) == v);
  }
  SUBCASE("degree zero ignores f") {
    ValuationSpec s0;
    s0.field = Field::R;
    s0.n = 2;
    s0.degree = 0;
    s0.b = weight(Profile::NormalizedBump, Eigen::Vector2d::Zero(), 0.5);
    for (int k = 0; k < 2; ++k) {
      MatrixWeight w;
      w.matrix = HermitianMatrix::identity(Field::R, 2);
      w.profile = weight(Profile::Constant, Eigen::Vector2d::Zero(), 1.0);
      s0.a.push_back(w);
    }
    const auto g2 = QuadratureGrid::cube(2, 1.0, 64);
    const double a = eval_valuation(s0, quadratic(Eigen::MatrixXd::Identity(2, 2)), g2);
    const double b = eval_valuation(s0, quadratic(4 * Eigen::MatrixXd::Identity(2, 2)), g2);
    CHECK(a == b);
    CHECK(a == doctest::Approx(1.0).epsilon(1e-3));
  }
  SUBCASE("support outside the grid") {
    const auto small = QuadratureGrid::cube(3, 0.5, 16);
    CHECK_THROWS_AS(eval_valuation(spec, quadratic(Eigen::MatrixXd::Identity(3, 3)), small), Error);
  }
  SUBCASE("threads do not change the result") {
    const Function h = Function::from_body(ConvexBody(Polytope::centered_cube(3)));
    const auto g = QuadratureGrid::cube(3, 1.0, 24);
    CHECK(eval_valuation(spec, h, g, 1) == eval_valuation(spec, h, g, 3));
  }
  SUBCASE("restriction to a smaller box") {
    const Function h = Function::from_body(ConvexBody(Polytope::centered_cube(3)));
    QuadratureGrid big = QuadratureGrid::cube(3, 1.0, 32, 0.125);
    QuadratureGrid shrunk = big;
    shrunk.lo = Eigen::VectorXd::Constant(3, -0.8125);
    shrunk.hi = Eigen::VectorXd::Constant(3, 0.875);
    shrunk.cells.assign(3, 27);
    CHECK(std::abs(eval_valuation(spec, h, big) - eval_valuation(spec, h, shrunk)) <= 1e-12);
  }
}

TEST_CASE("smoothed quadrature agrees with the PL oracle") {
  const ConvexBody cube(Polytope::centered_cube(3));
  auto spec = top_degree(3, weight(Profile::Plateau, Eigen::VectorXd::Zero(3), 1.0, 0.8));
  const double v = body_valuation(spec, cube.scaled(0.5), QuadratureGrid::cube(3, 1.0, 48, 2.0 / 24));
  CHECK(v == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("smooth bodies need smoothing at the origin") {
  auto spec = top_degree(3, weight(Profile::Bump, Eigen::VectorXd::Zero(3), 0.5));
  CHECK_THROWS_AS(body_valuation(spec, ConvexBody::ball(3), QuadratureGrid::cube(3, 1.0, 8)), Error);
  CHECK_NOTHROW(body_valuation(spec, ConvexBody::ball(3), QuadratureGrid::cube(3, 1.0, 8, 0.25)));
}

TEST_CASE("closed-form polygon smoothing") {
  // unit square: integral of det Hess over the plane equals the area
  const Points sq{Eigen::Vector2d(0, 0), Eigen::Vector2d(1, 0), Eigen::Vector2d(1, 1), Eigen::Vector2d(0, 1)};
  const double sigma = 0.1;
  const int m = 160;
  const double h = 2.0 / m;
  double total = 0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      total += polygon_smoothed_hessian(convex_hull_2d(sq), Eigen::Vector2d(-1 + (i + .5) * h, -1 + (j + .5) * h), sigma)
                   .determinant();
  CHECK(total * h * h == doctest::Approx(1.0).epsilon(1e-3));

  // agrees with grid smoothing away from the origin
  Polytope square;
  square.vertices = sq;
  const Function grid_fn = Function::from_body(ConvexBody(square));
  const Function closed = embedded_polygon(sq, Eigen::Matrix2d::Identity());
  const Eigen::VectorXd lo = Eigen::Vector2d(-1, -1), hh = Eigen::Vector2d(0.0125, 0.0125);
  SmoothedHessianField field(grid_fn, lo, hh, {88, 60}, {88, 60}, sigma);
  const Eigen::Vector2d y = lo.array() + (Eigen::Array2d(88, 60) + 0.5) * hh.array();
  const Eigen::Matrix2d exact = closed.smoothed_hessian(y, sigma);
  CHECK((field.at(0) - exact).norm() <= 1e-2 * exact.norm());
}

TEST_CASE("homogeneous components and parity") {
  const auto k = ConvexBody(Polytope::cube(3));
  const auto vol = [](const ConvexBody& b) { return ma_total_mass(PLConvexFunction::support_of(*b.polytope())); };
  const auto c = homogeneous_components(vol, k, 3);
  CHECK(c[3] == doctest::Approx(1.0).epsilon(1e-9));
  for (int j = 0; j < 3; ++j) CHECK(std::abs(c[j]) <= 1e-8);

  const auto ball = ConvexBody::ball(3);
  const auto p = parity_split([](const ConvexBody& b) { return b.support(Eigen::Vector3d(0.3, 0.1, 0.9)); }, ball);
  CHECK(std::abs(p.odd) <= 1e-12);
  CHECK(std::abs(p.even + p.odd - p.value) <= 1e-12);
}

TEST_CASE("spec serialization round trip") {
  ValuationSpec s;
  s.field = Field::H;
  s.n = 2;
  s.degree = 1;
  s.b = weight(Profile::Plateau, Eigen::VectorXd::Zero(8), 1.0, 0.7);
  MatrixWeight w;
  w.matrix = HermitianMatrix::identity(Field::H, 2);
  w.matrix.set(0, 1, Octonion::from_quaternion(Quaternion(0.1, 0.2, 0.3, 0.4)));
  w.atom = true;
  w.location = Eigen::VectorXd::Constant(8, 0.25);
  s.a.push_back(w);
  const auto back = spec_from_json(to_json(s));
  CHECK(to_json(back) == to_json(s));
  CHECK((back.a[0].matrix - s.a[0].matrix).norm() == 0.0);

  auto bad = to_json(s);
  bad["degree"] = 5;
  CHECK_THROWS_AS(spec_from_json(bad), ConfigError);
  bad = to_json(s);
  bad["field"] = "Q";
  CHECK_THROWS_AS(spec_from_json(bad), ConfigError);

  const auto body = body_from_json(nlohmann::json::parse(R"({"type":"polytope","dim":2,"vertices":[[0,0],[1,0],[0,1]]})"));
  CHECK(std::get<ConvexBody>(body).support(Eigen::Vector2d(1, 1)) == 1.0);
  CHECK_THROWS_AS(body_from_json(nlohmann::json::parse(R"({"type":"blob","dim":2})")), ConfigError);
}
