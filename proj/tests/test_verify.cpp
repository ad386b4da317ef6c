#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <set>

#include "mavals/error.hpp"
#include "mavals/valuation/hull.hpp"
#include "mavals/verify/oracles.hpp"
#include "mavals/verify/registry.hpp"

using namespace mav;

TEST_CASE("report pass semantics") {
  ExperimentReport r;
  CHECK_FALSE(r.evaluate());
  r.check("a", 1.0, 1.0, 0.0);
  r.check("b", 0.5, 0.0, 0.5);
  CHECK(r.evaluate());
  r.check("c", std::numeric_limits<double>::quiet_NaN(), 0.0, 1e9);
  CHECK_FALSE(r.evaluate());

  ExperimentReport f;
  f.check_flag("flag", false, true);
  CHECK_FALSE(f.evaluate());

  r.runtime = 3.5;
  const auto j = r.to_json();
  CHECK_FALSE(j.contains("runtime"));
  CHECK(r.to_json(true)["runtime"] == 3.5);
  CHECK(j["observed"][2] == "nan");
  CHECK(j["labels"].size() == 3);

  const auto s = summary_index({r, f});
  CHECK(s["passed"] == 0);
  CHECK(s["failed"] == 2);
}

TEST_CASE("oracles") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 5; ++k) {
    const auto p = random_sphere_polytope(3, 10, 1.0, rng);
    for (const auto& v : p.vertices) CHECK(v.norm() == doctest::Approx(1.0));
    CHECK(slice_volume_3d(p) == doctest::Approx(hull_volume(p.vertices)).epsilon(1e-9));
  }
  CHECK(slice_volume_3d(Polytope::cube(3)) == doctest::Approx(1.0).epsilon(1e-12));

  const Eigen::MatrixXd q = random_rotation(5, rng);
  CHECK((q.transpose() * q - Eigen::MatrixXd::Identity(5, 5)).norm() <= 1e-12);

  const auto poly = random_polygon(6, 0.5, 0.3, rng);
  CHECK(poly.size() == 6);
  CHECK(hull_volume(poly) > 0.2);
}

TEST_CASE("registry") {
  std::set<std::string> names;
  for (const auto& e : experiment_registry()) {
    CHECK_FALSE(e.anchor.empty());
    names.insert(e.name);
  }
  CHECK(names.size() == experiment_registry().size());
  CHECK(names.size() == 10);
  CHECK(find_experiment("volume-lemma") != nullptr);
  CHECK(find_experiment("volume") == nullptr);
  CHECK_THROWS_AS(run_experiment("volume", {}), ConfigError);
}

TEST_CASE("fast experiments") {
  ExperimentOptions o;
  for (const char* name : {"moore-determinant", "structured-hessians", "homogeneity", "kernel-laplacian"}) {
    const auto r = run_experiment(name, o);
    CHECK_MESSAGE(r.pass, name);
    CHECK(r.name == name);
  }
}

TEST_CASE("mixed determinant constant") {
  const auto r = run_experiment("mixed-det-identity", {});
  REQUIRE(r.observed.size() == 3);
  CHECK(r.observed[1] <= 1e-9);  // binomial constant holds when n - i = 1
  CHECK(r.observed[2] <= 1e-9);  // i!/n! holds always
}

TEST_CASE("step6 parity values") {
  ExperimentOptions o;
  o.degree = 2;
  const auto r = run_experiment("step6-parity", o);
  CHECK(r.pass);
  o.degree = 1;
  const auto r1 = run_experiment("step6-parity", o);
  // polarization gives i!/n! = 1/6 and 2/6
  CHECK(r1.observed[0] == doctest::Approx(1.0 / 6).epsilon(1e-6));
  CHECK(r1.observed[1] == doctest::Approx(2.0 / 6).epsilon(1e-6));
  CHECK(r1.observed[5] == 1.0);
  CHECK(r1.observed[6] == 0.0);

  o.degree = 3;
  CHECK_THROWS_AS(run_experiment("step6-parity", o), ConfigError);
}

TEST_CASE("volume lemma on the unit cube") {
  ExperimentOptions o;
  o.body = "cube3";
  o.cells = 32;
  const auto r = run_experiment("volume-lemma", o);
  CHECK(r.pass);
  CHECK(r.details["bodies"][0]["exact"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
  o.body = "blob";
  CHECK_THROWS_AS(run_experiment("volume-lemma", o), ConfigError);
}

TEST_CASE("continuity schedule") {
  ExperimentOptions o;
  o.sigmas = {0.5, 0.25, 0.125};
  const auto r = run_experiment("continuity", o);
  const auto gaps = r.details["gaps"];
  CHECK(gaps[2].get<double>() < gaps[1].get<double>());
  CHECK(r.observed[2] == 1.0);  // determinism flag

  o.sigmas = {0.25, 0.5};
  CHECK_THROWS_AS(run_experiment("continuity", o), ConfigError);
  o.sigmas = {0.25, 0.125};
  o.cells = 4;  // cell 0.5 is coarser than sigma
  CHECK_THROWS_AS(run_experiment("continuity", o), ConfigError);
}

TEST_CASE("valuation identity and controls, small") {
  ExperimentOptions o;
  o.trials = 3;
  o.field = Field::O2;
  auto r = run_experiment("valuation-identity", o);
  CHECK(r.pass);
  o.field = Field::R;
  o.cells = 24;
  r = run_experiment("valuation-identity", o);
  CHECK(r.pass);

  ExperimentOptions l;
  l.trials = 5;
  const auto li = run_experiment("linear-invariance", l);
  CHECK(li.pass);
}

TEST_CASE("threads do not change reports") {
  ExperimentOptions a, b;
  a.sigmas = b.sigmas = {0.5, 0.25};
  b.threads = 4;
  CHECK(run_experiment("continuity", a).to_json().dump() == run_experiment("continuity", b).to_json().dump());
}
