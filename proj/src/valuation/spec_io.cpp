#include "mavals/valuation/spec_io.hpp"

#include <string>

#include "mavals/error.hpp"

namespace mav {

using nlohmann::json;

namespace {

json vec_json(const Eigen::VectorXd& v) { return json(std::vector<double>(v.data(), v.data() + v.size())); }

Eigen::VectorXd vec_from(const json& j, const char* what) {
  if (!j.is_array()) throw ConfigError(std::string(what) + ": expected an array of numbers");
  Eigen::VectorXd v(j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw ConfigError(std::string(what) + ": expected an array of numbers");
    v(i) = j[i].get<double>();
  }
  return v;
}

const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ConfigError(std::string("missing field '") + key + "'");
  return j.at(key);
}

json weight_json(const ScalarWeight& w) {
  json j = {{"center", vec_json(w.center)}, {"radius", w.radius}, {"profile", std::string(profile_name(w.profile))}};
  if (w.profile == Profile::Plateau) j["inner"] = w.inner;
  if (w.amplitude != 1.0) j["amplitude"] = w.amplitude;
  return j;
}

ScalarWeight weight_from(const json& j) {
  ScalarWeight w;
  w.center = vec_from(need(j, "center"), "center");
  w.radius = j.value("radius", 1.0);
  w.profile = parse_profile(j.value("profile", std::string("bump")));
  w.inner = j.value("inner", 0.5);
  w.amplitude = j.value("amplitude", 1.0);
  return w;
}

}  // namespace

json to_json(const HermitianMatrix& m) {
  const int r = field_rank(m.field());
  json rows = json::array();
  for (int i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (int k = 0; k < m.size(); ++k) {
      if (r == 1) {
        row.push_back(m(i, k).real());
      } else {
        json e = json::array();
        for (int c = 0; c < r; ++c) e.push_back(m(i, k)[c]);
        row.push_back(e);
      }
    }
    rows.push_back(row);
  }
  return rows;
}

HermitianMatrix matrix_from_json(const json& j, Field field, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) throw ConfigError("matrix must have " + std::to_string(n) + " rows");
  HermitianMatrix m(field, n);
  const int r = field_rank(field);
  for (int i = 0; i < n; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != n) throw ConfigError("matrix row has wrong length");
    for (int k = i; k < n; ++k) {
      const json& e = j[i][k];
      Octonion o;
      if (e.is_number()) {
        o = Octonion(e.get<double>());
      } else if (e.is_array() && static_cast<int>(e.size()) <= r) {
        for (size_t c = 0; c < e.size(); ++c) o[static_cast<int>(c)] = e[c].get<double>();
      } else {
        throw ConfigError("matrix entry must be a number or up to " + std::to_string(r) + " coefficients");
      }
      m.set(i, k, o);
    }
  }
  return m;
}

json to_json(const ValuationSpec& spec) {
  json a = json::array();
  for (const auto& w : spec.a) {
    if (w.atom) {
      a.push_back({{"atom", {{"matrix", to_json(w.matrix)}, {"location", vec_json(w.location)}, {"width", w.width}}}});
    } else {
      json f = weight_json(w.profile);
      f["matrix"] = to_json(w.matrix);
      a.push_back({{"bump_field", f}});
    }
  }
  return {{"field", std::string(field_name(spec.field))},
          {"n", spec.n},
          {"degree", spec.degree},
          {"B", weight_json(spec.b)},
          {"A", a}};
}

ValuationSpec spec_from_json(const json& j) {
  try {
    ValuationSpec s;
    s.field = parse_field(need(j, "field").get<std::string>());
    s.n = need(j, "n").get<int>();
    s.degree = need(j, "degree").get<int>();
    s.b = weight_from(need(j, "B"));
    if (j.contains("A")) {
      for (const auto& e : j.at("A")) {
        MatrixWeight w;
        if (e.contains("atom")) {
          const auto& at = e.at("atom");
          w.atom = true;
          w.matrix = matrix_from_json(need(at, "matrix"), s.field, s.n);
          w.location = vec_from(need(at, "location"), "location");
          w.width = at.value("width", 0.0);
        } else if (e.contains("bump_field")) {
          const auto& bf = e.at("bump_field");
          w.matrix = matrix_from_json(need(bf, "matrix"), s.field, s.n);
          w.profile = weight_from(bf);
        } else {
          throw ConfigError("matrix weight must be 'atom' or 'bump_field'");
        }
        s.a.push_back(std::move(w));
      }
    }
    s.validate();
    return s;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed valuation spec: ") + e.what());
  } catch (const DimensionError& e) {
    throw ConfigError(e.what());
  }
}

BodyInput body_from_json(const json& j) {
  try {
    const std::string type = need(j, "type").get<std::string>();
    if (type == "polytope") {
      Polytope p;
      for (const auto& v : need(j, "vertices")) p.vertices.push_back(vec_from(v, "vertex"));
      if (p.vertices.empty()) throw ConfigError("polytope without vertices");
      if (j.contains("dim") && j.at("dim").get<int>() != p.dim()) throw ConfigError("vertex dimension differs from 'dim'");
      return ConvexBody(p);
    }
    if (type == "pl") {
      std::vector<AffinePiece> pieces;
      for (const auto& pc : need(j, "pieces")) pieces.push_back({vec_from(need(pc, "a"), "a"), pc.value("b", 0.0)});
      return PLConvexFunction(std::move(pieces));
    }
    const int dim = need(j, "dim").get<int>();
    if (dim < 1) throw ConfigError("dimension must be positive");
    if (type == "two_ball") return make_two_ball_body(dim);
    if (type == "ball") return ConvexBody::ball(dim, j.value("radius", 1.0));
    if (type == "cube") return ConvexBody(Polytope::cube(dim));
    throw ConfigError("unknown body type '" + type + "'");
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed body: ") + e.what());
  } catch (const ConfigError&) {
    throw;
  } catch (const ConvexityError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
}

}  // namespace mav
