#pragma once

#include <variant>

#include <json.hpp>

#include "mavals/convex/body.hpp"
#include "mavals/convex/pl_function.hpp"
#include "mavals/valuation/spec.hpp"

namespace mav {

/// {"field": "R", "n": 3, "degree": 1,
///  "B": {"center": [..], "radius": r, "profile": "bump"},
///  "A": [{"atom": {"matrix": M, "location": [..], "width": 0}},
///        {"bump_field": {"matrix": M, "center": [..], "radius": r, "profile": "bump"}}]}
/// Matrix entries are numbers (real) or coefficient arrays of length field_rank.
/// Throws ConfigError on malformed input.
nlohmann::json to_json(const ValuationSpec& spec);
ValuationSpec spec_from_json(const nlohmann::json& j);

nlohmann::json to_json(const HermitianMatrix& m);
HermitianMatrix matrix_from_json(const nlohmann::json& j, Field field, int n);

/// {"type": "polytope", "dim": n, "vertices": [[..]]}, {"type": "pl", "pieces": [{"a": [..], "b": r}]},
/// {"type": "two_ball", "dim": n}, {"type": "ball", "dim": n, "radius": r} or {"type": "cube", "dim": n}.
using BodyInput = std::variant<ConvexBody, PLConvexFunction>;
BodyInput body_from_json(const nlohmann::json& j);

}  // namespace mav
