#pragma once

#include "mavals/convex/body.hpp"

namespace mav {

/// Convex hull of planar points, counter-clockwise, collinear points dropped.
Points convex_hull_2d(const Points& pts);

/// Volume of the convex hull. Exact up to roundoff in every dimension: d <= 2
/// directly, d >= 3 by summing cone volumes over facets found by enumeration,
/// each facet's (d-1)-volume computed recursively. Degenerate hulls give 0.
/// Cost grows like C(m, d) for m points; intended for small point sets.
double hull_volume(const Points& pts);

}  // namespace mav
