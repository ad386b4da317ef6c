#pragma once

#include <vector>

#include <Eigen/Dense>

#include "mavals/convex/pl_function.hpp"

namespace mav {

struct Atom {
  Eigen::VectorXd location;
  double mass = 0;
};

struct AtomicMeasure {
  std::vector<Atom> atoms;
  double total_mass = 0;
};

/// Monge-Ampere measure of a PL convex function: one atom per vertex of the
/// max-structure, with mass vol(conv{a_j : piece j active there}). Vertices
/// are found by enumerating (d+1)-subsets of pieces. Atoms of zero mass are
/// dropped. Throws DimensionError for d > 3; see ma_total_mass.
AtomicMeasure ma_measure_pl(const PLConvexFunction& f);

/// Total mass vol(conv{a_j}), any dimension.
double ma_total_mass(const PLConvexFunction& f);

}  // namespace mav
