#pragma once

#include "wernerdec/rational.hpp"

#include <array>
#include <vector>

namespace wernerdec {

/// normal . (x, y, z) >= rhs
struct Halfspace {
  std::array<Rational, 3> normal;
  Rational rhs;
};

/// The eight inequalities cutting out the n=m=1 feasible set in the
/// coordinates Q = [[x, y], [1-x-y-z, z]].
struct HalfspaceSystem {
  int d = 0;
  std::vector<Halfspace> rows;
};

HalfspaceSystem build_system(int d);

bool is_feasible(const HalfspaceSystem& sys, const std::array<Rational, 3>& point);

/// Exact vertex enumeration: intersects every 3-subset of hyperplanes,
/// filters by feasibility, deduplicates, returns lexicographically sorted.
std::vector<std::array<Rational, 3>> enumerate_vertices(const HalfspaceSystem& sys);

/// The five closed-form extreme points for local dimension d, sorted the same way.
std::vector<std::array<Rational, 3>> reference_vertices(int d);

/// a x + b z >= rhs, stored as (a, b, rhs).
struct PlaneInequality {
  Rational x_coeff, z_coeff, rhs;
};

/// Substitutes y = (1-x-z)/2 into the eight halfspaces; they collapse to four
/// distinct inequalities, returned in a fixed order (the third is redundant).
struct PlaneSection {
  int d = 0;
  std::vector<PlaneInequality> rows;
};

PlaneSection plane_section(int d);

/// 2-D vertex enumeration of a plane section, optionally skipping one row.
std::vector<std::array<Rational, 2>> plane_vertices(const PlaneSection& section, int skip_row = -1);

}  // namespace wernerdec
