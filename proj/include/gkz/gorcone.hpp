#pragma once

// The cone over the columns of A as a reflexive Gorenstein cone, for
// triangulations with a nonempty interior core that are unimodular.

#include <vector>

#include "gkz/triang.hpp"

namespace gkz {

/// The integral row vector with a0vee . a_j = 1. NoDegreeFunctional otherwise.
IntVector find_a0vee(const IntMatrix& a);

/// PreconditionFailed naming the first failing condition: "core1" (empty core),
/// "core2" (core in the boundary) or "vol1" (not unimodular).
void check_gorenstein_preconditions(const PointConfiguration& cfg, const Triangulation& t);

struct DualGenerator {
  IntVector row;                // row of A_I^{-1} belonging to core index i
  std::size_t core_index = 0;   // i, 0-based
  std::vector<Simplex> sources;  // the maximal simplices I producing it

  bool operator==(const DualGenerator& o) const { return row == o.row && core_index == o.core_index; }
};

/// Deduplicated, sorted by (core_index, row). Each is checked against the
/// sign pattern: >= 0 on all columns, 1 on a_i, 0 on the other core columns.
std::vector<DualGenerator> dual_generators(const PointConfiguration& cfg, const Triangulation& t);

struct SplitBox {
  std::size_t core_index = 0;
  std::vector<IntVector> vertices;        // dual generators for this index
  std::vector<IntVector> lattice_points;  // Z^n points of their convex hull, sorted
  bool matches_sign_pattern = false;      // hull points == sign-pattern points in the search box

  bool operator==(const SplitBox&) const = default;
};

struct GorensteinReport {
  IntVector a0vee;
  IntVector a0;  // sum of the core columns
  Integer kappa;
  Simplex core;
  std::vector<DualGenerator> dual_generators;
  bool generates_dual = false;  // the generators span the dual of the column cone
  bool reflexive = false;
  bool completely_split = false;
  std::vector<SplitBox> boxes;

  bool operator==(const GorensteinReport&) const = default;
};

GorensteinReport gorenstein_report(const PointConfiguration& cfg, const Triangulation& t);

struct InteriorCheck {
  bool holds = false;
  std::vector<IntVector> interior_points;  // lattice points of the interior, degree 1..bound, sorted
  std::vector<IntVector> shifted_points;   // a0 + lattice points of the cone, same range

  bool operator==(const InteriorCheck&) const = default;
};

/// interior(cone) cap Z^n == a0 + (cone cap Z^n) restricted to degrees 1..degree_bound.
/// Membership uses the dual generators of the report; a non-reflexive report gives false.
InteriorCheck interior_identity_check(const PointConfiguration& cfg, const GorensteinReport& report,
                                      long degree_bound = 3);

struct ProjectedFan {
  Simplex i0;
  std::vector<std::size_t> ray_index;  // j not in the core, one per u_j
  std::vector<IntVector> u;            // in Z^(n - kappa)
  std::vector<Simplex> maximal_cones;  // maximal simplices of T minus the core, original labels
  std::size_t dim = 0;
  bool complete = false;  // 0 is a strictly positive combination of the u_j
  bool smooth = false;    // every maximal cone is spanned by a Z-basis

  bool operator==(const ProjectedFan&) const = default;
};

/// Fan on the non-core columns of A_{I0}^{-1} A. PreconditionFailed when the
/// three conditions fail or I0 is not a maximal simplex of T.
ProjectedFan projected_fan(const PointConfiguration& cfg, const Triangulation& t, const Simplex& i0);

}  // namespace gkz
