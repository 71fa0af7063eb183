#pragma once

// Rational polyhedral cones via the double description method, plus sign
// vectors of central hyperplane arrangements.

#include <optional>
#include <string>
#include <vector>

#include "gkz/exactla.hpp"

namespace gkz {

/// Extreme rays of a cone plus a basis of its lineality space, all primitive.
/// Lineality rows are in RREF order with first nonzero entry positive; rays are
/// taken modulo the lineality space (orthogonal complement) and sorted.
struct RayDecomposition {
  std::vector<IntVector> rays;
  std::vector<IntVector> lineality;
};

/// Generators of {x in Q^dim : h.x >= 0 for every h}.
RayDecomposition double_description(std::size_t dim, const std::vector<RatVector>& inequalities);

/// Point x with h.x > 0 for every h, when one exists. Zero inequalities are
/// never strictly satisfiable.
std::optional<RatVector> strictly_feasible(std::size_t dim, const std::vector<RatVector>& inequalities);

/// A cone given by generators, inequalities, or both. The minimal form of each
/// side is computed on demand by completed().
class RationalCone {
 public:
  RationalCone() = default;

  static RationalCone from_generators(std::size_t dim, std::vector<RatVector> rays,
                                      std::vector<RatVector> lineality = {});
  static RationalCone from_inequalities(std::size_t dim, std::vector<RatVector> inequalities,
                                        std::vector<RatVector> equations = {});

  std::size_t ambient_dim() const { return dim_; }
  bool has_generators() const { return has_gens_; }
  bool has_inequalities() const { return has_ineqs_; }
  bool is_complete() const { return complete_; }

  /// Both sides present and reduced to extreme rays / facets.
  RationalCone completed() const;

  // Raw sides. On a completed cone: rays and lineality are minimal, facets
  // are the facet normals and equations span the orthogonal of the linear hull.
  const std::vector<RatVector>& rays() const { return rays_; }
  const std::vector<RatVector>& lineality() const { return lineality_; }
  const std::vector<RatVector>& facets() const { return facets_; }
  const std::vector<RatVector>& equations() const { return equations_; }

  /// Generators with lineality expanded to +/- pairs.
  std::vector<RatVector> generator_list() const;
  /// Inequalities with equations expanded to +/- pairs.
  std::vector<RatVector> inequality_list() const;

  std::size_t dimension() const;  // of the linear hull
  bool is_full_dimensional() const { return dimension() == dim_; }

  bool operator==(const RationalCone& o) const;

 private:
  std::size_t dim_ = 0;
  bool has_gens_ = false;
  bool has_ineqs_ = false;
  bool complete_ = false;
  std::vector<RatVector> rays_, lineality_, facets_, equations_;
};

/// Dual cone {y : y.x >= 0 for x in C}, with both descriptions.
RationalCone dualize(const RationalCone& cone);

/// x in C. Exact; uses the inequality side after completion.
bool contains(const RationalCone& cone, const RatVector& x);

/// x in the relative interior of C.
bool contains_in_interior(const RationalCone& cone, const RatVector& x);

RayDecomposition extreme_rays(const RationalCone& cone);

/// Some point in the relative interior (sum of generators).
RatVector relative_interior_point(const RationalCone& cone);

/// True when the interiors of two full-dimensional cones meet.
bool interiors_intersect(const RationalCone& a, const RationalCone& b);

enum class Sign : signed char { Minus = -1, Zero = 0, Plus = 1 };
using SignVector = std::vector<Sign>;

Sign sign_of(const Rational& q);
std::string to_string(const SignVector& s);  // e.g. "+0-"
SignVector parse_sign_vector(const std::string& s);
SignVector negate(const SignVector& s);

struct Chamber {
  SignVector signs;
  RatVector witness;  // point strictly inside the chamber
};

/// Sign vectors (sign(b_j.x))_j of all open chambers of the arrangement
/// {b_j.x = 0}, sorted by their string form. A zero vector b_j
/// contributes the entry 0 everywhere.
std::vector<Chamber> chambers(const std::vector<RatVector>& vectors);
std::vector<SignVector> chamber_sign_vectors(const std::vector<RatVector>& vectors);

}  // namespace gkz
