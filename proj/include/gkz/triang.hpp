#pragma once

// Point configurations and their regular triangulations.
//
// Indices are 0-based in memory and 1-based in every printed or serialized form.
// Weights live in L^v, written in the coordinates dual to the rows of B, so the
// projection of the j-th standard basis vector is column j of B.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gkz/exactla.hpp"
#include "gkz/polycone.hpp"

namespace gkz {

using Simplex = std::vector<std::size_t>;  // strictly increasing

std::string to_string(const Simplex& s);  // "{1,2,4}"
std::uint64_t mask_of(const Simplex& s);
Simplex complement(const Simplex& s, std::size_t big_n);

/// Row vector y with y.a_i = 1 for every column, if an integral one exists.
std::optional<IntVector> solve_degree_functional(const IntMatrix& a);

class PointConfiguration {
 public:
  /// Validates rank, the degree functional and (when given) that the rows of
  /// `b` form a basis of the relation lattice. Otherwise B = kernel_basis(A).
  static PointConfiguration make(IntMatrix a, std::optional<IntVector> a0vee = std::nullopt,
                                 std::optional<IntMatrix> b = std::nullopt);

  const IntMatrix& A() const { return a_; }
  const IntVector& a0vee() const { return a0vee_; }
  const IntMatrix& B() const { return b_; }
  std::size_t n() const { return a_.rows(); }
  std::size_t N() const { return a_.cols(); }
  std::size_t codim() const { return b_.rows(); }  // N - n

  const IntVector& column(std::size_t j) const { return columns_[j]; }
  const RatVector& b(std::size_t j) const { return bvec_[j]; }

  bool independent(const Simplex& s) const;
  Integer det(const Simplex& s) const;  // |s| = n
  Integer volume(const Simplex& s) const { return abs(det(s)); }

  /// Inward facet normals of the cone over the columns.
  const std::vector<IntVector>& facet_normals() const { return facets_; }
  /// All columns indexed by s lie in a common proper face of the cone.
  bool lies_in_boundary(const Simplex& s) const;

  /// Primitive normals of the hyperplanes H_J spanned by N-n-1 of the b_j.
  const std::vector<RatVector>& wall_normals() const { return walls_; }
  bool on_wall(const RatVector& w) const;

  /// Index sets of size N-n whose b_j are independent (the complements of
  /// the full-rank simplices).
  const std::vector<Simplex>& cobases() const { return cobases_; }

  /// w = B d.
  RatVector weight_from_heights(const RatVector& d) const;

 private:
  IntMatrix a_, b_;
  IntVector a0vee_;
  std::vector<IntVector> columns_;
  std::vector<RatVector> bvec_;
  std::vector<IntVector> facets_;
  std::vector<RatVector> walls_;
  std::vector<Simplex> cobases_;
};

class Triangulation {
 public:
  Triangulation() = default;
  Triangulation(const PointConfiguration& cfg, std::vector<Simplex> maximal, RatVector weight);

  const std::vector<Simplex>& maximal() const { return maximal_; }
  const RatVector& weight() const { return weight_; }
  const Simplex& core() const { return core_; }
  const std::vector<Integer>& volumes() const { return volumes_; }
  std::size_t n() const { return n_; }
  std::size_t N() const { return big_n_; }

  bool is_simplex(const Simplex& s) const;
  bool is_simplex_mask(std::uint64_t m) const;
  /// Entry m lists T^m, the simplices with m vertices, sorted.
  std::vector<std::vector<Simplex>> simplices_by_size() const;
  bool is_unimodular() const;
  Integer volume_product() const;
  Integer total_volume() const;

  bool operator==(const Triangulation& o) const { return maximal_ == o.maximal_; }

 private:
  std::size_t n_ = 0, big_n_ = 0;
  std::vector<Simplex> maximal_;
  std::vector<std::uint64_t> masks_;
  RatVector weight_;
  Simplex core_;
  std::vector<Integer> volumes_;
};

/// Lower hull projection of conv{0, a_i / d_i}. DegenerateHeights when a
/// point lies on one of the candidate hyperplanes.
Triangulation from_heights(const PointConfiguration& cfg, const RatVector& d);

/// {I : w in C_{I*}}. WallWeight when w lies on some H_J.
Triangulation from_weight(const PointConfiguration& cfg, const RatVector& w);

/// Rebuilds a triangulation from its maximal simplices. NotRegular if no
/// weight induces exactly these simplices.
Triangulation from_simplices(const PointConfiguration& cfg, std::vector<Simplex> maximal,
                             std::uint64_t seed = 0);

/// C_T as the intersection of the simplicial cones C_{I*}.
RationalCone secondary_cone(const PointConfiguration& cfg, const Triangulation& t);

/// C_T^v written in lattice coordinates m (ell = B^t m).
RationalCone dual_secondary_cone(const PointConfiguration& cfg, const Triangulation& t);

/// Intersection of the maximal simplices, cross-checked against the sign of
/// ell_j on the rays of C_T^v. InternalInconsistency on disagreement.
Simplex core(const PointConfiguration& cfg, const Triangulation& t);

/// Generic weight B d with d a seeded random positive rational vector.
RatVector generic_weight(const PointConfiguration& cfg, std::uint64_t seed);

/// Point strictly inside a full-dimensional cone and off every H_J.
RatVector generic_interior_point(const PointConfiguration& cfg, const RationalCone& cone, std::uint64_t seed);

struct Enumeration {
  std::vector<Triangulation> triangulations;  // sorted by maximal simplices
  std::vector<std::pair<std::size_t, std::size_t>> adjacency;  // i < j, sorted
  std::uint64_t seed = 0;
  bool connected() const;
};

/// All regular triangulations by wall crossing in the secondary fan.
Enumeration enumerate_regular(const PointConfiguration& cfg, std::uint64_t seed = 0);

/// Normalized volume of conv(A), from one triangulation.
Integer total_volume(const PointConfiguration& cfg, std::uint64_t seed = 0);

}  // namespace gkz
