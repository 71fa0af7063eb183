#pragma once

// The graded ring R_{A,T}: polynomials in C_1..C_N modulo the Stanley-Reisner
// monomials of T and the linear forms sum_j a_ij C_j, over Q.

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gkz/exactla.hpp"
#include "gkz/triang.hpp"

namespace gkz {

using Monomial = std::vector<int>;  // exponent vector of length N

int degree(const Monomial& m);
std::string monomial_name(const Monomial& m);  // "1", "c4", "c1^2*c5"

/// Rational coordinates with respect to the monomial basis of an algebra.
struct AlgebraElement {
  RatVector coords;

  bool is_zero() const { return gkz::is_zero(coords); }
  bool operator==(const AlgebraElement& o) const { return coords == o.coords; }
};

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator-(const AlgebraElement& a);
AlgebraElement operator*(const Rational& s, const AlgebraElement& a);

class GradedAlgebra {
 public:
  /// Degree-by-degree construction. RankMismatch if the total dimension is not
  /// #T^n or the degree-n part does not vanish.
  static std::shared_ptr<const GradedAlgebra> build(const PointConfiguration& cfg, const Triangulation& t);

  std::size_t n() const { return n_; }
  std::size_t N() const { return big_n_; }
  std::size_t dim() const { return basis_.size(); }
  const Triangulation& triangulation() const { return tri_; }
  const PointConfiguration& config() const { return cfg_; }

  /// Standard monomials of degree k, k = 0..n-1.
  const std::vector<std::vector<Monomial>>& degree_bases() const { return degree_bases_; }
  std::vector<std::size_t> dims_per_degree() const;
  const Monomial& basis_monomial(std::size_t i) const { return basis_[i]; }
  std::size_t basis_degree(std::size_t i) const { return static_cast<std::size_t>(degree(basis_[i])); }
  std::string basis_name(std::size_t i) const { return monomial_name(basis_[i]); }

  AlgebraElement zero() const { return {RatVector(dim())}; }
  AlgebraElement one() const;
  AlgebraElement generator(std::size_t j) const;  // c_j, 0-based
  AlgebraElement monomial(const Monomial& m) const;
  AlgebraElement scalar(const Rational& s) const { return s * one(); }

  AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y) const;
  AlgebraElement power(const AlgebraElement& x, unsigned k) const;
  /// Matrix of y -> x*y; column q is x times the q-th basis element.
  RatMatrix mult_matrix(const AlgebraElement& x) const;
  /// Product of two basis monomials, as coordinates.
  const RatVector& basis_product(std::size_t p, std::size_t q) const { return table_[p][q]; }

  /// Coordinates of x restricted to degree k.
  RatVector homogeneous_part(const AlgebraElement& x, std::size_t k) const;

  std::string to_string(const AlgebraElement& x) const;

 private:
  std::size_t n_ = 0, big_n_ = 0;
  PointConfiguration cfg_;
  Triangulation tri_;
  std::vector<std::vector<Monomial>> degree_bases_;
  std::vector<Monomial> basis_;
  std::vector<std::size_t> offsets_;
  std::map<Monomial, RatVector> normal_form_;  // every degree < n monomial with simplex support
  std::vector<std::vector<RatVector>> table_;
};

using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

/// c_I = prod_{i in I^-} c_i where xi = sum_{i in I} x_i a_i and I^- = {x_i < 0}.
/// DegenerateXi if xi lies in the span of some n-1 columns.
std::vector<std::pair<Simplex, AlgebraElement>> distinguished_basis(const PointConfiguration& cfg,
                                                                    const GradedAlgebra& r, const RatVector& xi);

struct PoincareCheck {
  std::vector<Integer> ring_side;     // dim R^(k), k = 0..n
  std::vector<Integer> simplex_side;  // coefficients of sum_m #T^m t^m (1-t)^(n-m)
  bool equal = false;
};
PoincareCheck poincare_check(const GradedAlgebra& r);

AlgebraElement core_element(const GradedAlgebra& r);

/// {y : x y = 0} and x R, as subspaces of coordinate space.
Subspace annihilator(const GradedAlgebra& r, const AlgebraElement& x);
Subspace ideal(const GradedAlgebra& r, const AlgebraElement& x);
bool in_subspace(const Subspace& s, const AlgebraElement& x);

/// Multiplication by x from R/Ann(x) onto xR: dimensions and injectivity.
struct MultiplicationIso {
  std::size_t quotient_dim = 0;
  std::size_t image_dim = 0;
  bool injective = false;
};
MultiplicationIso multiplication_iso(const GradedAlgebra& r, const AlgebraElement& x);

/// sum_{k<n} x^k / k!. NotNilpotent if x has a nonzero constant term.
AlgebraElement exp_element(const GradedAlgebra& r, const AlgebraElement& x);

/// Relations in degrees 2..n among the degree-1 standard monomials, each as a
/// map monomial-in-generators -> coefficient.
struct Relation {
  std::vector<std::pair<Monomial, Rational>> terms;
  std::string text;
};
std::vector<Relation> relations_in_reduced_generators(const GradedAlgebra& r);

}  // namespace gkz
