#pragma once

// Ring-valued Gamma-series. A term q * v^lambda * v^c is stored as (lambda, q);
// the factor v^c = exp(sum_j c_j log v_j) is implicit.

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "gkz/srring.hpp"

namespace gkz {

using Exponent = IntVector;  // lambda in Z^N

Integer l1_norm(const Exponent& v);

struct GammaTerm {
  Exponent lambda;
  AlgebraElement coeff;
};

/// Formal sum of terms q * v^lambda * v^c keyed by lambda. Zero terms are never stored.
using FormalSeries = std::map<Exponent, AlgebraElement>;

class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  TruncatedSeries(AlgebraPtr ring, IntVector beta, IntVector gamma0, long order_bound, std::vector<GammaTerm> terms);

  const AlgebraPtr& ring() const { return ring_; }
  const IntVector& beta() const { return beta_; }
  const IntVector& gamma0() const { return gamma0_; }
  long order_bound() const { return order_bound_; }
  /// Sorted by (||lambda||, lambda).
  const std::vector<GammaTerm>& terms() const { return terms_; }
  const GammaTerm* find(const Exponent& lambda) const;
  FormalSeries formal() const;

  /// Same beta, bound and terms; gamma0 is a representative and is ignored.
  bool operator==(const TruncatedSeries& o) const;

 private:
  AlgebraPtr ring_;
  IntVector beta_, gamma0_;
  long order_bound_ = 0;
  std::vector<GammaTerm> terms_;
};

/// Q_lambda(c). Returns zero at once when {lambda_i < 0} is not a simplex.
AlgebraElement gamma_coefficient(const GradedAlgebra& r, const Exponent& lambda);
/// Same value from the literal product of all factors, with no shortcut.
AlgebraElement gamma_coefficient_slow(const GradedAlgebra& r, const Exponent& lambda);

/// {lambda : A lambda = beta, ||lambda|| <= L, {lambda_i < 0} a simplex}, sorted
/// by (||lambda||, lambda).
std::vector<Exponent> enumerate_support(const PointConfiguration& cfg, const Triangulation& t, const IntVector& beta,
                                        long order_bound);

TruncatedSeries build_series(const AlgebraPtr& r, const IntVector& beta, long order_bound);

/// (-beta_i + sum_j a_ij v_j d/dv_j) applied to the series, term by term.
FormalSeries apply_euler(const TruncatedSeries& s, std::size_t i);

struct BoxResidual {
  FormalSeries residual;
  Integer interior_bound;     // residual terms with ||lambda|| <= this are exact
  bool interior_zero = true;  // no residual term within interior_bound
};
/// prod_{l_j>0} d_j^{l_j} - prod_{l_j<0} d_j^{-l_j}. NotInLattice unless A l = 0.
BoxResidual apply_box(const TruncatedSeries& s, const Exponent& ell);

/// d/dv_i of the series as the series for beta - a_i, truncated at L - 1.
TruncatedSeries differentiate(const TruncatedSeries& s, std::size_t i);

/// Maximal simplex I with lambda - p_I(lambda) in C_T^v, if any.
std::optional<Simplex> support_witness(const PointConfiguration& cfg, const Triangulation& t,
                                       const RationalCone& dual_cone, const Exponent& lambda);

/// Nonzero coefficients K_m of the expansion of
/// prod_{l_j<0} prod_{k=0}^{-l_j-1} (k + x_j) / prod_{l_j>0} prod_{k=1}^{l_j} (k - x_j)
/// for ||m|| <= max_degree.
std::map<std::vector<int>, Rational> qx_coefficients(const Exponent& lambda, int max_degree);

/// N^||lambda|| * 2^(||m||+N) * N! * max(1, N - deg lambda)!
Integer schat_bound(std::size_t big_n, const Exponent& lambda, int m_norm);

/// Q_lambda(c) rebuilt from the K_m: (-1)^P sum_m (-1)^||m|| K_m c^m, P = sum_{l_j<0} |l_j|.
AlgebraElement gamma_from_qx(const GradedAlgebra& r, const Exponent& lambda);

// ---- numeric evaluation ----

enum class Precision { Double, Extended };
int precision_bits(Precision p);

struct ComplexRingElement {
  std::vector<std::complex<long double>> coords;
  int precision_bits = 53;
  long double tail_estimate = 0;
};

using ComplexVector = std::vector<std::complex<long double>>;

/// Domain test on p(Im z) = B Im z: every extreme ray and every pairwise ray
/// sum l of C_T^v (in m coordinates, ell = B^t m) satisfies
/// p.m > (log N / 2 pi) ||B^t m||_1.
bool in_certified_domain(const PointConfiguration& cfg, const Triangulation& t, const std::vector<long double>& imag);

/// Im z = s * B^t (B B^t)^{-1} w with w the weight of T, s doubled from 1/8
/// until the domain test passes, then multiplied by `depth`.
std::vector<long double> deep_imaginary_part(const PointConfiguration& cfg, const Triangulation& t,
                                             long double depth = 1);

/// Psi(z) = sum Q_lambda e^{2 pi i z.lambda} * exp(2 pi i sum z_j c_j).
/// OutsideDomain when check_domain and the domain test fails.
ComplexRingElement evaluate(const TruncatedSeries& s, const ComplexVector& z, bool check_domain = true,
                            Precision p = Precision::Double);

/// exp(2 pi i sum_j mu_j c_j) in R (x) C.
ComplexRingElement exp_linear(const GradedAlgebra& r, const ComplexVector& mu, Precision p = Precision::Double);

ComplexRingElement multiply(const GradedAlgebra& r, const ComplexRingElement& x, const ComplexRingElement& y);

/// z -> sum_k F_k * evaluate(s, z)_k.
std::function<std::complex<long double>(const ComplexVector&)> functional_probe(const TruncatedSeries& s,
                                                                                 std::vector<std::complex<long double>> f,
                                                                                 bool check_domain = true);

}  // namespace gkz
