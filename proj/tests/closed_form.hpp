#pragma once

// The T1, beta = -a4 series of the example in closed form, coded straight from
// the Pochhammer product. Used to cross-check gamma_coefficient.

#include "fixtures.hpp"
#include "gkz/gseries.hpp"

namespace closed_form {

using namespace gkz;

// u^{-1} by an exact linear solve against the multiplication matrix.
inline AlgebraElement inverse(const GradedAlgebra& r, const AlgebraElement& u) {
  auto y = solve(r.mult_matrix(u), r.one().coords);
  if (!y) throw std::runtime_error("not a unit");
  return {*y};
}

// (x)_m = x (x+1) ... (x+m-1)
inline AlgebraElement rising(const GradedAlgebra& r, const AlgebraElement& x, long m) {
  AlgebraElement out = r.one();
  for (long k = 0; k < m; ++k) out = r.mul(out, x + r.scalar(Rational(k)));
  return out;
}

// Coefficient at T_1^p T_2^q T_5^r, written in c1, c2, c5 only, with the
// lower Pochhammer arguments shifted by one.
inline AlgebraElement coefficient(const GradedAlgebra& r, long p, long q, long s5) {
  const AlgebraElement c1 = r.generator(0), c2 = r.generator(1), c5 = r.generator(4), one = r.one();
  const AlgebraElement s = Rational(2) * c1 + Rational(3) * c2 + Rational(2) * c5;
  AlgebraElement num = r.mul(-s, rising(r, s + one, 2 * p + 3 * q + 2 * s5));
  if (q % 2 != 0) num = -num;
  AlgebraElement den = r.mul(rising(r, c1 + one, p), rising(r, c2 + one, q));
  den = r.mul(den, rising(r, c5 + one, s5));
  den = r.mul(den, rising(r, c1 + c2 + one, p + q));
  den = r.mul(den, rising(r, c2 + c5 + one, q + s5));
  return r.mul(num, inverse(r, den));
}

// lambda = -e_4 + p b_1 + q b_2 + r b_3
inline Exponent lambda(long p, long q, long s5) {
  const IntMatrix& b = fixture::example().B();
  Exponent l(6);
  l[3] = -1;
  for (std::size_t j = 0; j < 6; ++j) l[j] += p * b(0, j) + q * b(1, j) + s5 * b(2, j);
  return l;
}

}  // namespace closed_form
