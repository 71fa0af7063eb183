#include "gkz/gseries.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace gkz {

namespace {

std::uint64_t negative_mask(const Exponent& lambda) {
  std::uint64_t m = 0;
  for (std::size_t j = 0; j < lambda.size(); ++j)
    if (lambda[j] < 0) m |= std::uint64_t(1) << j;
  return m;
}

void check_length(const GradedAlgebra& r, const Exponent& lambda) {
  if (lambda.size() != r.N()) throw Error(ErrorKind::DimensionMismatch, "exponent length");
}

long to_long(const Integer& x) {
  if (!x.fits_slong_p()) throw Error(ErrorKind::DimensionMismatch, "exponent entry out of range");
  return x.get_si();
}

// Univariate polynomial, coefficients of x^0..x^(deg-1).
using Poly = std::vector<Rational>;

Poly poly_mul(const Poly& a, const Poly& b, std::size_t deg) {
  Poly out(deg);
  for (std::size_t i = 0; i < a.size() && i < deg; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < deg; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// (x + s)^{-1} = (1/s) sum_t (-x/s)^t, truncated.
Poly inverse_linear(const Rational& s, std::size_t deg) {
  Poly out(deg);
  Rational term = 1 / s;
  for (std::size_t t = 0; t < deg; ++t) {
    out[t] = term;
    term *= -1 / s;
  }
  return out;
}

// The factor of Q_lambda that involves c_j, as a polynomial in c_j.
Poly gamma_factor(long l, std::size_t deg) {
  Poly p(deg);
  if (deg == 0) return p;
  p[0] = 1;
  if (l < 0) {
    for (long k = 0; k < -l; ++k) p = poly_mul(p, Poly{Rational(-k), Rational(1)}, deg);
  } else {
    for (long k = 1; k <= l; ++k) p = poly_mul(p, inverse_linear(Rational(k), deg), deg);
  }
  return p;
}

AlgebraElement eval_poly(const GradedAlgebra& r, const Poly& p, const AlgebraElement& x) {
  AlgebraElement out = r.zero(), pw = r.one();
  for (std::size_t t = 0; t < p.size(); ++t) {
    if (p[t] != 0) out = out + p[t] * pw;
    pw = r.mul(pw, x);
  }
  return out;
}

FormalSeries derivative(const GradedAlgebra& r, const FormalSeries& f, std::size_t j) {
  const AlgebraElement cj = r.generator(j);
  FormalSeries out;
  for (const auto& [lambda, q] : f) {
    AlgebraElement nq = Rational(lambda[j]) * q + r.mul(cj, q);
    if (nq.is_zero()) continue;
    Exponent key = lambda;
    key[j] -= 1;
    auto [it, fresh] = out.emplace(key, nq);
    if (!fresh) it->second = it->second + nq;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

std::vector<IntVector> domain_test_vectors(const PointConfiguration& cfg, const Triangulation& t) {
  RayDecomposition rd = extreme_rays(dual_secondary_cone(cfg, t));
  std::vector<IntVector> out = rd.rays;
  for (std::size_t a = 0; a < rd.rays.size(); ++a)
    for (std::size_t b = a + 1; b < rd.rays.size(); ++b) {
      IntVector s(rd.rays[a].size());
      for (std::size_t k = 0; k < s.size(); ++k) s[k] = rd.rays[a][k] + rd.rays[b][k];
      out.push_back(std::move(s));
    }
  return out;
}

bool domain_ok(const PointConfiguration& cfg, const std::vector<IntVector>& tests, const std::vector<long double>& imag) {
  if (imag.size() != cfg.N()) throw Error(ErrorKind::DimensionMismatch, "imaginary part length");
  const long double c = std::log(static_cast<long double>(cfg.N())) / (2 * std::numbers::pi_v<long double>);
  std::vector<long double> p(cfg.codim(), 0);
  for (std::size_t k = 0; k < cfg.codim(); ++k)
    for (std::size_t j = 0; j < cfg.N(); ++j) p[k] += cfg.B()(k, j).get_d() * imag[j];
  for (const auto& m : tests) {
    long double pairing = 0, norm = 0;
    for (std::size_t k = 0; k < m.size(); ++k) pairing += p[k] * m[k].get_d();
    for (std::size_t j = 0; j < cfg.N(); ++j) {
      Integer lj = 0;
      for (std::size_t k = 0; k < m.size(); ++k) lj += cfg.B()(k, j) * m[k];
      norm += Integer(abs(lj)).get_d();
    }
    if (!(pairing > c * norm)) return false;
  }
  return true;
}

long double to_ld(const Rational& q) {
  mpf_class f(q, 128);
  const double hi = f.get_d();
  f -= hi;
  return static_cast<long double>(hi) + static_cast<long double>(f.get_d());
}

template <class T>
struct ComplexAlgebra {
  using C = std::complex<T>;
  std::size_t dim = 0, n = 0;
  std::vector<std::vector<std::vector<std::pair<std::size_t, T>>>> table;

  explicit ComplexAlgebra(const GradedAlgebra& r) : dim(r.dim()), n(r.n()), table(dim, std::vector<std::vector<std::pair<std::size_t, T>>>(dim)) {
    for (std::size_t p = 0; p < dim; ++p)
      for (std::size_t q = 0; q < dim; ++q) {
        const RatVector& v = r.basis_product(p, q);
        for (std::size_t i = 0; i < dim; ++i)
          if (v[i] != 0) table[p][q].emplace_back(i, static_cast<T>(to_ld(v[i])));
      }
  }

  std::vector<C> mul(const std::vector<C>& x, const std::vector<C>& y) const {
    std::vector<C> out(dim);
    for (std::size_t p = 0; p < dim; ++p) {
      if (x[p] == C(0)) continue;
      for (std::size_t q = 0; q < dim; ++q) {
        if (y[q] == C(0)) continue;
        const C s = x[p] * y[q];
        for (const auto& [i, t] : table[p][q]) out[i] += s * t;
      }
    }
    return out;
  }

  std::vector<C> exp_nilpotent(const std::vector<C>& x) const {
    std::vector<C> out(dim), term(dim);
    term[0] = out[0] = 1;
    for (std::size_t k = 1; k < n; ++k) {
      term = mul(term, x);
      for (auto& t : term) t /= static_cast<T>(k);
      for (std::size_t i = 0; i < dim; ++i) out[i] += term[i];
    }
    return out;
  }
};

template <class T>
std::vector<std::complex<T>> linear_form(const GradedAlgebra& r, const ComplexVector& mu) {
  using C = std::complex<T>;
  if (mu.size() != r.N()) throw Error(ErrorKind::DimensionMismatch, "complex vector length");
  const C two_pi_i(0, 2 * std::numbers::pi_v<T>);
  std::vector<C> x(r.dim());
  for (std::size_t j = 0; j < r.N(); ++j) {
    const AlgebraElement cj = r.generator(j);
    const C s = two_pi_i * C(static_cast<T>(mu[j].real()), static_cast<T>(mu[j].imag()));
    for (std::size_t i = 0; i < r.dim(); ++i)
      if (cj.coords[i] != 0) x[i] += s * static_cast<T>(to_ld(cj.coords[i]));
  }
  return x;
}

template <class T>
ComplexRingElement widen(const std::vector<std::complex<T>>& v, int bits, long double tail) {
  ComplexRingElement out;
  out.precision_bits = bits;
  out.tail_estimate = tail;
  for (const auto& x : v) {
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
      throw Error(ErrorKind::OutsideDomain, "evaluation overflowed");
    out.coords.emplace_back(x.real(), x.imag());
  }
  return out;
}

template <class T>
ComplexRingElement evaluate_impl(const TruncatedSeries& s, const ComplexVector& z, int bits) {
  using C = std::complex<T>;
  const GradedAlgebra& r = *s.ring();
  const C two_pi_i(0, 2 * std::numbers::pi_v<T>);
  std::vector<C> acc(r.dim());
  Integer top = 0;
  for (const auto& term : s.terms()) top = std::max(top, l1_norm(term.lambda));
  long double tail = 0;
  for (const auto& term : s.terms()) {
    C arg = 0;
    for (std::size_t j = 0; j < z.size(); ++j)
      arg += C(static_cast<T>(z[j].real()), static_cast<T>(z[j].imag())) * static_cast<T>(term.lambda[j].get_d());
    const C phase = std::exp(two_pi_i * arg);
    T biggest = 0;
    for (std::size_t i = 0; i < r.dim(); ++i) {
      if (term.coeff.coords[i] == 0) continue;
      const T q = static_cast<T>(to_ld(term.coeff.coords[i]));
      acc[i] += q * phase;
      biggest = std::max(biggest, std::abs(q));
    }
    if (l1_norm(term.lambda) == top) tail += static_cast<long double>(biggest * std::abs(phase));
  }
  ComplexAlgebra<T> ca(r);
  return widen(ca.mul(acc, ca.exp_nilpotent(linear_form<T>(r, z))), bits, tail);
}

}  // namespace

Integer l1_norm(const Exponent& v) {
  Integer s = 0;
  for (const auto& x : v) s += abs(x);
  return s;
}

TruncatedSeries::TruncatedSeries(AlgebraPtr ring, IntVector beta, IntVector gamma0, long order_bound,
                                 std::vector<GammaTerm> terms)
    : ring_(std::move(ring)),
      beta_(std::move(beta)),
      gamma0_(std::move(gamma0)),
      order_bound_(order_bound),
      terms_(std::move(terms)) {
  std::sort(terms_.begin(), terms_.end(), [](const GammaTerm& a, const GammaTerm& b) {
    const Integer na = l1_norm(a.lambda), nb = l1_norm(b.lambda);
    if (na != nb) return na < nb;
    return a.lambda < b.lambda;
  });
}

const GammaTerm* TruncatedSeries::find(const Exponent& lambda) const {
  for (const auto& t : terms_)
    if (t.lambda == lambda) return &t;
  return nullptr;
}

FormalSeries TruncatedSeries::formal() const {
  FormalSeries f;
  for (const auto& t : terms_) f.emplace(t.lambda, t.coeff);
  return f;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
  if (beta_ != o.beta_ || order_bound_ != o.order_bound_ || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].lambda != o.terms_[i].lambda || !(terms_[i].coeff == o.terms_[i].coeff)) return false;
  return true;
}

AlgebraElement gamma_coefficient(const GradedAlgebra& r, const Exponent& lambda) {
  check_length(r, lambda);
  if (!r.triangulation().is_simplex_mask(negative_mask(lambda))) return r.zero();
  AlgebraElement out = r.one();
  for (std::size_t j = 0; j < r.N(); ++j) {
    const long l = to_long(lambda[j]);
    if (l == 0) continue;
    out = r.mul(out, eval_poly(r, gamma_factor(l, r.n()), r.generator(j)));
  }
  return out;
}

AlgebraElement gamma_coefficient_slow(const GradedAlgebra& r, const Exponent& lambda) {
  check_length(r, lambda);
  AlgebraElement out = r.one();
  for (std::size_t j = 0; j < r.N(); ++j) {
    const long l = to_long(lambda[j]);
    const AlgebraElement cj = r.generator(j);
    for (long k = 0; k < -l; ++k) out = r.mul(out, cj - r.scalar(Rational(k)));
    for (long k = 1; k <= l; ++k) {
      // (c_j + k)^{-1} by the geometric series in -c_j/k
      AlgebraElement inv = r.zero(), term = r.scalar(Rational(1, k));
      const AlgebraElement step = Rational(-1, k) * cj;
      for (std::size_t t = 0; t < r.n(); ++t) {
        inv = inv + term;
        term = r.mul(term, step);
      }
      out = r.mul(out, inv);
    }
  }
  return out;
}

std::vector<Exponent> enumerate_support(const PointConfiguration& cfg, const Triangulation& t, const IntVector& beta,
                                        long order_bound) {
  if (beta.size() != cfg.n()) throw Error(ErrorKind::DimensionMismatch, "beta length");
  const IntVector g0 = solve_particular(cfg.A(), beta);
  const std::size_t k = cfg.codim(), big_n = cfg.N();
  if (order_bound < 0) return {};

  // |m_i| <= sum_{j in J} |G_ij| (|lambda_j| + |g0_j|) with G = (B_J^t)^{-1}
  std::vector<Integer> bound(k);
  std::vector<bool> have(k, false);
  for (const auto& cob : cfg.cobases()) {
    IntMatrix bjt = cfg.B().select_columns(cob).transpose();
    RatMatrix g = square_inverse(bjt).inverse;
    for (std::size_t i = 0; i < k; ++i) {
      Rational mx = 0, off = 0;
      for (std::size_t c = 0; c < k; ++c) {
        const Rational a = abs(g(i, c));
        mx = std::max(mx, a);
        off += a * abs(g0[cob[c]]);
      }
      Rational b = mx * order_bound + off;
      Integer fl = b.get_num() / b.get_den();
      if (!have[i] || fl < bound[i]) {
        bound[i] = fl;
        have[i] = true;
      }
    }
  }

  std::vector<Exponent> out;
  std::vector<Integer> m(k);
  for (std::size_t i = 0; i < k; ++i) m[i] = -bound[i];
  const Integer limit = order_bound;
  while (true) {
    Exponent lambda = g0;
    for (std::size_t i = 0; i < k; ++i)
      if (m[i] != 0)
        for (std::size_t j = 0; j < big_n; ++j) lambda[j] += m[i] * cfg.B()(i, j);
    if (l1_norm(lambda) <= limit && t.is_simplex_mask(negative_mask(lambda))) out.push_back(std::move(lambda));
    std::size_t i = 0;
    while (i < k && m[i] == bound[i]) {
      m[i] = -bound[i];
      ++i;
    }
    if (i == k) break;
    ++m[i];
  }
  std::sort(out.begin(), out.end(), [](const Exponent& a, const Exponent& b) {
    const Integer na = l1_norm(a), nb = l1_norm(b);
    if (na != nb) return na < nb;
    return a < b;
  });
  return out;
}

TruncatedSeries build_series(const AlgebraPtr& r, const IntVector& beta, long order_bound) {
  const auto& cfg = r->config();
  std::vector<GammaTerm> terms;
  for (auto& lambda : enumerate_support(cfg, r->triangulation(), beta, order_bound)) {
    AlgebraElement q = gamma_coefficient(*r, lambda);
    if (!q.is_zero()) terms.push_back({std::move(lambda), std::move(q)});
  }
  return TruncatedSeries(r, beta, solve_particular(cfg.A(), beta), order_bound, std::move(terms));
}

FormalSeries apply_euler(const TruncatedSeries& s, std::size_t i) {
  const GradedAlgebra& r = *s.ring();
  const auto& a = r.config().A();
  if (i >= r.n()) throw Error(ErrorKind::DimensionMismatch, "Euler operator index");
  FormalSeries out;
  for (const auto& t : s.terms()) {
    AlgebraElement res = Rational(-s.beta()[i]) * t.coeff;
    for (std::size_t j = 0; j < r.N(); ++j) {
      if (a(i, j) == 0) continue;
      // v_j d/dv_j : q v^lambda v^c -> (lambda_j + c_j) q v^lambda v^c
      res = res + Rational(a(i, j)) * (Rational(t.lambda[j]) * t.coeff + r.mul(r.generator(j), t.coeff));
    }
    if (!res.is_zero()) out.emplace(t.lambda, std::move(res));
  }
  return out;
}

BoxResidual apply_box(const TruncatedSeries& s, const Exponent& ell) {
  const GradedAlgebra& r = *s.ring();
  const auto& cfg = r.config();
  if (ell.size() != r.N() || !is_zero(cfg.A() * ell))
    throw Error(ErrorKind::NotInLattice, "box operator needs A l = 0");
  FormalSeries plus = s.formal(), minus = plus;
  for (std::size_t j = 0; j < r.N(); ++j) {
    for (Integer k = 0; k < ell[j]; ++k) plus = derivative(r, plus, j);
    for (Integer k = 0; k < -ell[j]; ++k) minus = derivative(r, minus, j);
  }
  BoxResidual out;
  out.residual = std::move(plus);
  for (auto& [lambda, q] : minus) {
    auto [it, fresh] = out.residual.emplace(lambda, -q);
    if (!fresh) it->second = it->second - q;
  }
  std::erase_if(out.residual, [](const auto& kv) { return kv.second.is_zero(); });
  out.interior_bound = Integer(s.order_bound()) - l1_norm(ell) / 2;
  for (const auto& kv : out.residual)
    if (l1_norm(kv.first) <= out.interior_bound) out.interior_zero = false;
  return out;
}

TruncatedSeries differentiate(const TruncatedSeries& s, std::size_t i) {
  const GradedAlgebra& r = *s.ring();
  if (i >= r.N()) throw Error(ErrorKind::DimensionMismatch, "derivative index");
  const long bound = s.order_bound() - 1;
  std::vector<GammaTerm> terms;
  for (auto& [lambda, q] : derivative(r, s.formal(), i))
    if (l1_norm(lambda) <= bound) terms.push_back({lambda, q});
  IntVector beta = s.beta(), g0 = s.gamma0();
  for (std::size_t k = 0; k < r.n(); ++k) beta[k] -= r.config().A()(k, i);
  if (!g0.empty()) g0[i] -= 1;
  return TruncatedSeries(s.ring(), std::move(beta), std::move(g0), bound, std::move(terms));
}

std::optional<Simplex> support_witness(const PointConfiguration& cfg, const Triangulation& t,
                                       const RationalCone& dual_cone, const Exponent& lambda) {
  const RatVector lam = to_rational(lambda);
  const RatVector image = to_rational(cfg.A()) * lam;
  const RatMatrix bt = to_rational(cfg.B()).transpose();
  for (const auto& s : t.maximal()) {
    const RatMatrix inv = square_inverse(cfg.A().select_columns(s)).inverse;
    const RatVector coords = inv * image;
    RatVector ell = lam;
    for (std::size_t k = 0; k < s.size(); ++k) ell[s[k]] -= coords[k];
    auto m = solve(bt, ell);
    if (!m) throw Error(ErrorKind::InternalInconsistency, "lambda - p_I(lambda) is not a relation");
    if (contains(dual_cone, *m)) return s;
  }
  return std::nullopt;
}

std::map<std::vector<int>, Rational> qx_coefficients(const Exponent& lambda, int max_degree) {
  const std::size_t deg = static_cast<std::size_t>(std::max(max_degree, -1) + 1);
  std::vector<Poly> factors;
  for (const auto& x : lambda) {
    const long l = to_long(x);
    Poly p(deg);
    if (deg > 0) p[0] = 1;
    if (l < 0) {
      for (long k = 0; k < -l; ++k) p = poly_mul(p, Poly{Rational(k), Rational(1)}, deg);
    } else {
      // (k - x)^{-1} = (1/k) sum_t (x/k)^t
      for (long k = 1; k <= l; ++k) {
        Poly inv(deg);
        Rational term = Rational(1, k);
        for (std::size_t t = 0; t < deg; ++t) {
          inv[t] = term;
          term /= k;
        }
        p = poly_mul(p, inv, deg);
      }
    }
    factors.push_back(std::move(p));
  }
  std::map<std::vector<int>, Rational> out;
  std::vector<int> m(lambda.size(), 0);
  auto rec = [&](auto&& self, std::size_t j, int left, const Rational& acc) -> void {
    if (j == lambda.size()) {
      out[m] = acc;
      return;
    }
    for (int e = 0; e <= left; ++e) {
      if (factors[j][e] == 0) continue;
      m[j] = e;
      self(self, j + 1, left - e, acc * factors[j][e]);
    }
    m[j] = 0;
  };
  if (deg > 0) rec(rec, 0, max_degree, Rational(1));
  return out;
}

Integer schat_bound(std::size_t big_n, const Exponent& lambda, int m_norm) {
  Integer deg = 0;
  for (const auto& x : lambda) deg += x;
  Integer out, f;
  mpz_pow_ui(out.get_mpz_t(), Integer(big_n).get_mpz_t(), to_long(l1_norm(lambda)));
  out <<= static_cast<mp_bitcnt_t>(m_norm + static_cast<int>(big_n));
  mpz_fac_ui(f.get_mpz_t(), big_n);
  out *= f;
  Integer last = Integer(big_n) - deg;
  if (last < 1) last = 1;
  mpz_fac_ui(f.get_mpz_t(), last.get_ui());
  return out * f;
}

AlgebraElement gamma_from_qx(const GradedAlgebra& r, const Exponent& lambda) {
  check_length(r, lambda);
  Integer p = 0;
  for (const auto& x : lambda)
    if (x < 0) p -= x;
  AlgebraElement out = r.zero();
  for (const auto& [m, k] : qx_coefficients(lambda, static_cast<int>(r.n()))) {
    const Rational sign = degree(m) % 2 == 0 ? 1 : -1;
    out = out + (sign * k) * r.monomial(m);
  }
  return p % 2 == 0 ? out : -out;
}

int precision_bits(Precision p) {
  return p == Precision::Double ? std::numeric_limits<double>::digits : std::numeric_limits<long double>::digits;
}

bool in_certified_domain(const PointConfiguration& cfg, const Triangulation& t, const std::vector<long double>& imag) {
  return domain_ok(cfg, domain_test_vectors(cfg, t), imag);
}

std::vector<long double> deep_imaginary_part(const PointConfiguration& cfg, const Triangulation& t, long double depth) {
  const RatMatrix b = to_rational(cfg.B());
  const RatMatrix gram = b * b.transpose();
  auto coef = solve(gram, t.weight());
  if (!coef) throw Error(ErrorKind::InternalInconsistency, "B B^t is singular");
  const RatVector dir = b.transpose() * *coef;
  const auto tests = domain_test_vectors(cfg, t);
  std::vector<long double> y(dir.size());
  for (long double s = 0.125L; s < 1e12L; s *= 2) {
    for (std::size_t j = 0; j < y.size(); ++j) y[j] = s * to_ld(dir[j]);
    if (domain_ok(cfg, tests, y)) {
      for (auto& v : y) v *= depth;
      return y;
    }
  }
  throw Error(ErrorKind::OutsideDomain, "no scaling of the weight direction passes the domain test");
}

ComplexRingElement evaluate(const TruncatedSeries& s, const ComplexVector& z, bool check_domain, Precision p) {
  const GradedAlgebra& r = *s.ring();
  if (z.size() != r.N()) throw Error(ErrorKind::DimensionMismatch, "z length");
  if (check_domain) {
    std::vector<long double> imag;
    for (const auto& x : z) imag.push_back(x.imag());
    if (!in_certified_domain(r.config(), r.triangulation(), imag))
      throw Error(ErrorKind::OutsideDomain, "Im z fails the domain test");
  }
  if (p == Precision::Double) return evaluate_impl<double>(s, z, precision_bits(p));
  return evaluate_impl<long double>(s, z, precision_bits(p));
}

ComplexRingElement exp_linear(const GradedAlgebra& r, const ComplexVector& mu, Precision p) {
  if (p == Precision::Double) {
    ComplexAlgebra<double> ca(r);
    return widen(ca.exp_nilpotent(linear_form<double>(r, mu)), precision_bits(p), 0);
  }
  ComplexAlgebra<long double> ca(r);
  return widen(ca.exp_nilpotent(linear_form<long double>(r, mu)), precision_bits(p), 0);
}

ComplexRingElement multiply(const GradedAlgebra& r, const ComplexRingElement& x, const ComplexRingElement& y) {
  if (x.coords.size() != r.dim() || y.coords.size() != r.dim())
    throw Error(ErrorKind::DimensionMismatch, "ring element length");
  ComplexAlgebra<long double> ca(r);
  return widen(ca.mul(x.coords, y.coords), std::min(x.precision_bits, y.precision_bits),
               std::max(x.tail_estimate, y.tail_estimate));
}

std::function<std::complex<long double>(const ComplexVector&)> functional_probe(const TruncatedSeries& s,
                                                                                 std::vector<std::complex<long double>> f,
                                                                                 bool check_domain) {
  if (f.size() != s.ring()->dim()) throw Error(ErrorKind::DimensionMismatch, "functional length");
  return [s, f = std::move(f), check_domain](const ComplexVector& z) {
    std::complex<long double> out = 0;
    if (std::all_of(f.begin(), f.end(), [](const auto& x) { return x == std::complex<long double>(0); })) return out;
    const ComplexRingElement v = evaluate(s, z, check_domain);
    for (std::size_t k = 0; k < f.size(); ++k) out += f[k] * v.coords[k];
    return out;
  };
}

}  // namespace gkz
