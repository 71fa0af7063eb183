#include "gkz/exactla.hpp"

#include <algorithm>
#include <utility>

namespace gkz {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rational(m(r, c));
  return out;
}

RatVector to_rational(const IntVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

IntVector to_integer(std::span<const long> v) {
  IntVector out;
  out.reserve(v.size());
  for (long x : v) out.emplace_back(x);
  return out;
}

std::optional<IntVector> as_integer(const RatVector& v) {
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (x.get_den() != 1) return std::nullopt;
    out.push_back(x.get_num());
  }
  return out;
}

IntVector primitive(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0) return v;
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

IntVector primitive(const RatVector& v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, x.get_den());
  IntVector scaled(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational t = v[i] * l;
    scaled[i] = t.get_num();
  }
  return primitive(scaled);
}

bool is_zero(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}
bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

namespace {

void add_row_multiple(IntMatrix& m, std::size_t target, std::size_t source, const Integer& q) {
  // row[target] -= q * row[source]
  if (q == 0) return;
  for (std::size_t c = 0; c < m.cols(); ++c) m(target, c) -= q * m(source, c);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

}  // namespace

HermiteForm row_hermite(const IntMatrix& m) {
  HermiteForm hf{m, IntMatrix::identity(m.rows()), 0, {}};
  IntMatrix& h = hf.H;
  IntMatrix& u = hf.U;
  const std::size_t rows = m.rows();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < rows; ++c) {
    while (true) {
      std::size_t best = rows;
      for (std::size_t k = r; k < rows; ++k) {
        if (h(k, c) == 0) continue;
        if (best == rows || abs(h(k, c)) < abs(h(best, c))) best = k;
      }
      if (best == rows) break;
      h.swap_rows(r, best);
      u.swap_rows(r, best);
      bool cleared = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (h(i, c) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
        add_row_multiple(h, i, r, q);
        add_row_multiple(u, i, r, q);
        if (h(i, c) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
      add_row_multiple(h, i, r, q);
      add_row_multiple(u, i, r, q);
    }
    hf.pivot_cols.push_back(c);
    ++r;
  }
  hf.rank = r;
  return hf;
}

IntMatrix kernel_basis(const IntMatrix& a) {
  const std::size_t big_n = a.cols();
  HermiteForm hf = row_hermite(a.transpose());
  std::vector<std::size_t> kernel_rows;
  for (std::size_t r = hf.rank; r < big_n; ++r) kernel_rows.push_back(r);
  IntMatrix k = hf.U.select_rows(kernel_rows);
  if (k.rows() == 0) return IntMatrix(0, big_n);
  // Canonical representative of the lattice.
  HermiteForm canon = row_hermite(k);
  std::vector<std::size_t> top(canon.rank);
  for (std::size_t i = 0; i < canon.rank; ++i) top[i] = i;
  return canon.H.select_rows(top);
}

IntVector solve_particular(const IntMatrix& a, const IntVector& beta) {
  if (beta.size() != a.rows())
    throw Error(ErrorKind::DimensionMismatch, "beta has wrong length");
  HermiteForm hf = row_hermite(a.transpose());
  IntVector x(hf.rank);
  for (std::size_t k = 0; k < hf.rank; ++k) {
    const std::size_t c = hf.pivot_cols[k];
    Integer s = beta[c];
    for (std::size_t j = 0; j < k; ++j) s -= x[j] * hf.H(j, c);
    if (!mpz_divisible_p(s.get_mpz_t(), hf.H(k, c).get_mpz_t()))
      throw Error(ErrorKind::NoIntegerSolution, "beta is not in the lattice spanned by the columns");
    x[k] = s / hf.H(k, c);
  }
  for (std::size_t c = 0; c < a.rows(); ++c) {
    Integer s = 0;
    for (std::size_t k = 0; k < hf.rank; ++k) s += x[k] * hf.H(k, c);
    if (s != beta[c])
      throw Error(ErrorKind::NoIntegerSolution, "beta is not in the span of the columns");
  }
  IntVector gamma(a.cols());
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t k = 0; k < hf.rank; ++k) gamma[i] += x[k] * hf.U(k, i);
  return gamma;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix w = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && w(p, k) == 0) ++p;
      if (p == n) return 0;
      w.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = w(i, j) * w(k, k) - w(i, k) * w(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        w(i, j) = t;
      }
    prev = w(k, k);
  }
  return sign * w(n - 1, n - 1);
}

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  RatMatrix w = m;
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && w(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      w.swap_rows(k, p);
      det = -det;
    }
    det *= w(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (w(i, k) == 0) continue;
      Rational f = w(i, k) / w(k, k);
      for (std::size_t j = k; j < n; ++j) w(i, j) -= f * w(k, j);
    }
  }
  return det;
}

RowEchelon row_echelon(RatMatrix m) {
  RowEchelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rref = std::move(m);
  return out;
}

std::size_t rank(const RatMatrix& m) { return row_echelon(m).rank(); }
std::size_t rank(const IntMatrix& m) { return row_hermite(m).rank; }
std::size_t rank(const std::vector<RatVector>& rows, std::size_t cols) {
  return rank(RatMatrix::from_rows(rows, cols));
}

SquareInverse square_inverse(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
  SquareInverse out;
  out.det = determinant(m);
  if (out.det == 0) throw Error(ErrorKind::Singular, "matrix is singular");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = Rational(m(i, j));
    aug(i, n + i) = 1;
  }
  RowEchelon re = row_echelon(aug);
  out.inverse = RatMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.inverse(i, j) = re.rref(i, n + j);
  return out;
}

RatMatrix nullspace(const RatMatrix& m) {
  RowEchelon re = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : re.pivot_cols) is_pivot[c] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(m.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < re.pivot_cols.size(); ++k) v[re.pivot_cols[k]] = -re.rref(k, f);
    basis.push_back(std::move(v));
  }
  return RatMatrix::from_rows(basis, m.cols());
}

std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b) {
  if (b.size() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "rhs length");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  RowEchelon re = row_echelon(aug);
  if (!re.pivot_cols.empty() && re.pivot_cols.back() == m.cols()) return std::nullopt;
  RatVector x(m.cols());
  for (std::size_t k = 0; k < re.pivot_cols.size(); ++k) x[re.pivot_cols[k]] = re.rref(k, m.cols());
  return x;
}

Subspace::Subspace(std::size_t ambient, const std::vector<RatVector>& spanning) : ambient_(ambient) {
  RowEchelon re = row_echelon(RatMatrix::from_rows(spanning, ambient));
  std::vector<std::size_t> top(re.rank());
  for (std::size_t i = 0; i < top.size(); ++i) top[i] = i;
  basis_ = re.rref.select_rows(top);
  pivots_ = re.pivot_cols;
}

bool Subspace::contains(const RatVector& v) const {
  if (v.size() != ambient_) throw Error(ErrorKind::DimensionMismatch, "subspace membership length");
  RatVector w = v;
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    const Rational f = w[pivots_[k]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j) w[j] -= f * basis_(k, j);
  }
  return is_zero(w);
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(const std::string& s) {
  std::string t;
  for (char ch : s)
    if (ch != ' ' && ch != '\t') t.push_back(ch);
  if (t.empty()) throw Error(ErrorKind::ParseError, "empty rational");
  if (t.front() == '+') t.erase(t.begin());
  const auto slash = t.find('/');
  auto valid_int = [](const std::string& x) {
    if (x.empty()) return false;
    std::size_t i = (x[0] == '-') ? 1 : 0;
    if (i == x.size()) return false;
    for (; i < x.size(); ++i)
      if (x[i] < '0' || x[i] > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!valid_int(t)) throw Error(ErrorKind::ParseError, "not a rational: " + s);
    return Rational(Integer(t));
  }
  std::string num = t.substr(0, slash);
  std::string den = t.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-')
    throw Error(ErrorKind::ParseError, "not a rational: " + s);
  Integer d(den);
  if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator: " + s);
  Rational q(Integer(num), d);
  q.canonicalize();
  return q;
}

}  // namespace gkz
