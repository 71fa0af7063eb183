#include "gkz/srring.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace gkz {

namespace {

std::uint64_t support_mask(const Monomial& m) {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] > 0) s |= std::uint64_t(1) << i;
  return s;
}

// All exponent vectors of length len and total degree k, descending lex.
std::vector<Monomial> all_monomials(std::size_t len, int k) {
  std::vector<Monomial> out;
  Monomial cur(len, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == len) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[i] = e;
      rec(i + 1, left - e);
    }
    cur[i] = 0;
  };
  if (len == 0) {
    if (k == 0) out.push_back(cur);
    return out;
  }
  rec(0, k);
  return out;
}

std::string coefficient_prefix(const Rational& c, bool first, bool unit_term) {
  std::string out;
  Rational a = c;
  if (a < 0) {
    out = first ? "-" : " - ";
    a = -a;
  } else if (!first) {
    out = " + ";
  }
  if (a != 1 || unit_term) {
    out += to_string(a);
    if (!unit_term) out += "*";
  }
  return out;
}

}  // namespace

int degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

std::string monomial_name(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "c" + std::to_string(i + 1);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
  return r;
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
  return r;
}

AlgebraElement operator-(const AlgebraElement& a) {
  AlgebraElement r = a;
  for (auto& x : r.coords) x = -x;
  return r;
}

AlgebraElement operator*(const Rational& s, const AlgebraElement& a) {
  AlgebraElement r = a;
  for (auto& x : r.coords) x *= s;
  return r;
}

std::shared_ptr<const GradedAlgebra> GradedAlgebra::build(const PointConfiguration& cfg, const Triangulation& t) {
  auto r = std::make_shared<GradedAlgebra>();
  const std::size_t n = cfg.n(), big_n = cfg.N();
  r->n_ = n;
  r->big_n_ = big_n;
  r->cfg_ = cfg;
  r->tri_ = t;

  std::vector<std::vector<Monomial>> spanning(n + 1);
  spanning[0].push_back(Monomial(big_n, 0));
  for (int k = 1; k <= static_cast<int>(n); ++k)
    for (auto& m : all_monomials(big_n, k))
      if (t.is_simplex_mask(support_mask(m))) spanning[k].push_back(std::move(m));

  // local normal forms, per degree, over that degree's standard monomials
  std::vector<std::map<Monomial, RatVector>> local_nf(n);
  r->degree_bases_.resize(n);
  for (std::size_t k = 0; k <= n; ++k) {
    const auto& sk = spanning[k];
    std::map<Monomial, std::size_t> col;
    for (std::size_t c = 0; c < sk.size(); ++c) col[sk[c]] = c;

    std::vector<RatVector> rels;
    if (k >= 1) {
      for (std::size_t i = 0; i < n; ++i)
        for (const auto& m : spanning[k - 1]) {
          RatVector row(sk.size());
          bool nonzero = false;
          for (std::size_t j = 0; j < big_n; ++j) {
            if (cfg.A()(i, j) == 0) continue;
            Monomial mm = m;
            ++mm[j];
            auto it = col.find(mm);
            if (it == col.end()) continue;  // non-simplex support, zero in R
            row[it->second] += Rational(cfg.A()(i, j));
            nonzero = true;
          }
          if (nonzero) rels.push_back(std::move(row));
        }
    }
    RowEchelon re = row_echelon(RatMatrix::from_rows(rels, sk.size()));
    std::vector<bool> is_pivot(sk.size(), false);
    for (auto c : re.pivot_cols) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < sk.size(); ++c)
      if (!is_pivot[c]) free_cols.push_back(c);

    if (k == n) {
      if (!free_cols.empty())
        throw Error(ErrorKind::RankMismatch, "degree n component does not vanish");
      break;
    }
    for (auto c : free_cols) r->degree_bases_[k].push_back(sk[c]);
    std::vector<std::size_t> local_index(sk.size(), 0);
    for (std::size_t f = 0; f < free_cols.size(); ++f) local_index[free_cols[f]] = f;
    for (std::size_t c = 0; c < sk.size(); ++c) {
      RatVector v(free_cols.size());
      if (!is_pivot[c]) {
        v[local_index[c]] = 1;
      } else {
        std::size_t row = std::find(re.pivot_cols.begin(), re.pivot_cols.end(), c) - re.pivot_cols.begin();
        for (std::size_t f = 0; f < free_cols.size(); ++f) v[f] = -re.rref(row, free_cols[f]);
      }
      local_nf[k][sk[c]] = std::move(v);
    }
  }

  r->offsets_.assign(n + 1, 0);
  for (std::size_t k = 0; k < n; ++k) {
    r->offsets_[k + 1] = r->offsets_[k] + r->degree_bases_[k].size();
    for (const auto& m : r->degree_bases_[k]) r->basis_.push_back(m);
  }
  const std::size_t dim = r->basis_.size();
  if (dim != t.maximal().size())
    throw Error(ErrorKind::RankMismatch, "ring dimension " + std::to_string(dim) + " differs from the number of maximal simplices " +
                                             std::to_string(t.maximal().size()));

  for (std::size_t k = 0; k < n; ++k)
    for (auto& [m, v] : local_nf[k]) {
      RatVector g(dim);
      for (std::size_t f = 0; f < v.size(); ++f) g[r->offsets_[k] + f] = v[f];
      r->normal_form_[m] = std::move(g);
    }

  r->table_.assign(dim, std::vector<RatVector>(dim));
  for (std::size_t p = 0; p < dim; ++p)
    for (std::size_t q = 0; q < dim; ++q) {
      Monomial m = r->basis_[p];
      for (std::size_t j = 0; j < big_n; ++j) m[j] += r->basis_[q][j];
      r->table_[p][q] = r->monomial(m).coords;
    }
  return r;
}

std::vector<std::size_t> GradedAlgebra::dims_per_degree() const {
  std::vector<std::size_t> out;
  for (const auto& b : degree_bases_) out.push_back(b.size());
  return out;
}

AlgebraElement GradedAlgebra::one() const {
  AlgebraElement e = zero();
  e.coords[0] = 1;
  return e;
}

AlgebraElement GradedAlgebra::monomial(const Monomial& m) const {
  if (m.size() != big_n_) throw Error(ErrorKind::DimensionMismatch, "monomial length");
  if (degree(m) >= static_cast<int>(n_)) return zero();
  auto it = normal_form_.find(m);
  if (it == normal_form_.end()) return zero();  // support is not a simplex
  return {it->second};
}

AlgebraElement GradedAlgebra::generator(std::size_t j) const {
  Monomial m(big_n_, 0);
  m.at(j) = 1;
  return monomial(m);
}

AlgebraElement GradedAlgebra::mul(const AlgebraElement& x, const AlgebraElement& y) const {
  AlgebraElement out = zero();
  for (std::size_t p = 0; p < dim(); ++p) {
    if (x.coords[p] == 0) continue;
    for (std::size_t q = 0; q < dim(); ++q) {
      if (y.coords[q] == 0) continue;
      const Rational s = x.coords[p] * y.coords[q];
      const RatVector& t = table_[p][q];
      for (std::size_t i = 0; i < dim(); ++i)
        if (t[i] != 0) out.coords[i] += s * t[i];
    }
  }
  return out;
}

AlgebraElement GradedAlgebra::power(const AlgebraElement& x, unsigned k) const {
  AlgebraElement out = one();
  for (unsigned i = 0; i < k; ++i) out = mul(out, x);
  return out;
}

RatMatrix GradedAlgebra::mult_matrix(const AlgebraElement& x) const {
  RatMatrix m(dim(), dim());
  for (std::size_t q = 0; q < dim(); ++q) {
    AlgebraElement e = zero();
    e.coords[q] = 1;
    AlgebraElement prod = mul(x, e);
    for (std::size_t i = 0; i < dim(); ++i) m(i, q) = prod.coords[i];
  }
  return m;
}

RatVector GradedAlgebra::homogeneous_part(const AlgebraElement& x, std::size_t k) const {
  if (k >= n_) return {};
  return RatVector(x.coords.begin() + offsets_[k], x.coords.begin() + offsets_[k + 1]);
}

std::string GradedAlgebra::to_string(const AlgebraElement& x) const {
  std::string out;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x.coords[i] == 0) continue;
    const bool unit = degree(basis_[i]) == 0;
    out += coefficient_prefix(x.coords[i], out.empty(), unit);
    if (!unit) out += monomial_name(basis_[i]);
  }
  return out.empty() ? "0" : out;
}

std::vector<std::pair<Simplex, AlgebraElement>> distinguished_basis(const PointConfiguration& cfg,
                                                                    const GradedAlgebra& r, const RatVector& xi) {
  const std::size_t n = cfg.n(), big_n = cfg.N();
  if (xi.size() != n) throw Error(ErrorKind::DimensionMismatch, "xi has wrong length");
  // xi must avoid the span of every n-1 columns
  std::vector<std::size_t> idx(n - 1);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == n - 1) {
      std::vector<RatVector> cols;
      for (auto i : idx) cols.push_back(to_rational(cfg.column(i)));
      const std::size_t before = rank(cols, n);
      cols.push_back(xi);
      if (rank(cols, n) == before)
        throw Error(ErrorKind::DegenerateXi, "xi lies in the span of columns " + to_string(Simplex(idx.begin(), idx.end())));
      return;
    }
    for (std::size_t i = start; i < big_n; ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);

  std::vector<std::pair<Simplex, AlgebraElement>> out;
  std::size_t empty_count = 0;
  for (const auto& s : r.triangulation().maximal()) {
    auto x = solve(to_rational(cfg.A().select_columns(s)), xi);
    if (!x) throw Error(ErrorKind::InternalInconsistency, "maximal simplex is singular");
    AlgebraElement c = r.one();
    bool empty = true;
    for (std::size_t k = 0; k < s.size(); ++k)
      if ((*x)[k] < 0) {
        c = r.mul(c, r.generator(s[k]));
        empty = false;
      }
    if (empty) ++empty_count;
    out.emplace_back(s, std::move(c));
  }
  std::vector<RatVector> rows;
  for (const auto& [s, c] : out) rows.push_back(c.coords);
  if (rank(rows, r.dim()) != r.dim())
    throw Error(ErrorKind::InternalInconsistency, "distinguished elements are not a basis");
  if (empty_count != 1)
    throw Error(ErrorKind::DegenerateXi, "xi is not inside exactly one maximal simplex");
  return out;
}

PoincareCheck poincare_check(const GradedAlgebra& r) {
  const std::size_t n = r.n();
  PoincareCheck pc;
  pc.ring_side.assign(n + 1, 0);
  auto dims = r.dims_per_degree();
  for (std::size_t k = 0; k < dims.size(); ++k) pc.ring_side[k] = dims[k];

  auto by = r.triangulation().simplices_by_size();
  pc.simplex_side.assign(n + 1, 0);
  for (std::size_t m = 0; m <= n; ++m) {
    const Integer count = by[m].size();
    // count * t^m * (1 - t)^(n - m)
    for (std::size_t i = 0; i <= n - m; ++i) {
      Integer binom;
      mpz_bin_uiui(binom.get_mpz_t(), n - m, i);
      Integer term = count * binom;
      if (i % 2) term = -term;
      pc.simplex_side[m + i] += term;
    }
  }
  pc.equal = pc.ring_side == pc.simplex_side;
  return pc;
}

AlgebraElement core_element(const GradedAlgebra& r) {
  AlgebraElement c = r.one();
  for (auto i : r.triangulation().core()) c = r.mul(c, r.generator(i));
  return c;
}

Subspace annihilator(const GradedAlgebra& r, const AlgebraElement& x) {
  RatMatrix ns = nullspace(r.mult_matrix(x));
  return Subspace(r.dim(), ns.to_rows());
}

Subspace ideal(const GradedAlgebra& r, const AlgebraElement& x) {
  return Subspace(r.dim(), r.mult_matrix(x).transpose().to_rows());
}

bool in_subspace(const Subspace& s, const AlgebraElement& x) { return s.contains(x.coords); }

MultiplicationIso multiplication_iso(const GradedAlgebra& r, const AlgebraElement& x) {
  MultiplicationIso out;
  Subspace ann = annihilator(r, x);
  Subspace img = ideal(r, x);
  out.quotient_dim = r.dim() - ann.dim();
  out.image_dim = img.dim();
  // Choose a complement of Ann(x) spanned by basis vectors; the induced map is
  // injective iff x times that complement has full rank.
  std::vector<RatVector> complement_images;
  std::vector<RatVector> spanning;
  for (std::size_t r0 = 0; r0 < ann.dim(); ++r0) spanning.push_back(ann.basis().row(r0));
  for (std::size_t q = 0; q < r.dim(); ++q) {
    RatVector e(r.dim());
    e[q] = 1;
    std::vector<RatVector> trial = spanning;
    trial.push_back(e);
    if (rank(trial, r.dim()) == spanning.size() + 1) {
      spanning = std::move(trial);
      complement_images.push_back(r.mul(x, AlgebraElement{e}).coords);
    }
  }
  out.injective = rank(complement_images, r.dim()) == complement_images.size() &&
                  complement_images.size() == out.quotient_dim;
  return out;
}

AlgebraElement exp_element(const GradedAlgebra& r, const AlgebraElement& x) {
  if (x.coords.size() != r.dim()) throw Error(ErrorKind::DimensionMismatch, "element length");
  if (x.coords[0] != 0) throw Error(ErrorKind::NotNilpotent, "element has a nonzero constant term");
  AlgebraElement term = r.one();
  AlgebraElement acc = r.one();
  for (std::size_t k = 1; k < r.n(); ++k) {
    term = Rational(1, k) * r.mul(term, x);
    acc = acc + term;
  }
  return acc;
}

std::vector<Relation> relations_in_reduced_generators(const GradedAlgebra& r) {
  std::vector<Relation> out;
  if (r.n() < 2) return out;
  const auto& gens = r.degree_bases()[1];
  const std::size_t g = gens.size();
  std::vector<AlgebraElement> gen_el;
  for (const auto& m : gens) gen_el.push_back(r.monomial(m));

  std::vector<RatVector> prev_kernel;  // over monomials of degree k-1 in g variables
  std::vector<Monomial> prev_monos;
  for (std::size_t k = 2; k <= r.n(); ++k) {
    auto monos = all_monomials(g, static_cast<int>(k));
    std::map<Monomial, std::size_t> pos;
    for (std::size_t i = 0; i < monos.size(); ++i) pos[monos[i]] = i;
    const std::size_t target = k < r.n() ? r.dims_per_degree()[k] : 0;
    RatMatrix images(target, monos.size());
    for (std::size_t c = 0; c < monos.size(); ++c) {
      AlgebraElement e = r.one();
      for (std::size_t i = 0; i < g; ++i)
        for (int p = 0; p < monos[c][i]; ++p) e = r.mul(e, gen_el[i]);
      RatVector h = r.homogeneous_part(e, k);
      for (std::size_t i = 0; i < target; ++i) images(i, c) = h[i];
    }
    RatMatrix ns = target ? nullspace(images) : RatMatrix::identity(monos.size());
    Subspace kernel(monos.size(), ns.to_rows());

    // consequences of lower-degree relations
    std::vector<RatVector> implied;
    for (const auto& rel : prev_kernel)
      for (std::size_t i = 0; i < g; ++i) {
        RatVector v(monos.size());
        for (std::size_t c = 0; c < prev_monos.size(); ++c) {
          if (rel[c] == 0) continue;
          Monomial m = prev_monos[c];
          ++m[i];
          v[pos[m]] += rel[c];
        }
        implied.push_back(std::move(v));
      }
    std::vector<RatVector> span = implied;
    std::size_t have = rank(span, monos.size());
    for (std::size_t row = 0; row < kernel.dim(); ++row) {
      RatVector v = kernel.basis().row(row);
      span.push_back(v);
      const std::size_t now = rank(span, monos.size());
      if (now == have) {
        span.pop_back();
        continue;
      }
      have = now;
      IntVector iv = primitive(v);
      Relation rel;
      for (std::size_t c = 0; c < monos.size(); ++c) {
        if (iv[c] == 0) continue;
        Monomial full(r.N(), 0);
        for (std::size_t i = 0; i < g; ++i)
          for (std::size_t j = 0; j < r.N(); ++j) full[j] += monos[c][i] * gens[i][j];
        rel.terms.emplace_back(full, Rational(iv[c]));
        rel.text += coefficient_prefix(Rational(iv[c]), rel.text.empty(), false) + monomial_name(full);
      }
      out.push_back(std::move(rel));
    }
    prev_kernel.clear();
    for (std::size_t row = 0; row < kernel.dim(); ++row) prev_kernel.push_back(kernel.basis().row(row));
    prev_monos = monos;
  }
  return out;
}

}  // namespace gkz
