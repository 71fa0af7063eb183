#include "gkz/polycone.hpp"

#include <algorithm>
#include <set>

namespace gkz {

namespace {

struct DdRay {
  RatVector v;
  std::vector<bool> tight;  // over processed inequalities
};

RatVector axpy(const Rational& a, const RatVector& x, const Rational& b, const RatVector& y) {
  RatVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i] + b * y[i];
  return out;
}

RatVector negated(const RatVector& v) {
  RatVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

std::vector<IntVector> canonical_lineality(std::size_t dim, const std::vector<RatVector>& lin) {
  Subspace s(dim, lin);
  std::vector<IntVector> out;
  for (std::size_t r = 0; r < s.dim(); ++r) out.push_back(primitive(s.basis().row(r)));
  return out;
}

// Orthogonal projection onto the complement of span(lin).
RatVector project_out(const RatVector& v, const std::vector<IntVector>& lin) {
  if (lin.empty()) return v;
  const std::size_t k = lin.size();
  RatMatrix gram(k, k);
  RatVector rhs(k);
  std::vector<RatVector> lr;
  for (const auto& l : lin) lr.push_back(to_rational(l));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) gram(i, j) = dot(lr[i], lr[j]);
    rhs[i] = dot(lr[i], v);
  }
  auto coef = solve(gram, rhs);
  if (!coef) throw Error(ErrorKind::InternalInconsistency, "singular Gram matrix");
  RatVector out = v;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[j] -= (*coef)[i] * lr[i][j];
  return out;
}

}  // namespace

RayDecomposition double_description(std::size_t dim, const std::vector<RatVector>& inequalities) {
  for (const auto& h : inequalities)
    if (h.size() != dim) throw Error(ErrorKind::DimensionMismatch, "inequality length differs from ambient dimension");

  std::vector<RatVector> lin;
  for (std::size_t i = 0; i < dim; ++i) {
    RatVector e(dim);
    e[i] = 1;
    lin.push_back(std::move(e));
  }
  std::vector<DdRay> rays;
  std::vector<RatVector> processed;

  for (const auto& h : inequalities) {
    const std::size_t t = processed.size();
    for (auto& r : rays) r.tight.push_back(false);

    std::size_t pick = lin.size();
    for (std::size_t i = 0; i < lin.size(); ++i)
      if (dot(h, lin[i]) != 0) {
        pick = i;
        break;
      }

    if (pick < lin.size()) {
      RatVector v0 = lin[pick];
      Rational hv0 = dot(h, v0);
      if (hv0 < 0) {
        v0 = negated(v0);
        hv0 = -hv0;
      }
      std::vector<RatVector> new_lin;
      for (std::size_t i = 0; i < lin.size(); ++i) {
        if (i == pick) continue;
        new_lin.push_back(axpy(hv0, lin[i], -dot(h, lin[i]), v0));
      }
      for (auto& r : rays) {
        r.v = axpy(hv0, r.v, -dot(h, r.v), v0);
        r.tight[t] = true;
      }
      DdRay nr{v0, std::vector<bool>(t + 1, true)};
      nr.tight[t] = false;
      rays.push_back(std::move(nr));
      lin = std::move(new_lin);
    } else {
      std::vector<DdRay> plus, zero, minus;
      std::vector<Rational> plus_val, minus_val;
      for (auto& r : rays) {
        Rational s = dot(h, r.v);
        if (s > 0) {
          plus.push_back(r);
          plus_val.push_back(s);
        } else if (s < 0) {
          minus.push_back(r);
          minus_val.push_back(s);
        } else {
          r.tight[t] = true;
          zero.push_back(r);
        }
      }
      const std::size_t pointed_dim = dim - lin.size();
      std::vector<DdRay> next = plus;
      next.insert(next.end(), zero.begin(), zero.end());
      for (std::size_t a = 0; a < plus.size(); ++a)
        for (std::size_t b = 0; b < minus.size(); ++b) {
          std::vector<RatVector> common;
          std::vector<bool> tight(t + 1, false);
          for (std::size_t k = 0; k < t; ++k)
            if (plus[a].tight[k] && minus[b].tight[k]) {
              common.push_back(processed[k]);
              tight[k] = true;
            }
          if (pointed_dim < 2) continue;
          if (rank(common, dim) != pointed_dim - 2) continue;
          tight[t] = true;
          next.push_back(DdRay{axpy(plus_val[a], minus[b].v, -minus_val[b], plus[a].v), std::move(tight)});
        }
      rays = std::move(next);
    }
    processed.push_back(h);
  }

  RayDecomposition out;
  out.lineality = canonical_lineality(dim, lin);
  std::set<IntVector> uniq;
  for (const auto& r : rays) {
    IntVector p = primitive(project_out(r.v, out.lineality));
    if (is_zero(p)) continue;
    uniq.insert(p);
  }
  out.rays.assign(uniq.begin(), uniq.end());
  return out;
}

std::optional<RatVector> strictly_feasible(std::size_t dim, const std::vector<RatVector>& inequalities) {
  RayDecomposition rd = double_description(dim, inequalities);
  RatVector w(dim);
  for (const auto& r : rd.rays)
    for (std::size_t i = 0; i < dim; ++i) w[i] += r[i];
  for (const auto& h : inequalities)
    if (dot(h, w) <= 0) return std::nullopt;
  return w;
}

RationalCone RationalCone::from_generators(std::size_t dim, std::vector<RatVector> rays,
                                           std::vector<RatVector> lineality) {
  for (const auto& v : rays)
    if (v.size() != dim) throw Error(ErrorKind::DimensionMismatch, "generator length");
  for (const auto& v : lineality)
    if (v.size() != dim) throw Error(ErrorKind::DimensionMismatch, "lineality length");
  RationalCone c;
  c.dim_ = dim;
  c.has_gens_ = true;
  c.rays_ = std::move(rays);
  c.lineality_ = std::move(lineality);
  return c;
}

RationalCone RationalCone::from_inequalities(std::size_t dim, std::vector<RatVector> inequalities,
                                             std::vector<RatVector> equations) {
  for (const auto& v : inequalities)
    if (v.size() != dim) throw Error(ErrorKind::DimensionMismatch, "inequality length");
  for (const auto& v : equations)
    if (v.size() != dim) throw Error(ErrorKind::DimensionMismatch, "equation length");
  RationalCone c;
  c.dim_ = dim;
  c.has_ineqs_ = true;
  c.facets_ = std::move(inequalities);
  c.equations_ = std::move(equations);
  return c;
}

std::vector<RatVector> RationalCone::generator_list() const {
  std::vector<RatVector> out = rays_;
  for (const auto& l : lineality_) {
    out.push_back(l);
    out.push_back(negated(l));
  }
  return out;
}

std::vector<RatVector> RationalCone::inequality_list() const {
  std::vector<RatVector> out = facets_;
  for (const auto& e : equations_) {
    out.push_back(e);
    out.push_back(negated(e));
  }
  return out;
}

RationalCone RationalCone::completed() const {
  if (complete_) return *this;
  if (!has_gens_ && !has_ineqs_) throw Error(ErrorKind::DimensionMismatch, "cone has no description");
  auto to_rat = [](const std::vector<IntVector>& vs) {
    std::vector<RatVector> out;
    for (const auto& v : vs) out.push_back(to_rational(v));
    return out;
  };
  auto expand = [](const RayDecomposition& rd) {
    std::vector<RatVector> out;
    for (const auto& r : rd.rays) out.push_back(to_rational(r));
    for (const auto& l : rd.lineality) {
      out.push_back(to_rational(l));
      out.push_back(negated(to_rational(l)));
    }
    return out;
  };
  RationalCone c;
  c.dim_ = dim_;
  c.has_gens_ = c.has_ineqs_ = c.complete_ = true;
  RayDecomposition primal;
  if (has_gens_) {
    RayDecomposition dual = double_description(dim_, generator_list());
    primal = double_description(dim_, expand(dual));
  } else {
    primal = double_description(dim_, inequality_list());
  }
  RayDecomposition dual = double_description(dim_, expand(primal));
  c.rays_ = to_rat(primal.rays);
  c.lineality_ = to_rat(primal.lineality);
  c.facets_ = to_rat(dual.rays);
  c.equations_ = to_rat(dual.lineality);
  return c;
}

std::size_t RationalCone::dimension() const {
  RationalCone c = completed();
  std::vector<RatVector> all = c.rays_;
  all.insert(all.end(), c.lineality_.begin(), c.lineality_.end());
  return rank(all, dim_);
}

bool RationalCone::operator==(const RationalCone& o) const {
  if (dim_ != o.dim_) return false;
  RationalCone a = completed(), b = o.completed();
  return a.rays_ == b.rays_ && a.lineality_ == b.lineality_;
}

RationalCone dualize(const RationalCone& cone) {
  RationalCone c = cone.completed();
  RationalCone d = RationalCone::from_generators(c.ambient_dim(), c.facets(), c.equations());
  return d.completed();
}

bool contains(const RationalCone& cone, const RatVector& x) {
  if (x.size() != cone.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "point length");
  RationalCone c = cone.completed();
  for (const auto& h : c.facets())
    if (dot(h, x) < 0) return false;
  for (const auto& e : c.equations())
    if (dot(e, x) != 0) return false;
  return true;
}

bool contains_in_interior(const RationalCone& cone, const RatVector& x) {
  if (x.size() != cone.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "point length");
  RationalCone c = cone.completed();
  for (const auto& h : c.facets())
    if (dot(h, x) <= 0) return false;
  for (const auto& e : c.equations())
    if (dot(e, x) != 0) return false;
  return true;
}

RayDecomposition extreme_rays(const RationalCone& cone) {
  RationalCone c = cone.completed();
  RayDecomposition rd;
  for (const auto& r : c.rays()) rd.rays.push_back(primitive(r));
  for (const auto& l : c.lineality()) rd.lineality.push_back(primitive(l));
  return rd;
}

RatVector relative_interior_point(const RationalCone& cone) {
  RationalCone c = cone.completed();
  RatVector p(c.ambient_dim());
  for (const auto& r : c.rays())
    for (std::size_t i = 0; i < p.size(); ++i) p[i] += r[i];
  return p;
}

bool interiors_intersect(const RationalCone& a, const RationalCone& b) {
  RationalCone ca = a.completed(), cb = b.completed();
  if (!ca.equations().empty() || !cb.equations().empty()) return false;
  std::vector<RatVector> all = ca.facets();
  all.insert(all.end(), cb.facets().begin(), cb.facets().end());
  return strictly_feasible(ca.ambient_dim(), all).has_value();
}

Sign sign_of(const Rational& q) {
  int s = sgn(q);
  return s > 0 ? Sign::Plus : (s < 0 ? Sign::Minus : Sign::Zero);
}

std::string to_string(const SignVector& s) {
  std::string out;
  for (Sign x : s) out.push_back(x == Sign::Plus ? '+' : (x == Sign::Minus ? '-' : '0'));
  return out;
}

SignVector parse_sign_vector(const std::string& s) {
  SignVector out;
  for (char ch : s) {
    if (ch == '+') out.push_back(Sign::Plus);
    else if (ch == '-') out.push_back(Sign::Minus);
    else if (ch == '0') out.push_back(Sign::Zero);
    else if (ch != ' ' && ch != ',') throw Error(ErrorKind::ParseError, "bad sign character");
  }
  return out;
}

SignVector negate(const SignVector& s) {
  SignVector out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = static_cast<Sign>(-static_cast<int>(s[i]));
  return out;
}

std::vector<Chamber> chambers(const std::vector<RatVector>& vectors) {
  if (vectors.empty()) return {Chamber{{}, {}}};
  const std::size_t dim = vectors.front().size();
  for (const auto& v : vectors)
    if (v.size() != dim) throw Error(ErrorKind::DimensionMismatch, "arrangement vectors differ in length");

  std::vector<Chamber> out;
  // Depth-first over positions; a prefix survives only if strictly feasible.
  struct Frame {
    SignVector signs;
    std::vector<RatVector> ineqs;
  };
  std::vector<Frame> stack{{{}, {}}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    const std::size_t j = f.signs.size();
    if (j == vectors.size()) {
      RatVector w(dim);
      if (!f.ineqs.empty()) w = *strictly_feasible(dim, f.ineqs);
      out.push_back(Chamber{f.signs, w});
      continue;
    }
    if (is_zero(vectors[j])) {
      f.signs.push_back(Sign::Zero);
      stack.push_back(std::move(f));
      continue;
    }
    for (Sign s : {Sign::Minus, Sign::Plus}) {
      Frame g = f;
      g.signs.push_back(s);
      g.ineqs.push_back(s == Sign::Plus ? vectors[j] : negated(vectors[j]));
      if (strictly_feasible(dim, g.ineqs)) stack.push_back(std::move(g));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Chamber& a, const Chamber& b) { return to_string(a.signs) < to_string(b.signs); });
  return out;
}

std::vector<SignVector> chamber_sign_vectors(const std::vector<RatVector>& vectors) {
  std::vector<SignVector> out;
  for (auto& c : chambers(vectors)) out.push_back(std::move(c.signs));
  return out;
}

}  // namespace gkz
