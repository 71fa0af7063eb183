#include "gkz/gorcone.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gkz {

namespace {

bool contains_index(const Simplex& s, std::size_t j) { return std::binary_search(s.begin(), s.end(), j); }

// Pairing pattern w.a_j: >= 0 everywhere, 1 at i, 0 at the other core indices.
bool has_sign_pattern(const PointConfiguration& cfg, const Simplex& core, std::size_t i, const IntVector& w) {
  for (std::size_t j = 0; j < cfg.N(); ++j) {
    const Integer p = dot(w, cfg.column(j));
    if (p < 0) return false;
    if (j == i && p != 1) return false;
    if (j != i && contains_index(core, j) && p != 0) return false;
  }
  return true;
}

// Calls fn on every integer point of the box [lo, hi].
template <class F>
void for_each_point(const IntVector& lo, const IntVector& hi, F&& fn) {
  IntVector x = lo;
  if (x.empty()) {
    fn(x);
    return;
  }
  for (std::size_t k = 0; k < x.size(); ++k)
    if (lo[k] > hi[k]) return;
  while (true) {
    fn(x);
    std::size_t k = 0;
    while (k < x.size() && x[k] == hi[k]) {
      x[k] = lo[k];
      ++k;
    }
    if (k == x.size()) return;
    ++x[k];
  }
}

RatVector homogenize(const IntVector& v) {
  RatVector out = to_rational(v);
  out.emplace_back(1);
  return out;
}

}  // namespace

IntVector find_a0vee(const IntMatrix& a) {
  auto f = solve_degree_functional(a);
  if (!f) throw Error(ErrorKind::NoDegreeFunctional, "no integral row vector takes the value 1 on every column");
  return *f;
}

void check_gorenstein_preconditions(const PointConfiguration& cfg, const Triangulation& t) {
  if (t.core().empty()) throw Error(ErrorKind::PreconditionFailed, "core1: the core is empty");
  if (cfg.lies_in_boundary(t.core()))
    throw Error(ErrorKind::PreconditionFailed, "core2: the core lies in the boundary of the polytope");
  if (!t.is_unimodular()) throw Error(ErrorKind::PreconditionFailed, "vol1: the triangulation is not unimodular");
}

std::vector<DualGenerator> dual_generators(const PointConfiguration& cfg, const Triangulation& t) {
  check_gorenstein_preconditions(cfg, t);
  std::map<std::pair<std::size_t, IntVector>, std::vector<Simplex>> found;
  for (const auto& s : t.maximal()) {
    const RatMatrix inv = square_inverse(cfg.A().select_columns(s)).inverse;
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (!contains_index(t.core(), s[k])) continue;
      auto row = as_integer(inv.row(k));
      if (!row) throw Error(ErrorKind::InternalInconsistency, "dual generator is not integral");
      if (!has_sign_pattern(cfg, t.core(), s[k], *row))
        throw Error(ErrorKind::InternalInconsistency, "dual generator " + to_string(s) + " breaks the sign pattern");
      found[{s[k], *row}].push_back(s);
    }
  }
  std::vector<DualGenerator> out;
  for (auto& [key, sources] : found) out.push_back({key.second, key.first, std::move(sources)});
  return out;
}

GorensteinReport gorenstein_report(const PointConfiguration& cfg, const Triangulation& t) {
  GorensteinReport rep;
  rep.dual_generators = dual_generators(cfg, t);
  const std::size_t n = cfg.n();
  rep.a0vee = find_a0vee(cfg.A());
  rep.core = t.core();
  rep.a0 = IntVector(n);
  for (auto i : rep.core)
    for (std::size_t k = 0; k < n; ++k) rep.a0[k] += cfg.column(i)[k];
  rep.kappa = dot(rep.a0vee, rep.a0);

  std::vector<RatVector> cols, gens;
  for (std::size_t j = 0; j < cfg.N(); ++j) cols.push_back(to_rational(cfg.column(j)));
  for (const auto& g : rep.dual_generators) gens.push_back(to_rational(g.row));
  rep.generates_dual = dualize(RationalCone::from_generators(n, cols)) == RationalCone::from_generators(n, gens);
  rep.reflexive = rep.generates_dual && rep.kappa == static_cast<long>(rep.core.size()) &&
                  std::all_of(rep.dual_generators.begin(), rep.dual_generators.end(),
                              [&](const DualGenerator& g) { return dot(g.row, rep.a0) == 1; });

  bool split = rep.reflexive;
  for (auto i : rep.core) {
    SplitBox box;
    box.core_index = i;
    std::vector<RatVector> hull_gens;
    for (const auto& g : rep.dual_generators)
      if (g.core_index == i) {
        box.vertices.push_back(g.row);
        hull_gens.push_back(homogenize(g.row));
      }
    RationalCone hull = RationalCone::from_generators(n + 1, hull_gens).completed();
    IntVector lo = box.vertices.front(), hi = lo;
    for (const auto& v : box.vertices)
      for (std::size_t k = 0; k < n; ++k) {
        lo[k] = std::min(lo[k], v[k]);
        hi[k] = std::max(hi[k], v[k]);
      }
    for (std::size_t k = 0; k < n; ++k) {
      lo[k] -= 1;
      hi[k] += 1;
    }
    std::set<IntVector> in_hull, patterned;
    for_each_point(lo, hi, [&](const IntVector& w) {
      if (contains(hull, homogenize(w))) in_hull.insert(w);
      if (has_sign_pattern(cfg, rep.core, i, w)) patterned.insert(w);
    });
    box.lattice_points.assign(in_hull.begin(), in_hull.end());
    box.matches_sign_pattern = in_hull == patterned;
    split = split && box.matches_sign_pattern;
    rep.boxes.push_back(std::move(box));
  }
  rep.completely_split = split;
  return rep;
}

InteriorCheck interior_identity_check(const PointConfiguration& cfg, const GorensteinReport& report,
                                      long degree_bound) {
  InteriorCheck out;
  if (!report.reflexive || degree_bound < 1) return out;
  const std::size_t n = cfg.n();
  IntVector lo(n), hi(n);
  for (std::size_t j = 0; j < cfg.N(); ++j)
    for (std::size_t k = 0; k < n; ++k) {
      const Integer c = cfg.column(j)[k] * degree_bound;
      lo[k] = std::min(lo[k], c);
      hi[k] = std::max(hi[k], c);
    }
  const Integer top = degree_bound;
  std::set<IntVector> interior, shifted;
  for_each_point(lo, hi, [&](const IntVector& x) {
    const Integer deg = dot(report.a0vee, x);
    if (deg < 0 || deg > top) return;
    bool inside = true, strict = true;
    for (const auto& g : report.dual_generators) {
      const Integer p = dot(g.row, x);
      if (p < 0) inside = false;
      if (p <= 0) strict = false;
    }
    if (!inside) return;
    if (strict && deg >= 1) interior.insert(x);
    if (deg + report.kappa <= top) {
      IntVector y = x;
      for (std::size_t k = 0; k < n; ++k) y[k] += report.a0[k];
      shifted.insert(std::move(y));
    }
  });
  out.interior_points.assign(interior.begin(), interior.end());
  out.shifted_points.assign(shifted.begin(), shifted.end());
  out.holds = interior == shifted;
  return out;
}

ProjectedFan projected_fan(const PointConfiguration& cfg, const Triangulation& t, const Simplex& i0) {
  check_gorenstein_preconditions(cfg, t);
  if (std::find(t.maximal().begin(), t.maximal().end(), i0) == t.maximal().end())
    throw Error(ErrorKind::PreconditionFailed, "I0 " + to_string(i0) + " is not a maximal simplex");
  ProjectedFan f;
  f.i0 = i0;
  const Simplex& core = t.core();
  f.dim = cfg.n() - core.size();
  const RatMatrix u = square_inverse(cfg.A().select_columns(i0)).inverse * to_rational(cfg.A());
  std::vector<std::size_t> rows;
  for (std::size_t k = 0; k < i0.size(); ++k)
    if (!contains_index(core, i0[k])) rows.push_back(k);
  std::map<std::size_t, std::size_t> pos;
  for (std::size_t j = 0; j < cfg.N(); ++j) {
    if (contains_index(core, j)) continue;
    RatVector col;
    for (auto k : rows) col.push_back(u(k, j));
    auto v = as_integer(col);
    if (!v) throw Error(ErrorKind::InternalInconsistency, "A_I0^{-1} A is not integral");
    pos[j] = f.u.size();
    f.ray_index.push_back(j);
    f.u.push_back(std::move(*v));
  }
  for (const auto& s : t.maximal()) {
    Simplex c;
    for (auto j : s)
      if (!contains_index(core, j)) c.push_back(j);
    f.maximal_cones.push_back(std::move(c));
  }

  RatMatrix m(f.dim, f.u.size());
  for (std::size_t c = 0; c < f.u.size(); ++c)
    for (std::size_t k = 0; k < f.dim; ++k) m(k, c) = f.u[c][k];
  const RatMatrix ker = nullspace(m);
  std::vector<RatVector> ineqs(f.u.size(), RatVector(ker.rows()));
  for (std::size_t r = 0; r < ker.rows(); ++r)
    for (std::size_t c = 0; c < f.u.size(); ++c) ineqs[c][r] = ker(r, c);
  f.complete = ker.rows() > 0 && strictly_feasible(ker.rows(), ineqs).has_value();

  f.smooth = true;
  for (const auto& c : f.maximal_cones) {
    if (c.size() != f.dim) {
      f.smooth = false;
      continue;
    }
    IntMatrix g(f.dim, f.dim);
    for (std::size_t a = 0; a < c.size(); ++a)
      for (std::size_t k = 0; k < f.dim; ++k) g(k, a) = f.u[pos.at(c[a])][k];
    const Integer d = determinant(g);
    if (d != 1 && d != -1) f.smooth = false;
  }
  return f;
}

}  // namespace gkz
