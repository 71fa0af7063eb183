#include "gkz/triang.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <random>
#include <set>

namespace gkz {

namespace {

void for_each_combination(std::size_t n, std::size_t k, const std::function<void(const Simplex&)>& fn) {
  if (k > n) return;
  Simplex s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = i;
  while (true) {
    fn(s);
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

Simplex from_mask(std::uint64_t m) {
  Simplex s;
  for (std::size_t i = 0; m; ++i, m >>= 1)
    if (m & 1) s.push_back(i);
  return s;
}

IntMatrix b_columns(const PointConfiguration& cfg, const Simplex& j) {
  return cfg.B().select_columns(j);
}

RatVector scaled_to_integers(const RatVector& v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, x.get_den());
  RatVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * l;
  return out;
}

}  // namespace

std::string to_string(const Simplex& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i] + 1);
  }
  return out + "}";
}

std::uint64_t mask_of(const Simplex& s) {
  std::uint64_t m = 0;
  for (auto i : s) m |= std::uint64_t(1) << i;
  return m;
}

Simplex complement(const Simplex& s, std::size_t big_n) {
  Simplex out;
  std::uint64_t m = mask_of(s);
  for (std::size_t i = 0; i < big_n; ++i)
    if (!(m >> i & 1)) out.push_back(i);
  return out;
}

std::optional<IntVector> solve_degree_functional(const IntMatrix& a) {
  RatVector ones(a.cols(), Rational(1));
  auto y = solve(to_rational(a).transpose(), ones);
  if (!y) return std::nullopt;
  return as_integer(*y);
}

PointConfiguration PointConfiguration::make(IntMatrix a, std::optional<IntVector> a0vee,
                                            std::optional<IntMatrix> b) {
  PointConfiguration cfg;
  const std::size_t n = a.rows(), big_n = a.cols();
  if (big_n == 0 || n == 0) throw Error(ErrorKind::DimensionMismatch, "empty configuration");
  if (big_n > 64) throw Error(ErrorKind::DimensionMismatch, "at most 64 points are supported");
  if (rank(a) != n) throw Error(ErrorKind::RankDeficient, "the columns do not span a rank n lattice");

  if (a0vee) {
    if (a0vee->size() != n) throw Error(ErrorKind::DimensionMismatch, "a0vee has wrong length");
    for (std::size_t j = 0; j < big_n; ++j)
      if (dot(*a0vee, a.col(j)) != 1)
        throw Error(ErrorKind::NoDegreeFunctional, "a0vee does not take the value 1 on column " + std::to_string(j + 1));
    cfg.a0vee_ = *a0vee;
  } else {
    auto y = solve_degree_functional(a);
    if (!y) throw Error(ErrorKind::NoDegreeFunctional, "the columns do not lie on an integral hyperplane at height 1");
    cfg.a0vee_ = *y;
  }

  IntMatrix kernel = kernel_basis(a);
  if (b) {
    if (b->cols() != big_n || b->rows() != big_n - n)
      throw Error(ErrorKind::DimensionMismatch, "B must be (N-n) x N");
    IntMatrix prod = a * b->transpose();
    if (!(prod == IntMatrix(n, big_n - n)))
      throw Error(ErrorKind::NotInLattice, "A B^t is not zero");
    HermiteForm hf = row_hermite(*b);
    std::vector<std::size_t> top(hf.rank);
    for (std::size_t i = 0; i < hf.rank; ++i) top[i] = i;
    if (!(hf.H.select_rows(top) == kernel))
      throw Error(ErrorKind::NotInLattice, "rows of B are not a basis of the relation lattice");
    cfg.b_ = *b;
  } else {
    cfg.b_ = kernel;
  }
  cfg.a_ = std::move(a);

  for (std::size_t j = 0; j < big_n; ++j) {
    cfg.columns_.push_back(cfg.a_.col(j));
    cfg.bvec_.push_back(to_rational(cfg.b_.col(j)));
  }

  std::vector<RatVector> cols;
  for (const auto& c : cfg.columns_) cols.push_back(to_rational(c));
  RationalCone lam = RationalCone::from_generators(n, cols).completed();
  for (const auto& f : lam.facets()) cfg.facets_.push_back(primitive(f));

  const std::size_t k = big_n - n;
  for_each_combination(big_n, k, [&](const Simplex& j) {
    if (cfg.independent(complement(j, big_n))) cfg.cobases_.push_back(j);
  });

  if (k >= 1) {
    std::set<IntVector> normals;
    for_each_combination(big_n, k - 1, [&](const Simplex& j) {
      std::vector<RatVector> rows;
      for (auto i : j) rows.push_back(cfg.bvec_[i]);
      if (rank(rows, k) != k - 1) return;
      RatMatrix ns = nullspace(RatMatrix::from_rows(rows, k));
      IntVector nv = primitive(ns.row(0));
      for (const auto& x : nv)
        if (x != 0) {
          if (x < 0)
            for (auto& y : nv) y = -y;
          break;
        }
      normals.insert(nv);
    });
    for (const auto& nv : normals) cfg.walls_.push_back(to_rational(nv));
  }
  return cfg;
}

bool PointConfiguration::independent(const Simplex& s) const {
  if (s.size() > n()) return false;
  return rank(a_.select_columns(s)) == s.size();
}

Integer PointConfiguration::det(const Simplex& s) const {
  if (s.size() != n()) throw Error(ErrorKind::DimensionMismatch, "simplex size differs from n");
  return determinant(a_.select_columns(s));
}

bool PointConfiguration::lies_in_boundary(const Simplex& s) const {
  for (const auto& f : facets_) {
    bool all = true;
    for (auto i : s)
      if (dot(f, columns_[i]) != 0) {
        all = false;
        break;
      }
    if (all) return true;
  }
  return false;
}

bool PointConfiguration::on_wall(const RatVector& w) const {
  for (const auto& h : walls_)
    if (dot(h, w) == 0) return true;
  return false;
}

RatVector PointConfiguration::weight_from_heights(const RatVector& d) const {
  if (d.size() != N()) throw Error(ErrorKind::DimensionMismatch, "height vector has wrong length");
  return to_rational(b_) * d;
}

Triangulation::Triangulation(const PointConfiguration& cfg, std::vector<Simplex> maximal, RatVector weight)
    : n_(cfg.n()), big_n_(cfg.N()), maximal_(std::move(maximal)), weight_(std::move(weight)) {
  for (auto& s : maximal_) std::sort(s.begin(), s.end());
  std::sort(maximal_.begin(), maximal_.end());
  maximal_.erase(std::unique(maximal_.begin(), maximal_.end()), maximal_.end());
  std::uint64_t core_mask = ~std::uint64_t(0);
  for (const auto& s : maximal_) {
    masks_.push_back(mask_of(s));
    core_mask &= masks_.back();
    volumes_.push_back(cfg.volume(s));
  }
  if (maximal_.empty()) core_mask = 0;
  core_ = from_mask(core_mask & (big_n_ >= 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << big_n_) - 1)));
}

bool Triangulation::is_simplex_mask(std::uint64_t m) const {
  for (auto mm : masks_)
    if ((m & ~mm) == 0) return true;
  return false;
}

bool Triangulation::is_simplex(const Simplex& s) const { return is_simplex_mask(mask_of(s)); }

std::vector<std::vector<Simplex>> Triangulation::simplices_by_size() const {
  std::vector<std::set<Simplex>> by(n_ + 1);
  for (auto mm : masks_) {
    // all submasks of mm, including 0
    std::uint64_t sub = mm;
    while (true) {
      Simplex s = from_mask(sub);
      by[s.size()].insert(s);
      if (sub == 0) break;
      sub = (sub - 1) & mm;
    }
  }
  std::vector<std::vector<Simplex>> out;
  for (auto& s : by) out.emplace_back(s.begin(), s.end());
  return out;
}

bool Triangulation::is_unimodular() const {
  return std::all_of(volumes_.begin(), volumes_.end(), [](const Integer& v) { return v == 1; });
}

Integer Triangulation::volume_product() const {
  Integer p = 1;
  for (const auto& v : volumes_) p *= v;
  return p;
}

Integer Triangulation::total_volume() const {
  Integer s = 0;
  for (const auto& v : volumes_) s += v;
  return s;
}

Triangulation from_heights(const PointConfiguration& cfg, const RatVector& d) {
  const std::size_t n = cfg.n(), big_n = cfg.N();
  if (d.size() != big_n) throw Error(ErrorKind::DimensionMismatch, "height vector has wrong length");
  for (const auto& x : d)
    if (x <= 0) throw Error(ErrorKind::DegenerateHeights, "heights must be positive");

  std::vector<RatVector> lifted(big_n);
  for (std::size_t j = 0; j < big_n; ++j) {
    lifted[j] = to_rational(cfg.column(j));
    for (auto& x : lifted[j]) x /= d[j];
  }
  // det [[p_i ... x], [1 ... 1]] for i in I
  auto dfun = [&](const Simplex& s, const RatVector& x) {
    RatMatrix m(n + 1, n + 1);
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t r = 0; r < n; ++r) m(r, c) = lifted[s[c]][r];
      m(n, c) = 1;
    }
    for (std::size_t r = 0; r < n; ++r) m(r, n) = x[r];
    m(n, n) = 1;
    return determinant(m);
  };

  std::vector<Simplex> maximal;
  const RatVector origin(n);
  for_each_combination(big_n, n, [&](const Simplex& s) {
    if (!cfg.independent(s)) return;
    const int s0 = sgn(dfun(s, origin));
    bool lower = true;
    for (std::size_t j = 0; j < big_n; ++j) {
      if (std::binary_search(s.begin(), s.end(), j)) continue;
      const int sj = sgn(dfun(s, lifted[j]));
      if (sj == 0)
        throw Error(ErrorKind::DegenerateHeights,
                    "point " + std::to_string(j + 1) + " lies on the hyperplane through " + to_string(s));
      if (sj != s0) lower = false;
    }
    if (lower) maximal.push_back(s);
  });
  if (maximal.empty()) throw Error(ErrorKind::InternalInconsistency, "no lower facets found");
  return Triangulation(cfg, std::move(maximal), cfg.weight_from_heights(d));
}

Triangulation from_weight(const PointConfiguration& cfg, const RatVector& w) {
  if (w.size() != cfg.codim()) throw Error(ErrorKind::DimensionMismatch, "weight has wrong length");
  if (cfg.on_wall(w)) throw Error(ErrorKind::WallWeight, "weight lies on a hyperplane spanned by N-n-1 of the b_j");
  std::vector<Simplex> maximal;
  for (const auto& j : cfg.cobases()) {
    auto t = solve(to_rational(b_columns(cfg, j)), w);
    if (!t) throw Error(ErrorKind::InternalInconsistency, "cobasis is not invertible");
    if (std::all_of(t->begin(), t->end(), [](const Rational& x) { return x > 0; }))
      maximal.push_back(complement(j, cfg.N()));
  }
  if (maximal.empty()) throw Error(ErrorKind::InternalInconsistency, "weight selects no simplex");
  return Triangulation(cfg, std::move(maximal), w);
}

RationalCone secondary_cone(const PointConfiguration& cfg, const Triangulation& t) {
  std::vector<RatVector> ineqs;
  for (const auto& s : t.maximal()) {
    Simplex j = complement(s, cfg.N());
    SquareInverse inv = square_inverse(b_columns(cfg, j));
    for (std::size_t r = 0; r < inv.inverse.rows(); ++r) ineqs.push_back(inv.inverse.row(r));
  }
  return RationalCone::from_inequalities(cfg.codim(), ineqs).completed();
}

RationalCone dual_secondary_cone(const PointConfiguration& cfg, const Triangulation& t) {
  return dualize(secondary_cone(cfg, t));
}

Simplex core(const PointConfiguration& cfg, const Triangulation& t) {
  const Simplex& c = t.core();
  RationalCone dual = dual_secondary_cone(cfg, t);
  for (std::size_t j = 0; j < cfg.N(); ++j) {
    bool bounded_above_by_zero = true;
    for (const auto& m : dual.rays())
      if (dot(cfg.b(j), m) > 0) bounded_above_by_zero = false;
    for (const auto& m : dual.lineality())
      if (dot(cfg.b(j), m) != 0) bounded_above_by_zero = false;
    const bool in_core = std::binary_search(c.begin(), c.end(), j);
    if (in_core != bounded_above_by_zero)
      throw Error(ErrorKind::InternalInconsistency,
                  "core membership of index " + std::to_string(j + 1) + " disagrees with the dual secondary cone");
  }
  return c;
}

RatVector generic_weight(const PointConfiguration& cfg, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> pert(1, 999);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    RatVector d(cfg.N());
    for (auto& x : d) x = ratio(1000 + pert(rng), 1000);
    RatVector w = cfg.weight_from_heights(d);
    if (!cfg.on_wall(w)) return w;
  }
  throw Error(ErrorKind::InternalInconsistency, "no generic weight found");
}

RatVector generic_interior_point(const PointConfiguration& cfg, const RationalCone& cone, std::uint64_t seed) {
  RatVector p = scaled_to_integers(relative_interior_point(cone));
  if (contains_in_interior(cone, p) && !cfg.on_wall(p)) return p;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> ent(-5, 5);
  for (int s = 1; s < 64; ++s) {
    Rational eps(1, Integer(1) << s);
    for (int attempt = 0; attempt < 8; ++attempt) {
      RatVector w = p;
      for (auto& x : w) x += eps * ent(rng);
      if (contains_in_interior(cone, w) && !cfg.on_wall(w)) return w;
    }
  }
  throw Error(ErrorKind::NotRegular, "cone has no interior point off the walls");
}

Triangulation from_simplices(const PointConfiguration& cfg, std::vector<Simplex> maximal, std::uint64_t seed) {
  for (auto& s : maximal) {
    std::sort(s.begin(), s.end());
    if (s.size() != cfg.n() || std::adjacent_find(s.begin(), s.end()) != s.end() || s.back() >= cfg.N())
      throw Error(ErrorKind::DimensionMismatch, "maximal simplex must have n distinct indices in range");
    if (!cfg.independent(s)) throw Error(ErrorKind::NotRegular, "simplex " + to_string(s) + " is degenerate");
  }
  Triangulation guess(cfg, maximal, {});
  RationalCone c = secondary_cone(cfg, guess);
  if (!c.is_full_dimensional()) throw Error(ErrorKind::NotRegular, "secondary cone has empty interior");
  RatVector w = generic_interior_point(cfg, c, seed);
  Triangulation t = from_weight(cfg, w);
  if (!(t == guess)) throw Error(ErrorKind::NotRegular, "simplices are not the maximal simplices of a regular triangulation");
  return t;
}

bool Enumeration::connected() const {
  if (triangulations.empty()) return true;
  std::vector<std::vector<std::size_t>> adj(triangulations.size());
  for (auto [a, b] : adjacency) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> seen(triangulations.size(), false);
  std::queue<std::size_t> q;
  q.push(0);
  seen[0] = true;
  std::size_t count = 1;
  while (!q.empty()) {
    auto v = q.front();
    q.pop();
    for (auto u : adj[v])
      if (!seen[u]) {
        seen[u] = true;
        ++count;
        q.push(u);
      }
  }
  return count == triangulations.size();
}

Enumeration enumerate_regular(const PointConfiguration& cfg, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<long> ent(-7, 7);

  std::vector<Triangulation> found;
  std::map<std::vector<Simplex>, std::size_t> index;
  std::set<std::pair<std::size_t, std::size_t>> edges;
  std::queue<std::size_t> frontier;

  found.push_back(from_weight(cfg, generic_weight(cfg, seed)));
  index[found[0].maximal()] = 0;
  frontier.push(0);

  while (!frontier.empty()) {
    const std::size_t cur = frontier.front();
    frontier.pop();
    const Triangulation t = found[cur];
    RationalCone c = secondary_cone(cfg, t);
    for (const auto& f : c.facets()) {
      // a relative interior point of the facet
      RatVector p(cfg.codim());
      for (const auto& r : c.rays())
        if (dot(f, r) == 0)
          for (std::size_t i = 0; i < p.size(); ++i) p[i] += r[i];
      std::optional<Triangulation> next;
      for (int s = 0; s < 80 && !next; ++s) {
        Rational eps(1, Integer(1) << s);
        for (int attempt = 0; attempt < 16 && !next; ++attempt) {
          RatVector w(p.size());
          for (std::size_t i = 0; i < p.size(); ++i) {
            w[i] = p[i] - eps * f[i];
            if (attempt > 0) w[i] += eps * eps * ent(rng);
          }
          if (cfg.on_wall(w)) continue;
          Triangulation cand = from_weight(cfg, w);
          if (cand == t) continue;
          if (!contains(secondary_cone(cfg, cand), p)) continue;
          next = std::move(cand);
        }
      }
      if (!next) throw Error(ErrorKind::InternalInconsistency, "could not cross a facet of a secondary cone");
      auto it = index.find(next->maximal());
      std::size_t id;
      if (it == index.end()) {
        id = found.size();
        index[next->maximal()] = id;
        found.push_back(std::move(*next));
        frontier.push(id);
      } else {
        id = it->second;
      }
      edges.insert({std::min(cur, id), std::max(cur, id)});
    }
  }

  // Canonical order, independent of the starting weight.
  std::vector<std::size_t> order(found.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return found[a].maximal() < found[b].maximal(); });
  std::vector<std::size_t> rank_of(found.size());
  Enumeration out;
  out.seed = seed;
  for (std::size_t r = 0; r < order.size(); ++r) {
    rank_of[order[r]] = r;
    out.triangulations.push_back(found[order[r]]);
  }
  std::set<std::pair<std::size_t, std::size_t>> relabeled;
  for (auto [a, b] : edges) {
    auto x = rank_of[a], y = rank_of[b];
    relabeled.insert({std::min(x, y), std::max(x, y)});
  }
  out.adjacency.assign(relabeled.begin(), relabeled.end());
  return out;
}

Integer total_volume(const PointConfiguration& cfg, std::uint64_t seed) {
  return from_weight(cfg, generic_weight(cfg, seed)).total_volume();
}

}  // namespace gkz
