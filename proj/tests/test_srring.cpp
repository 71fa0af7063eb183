#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "gkz/srring.hpp"

using namespace gkz;
using fixture::rv;

namespace {

AlgebraPtr ring(std::size_t k) { return GradedAlgebra::build(fixture::example(), fixture::tri(k)); }

AlgebraElement random_element(const GradedAlgebra& r, std::mt19937_64& rng, bool drop_constant) {
  std::uniform_int_distribution<long> ent(-4, 4);
  AlgebraElement x = r.zero();
  for (auto& c : x.coords) c = ratio(ent(rng), 1 + (ent(rng) + 4) % 3);
  if (drop_constant) x.coords[0] = 0;
  return x;
}

}  // namespace

TEST_CASE("ring dimensions and the Poincare identity for all ten triangulations") {
  for (std::size_t k = 1; k <= 10; ++k) {
    CAPTURE(k);
    auto r = ring(k);
    CHECK(r->dim() == fixture::tri(k).maximal().size());
    PoincareCheck pc = poincare_check(*r);
    CHECK(pc.equal);
    for (std::size_t j = 0; j < 6; ++j) CHECK(r->power(r->generator(j), 3).is_zero());
  }
  PoincareCheck t1 = poincare_check(*ring(1));
  CHECK(t1.simplex_side == std::vector<Integer>{1, 3, 1, 0});
  CHECK(ring(1)->dims_per_degree() == std::vector<std::size_t>{1, 3, 1});
}

TEST_CASE("presentation of R_{A,T5}") {
  auto r = ring(5);
  auto c = [&](std::size_t j) { return r->generator(j - 1); };
  CHECK(r->mul(c(1), c(1)).is_zero());
  CHECK(r->mul(c(2), c(2)).is_zero());
  CHECK(r->mul(c(5), c(5)).is_zero());
  CHECK(r->mul(c(1), c(2)).is_zero());
  CHECK(r->mul(c(2), c(5)).is_zero());
  CHECK_FALSE(r->mul(c(1), c(5)).is_zero());
  // c1, c2, c5 span degree one
  CHECK(rank(std::vector<RatVector>{c(1).coords, c(2).coords, c(5).coords}, r->dim()) == 3);
  // c2 kills the whole degree one part
  for (std::size_t j = 1; j <= 6; ++j) CHECK(r->mul(c(2), c(j)).is_zero());
}

TEST_CASE("presentation of R_{A,T1}") {
  auto r = ring(1);
  auto c = [&](std::size_t j) { return r->generator(j - 1); };
  auto m = [&](std::size_t i, std::size_t j) { return r->mul(c(i), c(j)); };
  CHECK((m(1, 1) - m(2, 2)).is_zero());
  CHECK((m(1, 1) - m(5, 5)).is_zero());
  CHECK((m(1, 1) + m(1, 2)).is_zero());
  CHECK((m(1, 1) + m(2, 5)).is_zero());
  CHECK(m(1, 5).is_zero());
  CHECK(c(4) == Rational(-2) * c(1) - Rational(3) * c(2) - Rational(2) * c(5));
  CHECK(m(4, 1) == m(4, 2));
  CHECK(m(4, 2) == m(4, 5));
  CHECK_FALSE(m(4, 1).is_zero());
  // c3 = c2 + c5 and c6 = c1 + c2
  CHECK(c(3) == c(2) + c(5));
  CHECK(c(6) == c(1) + c(2));

  auto rels = relations_in_reduced_generators(*r);
  std::size_t deg2 = 0;
  for (const auto& rel : rels)
    if (degree(rel.terms.front().first) == 2) ++deg2;
  CHECK(deg2 == 5);
  CHECK(rels.size() == 5);
}

TEST_CASE("ring of a single simplex") {
  auto cfg = PointConfiguration::make(IntMatrix::from_rows({{1, 1, 1}, {0, 1, 0}, {0, 0, 1}}));
  auto t = from_weight(cfg, {});
  auto r = GradedAlgebra::build(cfg, t);
  CHECK(r->dim() == 1);
  for (std::size_t j = 0; j < 3; ++j) CHECK(r->generator(j).is_zero());
  CHECK(poincare_check(*r).ring_side == std::vector<Integer>{1, 0, 0, 0});
  CHECK(poincare_check(*r).equal);
  auto db = distinguished_basis(cfg, *r, rv({3, 1, 1}));
  REQUIRE(db.size() == 1);
  CHECK(db[0].second == r->one());
}

TEST_CASE("multiplication is a commutative associative unital product") {
  std::mt19937_64 rng(8);
  for (std::size_t k : {1, 5, 6, 8}) {
    auto r = ring(k);
    for (int t = 0; t < 10; ++t) {
      auto x = random_element(*r, rng, false), y = random_element(*r, rng, false), z = random_element(*r, rng, false);
      CHECK(r->mul(x, r->one()) == x);
      CHECK(r->mul(x, y) == r->mul(y, x));
      CHECK(r->mul(r->mul(x, y), z) == r->mul(x, r->mul(y, z)));
      CHECK(r->mul(x, y + z) == r->mul(x, y) + r->mul(x, z));
    }
  }
}

TEST_CASE("distinguished bases") {
  const auto& cfg = fixture::example();
  auto r = ring(1);
  std::vector<RatVector> xis{
      {Rational(1), Rational(1, 7), Rational(1, 11)},
      {Rational(1), Rational(-2, 9), Rational(1, 13)},
      {Rational(1), Rational(3, 17), Rational(-5, 19)},
  };
  for (const auto& xi : xis) {
    auto db = distinguished_basis(cfg, *r, xi);
    REQUIRE(db.size() == 5);
    std::size_t ones = 0;
    std::vector<RatVector> rows;
    for (const auto& [s, c] : db) {
      if (c == r->one()) ++ones;
      rows.push_back(c.coords);
    }
    CHECK(ones == 1);
    CHECK(determinant(RatMatrix::from_rows(rows)) != 0);
  }
  for (std::size_t k = 2; k <= 10; ++k) {
    auto rk = ring(k);
    CHECK(distinguished_basis(cfg, *rk, xis[0]).size() == rk->dim());
  }
  try {
    distinguished_basis(cfg, *r, rv({1, 0, 0}));
    FAIL("expected DegenerateXi");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateXi);
  }
}

TEST_CASE("core element, annihilator and ideal") {
  auto r1 = ring(1);
  AlgebraElement cc = core_element(*r1);
  CHECK(cc == r1->generator(3));
  MultiplicationIso iso = multiplication_iso(*r1, cc);
  CHECK(iso.quotient_dim == iso.image_dim);
  CHECK(iso.injective);
  CHECK(iso.image_dim == r1->dim() - annihilator(*r1, cc).dim());
  CHECK(ideal(*r1, cc).dim() == 2);  // c4 and c4^2 direction

  auto r3 = ring(3);
  CHECK(core_element(*r3) == r3->one());
  CHECK(annihilator(*r3, r3->one()).dim() == 0);
  CHECK(ideal(*r3, r3->one()).dim() == r3->dim());

  for (std::size_t k = 1; k <= 10; ++k) {
    auto r = ring(k);
    MultiplicationIso m = multiplication_iso(*r, core_element(*r));
    CHECK(m.injective);
    CHECK(m.quotient_dim == m.image_dim);
  }
}

TEST_CASE("exponential of nilpotent elements") {
  auto r = ring(1);
  CHECK(exp_element(*r, r->zero()) == r->one());
  AlgebraElement c1 = r->generator(0);
  CHECK(exp_element(*r, c1) == r->one() + c1 + Rational(1, 2) * r->mul(c1, c1));
  std::mt19937_64 rng(4);
  for (int t = 0; t < 10; ++t) {
    auto x = random_element(*r, rng, true);
    CHECK(r->mul(exp_element(*r, x), exp_element(*r, -x)) == r->one());
  }
  try {
    exp_element(*r, r->one());
    FAIL("expected NotNilpotent");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotNilpotent);
  }
}

TEST_CASE("degree one part of a unimodular ring matches the b_j") {
  const auto& cfg = fixture::example();
  for (std::size_t k = 1; k <= 10; ++k) {
    if (!fixture::tri(k).is_unimodular()) continue;
    auto r = ring(k);
    CHECK(r->dims_per_degree()[1] == cfg.codim());
    // linear relations among the c_j versus among the b_j
    RatMatrix cmap(r->dim(), 6), bmap(3, 6);
    for (std::size_t j = 0; j < 6; ++j) {
      auto cj = r->generator(j);
      for (std::size_t i = 0; i < r->dim(); ++i) cmap(i, j) = cj.coords[i];
      for (std::size_t i = 0; i < 3; ++i) bmap(i, j) = cfg.b(j)[i];
    }
    Subspace kc(6, nullspace(cmap).to_rows()), kb(6, nullspace(bmap).to_rows());
    Subspace rows(6, to_rational(cfg.A()).to_rows());
    CHECK(kc == kb);
    CHECK(kc == rows);
  }
}
