#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"

using namespace gkz;
using fixture::rv;

namespace {

PointConfiguration segment() { return PointConfiguration::make(IntMatrix::from_rows({{1, 1, 1}, {0, 1, 2}})); }

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("point configuration invariants") {
  const auto& cfg = fixture::example();
  CHECK(cfg.a0vee() == IntVector{1, 0, 0});
  CHECK(cfg.codim() == 3);
  for (std::size_t r = 0; r < cfg.codim(); ++r) {
    Integer s = 0;
    for (std::size_t j = 0; j < cfg.N(); ++j) s += cfg.B()(r, j);
    CHECK(s == 0);
  }
  CHECK(cfg.facet_normals().size() == 5);
  CHECK(kind_of([] { PointConfiguration::make(IntMatrix::from_rows({{1, 0, 1}, {0, 1, 1}})); }) ==
        ErrorKind::NoDegreeFunctional);
  CHECK(kind_of([] { PointConfiguration::make(IntMatrix::from_rows({{1, 1}, {1, 1}})); }) ==
        ErrorKind::RankDeficient);
  // B spanning an index-2 sublattice is rejected
  IntMatrix b2 = oracle::example_B();
  for (std::size_t c = 0; c < 6; ++c) b2(0, c) *= 2;
  CHECK(kind_of([&] { PointConfiguration::make(oracle::example_A(), std::nullopt, b2); }) ==
        ErrorKind::NotInLattice);
}

TEST_CASE("volumes") {
  const auto& cfg = fixture::example();
  CHECK(cfg.volume({0, 2, 5}) == abs(oracle::cofactor_det(cfg.A().select_columns(std::vector<std::size_t>{0, 2, 5}))));
  CHECK(cfg.volume({0, 2, 5}) == 2);
  const auto& t1 = fixture::tri(1);
  CHECK(t1.is_unimodular());
  CHECK(t1.volume_product() == 1);
  CHECK(fixture::tri(8).volumes() == std::vector<Integer>{1, 3, 1});
}

TEST_CASE("total volume matches the hull area of the planar slice") {
  const auto& cfg = fixture::example();
  std::vector<std::pair<long, long>> pts;
  for (std::size_t j = 0; j < cfg.N(); ++j)
    pts.emplace_back(cfg.A()(1, j).get_si(), cfg.A()(2, j).get_si());
  Integer area2 = oracle::doubled_hull_area(pts);
  CHECK(area2 == 5);
  CHECK(total_volume(cfg) == area2);
  for (std::size_t k = 1; k <= 10; ++k) CHECK(fixture::tri(k).total_volume() == area2);
}

TEST_CASE("from_weight on the example") {
  const auto& cfg = fixture::example();
  const auto& t1 = fixture::tri(1);
  Triangulation again = from_weight(cfg, t1.weight());
  CHECK(again.maximal() == oracle::parse_simplices({"124", "134", "245", "346", "456"}));
  CHECK(kind_of([&] { from_weight(cfg, rv({0, 0, 0})); }) == ErrorKind::WallWeight);
  CHECK(kind_of([&] { from_weight(cfg, rv({0, 0})); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("from_heights") {
  auto seg = segment();
  auto low = from_heights(seg, {Rational(1), Rational(1, 2), Rational(1)});
  CHECK(low.maximal() == std::vector<Simplex>{{0, 1}, {1, 2}});
  auto high = from_heights(seg, {Rational(1), Rational(2), Rational(1)});
  CHECK(high.maximal() == std::vector<Simplex>{{0, 2}});
  // with d = (1,2,1) the point a_2/2 = (1/2, 1/2) lies above the chord from a_1 to a_3
  // relative to the origin: det[[1,1/2,1],[0,1/2,2],[1,1,1]] and det of the same with 0
  RatMatrix m = to_rational(IntMatrix::from_rows({{1, 0, 1}, {0, 2, 1}, {1, 1, 1}}));
  m(0, 1) = Rational(1, 2);
  m(1, 1) = Rational(1, 2);
  RatMatrix m0 = to_rational(IntMatrix::from_rows({{1, 0, 1}, {0, 0, 2}, {1, 1, 1}}));
  CHECK(sgn(determinant(m) * determinant(m0)) > 0);

  const auto& cfg = fixture::example();
  RatVector ones(6, Rational(1));
  CHECK(kind_of([&] { from_heights(cfg, ones); }) == ErrorKind::DegenerateHeights);

  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> ent(1, 50);
  int agreed = 0;
  for (int t = 0; t < 40; ++t) {
    RatVector d(6);
    for (auto& x : d) x = ratio(ent(rng), ent(rng));
    RatVector w = cfg.weight_from_heights(d);
    Triangulation th;
    try {
      th = from_heights(cfg, d);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DegenerateHeights);
      continue;
    }
    if (cfg.on_wall(w)) continue;
    CHECK(from_weight(cfg, w).maximal() == th.maximal());
    ++agreed;
  }
  CHECK(agreed > 20);
}

TEST_CASE("enumeration of the example") {
  const auto& cfg = fixture::example();
  Enumeration e = enumerate_regular(cfg, 0);
  CHECK(e.triangulations.size() == 10);
  CHECK(e.connected());
  std::set<std::vector<Simplex>> got, want;
  for (const auto& t : e.triangulations) got.insert(t.maximal());
  for (const auto& l : oracle::example_triangulations()) want.insert(oracle::parse_simplices(l));
  CHECK(got == want);

  Enumeration e2 = enumerate_regular(cfg, 12345);
  REQUIRE(e2.triangulations.size() == e.triangulations.size());
  for (std::size_t i = 0; i < e.triangulations.size(); ++i)
    CHECK(e.triangulations[i].maximal() == e2.triangulations[i].maximal());
  CHECK(e.adjacency == e2.adjacency);

  // every chamber of the arrangement of all H_J lands in one of the ten
  std::set<std::vector<Simplex>> via_chambers;
  for (const auto& ch : chambers(cfg.wall_normals())) via_chambers.insert(from_weight(cfg, ch.witness).maximal());
  CHECK(via_chambers == want);
}

TEST_CASE("small enumerations") {
  CHECK(enumerate_regular(segment()).triangulations.size() == 2);
  auto tri = PointConfiguration::make(IntMatrix::from_rows({{1, 1, 1}, {0, 1, 0}, {0, 0, 1}}));
  auto e = enumerate_regular(tri);
  REQUIRE(e.triangulations.size() == 1);
  CHECK(e.triangulations[0].maximal() == std::vector<Simplex>{{0, 1, 2}});
  Triangulation only = from_weight(tri, {});
  CHECK(only.maximal() == std::vector<Simplex>{{0, 1, 2}});
}

TEST_CASE("secondary cones") {
  const auto& cfg = fixture::example();
  const auto& t1 = fixture::tri(1);
  RationalCone c1 = secondary_cone(cfg, t1);
  CHECK(contains_in_interior(c1, t1.weight()));
  CHECK(contains(c1, t1.weight()));
  CHECK(c1.dimension() == 3);
  for (std::size_t a = 1; a <= 10; ++a)
    for (std::size_t b = a + 1; b <= 10; ++b)
      CHECK_FALSE(interiors_intersect(secondary_cone(cfg, fixture::tri(a)), secondary_cone(cfg, fixture::tri(b))));

  // C_{T1}^v: rays and small lattice points all have ell_4 <= 0
  RationalCone d1 = dual_secondary_cone(cfg, t1);
  for (const auto& m : extreme_rays(d1).rays) CHECK(dot(cfg.b(3), to_rational(m)) <= 0);
  int inside = 0;
  for (long x = -3; x <= 3; ++x)
    for (long y = -3; y <= 3; ++y)
      for (long z = -3; z <= 3; ++z) {
        RatVector m = rv({x, y, z});
        if (!contains(d1, m)) continue;
        ++inside;
        CHECK(dot(cfg.b(3), m) <= 0);
      }
  CHECK(inside > 1);
}

TEST_CASE("cores") {
  const auto& cfg = fixture::example();
  std::map<std::size_t, Simplex> expected{{1, {3}}, {2, {}}, {3, {}}, {4, {}}, {5, {}},
                                          {6, {4}}, {7, {2}}, {8, {1}}, {9, {5}}, {10, {0}}};
  for (auto& [k, c] : expected) {
    CAPTURE(k);
    CHECK(core(cfg, fixture::tri(k)) == c);
  }
  auto seg = segment();
  CHECK(core(seg, from_heights(seg, {Rational(1), Rational(1, 2), Rational(1)})) == Simplex{1});
  CHECK(core(seg, from_heights(seg, {Rational(1), Rational(2), Rational(1)})) == Simplex{0, 2});
}

TEST_CASE("simplices not containing the core lie in the boundary") {
  const auto& cfg = fixture::example();
  for (std::size_t k = 1; k <= 10; ++k) {
    const auto& t = fixture::tri(k);
    auto by = t.simplices_by_size();
    CHECK(by[0].size() == 1);
    CHECK(by[3].size() == t.maximal().size());
    std::uint64_t cm = mask_of(t.core());
    for (const auto& level : by)
      for (const auto& s : level)
        if ((mask_of(s) & cm) != cm) CHECK(cfg.lies_in_boundary(s));
    if (t.is_unimodular()) CHECK(by[1].size() == cfg.N());
  }
  auto by1 = fixture::tri(1).simplices_by_size();
  CHECK(by1[1].size() == 6);
  CHECK(by1[2].size() == 10);
  CHECK(by1[3].size() == 5);
}

TEST_CASE("from_simplices rejects non-triangulations") {
  const auto& cfg = fixture::example();
  CHECK(kind_of([&] { from_simplices(cfg, oracle::parse_simplices({"124", "134"})); }) == ErrorKind::NotRegular);
  CHECK(kind_of([&] { from_simplices(cfg, oracle::parse_simplices({"124", "134", "256", "346", "456"})); }) ==
        ErrorKind::NotRegular);
  CHECK(kind_of([&] { from_simplices(cfg, oracle::parse_simplices({"12"})); }) == ErrorKind::DimensionMismatch);
}
