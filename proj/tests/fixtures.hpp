#pragma once

#include <string>
#include <vector>

#include "gkz/triang.hpp"
#include "oracles.hpp"

namespace fixture {

inline const gkz::PointConfiguration& example() {
  static const gkz::PointConfiguration cfg =
      gkz::PointConfiguration::make(oracle::example_A(), std::nullopt, oracle::example_B());
  return cfg;
}

// T_k of the example, k = 1..10.
inline const gkz::Triangulation& tri(std::size_t k) {
  static const std::vector<gkz::Triangulation> all = [] {
    std::vector<gkz::Triangulation> v;
    for (const auto& labels : oracle::example_triangulations())
      v.push_back(gkz::from_simplices(example(), oracle::parse_simplices(labels)));
    return v;
  }();
  return all.at(k - 1);
}

inline gkz::RatVector rv(std::initializer_list<long> xs) {
  gkz::RatVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace fixture
