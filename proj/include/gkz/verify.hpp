#pragma once

#include <cstdint>

#include "gkz/json_io.hpp"

namespace gkz {

/// Checks run by `verify` on a series:
///   euler_i      exact zero residual, i = 1..n
///   box          interior zero for the rows of B and 5 seeded random ell with ||ell|| <= 4
///   recursion_j  differentiate(s, j) == build_series(beta - a_j, L - 1), j = 1..N
///   core_ideal   coefficients in c_core R; applicable when beta = -k * a0 with k >= 1
io::VerifyReport verify_series(const TruncatedSeries& s, std::uint64_t seed = 0);

}  // namespace gkz
