#include "gkz/verify.hpp"

#include <random>

namespace gkz {

namespace {

std::string exponent_text(const Exponent& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + v[k].get_str();
  return out + ")";
}

}  // namespace

io::VerifyReport verify_series(const TruncatedSeries& s, std::uint64_t seed) {
  const GradedAlgebra& r = *s.ring();
  const PointConfiguration& cfg = r.config();
  const Triangulation& t = r.triangulation();
  io::VerifyReport rep;

  for (std::size_t i = 0; i < cfg.n(); ++i) {
    FormalSeries res = apply_euler(s, i);
    rep.checks.push_back({"euler_" + std::to_string(i + 1), true, res.empty(),
                          res.empty() ? "zero" : std::to_string(res.size()) + " nonzero terms"});
  }

  std::vector<Exponent> ells;
  for (std::size_t row = 0; row < cfg.codim(); ++row) ells.push_back(cfg.B().row(row));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> ent(-1, 1);
  for (int tries = 0; ells.size() < cfg.codim() + 5 && tries < 10000; ++tries) {
    Exponent ell(cfg.N());
    for (std::size_t row = 0; row < cfg.codim(); ++row) {
      const long m = ent(rng);
      for (std::size_t j = 0; j < cfg.N(); ++j) ell[j] += m * cfg.B()(row, j);
    }
    const Integer norm = l1_norm(ell);
    if (norm == 0 || norm > 4) continue;
    ells.push_back(std::move(ell));
  }
  bool box_ok = true;
  std::string failed;
  for (const auto& ell : ells) {
    if (apply_box(s, ell).interior_zero) continue;
    box_ok = false;
    failed += (failed.empty() ? "" : " ") + exponent_text(ell);
  }
  rep.checks.push_back({"box", true, box_ok,
                        box_ok ? std::to_string(ells.size()) + " relations" : "nonzero for " + failed});

  for (std::size_t j = 0; j < cfg.N(); ++j) {
    const std::string name = "recursion_" + std::to_string(j + 1);
    if (s.order_bound() < 1) {
      rep.checks.push_back({name, false, false, "order bound below 1"});
      continue;
    }
    IntVector shifted = s.beta();
    for (std::size_t k = 0; k < cfg.n(); ++k) shifted[k] -= cfg.column(j)[k];
    const bool ok = differentiate(s, j) == build_series(s.ring(), shifted, s.order_bound() - 1);
    rep.checks.push_back({name, true, ok, ok ? "equal" : "differs"});
  }

  IntVector a0(cfg.n());
  for (auto i : t.core())
    for (std::size_t k = 0; k < cfg.n(); ++k) a0[k] += cfg.column(i)[k];
  std::optional<Integer> mult;
  if (!t.core().empty() && !is_zero(a0)) {
    std::size_t p = 0;
    while (a0[p] == 0) ++p;
    if (s.beta()[p] % a0[p] == 0) {
      const Integer k = -s.beta()[p] / a0[p];
      bool same = k >= 1;
      for (std::size_t q = 0; q < cfg.n() && same; ++q) same = s.beta()[q] == -k * a0[q];
      if (same) mult = k;
    }
  }
  if (!mult) {
    rep.checks.push_back({"core_ideal", false, false, "beta is not a negative multiple of the core sum"});
  } else {
    const Subspace id = ideal(r, core_element(r));
    std::size_t outside = 0;
    for (const auto& term : s.terms())
      if (!in_subspace(id, term.coeff)) ++outside;
    rep.checks.push_back({"core_ideal", true, outside == 0,
                          outside == 0 ? "all coefficients in the ideal" : std::to_string(outside) + " outside"});
  }
  return rep;
}

}  // namespace gkz
