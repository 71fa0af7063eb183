#pragma once

// Test-side reference computations. Deliberately naive and independent of the
// library algorithms they check.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <utility>
#include <optional>
#include <string>
#include <vector>

#include "gkz/exactla.hpp"

namespace oracle {

using gkz::Integer;
using gkz::IntMatrix;
using gkz::IntVector;
using gkz::Rational;

inline IntMatrix example_A() {
  return IntMatrix::from_rows({{1, 1, 1, 1, 1, 1}, {0, 1, -1, 0, 1, 0}, {1, 1, 0, 0, 0, -1}});
}

inline IntMatrix example_B() {
  return IntMatrix::from_rows({{1, 0, 0, -2, 0, 1}, {0, 1, 1, -3, 0, 1}, {0, 0, 1, -2, 1, 0}});
}

// Vertices 1..14 of the zonotope spanned by the columns of example_B().
inline std::vector<std::string> zonotope_sign_vectors() {
  return {"+++-++", "-++-++", "+-+-++", "+++--+", "-++--+", "-++-+-", "+---++",
          "+-+-+-", "++---+", "-+---+", "-+++-+", "-++---", "--+-+-", "-++++-"};
}

// The ten regular triangulations of the example, read off the picture of the
// pentagon. Digits are 1-based point labels.
inline std::vector<std::vector<std::string>> example_triangulations() {
  return {
      {"124", "134", "245", "346", "456"},  // T1
      {"123", "234", "245", "346", "456"},  // T2
      {"123", "234", "246", "256", "346"},  // T3
      {"124", "134", "246", "256", "346"},  // T4
      {"125", "134", "145", "346", "456"},  // T5
      {"125", "135", "356"},                // T6
      {"123", "235", "356"},                // T7
      {"123", "236", "256"},                // T8
      {"126", "136", "256"},                // T9
      {"125", "136", "156"},                // T10
  };
}

inline std::vector<std::vector<std::size_t>> parse_simplices(const std::vector<std::string>& labels) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& l : labels) {
    std::vector<std::size_t> s;
    for (char c : l) s.push_back(static_cast<std::size_t>(c - '1'));
    out.push_back(s);
  }
  return out;
}

// Twice the area of the convex hull of planar integer points (monotone chain
// plus shoelace).
inline Integer doubled_hull_area(std::vector<std::pair<long, long>> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return 0;
  auto cross = [](std::pair<long, long> o, std::pair<long, long> a, std::pair<long, long> b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
  };
  std::vector<std::pair<long, long>> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i - 1]) <= 0) --k;
    hull[k++] = pts[i - 1];
  }
  hull.resize(k - 1);
  Integer twice = 0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    auto [x1, y1] = hull[i];
    auto [x2, y2] = hull[(i + 1) % hull.size()];
    twice += Integer(x1 * y2 - x2 * y1);
  }
  return abs(twice);
}

// Laplace expansion along the first row.
inline Integer cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    Integer term = m(0, j) * cofactor_det(minor);
    total += (j % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

// Coefficients x with sum_r x_r rows[r] = v, when the rows are independent.
inline std::optional<std::vector<Rational>> coords_in_rows(const IntMatrix& rows, const IntVector& v) {
  const std::size_t k = rows.rows(), n = rows.cols();
  // augmented system n x (k+1)
  std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < k; ++r) aug[i][r] = rows(r, i);
    aug[i][k] = v[i];
  }
  std::vector<std::size_t> piv;
  std::size_t row = 0;
  for (std::size_t c = 0; c < k && row < n; ++c) {
    std::size_t p = row;
    while (p < n && aug[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(aug[p], aug[row]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || aug[i][c] == 0) continue;
      Rational f = aug[i][c] / aug[row][c];
      for (std::size_t j = 0; j <= k; ++j) aug[i][j] -= f * aug[row][j];
    }
    piv.push_back(c);
    ++row;
  }
  for (std::size_t i = row; i < n; ++i)
    if (aug[i][k] != 0) return std::nullopt;
  std::vector<Rational> x(k);
  for (std::size_t t = 0; t < piv.size(); ++t) x[piv[t]] = aug[t][k] / aug[t][piv[t]];
  return x;
}

inline bool in_row_lattice(const IntMatrix& rows, const IntVector& v) {
  auto x = coords_in_rows(rows, v);
  if (!x) return false;
  for (const auto& q : *x)
    if (q.get_den() != 1) return false;
  return true;
}

// Every integer N-vector with l1 norm <= bound, A x = beta, and negative
// support inside one of the listed simplices. Plain recursion over the ball.
inline std::vector<IntVector> brute_force_support(const IntMatrix& a, const IntVector& beta,
                                                  const std::vector<std::vector<std::size_t>>& simplices, long bound) {
  const std::size_t n = a.cols();
  std::vector<IntVector> out;
  std::vector<long> x(n, 0);
  auto rec = [&](auto&& self, std::size_t j, long left) -> void {
    if (j == n) {
      for (std::size_t i = 0; i < a.rows(); ++i) {
        Integer s = 0;
        for (std::size_t c = 0; c < n; ++c) s += a(i, c) * x[c];
        if (s != beta[i]) return;
      }
      bool ok = false;
      for (const auto& simplex : simplices) {
        bool inside = true;
        for (std::size_t c = 0; c < n; ++c)
          if (x[c] < 0 && std::find(simplex.begin(), simplex.end(), c) == simplex.end()) inside = false;
        ok = ok || inside;
      }
      if (!ok) return;
      IntVector v;
      for (long e : x) v.emplace_back(e);
      out.push_back(v);
      return;
    }
    for (long e = -left; e <= left; ++e) {
      x[j] = e;
      self(self, j + 1, left - (e < 0 ? -e : e));
    }
    x[j] = 0;
  };
  rec(rec, 0, bound);
  return out;
}

// Convex hull of planar points, counter-clockwise, collinear points dropped.
inline std::vector<std::pair<long, long>> planar_hull(std::vector<std::pair<long, long>> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  auto cross = [](std::pair<long, long> o, std::pair<long, long> a, std::pair<long, long> b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
  };
  std::vector<std::pair<long, long>> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i - 1]) <= 0) --k;
    hull[k++] = pts[i - 1];
  }
  hull.resize(k - 1);
  return hull;
}

// Point in a counter-clockwise convex polygon scaled by s; strict excludes the boundary.
inline bool in_polygon(const std::vector<std::pair<long, long>>& ccw, long s, std::pair<long, long> p, bool strict) {
  for (std::size_t i = 0; i < ccw.size(); ++i) {
    auto a = ccw[i], b = ccw[(i + 1) % ccw.size()];
    long c = (s * b.first - s * a.first) * (p.second - s * a.second) - (s * b.second - s * a.second) * (p.first - s * a.first);
    if (c < 0 || (strict && c == 0)) return false;
  }
  return true;
}

}  // namespace oracle
