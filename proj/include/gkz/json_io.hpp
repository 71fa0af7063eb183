#pragma once

// JSON forms of every artifact. Integers and rationals are written as exact
// strings ("3", "-2/5"); point labels inside simplices are 1-based JSON
// integers. Parsers accept JSON numbers or strings for exact values.

#include <string>
#include <vector>

#include "json.hpp"

#include "gkz/gorcone.hpp"
#include "gkz/gseries.hpp"
#include "gkz/srring.hpp"

namespace gkz::io {

using Json = nlohmann::json;

Json to_json(const Integer& x);
Json to_json(const Rational& x);
Json to_json(const IntVector& v);
Json to_json(const RatVector& v);
Json to_json(const IntMatrix& m);
Integer integer_from(const Json& j);
Rational rational_from(const Json& j);
IntVector int_vector_from(const Json& j);
RatVector rat_vector_from(const Json& j);
IntMatrix int_matrix_from(const Json& j);

Json simplex_json(const Simplex& s);
Simplex simplex_from(const Json& j, std::size_t big_n);

/// {"A", "a0vee", "B"}; a0vee and B are optional on input.
Json to_json(const PointConfiguration& cfg);
PointConfiguration config_from(const Json& j);

/// Named triangulations listed under "triangulations" in a configuration file.
std::vector<std::pair<std::string, std::vector<Simplex>>> named_triangulations(const Json& j, std::size_t big_n);

Json to_json(const Triangulation& t);
Triangulation triangulation_from(const PointConfiguration& cfg, const Json& j);

Json to_json(const Enumeration& e);
Enumeration enumeration_from(const PointConfiguration& cfg, const Json& j);

Json to_json(const std::vector<Chamber>& ch);
std::vector<Chamber> chambers_from(const Json& j);

struct RingReport {
  std::vector<Simplex> maximal;
  std::vector<std::size_t> dims_per_degree;
  std::vector<std::string> basis;
  std::vector<RatVector> generators;  // coordinates of c_1..c_N
  std::vector<std::string> relations;
  std::vector<Integer> poincare_ring, poincare_simplices;
  bool poincare_equal = false;
  RatVector core_element;

  bool operator==(const RingReport&) const = default;
};
RingReport ring_report(const GradedAlgebra& r);
Json to_json(const RingReport& r);
RingReport ring_report_from(const Json& j);

/// {beta, gamma0, order_bound, terms: [{lambda, coeff_coords}]}
Json to_json(const TruncatedSeries& s);
TruncatedSeries series_from(const AlgebraPtr& r, const Json& j);

/// One named pass/fail line of `verify`. Inapplicable checks count as passed.
struct CheckResult {
  std::string name;
  bool applicable = true;
  bool passed = false;
  std::string detail;

  bool operator==(const CheckResult&) const = default;
};
struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
  bool operator==(const VerifyReport&) const = default;
};
Json to_json(const VerifyReport& v);
VerifyReport verify_report_from(const Json& j);

std::string complex_string(const std::complex<long double>& z);  // "a+bi"
std::complex<long double> complex_from(const std::string& s);

Json to_json(const ComplexRingElement& x);
ComplexRingElement complex_element_from(const Json& j);

Json to_json(const GorensteinReport& g);
GorensteinReport gorenstein_from(const Json& j, std::size_t big_n);

Json to_json(const InteriorCheck& c);
InteriorCheck interior_check_from(const Json& j);

Json to_json(const ProjectedFan& f);
ProjectedFan fan_from(const Json& j, std::size_t big_n);

Json error_json(const Error& e);

/// Two-space indented text with a trailing newline.
std::string dump(const Json& j);

}  // namespace gkz::io
