#include "gkz/json_io.hpp"

#include <cstdio>
#include <cstdlib>

namespace gkz::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  return j;
}

std::string long_double_string(long double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.21Lg", x);
  return buf;
}

long double long_double_from(const std::string& s) {
  char* end = nullptr;
  long double x = std::strtold(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') bad("bad floating value \"" + s + "\"");
  return x;
}

std::size_t size_from(const Json& j) {
  if (j.is_number_unsigned()) return j.get<std::size_t>();
  Integer x = integer_from(j);
  if (x < 0 || !x.fits_ulong_p()) bad("expected a nonnegative count");
  return x.get_ui();
}

std::vector<Simplex> simplices_from(const Json& j, std::size_t big_n) {
  std::vector<Simplex> out;
  for (const auto& s : array(j, "simplex list")) out.push_back(simplex_from(s, big_n));
  return out;
}

Json simplices_json(const std::vector<Simplex>& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(simplex_json(s));
  return out;
}

Json int_vectors_json(const std::vector<IntVector>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

std::vector<IntVector> int_vectors_from(const Json& j) {
  std::vector<IntVector> out;
  for (const auto& x : array(j, "vector list")) out.push_back(int_vector_from(x));
  return out;
}

}  // namespace

Json to_json(const Integer& x) { return x.get_str(); }
Json to_json(const Rational& x) { return gkz::to_string(x); }

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const RatVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Integer integer_from(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (!j.is_string()) bad("expected an integer");
  const std::string s = j.get<std::string>();
  Integer x;
  if (s.empty() || x.set_str(s, 10) != 0) bad("bad integer \"" + s + "\"");
  return x;
}

Rational rational_from(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) bad("expected a rational");
  return parse_rational(j.get<std::string>());
}

IntVector int_vector_from(const Json& j) {
  IntVector v;
  for (const auto& x : array(j, "integer vector")) v.push_back(integer_from(x));
  return v;
}

RatVector rat_vector_from(const Json& j) {
  RatVector v;
  for (const auto& x : array(j, "rational vector")) v.push_back(rational_from(x));
  return v;
}

IntMatrix int_matrix_from(const Json& j) {
  std::vector<IntVector> rows;
  for (const auto& r : array(j, "matrix")) rows.push_back(int_vector_from(r));
  if (rows.empty()) bad("empty matrix");
  try {
    return IntMatrix::from_rows(rows);
  } catch (const Error&) {
    bad("ragged matrix");
  }
}

Json simplex_json(const Simplex& s) {
  Json out = Json::array();
  for (auto i : s) out.push_back(i + 1);
  return out;
}

Simplex simplex_from(const Json& j, std::size_t big_n) {
  Simplex s;
  for (const auto& x : array(j, "simplex")) {
    if (!x.is_number_integer()) bad("simplex labels must be integers");
    const long v = x.get<long>();
    if (v < 1 || static_cast<std::size_t>(v) > big_n) bad("simplex label out of range");
    s.push_back(static_cast<std::size_t>(v - 1));
  }
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) bad("repeated simplex label");
  return s;
}

Json to_json(const PointConfiguration& cfg) {
  return {{"A", to_json(cfg.A())}, {"a0vee", to_json(cfg.a0vee())}, {"B", to_json(cfg.B())}};
}

PointConfiguration config_from(const Json& j) {
  IntMatrix a = int_matrix_from(field(j, "A"));
  std::optional<IntVector> a0;
  std::optional<IntMatrix> b;
  if (j.contains("a0vee")) a0 = int_vector_from(j.at("a0vee"));
  if (j.contains("B")) b = int_matrix_from(j.at("B"));
  return PointConfiguration::make(std::move(a), a0, b);
}

std::vector<std::pair<std::string, std::vector<Simplex>>> named_triangulations(const Json& j, std::size_t big_n) {
  std::vector<std::pair<std::string, std::vector<Simplex>>> out;
  if (!j.contains("triangulations")) return out;
  const Json& t = j.at("triangulations");
  if (!t.is_object()) bad("\"triangulations\" must map names to simplex lists");
  for (auto it = t.begin(); it != t.end(); ++it) out.emplace_back(it.key(), simplices_from(it.value(), big_n));
  return out;
}

Json to_json(const Triangulation& t) {
  return {{"maximal", simplices_json(t.maximal())},
          {"weight", to_json(t.weight())},
          {"core", simplex_json(t.core())},
          {"volumes", to_json(t.volumes())},
          {"unimodular", t.is_unimodular()}};
}

Triangulation triangulation_from(const PointConfiguration& cfg, const Json& j) {
  auto maximal = simplices_from(field(j, "maximal"), cfg.N());
  RatVector w = rat_vector_from(field(j, "weight"));
  if (w.size() != cfg.codim()) bad("weight length");
  return Triangulation(cfg, std::move(maximal), std::move(w));
}

Json to_json(const Enumeration& e) {
  Json ts = Json::array(), adj = Json::array();
  for (const auto& t : e.triangulations) ts.push_back(to_json(t));
  for (auto [a, b] : e.adjacency) adj.push_back({a + 1, b + 1});
  return {{"count", e.triangulations.size()},
          {"triangulations", ts},
          {"adjacency", adj},
          {"connected", e.connected()},
          {"seed", std::to_string(e.seed)}};
}

Enumeration enumeration_from(const PointConfiguration& cfg, const Json& j) {
  Enumeration e;
  for (const auto& t : array(field(j, "triangulations"), "triangulations"))
    e.triangulations.push_back(triangulation_from(cfg, t));
  for (const auto& p : array(field(j, "adjacency"), "adjacency")) {
    if (!p.is_array() || p.size() != 2) bad("adjacency entries are pairs");
    const std::size_t a = size_from(p[0]), b = size_from(p[1]);
    if (a < 1 || b < 1 || a > e.triangulations.size() || b > e.triangulations.size()) bad("adjacency index");
    e.adjacency.emplace_back(a - 1, b - 1);
  }
  e.seed = std::stoull(field(j, "seed").get<std::string>());
  return e;
}

Json to_json(const std::vector<Chamber>& ch) {
  Json sv = Json::array(), wit = Json::array();
  for (const auto& c : ch) {
    sv.push_back(gkz::to_string(c.signs));
    wit.push_back(to_json(c.witness));
  }
  return {{"count", ch.size()}, {"sign_vectors", sv}, {"witnesses", wit}};
}

std::vector<Chamber> chambers_from(const Json& j) {
  const Json& sv = array(field(j, "sign_vectors"), "sign_vectors");
  const Json& wit = array(field(j, "witnesses"), "witnesses");
  if (sv.size() != wit.size()) bad("sign vectors and witnesses differ in length");
  std::vector<Chamber> out;
  for (std::size_t i = 0; i < sv.size(); ++i) {
    try {
      out.push_back({parse_sign_vector(sv[i].get<std::string>()), rat_vector_from(wit[i])});
    } catch (const Json::exception&) {
      bad("sign vectors are strings");
    }
  }
  return out;
}

RingReport ring_report(const GradedAlgebra& r) {
  RingReport out;
  out.maximal = r.triangulation().maximal();
  out.dims_per_degree = r.dims_per_degree();
  for (std::size_t i = 0; i < r.dim(); ++i) out.basis.push_back(r.basis_name(i));
  for (std::size_t j = 0; j < r.N(); ++j) out.generators.push_back(r.generator(j).coords);
  for (const auto& rel : relations_in_reduced_generators(r)) out.relations.push_back(rel.text);
  PoincareCheck pc = poincare_check(r);
  out.poincare_ring = pc.ring_side;
  out.poincare_simplices = pc.simplex_side;
  out.poincare_equal = pc.equal;
  out.core_element = core_element(r).coords;
  return out;
}

Json to_json(const RingReport& r) {
  Json gens = Json::array();
  for (const auto& g : r.generators) gens.push_back(to_json(g));
  return {{"maximal", simplices_json(r.maximal)},
          {"dim", r.basis.size()},
          {"dims_per_degree", r.dims_per_degree},
          {"basis", r.basis},
          {"generators", gens},
          {"relations", r.relations},
          {"poincare", {{"ring", to_json(r.poincare_ring)}, {"simplices", to_json(r.poincare_simplices)}, {"equal", r.poincare_equal}}},
          {"core_element", to_json(r.core_element)}};
}

RingReport ring_report_from(const Json& j) {
  RingReport r;
  try {
    r.basis = field(j, "basis").get<std::vector<std::string>>();
    r.dims_per_degree = field(j, "dims_per_degree").get<std::vector<std::size_t>>();
    r.relations = field(j, "relations").get<std::vector<std::string>>();
    r.poincare_equal = field(field(j, "poincare"), "equal").get<bool>();
  } catch (const Json::exception& e) {
    bad(std::string("ring report: ") + e.what());
  }
  std::size_t big_n = field(j, "generators").size();
  r.maximal = simplices_from(field(j, "maximal"), big_n);
  for (const auto& g : field(j, "generators")) r.generators.push_back(rat_vector_from(g));
  r.poincare_ring = int_vector_from(field(field(j, "poincare"), "ring"));
  r.poincare_simplices = int_vector_from(field(field(j, "poincare"), "simplices"));
  r.core_element = rat_vector_from(field(j, "core_element"));
  return r;
}

Json to_json(const TruncatedSeries& s) {
  Json terms = Json::array();
  for (const auto& t : s.terms()) terms.push_back({{"lambda", to_json(t.lambda)}, {"coeff_coords", to_json(t.coeff.coords)}});
  return {{"beta", to_json(s.beta())},
          {"gamma0", to_json(s.gamma0())},
          {"order_bound", std::to_string(s.order_bound())},
          {"terms", terms}};
}

TruncatedSeries series_from(const AlgebraPtr& r, const Json& j) {
  IntVector beta = int_vector_from(field(j, "beta"));
  IntVector g0 = int_vector_from(field(j, "gamma0"));
  Integer bound = integer_from(field(j, "order_bound"));
  if (!bound.fits_slong_p()) bad("order bound out of range");
  std::vector<GammaTerm> terms;
  for (const auto& t : array(field(j, "terms"), "terms")) {
    GammaTerm g{int_vector_from(field(t, "lambda")), {rat_vector_from(field(t, "coeff_coords"))}};
    if (g.lambda.size() != r->N() || g.coeff.coords.size() != r->dim()) bad("term shape");
    terms.push_back(std::move(g));
  }
  return TruncatedSeries(r, std::move(beta), std::move(g0), bound.get_si(), std::move(terms));
}

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed || !c.applicable; });
}

Json to_json(const VerifyReport& v) {
  Json checks = Json::array();
  for (const auto& c : v.checks)
    checks.push_back({{"name", c.name}, {"applicable", c.applicable}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"checks", checks}, {"all_passed", v.all_passed()}};
}

VerifyReport verify_report_from(const Json& j) {
  VerifyReport v;
  try {
    for (const auto& c : array(field(j, "checks"), "checks"))
      v.checks.push_back({c.at("name").get<std::string>(), c.at("applicable").get<bool>(), c.at("passed").get<bool>(),
                          c.at("detail").get<std::string>()});
  } catch (const Json::exception& e) {
    bad(std::string("verify report: ") + e.what());
  }
  return v;
}

std::string complex_string(const std::complex<long double>& z) {
  std::string im = long_double_string(z.imag());
  if (im[0] != '-') im = "+" + im;
  return long_double_string(z.real()) + im + "i";
}

std::complex<long double> complex_from(const std::string& s) {
  if (s.size() < 2 || s.back() != 'i') {
    // a plain real number
    return {long_double_from(s), 0};
  }
  std::size_t split = std::string::npos;
  for (std::size_t k = 1; k + 1 < s.size(); ++k)
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') split = k;
  if (split == std::string::npos) return {0, long_double_from(s.substr(0, s.size() - 1))};
  return {long_double_from(s.substr(0, split)), long_double_from(s.substr(split, s.size() - 1 - split))};
}

Json to_json(const ComplexRingElement& x) {
  Json coords = Json::array();
  for (const auto& c : x.coords) coords.push_back(complex_string(c));
  return {{"coords", coords}, {"precision_bits", x.precision_bits}, {"tail_estimate", long_double_string(x.tail_estimate)}};
}

ComplexRingElement complex_element_from(const Json& j) {
  ComplexRingElement x;
  try {
    for (const auto& c : array(field(j, "coords"), "coords")) x.coords.push_back(complex_from(c.get<std::string>()));
    x.precision_bits = field(j, "precision_bits").get<int>();
    x.tail_estimate = long_double_from(field(j, "tail_estimate").get<std::string>());
  } catch (const Json::exception& e) {
    bad(std::string("complex element: ") + e.what());
  }
  return x;
}

Json to_json(const GorensteinReport& g) {
  Json gens = Json::array(), boxes = Json::array();
  for (const auto& d : g.dual_generators)
    gens.push_back({{"row", to_json(d.row)}, {"core_index", d.core_index + 1}, {"sources", simplices_json(d.sources)}});
  for (const auto& b : g.boxes)
    boxes.push_back({{"core_index", b.core_index + 1},
                     {"vertices", int_vectors_json(b.vertices)},
                     {"lattice_points", int_vectors_json(b.lattice_points)},
                     {"matches_sign_pattern", b.matches_sign_pattern}});
  return {{"a0vee", to_json(g.a0vee)},
          {"a0", to_json(g.a0)},
          {"kappa", to_json(g.kappa)},
          {"core", simplex_json(g.core)},
          {"dual_generators", gens},
          {"generates_dual", g.generates_dual},
          {"reflexive", g.reflexive},
          {"completely_split", g.completely_split},
          {"boxes", boxes}};
}

GorensteinReport gorenstein_from(const Json& j, std::size_t big_n) {
  GorensteinReport g;
  g.a0vee = int_vector_from(field(j, "a0vee"));
  g.a0 = int_vector_from(field(j, "a0"));
  g.kappa = integer_from(field(j, "kappa"));
  g.core = simplex_from(field(j, "core"), big_n);
  try {
    for (const auto& d : array(field(j, "dual_generators"), "dual_generators"))
      g.dual_generators.push_back({int_vector_from(field(d, "row")), size_from(field(d, "core_index")) - 1,
                                   simplices_from(field(d, "sources"), big_n)});
    g.generates_dual = field(j, "generates_dual").get<bool>();
    g.reflexive = field(j, "reflexive").get<bool>();
    g.completely_split = field(j, "completely_split").get<bool>();
    for (const auto& b : array(field(j, "boxes"), "boxes"))
      g.boxes.push_back({size_from(field(b, "core_index")) - 1, int_vectors_from(field(b, "vertices")),
                         int_vectors_from(field(b, "lattice_points")), field(b, "matches_sign_pattern").get<bool>()});
  } catch (const Json::exception& e) {
    bad(std::string("gorenstein report: ") + e.what());
  }
  return g;
}

Json to_json(const InteriorCheck& c) {
  return {{"holds", c.holds},
          {"interior_points", int_vectors_json(c.interior_points)},
          {"shifted_points", int_vectors_json(c.shifted_points)}};
}

InteriorCheck interior_check_from(const Json& j) {
  InteriorCheck c;
  if (!field(j, "holds").is_boolean()) bad("holds must be a boolean");
  c.holds = j.at("holds").get<bool>();
  c.interior_points = int_vectors_from(field(j, "interior_points"));
  c.shifted_points = int_vectors_from(field(j, "shifted_points"));
  return c;
}

Json to_json(const ProjectedFan& f) {
  Json rays = Json::array();
  for (auto j : f.ray_index) rays.push_back(j + 1);
  return {{"i0", simplex_json(f.i0)},
          {"ray_index", rays},
          {"u", int_vectors_json(f.u)},
          {"maximal_cones", simplices_json(f.maximal_cones)},
          {"dim", f.dim},
          {"complete", f.complete},
          {"smooth", f.smooth}};
}

ProjectedFan fan_from(const Json& j, std::size_t big_n) {
  ProjectedFan f;
  f.i0 = simplex_from(field(j, "i0"), big_n);
  for (const auto& r : array(field(j, "ray_index"), "ray_index")) f.ray_index.push_back(size_from(r) - 1);
  f.u = int_vectors_from(field(j, "u"));
  f.maximal_cones = simplices_from(field(j, "maximal_cones"), big_n);
  f.dim = size_from(field(j, "dim"));
  if (!field(j, "complete").is_boolean() || !field(j, "smooth").is_boolean()) bad("fan flags must be booleans");
  f.complete = j.at("complete").get<bool>();
  f.smooth = j.at("smooth").get<bool>();
  return f;
}

Json error_json(const Error& e) {
  return {{"error", {{"kind", std::string(gkz::to_string(e.kind()))}, {"detail", e.detail()}}}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace gkz::io
