// gkz: JSON front end for the library. Every artifact is
// {"command", "seed", "config", "result"}; errors are {"error": {kind, detail}}.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gkz/verify.hpp"

using namespace gkz;
using io::Json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input, output, triangulation, weights, heights, beta = "0", z, precision = "double", i0;
  std::uint64_t seed = 0;
  long order = 4, degree_bound = 3;
  double depth = 1;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

RatVector rationals(const std::string& s, std::size_t want, const char* what) {
  RatVector v;
  try {
    for (const auto& x : split(s, ',')) v.push_back(parse_rational(x));
  } catch (const Error&) {
    throw UsageError(std::string("bad ") + what + " \"" + s + "\"");
  }
  if (v.size() != want) throw UsageError(std::string(what) + " needs " + std::to_string(want) + " entries");
  return v;
}

Simplex labels(const std::string& s, std::size_t big_n) {
  Simplex out;
  for (char ch : s) {
    if (ch < '1' || ch > '9' || static_cast<std::size_t>(ch - '0') > big_n)
      throw UsageError("bad simplex \"" + s + "\"");
    out.push_back(static_cast<std::size_t>(ch - '1'));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// "0", "-a4", "-2a4" or an explicit comma list.
IntVector parse_beta(const std::string& s, const PointConfiguration& cfg) {
  IntVector beta(cfg.n());
  if (s == "0") return beta;
  if (s.size() >= 3 && s[0] == '-' && s.find('a') != std::string::npos) {
    const auto at = s.find('a');
    long mult = 1, col = 0;
    try {
      if (at > 1) mult = std::stol(s.substr(1, at - 1));
      std::size_t used = 0;
      col = std::stol(s.substr(at + 1), &used);
      if (used != s.size() - at - 1) throw UsageError("");
    } catch (const std::exception&) {
      throw UsageError("bad beta \"" + s + "\"");
    }
    if (col < 1 || static_cast<std::size_t>(col) > cfg.N()) throw UsageError("beta names a missing column");
    for (std::size_t k = 0; k < cfg.n(); ++k) beta[k] = -mult * cfg.column(col - 1)[k];
    return beta;
  }
  RatVector v = rationals(s, cfg.n(), "beta");
  auto iv = as_integer(v);
  if (!iv) throw UsageError("beta must be integral");
  return *iv;
}

struct Loaded {
  Json raw;
  PointConfiguration cfg;
};

Loaded load(const Options& o) {
  if (o.input.empty()) throw UsageError("--input is required");
  std::ifstream in(o.input);
  if (!in) throw UsageError("cannot read " + o.input);
  Json raw;
  try {
    raw = Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return {raw, io::config_from(raw)};
}

// A name listed in the input, a simplex list "124,134,...", or "#k" into the
// enumeration. Without a label the generic weight for the seed is used.
Triangulation pick_triangulation(const Options& o, const Loaded& in) {
  const auto& cfg = in.cfg;
  const std::string& label = o.triangulation;
  if (label.empty()) return from_weight(cfg, generic_weight(cfg, o.seed));
  for (const auto& [name, simplices] : io::named_triangulations(in.raw, cfg.N()))
    if (name == label) return from_simplices(cfg, simplices, o.seed);
  if (label[0] == '#') {
    std::size_t k = 0;
    try {
      k = std::stoul(label.substr(1));
    } catch (const std::exception&) {
      throw UsageError("bad triangulation index \"" + label + "\"");
    }
    Enumeration e = enumerate_regular(cfg, o.seed);
    if (k < 1 || k > e.triangulations.size()) throw UsageError("triangulation index out of range");
    return e.triangulations[k - 1];
  }
  std::vector<Simplex> simplices;
  for (const auto& s : split(label, ',')) simplices.push_back(labels(s, cfg.N()));
  if (simplices.empty()) throw UsageError("empty triangulation");
  return from_simplices(cfg, simplices, o.seed);
}

ComplexVector parse_z(const Options& o, const PointConfiguration& cfg, const Triangulation& t) {
  ComplexVector z(cfg.N());
  if (o.z.empty()) {
    auto imag = deep_imaginary_part(cfg, t, o.depth);
    for (std::size_t j = 0; j < z.size(); ++j) z[j] = {0, imag[j]};
    return z;
  }
  auto parts = split(o.z, ',');
  if (parts.size() != cfg.N()) throw UsageError("--z needs " + std::to_string(cfg.N()) + " entries");
  try {
    for (std::size_t j = 0; j < z.size(); ++j) z[j] = io::complex_from(parts[j]);
  } catch (const Error&) {
    throw UsageError("bad --z \"" + o.z + "\"");
  }
  return z;
}

Precision parse_precision(const std::string& s) {
  if (s == "double") return Precision::Double;
  if (s == "extended") return Precision::Extended;
  throw UsageError("--precision is double or extended");
}

Json run(const std::string& command, const Options& o, const Loaded& in) {
  const auto& cfg = in.cfg;
  if (command == "kernel") return {{"B", io::to_json(cfg.B())}, {"codim", cfg.codim()}};
  if (command == "triangulate") {
    if (!o.weights.empty() && !o.heights.empty()) throw UsageError("give --weights or --heights, not both");
    if (!o.heights.empty()) return io::to_json(from_heights(cfg, rationals(o.heights, cfg.N(), "heights")));
    if (!o.weights.empty()) return io::to_json(from_weight(cfg, rationals(o.weights, cfg.codim(), "weights")));
    return io::to_json(pick_triangulation(o, in));
  }
  if (command == "enumerate") return io::to_json(enumerate_regular(cfg, o.seed));
  if (command == "chambers") {
    std::vector<RatVector> b;
    for (std::size_t j = 0; j < cfg.N(); ++j) b.push_back(cfg.b(j));
    return io::to_json(chambers(b));
  }

  const Triangulation t = pick_triangulation(o, in);
  if (command == "gorenstein") {
    GorensteinReport rep = gorenstein_report(cfg, t);
    Simplex i0 = t.maximal().front();
    if (!o.i0.empty()) i0 = labels(o.i0, cfg.N());
    return {{"maximal", io::to_json(t)["maximal"]},
            {"report", io::to_json(rep)},
            {"interior", io::to_json(interior_identity_check(cfg, rep, o.degree_bound))},
            {"degree_bound", std::to_string(o.degree_bound)},
            {"fan", io::to_json(projected_fan(cfg, t, i0))}};
  }

  AlgebraPtr r = GradedAlgebra::build(cfg, t);
  if (command == "ring") return io::to_json(io::ring_report(*r));
  if (o.order < 0) throw UsageError("--order must be nonnegative");
  TruncatedSeries s = build_series(r, parse_beta(o.beta, cfg), o.order);
  if (command == "series") return io::to_json(s);
  if (command == "verify") return io::to_json(verify_series(s, o.seed));
  if (command == "evaluate") {
    const Precision p = parse_precision(o.precision);
    ComplexVector z = parse_z(o, cfg, t);
    Json zs = Json::array();
    for (const auto& x : z) zs.push_back(io::complex_string(x));
    return {{"z", zs}, {"value", io::to_json(evaluate(s, z, true, p))}};
  }
  throw UsageError("unknown command " + command);
}

void emit(const Options& o, const Json& j) {
  const std::string text = io::dump(j);
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output);
  if (!out) throw UsageError("cannot write " + o.output);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GKZ series, triangulations and Gorenstein cones"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--input,-i", o.input, "configuration JSON");
  app.add_option("--output,-o", o.output, "artifact path (default stdout)");
  app.add_option("--seed", o.seed, "seed for generic choices")->capture_default_str();
  app.add_option("--triangulation,-t", o.triangulation, "name, simplex list 124,134,... or #k");

  app.add_subcommand("kernel", "basis of the relation lattice");
  auto* tri = app.add_subcommand("triangulate", "triangulation from a weight or heights");
  tri->add_option("--weights", o.weights, "w in Q^(N-n), comma separated");
  tri->add_option("--heights", o.heights, "d in Q^N, comma separated");
  app.add_subcommand("enumerate", "all regular triangulations and their adjacency");
  app.add_subcommand("ring", "ring report");
  app.add_subcommand("chambers", "sign vectors of the chambers of the b_j");
  for (const char* name : {"series", "verify", "evaluate"}) {
    auto* sub = app.add_subcommand(name, std::string(name) == "series"   ? "truncated Gamma-series"
                                         : std::string(name) == "verify" ? "differential equation checks"
                                                                         : "numeric value of the series");
    sub->add_option("--beta", o.beta, "0, -a4, -2a4 or a comma list")->capture_default_str();
    sub->add_option("--order", o.order, "order bound L")->capture_default_str();
  }
  auto* ev = app.get_subcommand("evaluate");
  ev->add_option("--z", o.z, "comma list of complex numbers a+bi (default: deep point)");
  ev->add_option("--depth", o.depth, "scale of the deep point")->capture_default_str();
  ev->add_option("--precision", o.precision, "double or extended")->capture_default_str();
  auto* gor = app.add_subcommand("gorenstein", "reflexive Gorenstein cone report");
  gor->add_option("--i0", o.i0, "maximal simplex for the projected fan, e.g. 124");
  gor->add_option("--degree-bound", o.degree_bound, "degree range of the interior check")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  const std::string command = app.get_subcommands().front()->get_name();
  try {
    Loaded in = load(o);
    Json result = run(command, o, in);
    Json artifact = {{"command", command},
                     {"seed", std::to_string(o.seed)},
                     {"config", io::to_json(in.cfg)},
                     {"result", result}};
    emit(o, artifact);
    if (command == "verify" && !io::verify_report_from(result).all_passed()) return 1;
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "gkz: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    try {
      emit(o, io::error_json(e));
    } catch (const UsageError&) {
      std::cout << io::dump(io::error_json(e));
    }
    return 1;
  }
}
