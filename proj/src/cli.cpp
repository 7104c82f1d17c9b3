#include "holozeta/cli.hpp"

#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "holozeta/conjecture.hpp"
#include "holozeta/error.hpp"
#include "holozeta/igusa.hpp"
#include "holozeta/json_io.hpp"
#include "holozeta/monodromy.hpp"
#include "holozeta/oracle.hpp"
#include "holozeta/suites.hpp"

namespace holozeta {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string poly;
  std::string vars;
  std::string from_json;
  std::int64_t p = 0;
  std::int64_t d = 0;
  std::int64_t k = 1;
  bool global = false;
  bool local = false;
  bool json = false;
  bool force = false;
  std::string terms = "auto";
  double budget = 0;
  std::uint64_t seed = 1;
  int count = -1;
  int count4 = -1;
  std::int64_t bound = 12;
  std::int64_t height = 30;
  bool origin = false;
  std::string axis;
};

struct Input {
  IntPolynomial f;
  std::vector<std::string> vars;
};

Input load_input(const Config& c) {
  Input in;
  if (!c.from_json.empty()) {
    if (!c.poly.empty()) throw UsageError("give either -f or --from-json, not both");
    std::ifstream is(c.from_json);
    if (!is) throw UsageError("cannot open " + c.from_json);
    Json j;
    try {
      j = Json::parse(is);
    } catch (const nlohmann::json::exception& e) {
      throw DomainError(std::string("bad JSON input: ") + e.what());
    }
    if (!j.contains("polynomial")) throw DomainError("JSON input has no \"polynomial\" member");
    in.f = polynomial_from_json(j["polynomial"], in.vars);
    // a newton dump must describe the polyhedron of its own polynomial
    if (j.contains("vertices") &&
        j["vertices"] != Json(build_polyhedron(support(in.f), in.f.n()).vertices()))
      throw DomainError("vertices in JSON input do not match its polynomial");
    return in;
  }
  if (c.poly.empty()) throw UsageError("missing polynomial (-f or --from-json)");
  if (c.vars.empty()) throw UsageError("missing --vars");
  in.vars = split_variables(c.vars);
  in.f = parse_polynomial(c.poly, in.vars);
  if (in.f.is_zero()) throw DomainError("zero polynomial");
  return in;
}

void require_character(const Config& c) {
  if (c.p < 2 || !is_prime(c.p)) throw UsageError("-p must be a prime");
  if (c.d <= 1) throw UsageError("--char-order must exceed 1");
  if ((c.p - 1) % c.d != 0) throw UsageError("--char-order must divide p-1");
  if (std::gcd(((c.k % c.d) + c.d) % c.d, c.d) != 1) throw UsageError("--char-index must be coprime to --char-order");
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int cmd_newton(const Config& c, std::ostream& out) {
  const Input in = load_input(c);
  const Json doc = newton_document(in.f, in.vars);
  if (c.json) {
    emit(out, doc);
    return 0;
  }
  const NewtonPolyhedron g = build_polyhedron(support(in.f), in.f.n());
  out << "f = " << to_string(in.f, in.vars) << "\n";
  out << "vertices:";
  for (const auto& v : g.vertices()) out << " " << Json(v).dump();
  out << "\nfacets:\n";
  for (const auto& fd : g.facets())
    out << "  normal " << Json(fd.normal).dump() << "  N=" << fd.N << " nu=" << fd.nu
        << (fd.compact ? "  compact" : "") << "\n";
  out << "faces: " << g.faces().size() << "\n";
  return 0;
}

int cmd_zeta(const Config& c, std::ostream& out) {
  if (c.local && c.global) throw UsageError("--local and --global are exclusive");
  require_character(c);
  const Input in = load_input(c);
  const Character chi(c.p, c.d, c.k);
  const ZetaReport zr = zeta_report(in.f, chi, IgusaOptions{c.force});
  const bool global = c.global;
  if (global && !zr.global) throw DomainError("polynomial is degenerate mod p for a non-compact face");
  const RationalFunctionT& r = global ? *zr.global : zr.local;
  const auto& poles = global ? zr.global_poles : zr.local_poles;
  if (c.json) {
    Json j = zeta_json(r, chi, zr.candidates, poles, zr.trusted);
    j["kind"] = global ? "global" : "local";
    emit(out, j);
    return 0;
  }
  out << (global ? "Z_f" : "Z_f,0") << "(chi, s) = " << pretty_rational_function(r) << "\n";
  out << "candidate pole families:";
  for (const auto& f : zr.candidates) out << " (" << f.first << "," << f.second << ")";
  out << "\nactual pole lines:";
  for (const auto& f : poles) out << " (" << f.first << "," << f.second << ")";
  out << "\n";
  if (!zr.trusted) out << "warning: nondegeneracy not checked (--force)\n";
  return 0;
}

std::size_t parse_axis(const std::string& s, const std::vector<std::string>& vars) {
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == s) return i;
  try {
    std::size_t pos = 0;
    const long v = std::stol(s, &pos);
    if (pos == s.size() && v >= 0 && static_cast<std::size_t>(v) < vars.size()) return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
  }
  throw UsageError("--axis must be a variable name or a zero-based index");
}

int cmd_monodromy(const Config& c, std::ostream& out) {
  if (c.origin && !c.axis.empty()) throw UsageError("--origin and --axis are exclusive");
  const Input in = load_input(c);
  const NewtonPolyhedron g = build_polyhedron(support(in.f), in.f.n());
  CycloFactorization z;
  if (c.axis.empty()) {
    z = varchenko_zeta(g);
  } else {
    z = generic_axis_zeta(g, parse_axis(c.axis, in.vars));
  }
  if (c.json) {
    emit(out, monodromy_json(z));
    return 0;
  }
  out << "zeta(t) = " << pretty_monodromy(z) << "\n";
  out << "eigenvalue orders:";
  for (auto m : z.eigenvalue_orders()) out << " " << m;
  out << "\n";
  return 0;
}

int cmd_classify(const Config& c, std::ostream& out) {
  const Input in = load_input(c);
  const NewtonPolyhedron g = build_polyhedron(support(in.f), in.f.n());
  Json a = Json::array();
  for (const auto& fc : classify_facets(g)) a.push_back(facet_class_json(g, fc));
  if (c.json) {
    emit(out, a);
    return 0;
  }
  for (const auto& j : a)
    out << "facet " << j["facet"] << "  normal " << j["normal"].dump() << "  " << j["kind"].get<std::string>() << "  "
        << j["certificate"].dump() << "\n";
  return 0;
}

int cmd_check(const Config& c, std::ostream& out) {
  require_character(c);
  const Input in = load_input(c);
  const HolomorphyReport r = holomorphy_report(in.f, c.p, c.d, c.k);
  const Json j = holomorphy_json(r, in.vars);
  if (c.json) {
    emit(out, j);
    return 0;
  }
  out << "f = " << to_string(in.f, in.vars) << "  p=" << c.p << " d=" << c.d << " k=" << r.k << "\n";
  out << "local pole lines: " << j["local_pole_lines"].dump() << "\n";
  out << "global pole lines: " << j["global_pole_lines"].dump() << "\n";
  out << "origin eigenvalue orders: " << j["origin"]["eigenvalue_orders"].dump() << "\n";
  out << "verdict: " << to_string(r.verdict);
  if (r.verdict == Verdict::PoleExplained) out << "(" << r.witness_order << ") at " << r.witness_location;
  out << "\n";
  return 0;
}

int cmd_oracle(const Config& c, std::ostream& out) {
  if (c.local && c.global) throw UsageError("--local and --global are exclusive");
  require_character(c);
  if (c.budget < 0) throw UsageError("--budget must be positive");
  const double budget = c.budget > 0 ? c.budget : default_budget();
  const Input in = load_input(c);
  int k = 0;
  if (c.terms == "auto") {
    k = max_series_terms(c.p, in.f.n(), budget);
    if (k < 0) throw BudgetExceeded("budget too small for even one term", 0);
  } else {
    try {
      std::size_t pos = 0;
      k = std::stoi(c.terms, &pos);
      if (pos != c.terms.size() || k < 0) throw std::invalid_argument("terms");
    } catch (const std::exception&) {
      throw UsageError("--terms must be a non-negative integer or auto");
    }
  }
  const Character chi(c.p, c.d, c.k);
  const bool local = !c.global;
  const IgusaOptions opt{c.force};
  const RationalFunctionT z = local ? igusa_local(in.f, chi, opt) : igusa_global(in.f, chi, opt);
  const auto formula = series_expand(z, static_cast<std::size_t>(k));
  const auto oracle = truncated_series(in.f, chi, k, local, budget);
  const bool equal = formula == oracle;
  if (c.json) {
    emit(out, Json{{"kind", local ? "local" : "global"},
                   {"terms", k},
                   {"formula_series", series_json(formula, c.d)},
                   {"oracle_series", series_json(oracle, c.d)},
                   {"equal", equal}});
    return 0;
  }
  for (std::size_t i = 0; i < formula.size(); ++i)
    out << "T^" << i << ": formula " << formula[i].to_string() << "   oracle " << oracle[i].to_string() << "\n";
  out << (equal ? "equal" : "DIFFERENT") << "\n";
  return 0;
}

int emit_suite(const SuiteReport& r, std::ostream& out) {
  emit(out, suite_json(r));
  return r.passed() ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Igusa zeta functions with characters, monodromy zeta functions and the holomorphy audit"};
  app.require_subcommand(1);
  Config c;

  auto poly_opts = [&c](CLI::App* s) {
    s->add_option("-f,--poly", c.poly, "polynomial, e.g. \"x^2+y^3\"");
    s->add_option("--vars", c.vars, "comma separated variable names");
    s->add_option("--from-json", c.from_json, "read the polynomial from a newton --json dump");
    s->add_flag("--json", c.json, "JSON output");
  };
  auto char_opts = [&c](CLI::App* s) {
    s->add_option("-p,--prime", c.p, "prime p")->required();
    s->add_option("--char-order", c.d, "order d of the character, d | p-1")->required();
    s->add_option("--char-index", c.k, "index k coprime to d");
  };

  auto* newton = app.add_subcommand("newton", "Newton polyhedron and its face lattice");
  poly_opts(newton);

  auto* zeta = app.add_subcommand("zeta", "local or global Igusa zeta function with a character");
  poly_opts(zeta);
  char_opts(zeta);
  zeta->add_flag("--local", c.local, "local zeta (default)");
  zeta->add_flag("--global", c.global, "global zeta");
  zeta->add_flag("--force", c.force, "skip the nondegeneracy check; output marked untrusted");

  auto* mono = app.add_subcommand("monodromy", "monodromy zeta function via Varchenko");
  poly_opts(mono);
  mono->add_flag("--origin", c.origin, "at the origin (default)");
  mono->add_option("--axis", c.axis, "at a generic point of this coordinate axis");

  auto* classify = app.add_subcommand("classify", "B1 / X2 classification of the facets");
  poly_opts(classify);

  auto* check = app.add_subcommand("check", "holomorphy report for one (f, p, chi)");
  poly_opts(check);
  char_opts(check);

  auto* oracle = app.add_subcommand("oracle-compare", "formula series against congruence counts");
  poly_opts(oracle);
  char_opts(oracle);
  oracle->add_option("--terms", c.terms, "highest power of T, or auto");
  oracle->add_flag("--local", c.local, "local zeta (default)");
  oracle->add_flag("--global", c.global, "global zeta");
  oracle->add_option("--budget", c.budget, "maximal number of evaluated points");
  oracle->add_flag("--force", c.force, "skip the nondegeneracy check");

  auto* lemmas = app.add_subcommand("verify-lemmas", "character-sum identities");
  lemmas->add_option("--seed", c.seed);
  lemmas->add_option("--count", c.count, "random hyperplane polynomials per (p, chi)");

  auto* nv = app.add_subcommand("nv-suite", "normalized-volume relations on random simplices");
  nv->add_option("--seed", c.seed);
  nv->add_option("--count", c.count, "random facets in Z^3");
  nv->add_option("--count4", c.count4, "random facets in Z^4");
  nv->add_option("--bound", c.bound, "coordinate bound");

  auto* cancel = app.add_subcommand("cancel-suite", "cancellation instances for the B1 and X2 patterns");
  cancel->add_option("--seed", c.seed);
  cancel->add_option("--count", c.count, "instances per pattern");

  auto* structural = app.add_subcommand("structural-suite", "cone sums, triangulations, fundamental points");
  structural->add_option("--seed", c.seed);
  structural->add_option("--count", c.count, "random simplicial cones");
  structural->add_option("--height", c.height, "coordinate-sum bound for enumeration");

  app.add_subcommand("audit", "holomorphy verdicts over the audit corpus");

  auto fail = [&err](const char* kind, const std::string& msg, int code) {
    err << Json{{"error", Json{{"kind", kind}, {"message", msg}}}}.dump() << "\n";
    return code;
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    return fail("usage", e.what(), 2);
  }

  try {
    if (c.budget != 0 && !(c.budget > 0)) throw UsageError("--budget must be positive");
    if (*newton) return cmd_newton(c, out);
    if (*zeta) return cmd_zeta(c, out);
    if (*mono) return cmd_monodromy(c, out);
    if (*classify) return cmd_classify(c, out);
    if (*check) return cmd_check(c, out);
    if (*oracle) return cmd_oracle(c, out);
    if (*lemmas) return emit_suite(verify_lemmas(c.seed, c.count < 0 ? 200 : c.count), out);
    if (*nv)
      return emit_suite(nv_suite(c.seed, c.count < 0 ? 500 : c.count, c.count4 < 0 ? 200 : c.count4, c.bound), out);
    if (*cancel) return emit_suite(cancel_suite(c.seed, c.count < 0 ? 5 : c.count), out);
    if (*structural) return emit_suite(structural_suite(c.seed, c.count < 0 ? 200 : c.count, c.height), out);
    return emit_suite(theorem_audit(), out);
  } catch (const UsageError& e) {
    return fail("usage", e.what(), 2);
  } catch (const ParseError& e) {
    return fail("parse", e.what(), 2);
  } catch (const BudgetExceeded& e) {
    return fail("budget", e.what(), 1);
  } catch (const DomainError& e) {
    return fail("domain", e.what(), 1);
  }
}

}  // namespace holozeta
