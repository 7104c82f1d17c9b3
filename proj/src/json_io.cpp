#include "holozeta/json_io.hpp"

#include <sstream>

#include "holozeta/error.hpp"

namespace holozeta {

namespace {

Json family_json(const PoleFamily& f) { return Json{{"nu", f.first}, {"N", f.second}}; }

Json families_json(const std::vector<PoleFamily>& fs) {
  Json a = Json::array();
  for (const auto& f : fs) a.push_back(family_json(f));
  return a;
}

Json tpoly_json(const TPoly& t, std::int64_t m) {
  Json a = Json::array();
  for (const auto& c : t.coeffs()) a.push_back(cyclo_json(c, m));
  return a;
}

std::string tpoly_string(const TPoly& t) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < t.coeffs().size(); ++i) {
    const Cyclo& c = t.coeffs()[i];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const bool bare = c.is_rational() || c.coeffs().size() == 1;
    os << (bare ? c.to_string() : "(" + c.to_string() + ")");
    if (i > 0) os << "*T" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return first ? "0" : os.str();
}

}  // namespace

Json cyclo_json(const Cyclo& c, std::int64_t m) { return c.coefficient_strings(m); }

Json series_json(const std::vector<Cyclo>& s, std::int64_t m) {
  Json a = Json::array();
  for (const auto& c : s) a.push_back(cyclo_json(c, m));
  return a;
}

Json polynomial_json(const IntPolynomial& f, const std::vector<std::string>& vars) {
  Json terms = Json::array();
  for (const auto& [k, c] : f.terms()) terms.push_back(Json{{"exp", k}, {"coeff", c.get_str()}});
  return Json{{"vars", vars}, {"terms", terms}, {"text", to_string(f, vars)}};
}

IntPolynomial polynomial_from_json(const Json& j, std::vector<std::string>& vars) {
  try {
    vars = j.at("vars").get<std::vector<std::string>>();
    IntPolynomial f(vars.size());
    for (const auto& t : j.at("terms")) {
      const auto k = t.at("exp").get<IVec>();
      if (k.size() != vars.size()) throw DomainError("exponent length does not match vars");
      f.add_term(k, mpz_class(t.at("coeff").get<std::string>()));
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("bad polynomial JSON: ") + e.what());
  }
}

Json newton_json(const NewtonPolyhedron& gamma) {
  Json facets = Json::array();
  for (const auto& f : gamma.facets())
    facets.push_back(Json{{"normal", f.normal}, {"N", f.N}, {"nu", f.nu}, {"compact", f.compact}, {"face", f.face_id}});
  Json faces = Json::array();
  for (const auto& f : gamma.faces()) {
    Json vf = nullptr;
    if (f.v_face_index_set) vf = *f.v_face_index_set;
    faces.push_back(Json{{"id", f.id},
                         {"dim", f.dim},
                         {"vertices", f.vertex_ids},
                         {"facets", f.facet_ids},
                         {"recession", f.recession},
                         {"compact", f.compact},
                         {"v_face_I", vf}});
  }
  return Json{{"n", gamma.n()}, {"vertices", gamma.vertices()}, {"facets", facets}, {"faces", faces}};
}

Json newton_document(const IntPolynomial& f, const std::vector<std::string>& vars) {
  Json j = newton_json(build_polyhedron(support(f), f.n()));
  j["polynomial"] = polynomial_json(f, vars);
  return j;
}

Json rational_function_json(const RationalFunctionT& r) {
  const std::int64_t m = r.order();
  Json factors = Json::array();
  for (const auto& [f, mult] : r.factors()) factors.push_back(Json{{"nu", f.first}, {"N", f.second}, {"mult", mult}});
  Json divisors = Json::array();
  for (const auto& [ratio, g] : r.divisors())
    divisors.push_back(Json{{"ratio", family_json(ratio)}, {"poly", tpoly_json(g, m)}});
  return Json{{"q", r.q()},
              {"variable", "T"},
              {"numerator", tpoly_json(r.numerator(), m)},
              {"denominator_factors", factors},
              {"denominator_divisors", divisors},
              {"denominator", tpoly_json(r.expanded_denominator(), m)}};
}

Json zeta_json(const RationalFunctionT& r, const Character& chi, const std::vector<PoleFamily>& candidates,
               const std::vector<PoleFamily>& actual, bool trusted) {
  Json j = rational_function_json(r);
  j["q"] = chi.p();
  j["char"] = Json{{"d", chi.order()}, {"k", chi.index()}};
  j["candidate_poles"] = families_json(candidates);
  j["actual_pole_lines"] = families_json(actual);
  j["trusted"] = trusted;
  return j;
}

Json monodromy_json(const CycloFactorization& z) {
  Json factors = Json::array();
  for (const auto& [e, x] : z.factors()) factors.push_back(Json{{"e", e}, {"exp", x}});
  Json phi = Json::array();
  for (const auto& [m, x] : z.phi_form())
    if (x != 0) phi.push_back(Json{{"m", m}, {"mult", x}});
  const auto orders = z.eigenvalue_orders();
  return Json{{"factors", factors}, {"phi_form", phi}, {"eigenvalue_orders", std::vector<std::int64_t>(orders.begin(), orders.end())}};
}

Json facet_class_json(const NewtonPolyhedron& gamma, const FacetClass& c) {
  const auto& fd = gamma.facets()[static_cast<std::size_t>(c.facet_index)];
  Json j{{"facet", c.facet_index},
         {"kind", to_string(c.kind)},
         {"normal", fd.normal},
         {"N", fd.N},
         {"nu", fd.nu},
         {"compact", fd.compact}};
  Json cert = Json::object();
  switch (c.kind) {
    case FacetKind::B1Simplex:
    case FacetKind::B1Noncompact:
      cert["variable"] = c.variable;
      cert["distance_one_vertex"] = gamma.vertices()[static_cast<std::size_t>(c.apex_vertex)];
      if (c.kind == FacetKind::B1Noncompact) cert["noncompact_variable"] = c.noncompact_variable;
      break;
    case FacetKind::X2: {
      Json vs = Json::array();
      for (int v : c.x2_vertices) vs.push_back(gamma.vertices()[static_cast<std::size_t>(v)]);
      cert["vertices"] = vs;
      cert["a"] = c.x2_params[0];
      cert["x1"] = c.x2_params[1];
      cert["x2"] = c.x2_params[2];
      cert["axes"] = c.x2_axes;
      break;
    }
    case FacetKind::Other:
      break;
  }
  j["certificate"] = cert;
  return j;
}

Json holomorphy_json(const HolomorphyReport& r, const std::vector<std::string>& vars) {
  const NewtonPolyhedron gamma = build_polyhedron(support(r.f), r.f.n());
  Json cands = Json::array();
  for (const auto& c : r.candidates) {
    Json cj = facet_class_json(gamma, c.cls);
    cj["zero_N"] = c.zero_N;
    cands.push_back(cj);
  }
  Json axes = Json::array();
  for (const auto& a : r.axes) {
    Json aj{{"axis", a.axis}, {"variable", vars.at(a.axis)}, {"available", a.available}};
    if (a.available) aj["zeta"] = monodromy_json(a.zeta);
    axes.push_back(aj);
  }
  Json verdict{{"kind", to_string(r.verdict)}};
  if (r.verdict == Verdict::PoleExplained) {
    verdict["m"] = r.witness_order;
    verdict["location"] = r.witness_location;
  }
  return Json{{"input", Json{{"polynomial", polynomial_json(r.f, vars)}, {"p", r.p}, {"d", r.d}, {"k", r.k}}},
              {"nondegenerate", Json{{"compact", r.nondegenerate_compact}, {"all", r.nondegenerate_all}}},
              {"candidates", cands},
              {"local_pole_lines", families_json(r.zeta.local_poles)},
              {"global_pole_lines", families_json(r.zeta.global_poles)},
              {"global_available", r.zeta.global.has_value()},
              {"origin", monodromy_json(r.origin)},
              {"axes", axes},
              {"verdict", verdict}};
}

Json suite_json(const SuiteReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back(Json{{"name", c.name}, {"cases", c.cases}, {"failures", c.failures}, {"examples", c.examples}});
  return Json{{"suite", r.suite}, {"seed", r.seed}, {"passed", r.passed()}, {"checks", checks}, {"counters", r.counters}};
}

std::string pretty_rational_function(const RationalFunctionT& r) {
  if (r.is_zero()) return "0";
  std::ostringstream os;
  os << "(" << tpoly_string(r.numerator()) << ")";
  std::string den;
  for (const auto& [f, m] : r.factors()) {
    den += "(q^" + std::to_string(f.first) + " - T^" + std::to_string(f.second) + ")";
    if (m > 1) den += "^" + std::to_string(m);
  }
  if (!den.empty()) os << " / " << den;
  for (const auto& [ratio, g] : r.divisors()) os << " * (" << tpoly_string(g) << ")";
  os << "   [q = " << r.q() << ", T = q^-s";
  if (r.order() > 1) os << ", z = zeta_" << r.order();
  os << "]";
  return os.str();
}

std::string pretty_monodromy(const CycloFactorization& z) {
  std::ostringstream os;
  if (z.empty()) return "1";
  bool first = true;
  for (const auto& [e, x] : z.factors()) {
    if (!first) os << " ";
    first = false;
    os << "(1 - t^" << e << ")^" << x;
  }
  return os.str();
}

}  // namespace holozeta
