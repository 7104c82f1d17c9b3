#pragma once

// JSON forms of the library's results. Rationals and cyclotomic coefficients
// are exact "a/b" strings.

#include <string>
#include <vector>

#include "json.hpp"

#include "holozeta/conjecture.hpp"
#include "holozeta/igusa.hpp"
#include "holozeta/monodromy.hpp"
#include "holozeta/newton.hpp"
#include "holozeta/polyring.hpp"
#include "holozeta/ratfunc.hpp"
#include "holozeta/suites.hpp"

namespace holozeta {

using Json = nlohmann::json;

// Power-basis coefficients over Q(zeta_m).
Json cyclo_json(const Cyclo& c, std::int64_t m);
Json series_json(const std::vector<Cyclo>& s, std::int64_t m);

Json polynomial_json(const IntPolynomial& f, const std::vector<std::string>& vars);
IntPolynomial polynomial_from_json(const Json& j, std::vector<std::string>& vars);

Json newton_json(const NewtonPolyhedron& gamma);
// newton_json plus the polynomial, enough to rebuild everything downstream.
Json newton_document(const IntPolynomial& f, const std::vector<std::string>& vars);

Json rational_function_json(const RationalFunctionT& r);
Json zeta_json(const RationalFunctionT& r, const Character& chi, const std::vector<PoleFamily>& candidates,
               const std::vector<PoleFamily>& actual, bool trusted);

Json monodromy_json(const CycloFactorization& z);

Json facet_class_json(const NewtonPolyhedron& gamma, const FacetClass& c);
Json holomorphy_json(const HolomorphyReport& r, const std::vector<std::string>& vars);

Json suite_json(const SuiteReport& r);

// Text renderings for the non-JSON output mode.
std::string pretty_rational_function(const RationalFunctionT& r);
std::string pretty_monodromy(const CycloFactorization& z);

}  // namespace holozeta
