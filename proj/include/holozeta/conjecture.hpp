#pragma once

// B1 / X2 facet classification, candidate poles, cancellation of grouped
// face contributions, and the holomorphy verdict for one (f, p, chi).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "holozeta/character.hpp"
#include "holozeta/igusa.hpp"
#include "holozeta/monodromy.hpp"
#include "holozeta/newton.hpp"
#include "holozeta/polyring.hpp"
#include "holozeta/ratfunc.hpp"

namespace holozeta {

enum class FacetKind { B1Simplex, B1Noncompact, X2, Other };

std::string to_string(FacetKind k);

struct FacetClass {
  int facet_index = -1;
  FacetKind kind = FacetKind::Other;
  // B1 kinds: x_i with the distance-one vertex; for B1Noncompact also the
  // single recession variable x_j. Zero-based.
  int variable = -1;
  int noncompact_variable = -1;
  int apex_vertex = -1;
  // X2: vertex ids of p, q, r; (a, x1, x2); the axis of p, then the axes where
  // q and r carry their 2.
  std::vector<int> x2_vertices;
  std::vector<std::int64_t> x2_params;
  std::vector<int> x2_axes;
};

FacetClass classify_facet(const NewtonPolyhedron& gamma, int facet_index);
std::vector<FacetClass> classify_facets(const NewtonPolyhedron& gamma);

// Every x_i for which the facet is a B1-facet (a facet can qualify for
// several variables; classify_facet reports the first).
std::vector<int> b1_variables(const NewtonPolyhedron& gamma, int facet_index);

// Facets whose nu/N reduces to the same ratio as `family` (N > 0 only).
std::vector<int> facets_with_ratio(const NewtonPolyhedron& gamma, const PoleFamily& family);

// Same shape tests on a simplex of a triangulated compact facet.
FacetKind classify_simplex(const NewtonPolyhedron& gamma, const Simplex& simplex);

struct CandidatePole {
  int facet_index = -1;
  std::int64_t nu = 0;
  std::int64_t N = 0;
  bool zero_N = false;  // non-compact facet with N = 0: never a pole line
  FacetClass cls;
};

// Facets with d | N(tau). N = 0 facets are listed and flagged.
std::vector<CandidatePole> candidate_poles(const NewtonPolyhedron& gamma, std::int64_t d);

// One summand L_tau S(cone); the cone defaults to Delta_tau.
struct ContributionTerm {
  int face_id = -1;
  std::optional<std::vector<IVec>> cone;
};

RationalFunctionT group_sum(const NewtonPolyhedron& gamma, const FpPolynomial& fbar, const Character& chi,
                            const std::vector<ContributionTerm>& group);
bool cancellation_check(const NewtonPolyhedron& gamma, const FpPolynomial& fbar, const Character& chi,
                        const std::vector<ContributionTerm>& group);

enum class Verdict { Holomorphic, PoleExplained, Violation };
std::string to_string(Verdict v);

struct AxisEigenvalues {
  std::size_t axis = 0;
  bool available = false;  // projection well-defined
  CycloFactorization zeta;
};

struct HolomorphyReport {
  IntPolynomial f;
  std::int64_t p = 0, d = 0, k = 0;
  bool nondegenerate_compact = false;
  bool nondegenerate_all = false;
  std::vector<CandidatePole> candidates;
  ZetaReport zeta;
  CycloFactorization origin;
  std::vector<AxisEigenvalues> axes;
  Verdict verdict = Verdict::Holomorphic;
  std::int64_t witness_order = 0;
  std::string witness_location;  // "origin" or "axis j"
};

// Throws DomainError if f is degenerate for the compact faces mod p.
HolomorphyReport holomorphy_report(const IntPolynomial& f, std::int64_t p, std::int64_t d, std::int64_t k);

}  // namespace holozeta
