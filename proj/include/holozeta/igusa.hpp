#pragma once

// Hoornaert's formula for the local and global Igusa zeta functions with a
// character, as exact rational functions in T = q^{-s}.

#include <cstdint>
#include <optional>
#include <vector>

#include "holozeta/character.hpp"
#include "holozeta/newton.hpp"
#include "holozeta/polyring.hpp"
#include "holozeta/ratfunc.hpp"

namespace holozeta {

// sum over integral a in the relatively open cone spanned by `generators` of
// q^{-nu(a)} T^{N(a)}, with N taken against gamma. The cone must lie in the
// closure of a single dual cone so that N is linear on it.
RationalFunctionT S_cone(const std::vector<IVec>& generators, const NewtonPolyhedron& gamma, std::int64_t q,
                         std::int64_t d = 1);

// L_tau S(Delta_tau); Gamma_0 itself gives L_tau.
RationalFunctionT face_contribution(const NewtonPolyhedron& gamma, int face_id, const FpPolynomial& fbar,
                                    const Character& chi);

struct IgusaOptions {
  bool force = false;  // skip the nondegeneracy check
};

RationalFunctionT igusa_local(const IntPolynomial& f, const Character& chi, IgusaOptions opt = {});
RationalFunctionT igusa_global(const IntPolynomial& f, const Character& chi, IgusaOptions opt = {});

// (nu, N) of every facet with N > 0, deduplicated and sorted.
std::vector<PoleFamily> facet_families(const NewtonPolyhedron& gamma);
// Facet families with d | N and N > 0.
std::vector<PoleFamily> candidate_families(const NewtonPolyhedron& gamma, std::int64_t d);

struct ZetaReport {
  RationalFunctionT local;  // reduced
  std::optional<RationalFunctionT> global;  // absent when f is degenerate for a non-compact face
  std::vector<PoleFamily> candidates;
  std::vector<PoleFamily> local_poles;
  std::vector<PoleFamily> global_poles;
  bool trusted = true;  // false when the nondegeneracy check was skipped
};

ZetaReport zeta_report(const IntPolynomial& f, const Character& chi, IgusaOptions opt = {});

}  // namespace holozeta
