#pragma once

// Ground truth independent of the Newton-polyhedron formulas: congruence
// counts modulo p^i, the zeta series they define, and the mod-p
// nondegeneracy check.

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "holozeta/character.hpp"
#include "holozeta/newton.hpp"
#include "holozeta/polyring.hpp"

namespace holozeta {

constexpr double kDefaultBudget = 1e8;
// HOLOZETA_BUDGET overrides the default when set to a positive number.
double default_budget();

// M_i(u) for every u in Z/p^i: the number of x in (Z/p^i)^n (restricted:
// x = 0 mod p) with f(x) = u mod p^i. Index of the result is u.
std::vector<mpz_class> count_solutions(const IntPolynomial& f, std::int64_t p, int i, bool restricted,
                                       double budget = default_budget());

// Values of f on (Z/p^L)^n (or (pZ/p^L)^n) binned by p-adic order i < L and
// leading digit u in [1, p-1].
struct CountTable {
  std::int64_t p = 0;
  std::size_t n = 0;
  int levels = 0;  // L
  bool restricted = false;
  std::vector<std::vector<std::int64_t>> bins;  // bins[i][u]
};

CountTable build_count_table(const IntPolynomial& f, std::int64_t p, int levels, bool restricted,
                             double budget = default_budget());

// Largest k with p^{n(k+1)} <= budget, or -1 if even k = 0 is too big.
int max_series_terms(std::int64_t p, std::size_t n, double budget = default_budget());

// Coefficients of T^0..T^{levels-1}.
std::vector<Cyclo> series_from_table(const CountTable& t, const Character& chi);
// Coefficients of T^0..T^k; local restricts to x = 0 mod p.
std::vector<Cyclo> truncated_series(const IntPolynomial& f, const Character& chi, int k, bool local,
                                    double budget = default_budget());

struct NondegeneracyResult {
  bool nondegenerate = true;
  int face_id = -1;
  IVec witness;  // point of the torus where f_tau and its partials vanish
};

enum class FaceSet { Compact, All };

NondegeneracyResult check_nondegenerate(const IntPolynomial& f, std::int64_t p, FaceSet which);
NondegeneracyResult check_nondegenerate(const IntPolynomial& f, const NewtonPolyhedron& gamma, std::int64_t p,
                                        FaceSet which);

// Shifts c (x_j -> x_j - c, j zero-based) whose shifted polynomial passes the
// compact-face check mod p.
std::vector<std::int64_t> shifted_nondegenerate_scan(const IntPolynomial& f, std::size_t j,
                                                     const std::vector<std::int64_t>& candidates, std::int64_t p);

}  // namespace holozeta
