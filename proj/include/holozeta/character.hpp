#pragma once

// Multiplicative characters of F_p^x with values in Q(zeta_d), and sums of
// character values over the torus (F_p^x)^n.

#include <cstdint>
#include <vector>

#include "holozeta/cyclo.hpp"
#include "holozeta/polyring.hpp"

namespace holozeta {

std::int64_t smallest_primitive_root(std::int64_t p);

// chi(g^e) = zeta_d^(k e) for the smallest primitive root g; chi(0) = 0.
class Character {
 public:
  Character(std::int64_t p, std::int64_t d, std::int64_t k);

  std::int64_t p() const { return p_; }
  std::int64_t order() const { return d_; }
  std::int64_t index() const { return k_; }
  std::int64_t generator() const { return g_; }

  // Exponent j with chi(x) = zeta_d^j, or -1 when x = 0 mod p.
  std::int64_t exponent(std::int64_t x) const;
  Cyclo eval(std::int64_t x) const;

 private:
  std::int64_t p_, d_, k_, g_;
  std::vector<std::int64_t> dlog_;
};

inline Cyclo char_eval(const Character& chi, std::int64_t x) { return chi.eval(x); }

// All characters of order exactly d, one per k in [1, d) coprime to d.
std::vector<Character> characters_of_order(std::int64_t p, std::int64_t d);
// Every non-trivial character of F_p^x, ordered by (d, k).
std::vector<Character> nontrivial_characters(std::int64_t p);

// hist[v] = number of x in the torus with f(x) = v.
std::vector<std::int64_t> torus_value_histogram(const FpPolynomial& f);

// sum_v hist[v] chi(v), as integer multiplicities of the powers of zeta_d.
std::vector<std::int64_t> power_counts(const std::vector<std::int64_t>& hist, const Character& chi);
// Canonical coordinates of sum_j counts[j] zeta_d^j in the power basis mod Phi_d.
std::vector<std::int64_t> reduce_power_counts(std::vector<std::int64_t> counts, std::int64_t d);
Cyclo cyclo_from_counts(const std::vector<std::int64_t>& counts, std::int64_t d);

Cyclo char_sum_from_histogram(const std::vector<std::int64_t>& hist, const Character& chi);

// Sum over (F_p^x)^n of chi(f(x)), without normalization.
Cyclo raw_char_sum(const FpPolynomial& f, const Character& chi);
// p^{-n} raw_char_sum(f, chi), with n the number of variables of f.
Cyclo L_tau(const FpPolynomial& f_tau, const Character& chi);

}  // namespace holozeta
