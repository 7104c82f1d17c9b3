#pragma once

// Polynomials in T = q^{-s} over Q(zeta_d), and rational functions whose
// denominators are kept as products of (q^nu - T^N).

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "holozeta/cyclo.hpp"

namespace holozeta {

class TPoly {
 public:
  TPoly() = default;
  explicit TPoly(std::vector<Cyclo> coeffs);
  static TPoly constant(const Cyclo& c);
  static TPoly monomial(const Cyclo& c, std::size_t e);
  // q^nu - T^N
  static TPoly pole_factor(std::int64_t q, std::int64_t nu, std::int64_t N);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Cyclo>& coeffs() const { return c_; }
  Cyclo coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Cyclo(0); }
  const Cyclo& leading() const { return c_.back(); }

  TPoly operator+(const TPoly& o) const;
  TPoly operator-(const TPoly& o) const;
  TPoly operator*(const TPoly& o) const;
  TPoly operator*(const Cyclo& s) const;
  TPoly operator-() const { return *this * Cyclo(-1); }
  bool operator==(const TPoly& o) const;
  bool operator!=(const TPoly& o) const { return !(*this == o); }

  TPoly monic() const;

 private:
  void trim();
  std::vector<Cyclo> c_;
};

void divmod(const TPoly& a, const TPoly& b, TPoly& quot, TPoly& rem);
// Throws if b does not divide a.
TPoly exact_divide(const TPoly& a, const TPoly& b);
bool divides(const TPoly& b, const TPoly& a);
// Monic gcd; gcd(0, 0) = 0.
TPoly gcd(const TPoly& a, const TPoly& b);
TPoly power(const TPoly& a, int e);

using PoleFamily = std::pair<std::int64_t, std::int64_t>;  // (nu, N)

class RationalFunctionT {
 public:
  using FactorMap = std::map<PoleFamily, int>;

  RationalFunctionT() = default;
  RationalFunctionT(std::int64_t q, std::int64_t d) : q_(q), d_(d) {}
  RationalFunctionT(std::int64_t q, std::int64_t d, TPoly num, FactorMap factors);

  static RationalFunctionT constant(std::int64_t q, std::int64_t d, const Cyclo& c);

  std::int64_t q() const { return q_; }
  std::int64_t order() const { return d_; }
  const TPoly& numerator() const { return num_; }
  // (nu, N) -> multiplicity of (q^nu - T^N); always N > 0.
  const FactorMap& factors() const { return factors_; }
  // Parts of the factored denominator cancelled by reduce_rational without
  // consuming a whole factor, keyed by the reduced ratio nu/N.
  const std::map<PoleFamily, TPoly>& divisors() const { return divisors_; }
  bool is_zero() const { return num_.is_zero(); }

  TPoly expanded_denominator() const;

  RationalFunctionT operator+(const RationalFunctionT& o) const;
  RationalFunctionT operator-(const RationalFunctionT& o) const { return *this + o * Cyclo(-1); }
  RationalFunctionT operator*(const Cyclo& s) const;
  RationalFunctionT operator*(const RationalFunctionT& o) const;

  friend RationalFunctionT reduce_rational(const RationalFunctionT& r);

 private:
  std::int64_t q_ = 0;
  std::int64_t d_ = 1;
  TPoly num_;
  FactorMap factors_;
  std::map<PoleFamily, TPoly> divisors_;
};

RationalFunctionT reduce_rational(const RationalFunctionT& r);

// Equality as functions of T (cross multiplication).
bool same_function(const RationalFunctionT& a, const RationalFunctionT& b);

// First k+1 Taylor coefficients at T = 0.
std::vector<Cyclo> series_expand(const RationalFunctionT& r, std::size_t k);

// Families (nu, N) among `families` for which the denominator of `r`
// (reduced or not) has a non-constant gcd with q^nu - T^N.
std::vector<PoleFamily> actual_pole_lines(const RationalFunctionT& r, const std::vector<PoleFamily>& families);

PoleFamily reduced_ratio(const PoleFamily& f);

}  // namespace holozeta
