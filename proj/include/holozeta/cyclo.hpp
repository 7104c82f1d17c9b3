#pragma once

// Exact elements of Q(zeta_m), stored in the power basis modulo the m-th
// cyclotomic polynomial.

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace holozeta {

std::int64_t euler_phi(std::int64_t m);
// Integer coefficients of Phi_m, constant term first.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t m);

class Cyclo {
 public:
  Cyclo() : m_(1), c_(1) {}
  Cyclo(const mpq_class& r) : m_(1), c_{r} {}  // NOLINT: rationals embed implicitly
  Cyclo(long r) : Cyclo(mpq_class(r)) {}       // NOLINT
  // Element of Q(zeta_m) from power-basis coefficients of any length; the
  // vector is reduced modulo Phi_m.
  Cyclo(std::int64_t m, std::vector<mpq_class> coeffs);

  static Cyclo zeta_power(std::int64_t m, std::int64_t e);
  static Cyclo embed_rational(const mpq_class& r) { return Cyclo(r); }

  std::int64_t order() const { return m_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;
  // Only valid when is_rational().
  mpq_class rational_value() const;

  // Same element written over Q(zeta_target); m must divide target.
  Cyclo promoted(std::int64_t target) const;

  Cyclo operator-() const;
  Cyclo operator+(const Cyclo& o) const;
  Cyclo operator-(const Cyclo& o) const;
  Cyclo operator*(const Cyclo& o) const;
  Cyclo operator*(const mpq_class& r) const;
  Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
  Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
  Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }
  Cyclo inverse() const;
  Cyclo operator/(const Cyclo& o) const { return *this * o.inverse(); }

  bool operator==(const Cyclo& o) const;
  bool operator!=(const Cyclo& o) const { return !(*this == o); }

  // "a/b" strings of the coefficients, promoted to order `m` (default own order).
  std::vector<std::string> coefficient_strings(std::int64_t m = 0) const;
  // Human-readable form in terms of z = zeta_m, e.g. "1/3 - 2*z + z^2".
  std::string to_string() const;

 private:
  std::int64_t m_;
  std::vector<mpq_class> c_;
};

std::string rational_string(const mpq_class& r);

}  // namespace holozeta
