#pragma once

// Sparse multivariate polynomials over Z and over prime fields F_p.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "holozeta/linalg.hpp"

namespace holozeta {

using ExponentVector = IVec;

class NewtonPolyhedron;

class IntPolynomial {
 public:
  using TermMap = std::map<ExponentVector, mpz_class>;

  explicit IntPolynomial(std::size_t n = 0) : n_(n) {}
  IntPolynomial(std::size_t n, TermMap terms);

  std::size_t n() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Adds c * x^k, combining with an existing term and dropping zeros.
  void add_term(const ExponentVector& k, const mpz_class& c);
  mpz_class coefficient(const ExponentVector& k) const;

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  bool operator==(const IntPolynomial& o) const { return n_ == o.n_ && terms_ == o.terms_; }

 private:
  std::size_t n_;
  TermMap terms_;
};

class FpPolynomial {
 public:
  using TermMap = std::map<ExponentVector, std::int64_t>;

  FpPolynomial(std::int64_t p, std::size_t n) : p_(p), n_(n) {}

  std::int64_t p() const { return p_; }
  std::size_t n() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const ExponentVector& k, std::int64_t c);

  std::int64_t evaluate(const std::vector<std::int64_t>& x) const;
  FpPolynomial derivative(std::size_t j) const;

  FpPolynomial operator+(const FpPolynomial& o) const;
  FpPolynomial operator*(const FpPolynomial& o) const;
  bool operator==(const FpPolynomial& o) const {
    return p_ == o.p_ && n_ == o.n_ && terms_ == o.terms_;
  }

 private:
  std::int64_t p_;
  std::size_t n_;
  TermMap terms_;
};

bool is_prime(std::int64_t p);
std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t mod);

IntPolynomial parse_polynomial(const std::string& text, const std::vector<std::string>& variables);
std::string to_string(const IntPolynomial& f, const std::vector<std::string>& variables);
std::vector<std::string> default_variable_names(std::size_t n);
std::vector<std::string> split_variables(const std::string& csv);

std::vector<ExponentVector> support(const IntPolynomial& f);
FpPolynomial reduce_mod_p(const IntPolynomial& f, std::int64_t p);

// Keeps the terms whose exponent lies on the face `face_id` of `gamma`.
IntPolynomial restrict_to_face(const IntPolynomial& f, const NewtonPolyhedron& gamma, int face_id);
FpPolynomial restrict_to_face(const FpPolynomial& f, const NewtonPolyhedron& gamma, int face_id);

// f with x_j replaced by (x_j - c); j is zero-based.
IntPolynomial shift_variable(const IntPolynomial& f, std::size_t j, const mpz_class& c);

}  // namespace holozeta
