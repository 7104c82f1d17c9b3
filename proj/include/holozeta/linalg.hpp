#pragma once

// Small exact linear algebra over the integers and rationals. Dimensions in
// this project never exceed a handful, so everything is dense and direct.

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace holozeta {

using IVec = std::vector<std::int64_t>;
using QVec = std::vector<mpq_class>;

std::int64_t dot(const IVec& a, const IVec& b);
std::int64_t coord_sum(const IVec& a);
IVec add(const IVec& a, const IVec& b);
IVec sub(const IVec& a, const IVec& b);
IVec scale(const IVec& a, std::int64_t k);
std::int64_t gcd_of(const IVec& a);
// Divides by the gcd of the entries. Zero vectors are returned unchanged.
IVec make_primitive(const IVec& a);
bool is_zero(const IVec& a);

std::int64_t to_int64(const mpz_class& z);

mpz_class determinant(const std::vector<std::vector<mpz_class>>& m);
mpz_class determinant(const std::vector<IVec>& rows);

// Rank of the row set (each row of equal length).
int rank(const std::vector<IVec>& rows);

// gcd of the absolute values of all r x r minors of the r x n matrix whose
// rows are `rows`. Zero iff the rows are dependent.
mpz_class maximal_minor_gcd(const std::vector<IVec>& rows);

// Primitive integer basis of {x in Q^ncols : rows * x = 0}.
std::vector<IVec> integer_kernel(const std::vector<IVec>& rows, std::size_t ncols);

// Coordinates of `point` in the basis `generators` (linearly independent), or
// nullopt if `point` is not in their span.
std::optional<QVec> coordinates_in(const std::vector<IVec>& generators, const IVec& point);

template <class T>
T floor_div(T a, T b) {
  T q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t floor_q(const mpq_class& q);

}  // namespace holozeta
