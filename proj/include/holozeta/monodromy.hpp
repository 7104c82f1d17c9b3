#pragma once

// Monodromy zeta functions from the Newton polyhedron (Varchenko), the
// factors F_tau of a triangulation, and eigenvalue-order queries.

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "holozeta/newton.hpp"

namespace holozeta {

// prod_e (1 - t^e)^{m_e}
class CycloFactorization {
 public:
  CycloFactorization() = default;
  explicit CycloFactorization(const std::map<std::int64_t, std::int64_t>& factors);

  const std::map<std::int64_t, std::int64_t>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }

  void multiply_factor(std::int64_t e, std::int64_t exponent);
  CycloFactorization operator*(const CycloFactorization& o) const;
  CycloFactorization inverse() const;

  // m -> net multiplicity of Phi_m, i.e. sum over e divisible by m of m_e.
  std::map<std::int64_t, std::int64_t> phi_form() const;
  std::set<std::int64_t> eigenvalue_orders() const;

  bool operator==(const CycloFactorization& o) const { return factors_ == o.factors_; }

 private:
  std::map<std::int64_t, std::int64_t> factors_;
};

// Some m with d | m has non-zero Phi-multiplicity.
bool eigenvalue_order_divisible(const CycloFactorization& z, std::int64_t d);

// prod over V-faces of (1 - t^{N})^{(-1)^dim NV}
CycloFactorization varchenko_zeta(const NewtonPolyhedron& gamma);

// F_tau for a 2-simplex (vertex ids) of a triangulated compact facet, n = 3.
CycloFactorization f_tau_factor(const NewtonPolyhedron& gamma, const Simplex& simplex);

// prod F_tau times the V-edge and V-vertex factors not used by any F_tau.
CycloFactorization zeta_via_ftau(const NewtonPolyhedron& gamma);
CycloFactorization zeta_via_ftau(const NewtonPolyhedron& gamma, const std::vector<int>& priority);

// Varchenko zeta of the projection along x_j (zero-based): the zeta at a
// generic point of that coordinate axis.
CycloFactorization generic_axis_zeta(const NewtonPolyhedron& gamma, std::size_t j);

}  // namespace holozeta
