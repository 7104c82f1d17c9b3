#pragma once

// Multiplicities, normalized volumes, and lattice points of rational cones.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "holozeta/linalg.hpp"
#include "holozeta/newton.hpp"

namespace holozeta {

// Cone {sum l_i g_i} with l_i > 0 where open[i], l_i >= 0 otherwise.
struct SimplicialCone {
  std::vector<IVec> generators;
  std::vector<bool> open;
};

// Index of Z g_1 + ... + Z g_r in the integral points of its real span.
mpz_class multiplicity(const std::vector<IVec>& vectors);

struct VFaceEquation {
  std::int64_t N = 0;
  IVec coefficients;  // length n, zero outside the index set
};

// Primitive equation sum_{i in I} a_i x_i = N of Aff(tau) inside L_I.
VFaceEquation lattice_distance_vface(const NewtonPolyhedron& gamma, int face_id);

// Normalized volume of the simplex with the given lattice vertices.
std::int64_t simplex_normalized_volume(const std::vector<IVec>& vertices);
std::int64_t normalized_volume(const NewtonPolyhedron& gamma, int face_id);

struct NVResult {
  int face_id = -1;
  std::int64_t normalized_volume = 0;
  std::int64_t N = 0;
  std::int64_t multiplicity = 0;
};
// For a V-simplex: NV, N and mult(vertices); NV * N == mult.
NVResult v_simplex_data(const NewtonPolyhedron& gamma, int face_id);

// Smallest face of a simplicial face containing both faces.
int face_join(const NewtonPolyhedron& gamma, int a, int b);

// Relatively open cone strictly spanned by `generators`, written as a
// disjoint union of relatively open simplicial cones on the same rays.
std::vector<SimplicialCone> subdivide_cone(const std::vector<IVec>& generators);

// Facets of the closed cone spanned by `generators`, as generator index sets.
std::vector<std::vector<int>> cone_facets(const std::vector<IVec>& generators);

// Lattice points of the half-open parallelepiped of the cone: l_i in (0,1]
// for open generators and [0,1) for closed ones.
std::vector<IVec> fundamental_points(const SimplicialCone& cone);

}  // namespace holozeta
