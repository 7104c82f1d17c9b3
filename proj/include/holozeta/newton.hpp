#pragma once

// Newton polyhedron at the origin: conv(supp f + R_{>=0}^n), with its full
// face lattice, facet normals, dual cones and V-face annotations.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "holozeta/linalg.hpp"
#include "holozeta/polyring.hpp"

namespace holozeta {

struct FacetData {
  IVec normal;  // primitive, entries >= 0
  std::int64_t N = 0;
  std::int64_t nu = 0;
  bool compact = false;
  int face_id = -1;
};

struct Face {
  int id = -1;
  int dim = 0;
  std::vector<int> vertex_ids;                 // sorted
  std::vector<int> facet_ids;                  // facets containing the face, sorted
  std::vector<std::size_t> recession;          // variables j with tau + e_j in tau
  bool compact = true;
  std::optional<std::vector<std::size_t>> v_face_index_set;
};

class NewtonPolyhedron {
 public:
  NewtonPolyhedron() = default;

  std::size_t n() const { return n_; }
  const std::vector<IVec>& vertices() const { return vertices_; }
  const std::vector<FacetData>& facets() const { return facets_; }
  const std::vector<Face>& faces() const { return faces_; }
  const std::vector<ExponentVector>& support_points() const { return support_; }
  const Face& face(int id) const { return faces_.at(static_cast<std::size_t>(id)); }
  int whole_face_id() const { return whole_face_; }

  // N(a) = min over the polyhedron of a.x, for a >= 0.
  std::int64_t lattice_value(const IVec& a) const;
  bool point_on_face(const IVec& k, int face_id) const;
  // The face with exactly this vertex set and recession set, if any.
  std::optional<int> find_face(const std::vector<int>& vertex_ids,
                               const std::vector<std::size_t>& recession) const;
  // Compact face with exactly this vertex set.
  std::optional<int> find_compact_face(std::vector<int> vertex_ids) const;
  bool face_contains(int outer, int inner) const;
  // Faces of dimension dim(face) - 1 contained in `face`.
  std::vector<int> subfaces_of_codim_one(int face_id) const;
  std::vector<IVec> face_vertices(int face_id) const;

  friend NewtonPolyhedron build_polyhedron(const std::vector<ExponentVector>& support, std::size_t n);

 private:
  std::size_t n_ = 0;
  std::vector<ExponentVector> support_;
  std::vector<IVec> vertices_;
  std::vector<FacetData> facets_;
  std::vector<Face> faces_;
  int whole_face_ = -1;
};

NewtonPolyhedron build_polyhedron(const std::vector<ExponentVector>& support, std::size_t n);

struct FaceOfVector {
  int face_id;
  std::int64_t N;
  std::int64_t nu;
};

FaceOfVector face_of_vector(const NewtonPolyhedron& gamma, const IVec& a);

// Primitive normals of the facets containing the face. Throws for Gamma_0.
std::vector<IVec> dual_cone(const NewtonPolyhedron& gamma, int face_id);

struct VFace {
  int face_id;
  std::vector<std::size_t> index_set;
};
std::vector<VFace> v_faces(const NewtonPolyhedron& gamma);

bool noncompact_for(const NewtonPolyhedron& gamma, int face_id, std::size_t j);

using Simplex = std::vector<int>;  // vertex ids

// Pulling triangulation of a compact face: the apex of each face is its
// vertex that comes first in `priority` (a permutation of vertex ids).
std::vector<Simplex> triangulate_face(const NewtonPolyhedron& gamma, int face_id,
                                      const std::vector<int>& priority);
std::vector<int> canonical_vertex_priority(const NewtonPolyhedron& gamma);
std::vector<int> random_vertex_priority(const NewtonPolyhedron& gamma, std::mt19937_64& rng);

struct FacetSimplex {
  int facet_index;
  Simplex simplex;
};
std::vector<FacetSimplex> triangulate_compact_facets(const NewtonPolyhedron& gamma);
std::vector<FacetSimplex> triangulate_compact_facets(const NewtonPolyhedron& gamma,
                                                     const std::vector<int>& priority);

// Image of the polyhedron under dropping coordinate j, rebuilt in n-1
// variables. Throws DomainError if the projection contains the origin.
NewtonPolyhedron project_polyhedron(const NewtonPolyhedron& gamma, std::size_t j);

}  // namespace holozeta
