#include "holozeta/monodromy.hpp"

#include <algorithm>

#include "holozeta/error.hpp"
#include "holozeta/lattice.hpp"

namespace holozeta {

CycloFactorization::CycloFactorization(const std::map<std::int64_t, std::int64_t>& factors) {
  for (const auto& [e, m] : factors) multiply_factor(e, m);
}

void CycloFactorization::multiply_factor(std::int64_t e, std::int64_t exponent) {
  if (e <= 0) throw DomainError("cyclotomic factor exponent must be positive");
  if (exponent == 0) return;
  auto& slot = factors_[e];
  slot += exponent;
  if (slot == 0) factors_.erase(e);
}

CycloFactorization CycloFactorization::operator*(const CycloFactorization& o) const {
  CycloFactorization r = *this;
  for (const auto& [e, m] : o.factors_) r.multiply_factor(e, m);
  return r;
}

CycloFactorization CycloFactorization::inverse() const {
  CycloFactorization r;
  for (const auto& [e, m] : factors_) r.multiply_factor(e, -m);
  return r;
}

std::map<std::int64_t, std::int64_t> CycloFactorization::phi_form() const {
  std::map<std::int64_t, std::int64_t> out;
  for (const auto& [e, m] : factors_)
    for (std::int64_t k = 1; k * k <= e; ++k) {
      if (e % k) continue;
      out[k] += m;
      if (k != e / k) out[e / k] += m;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

std::set<std::int64_t> CycloFactorization::eigenvalue_orders() const {
  std::set<std::int64_t> s;
  for (const auto& [m, mult] : phi_form()) s.insert(m);
  return s;
}

bool eigenvalue_order_divisible(const CycloFactorization& z, std::int64_t d) {
  if (d < 1) throw DomainError("order must be positive");
  for (auto m : z.eigenvalue_orders())
    if (m % d == 0) return true;
  return false;
}

namespace {

std::int64_t vface_N(const NewtonPolyhedron& gamma, int id) { return lattice_distance_vface(gamma, id).N; }

bool is_vface(const NewtonPolyhedron& gamma, int id) { return gamma.face(id).v_face_index_set.has_value(); }

// V-edges of gamma whose vertices both lie in the simplex, and the V-vertices
// where two of them meet.
void simplex_vparts(const NewtonPolyhedron& gamma, const Simplex& simplex, std::vector<int>& edges,
                    std::vector<int>& points) {
  edges.clear();
  points.clear();
  for (const auto& face : gamma.faces()) {
    if (face.dim != 1 || !face.compact || !face.v_face_index_set) continue;
    if (std::all_of(face.vertex_ids.begin(), face.vertex_ids.end(),
                    [&](int v) { return std::find(simplex.begin(), simplex.end(), v) != simplex.end(); }))
      edges.push_back(face.id);
  }
  for (int v : simplex) {
    int through = 0;
    for (int e : edges) {
      const auto& vs = gamma.face(e).vertex_ids;
      if (std::find(vs.begin(), vs.end(), v) != vs.end()) ++through;
    }
    if (through < 2) continue;
    auto pid = gamma.find_compact_face({v});
    if (pid && is_vface(gamma, *pid)) points.push_back(*pid);
  }
}

int facet_containing(const NewtonPolyhedron& gamma, const Simplex& simplex) {
  std::vector<int> sorted = simplex;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& fd : gamma.facets()) {
    if (!fd.compact) continue;
    const auto& vs = gamma.face(fd.face_id).vertex_ids;
    if (std::includes(vs.begin(), vs.end(), sorted.begin(), sorted.end())) return fd.face_id;
  }
  throw DomainError("simplex is not inside a compact facet");
}

}  // namespace

CycloFactorization varchenko_zeta(const NewtonPolyhedron& gamma) {
  CycloFactorization z;
  for (const auto& vf : v_faces(gamma)) {
    const auto& face = gamma.face(vf.face_id);
    const std::int64_t nv = normalized_volume(gamma, vf.face_id);
    z.multiply_factor(vface_N(gamma, vf.face_id), face.dim % 2 == 0 ? nv : -nv);
  }
  return z;
}

CycloFactorization f_tau_factor(const NewtonPolyhedron& gamma, const Simplex& simplex) {
  if (gamma.n() != 3 || simplex.size() != 3) throw DomainError("F_tau is defined for 2-simplices in dimension 3");
  const int facet = facet_containing(gamma, simplex);
  std::int64_t N = 0;
  for (const auto& fd : gamma.facets())
    if (fd.face_id == facet) N = fd.N;
  std::vector<IVec> pts;
  for (int v : simplex) pts.push_back(gamma.vertices()[v]);
  CycloFactorization z;
  z.multiply_factor(N, simplex_normalized_volume(pts));
  std::vector<int> edges, points;
  simplex_vparts(gamma, simplex, edges, points);
  for (int e : edges) z.multiply_factor(vface_N(gamma, e), -normalized_volume(gamma, e));
  for (int p : points) z.multiply_factor(vface_N(gamma, p), 1);
  return z;
}

CycloFactorization zeta_via_ftau(const NewtonPolyhedron& gamma) {
  return zeta_via_ftau(gamma, canonical_vertex_priority(gamma));
}

CycloFactorization zeta_via_ftau(const NewtonPolyhedron& gamma, const std::vector<int>& priority) {
  if (gamma.n() != 3) throw DomainError("the F_tau decomposition needs three variables");
  CycloFactorization z;
  std::set<int> used;
  for (const auto& fs : triangulate_compact_facets(gamma, priority)) {
    z = z * f_tau_factor(gamma, fs.simplex);
    std::vector<int> edges, points;
    simplex_vparts(gamma, fs.simplex, edges, points);
    used.insert(edges.begin(), edges.end());
    used.insert(points.begin(), points.end());
  }
  for (const auto& vf : v_faces(gamma)) {
    const auto& face = gamma.face(vf.face_id);
    if (face.dim == 2 || used.count(vf.face_id)) continue;
    const std::int64_t nv = normalized_volume(gamma, vf.face_id);
    z.multiply_factor(vface_N(gamma, vf.face_id), face.dim == 0 ? nv : -nv);
  }
  return z;
}

CycloFactorization generic_axis_zeta(const NewtonPolyhedron& gamma, std::size_t j) {
  return varchenko_zeta(project_polyhedron(gamma, j));
}

}  // namespace holozeta
