#include "holozeta/newton.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "holozeta/error.hpp"

namespace holozeta {

namespace {

IVec unit(std::size_t n, std::size_t j) {
  IVec e(n, 0);
  e[j] = 1;
  return e;
}

// Points not dominating any other point; only these can be vertices.
std::vector<IVec> minimal_points(const std::vector<IVec>& pts) {
  std::vector<IVec> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool dominated = false;
    for (std::size_t k = 0; k < pts.size() && !dominated; ++k) {
      if (k == i) continue;
      bool le = true;
      for (std::size_t c = 0; c < pts[i].size(); ++c)
        if (pts[k][c] > pts[i][c]) { le = false; break; }
      dominated = le;  // pts are distinct, so pts[k] <= pts[i] means strictly below
    }
    if (!dominated) out.push_back(pts[i]);
  }
  return out;
}

template <class F>
void for_each_combination(std::size_t total, std::size_t k, F&& fn) {
  if (k > total) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == total - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct FaceKey {
  std::vector<int> vertices;
  std::vector<std::size_t> recession;
  bool operator<(const FaceKey& o) const {
    return std::tie(vertices, recession) < std::tie(o.vertices, o.recession);
  }
};

}  // namespace

NewtonPolyhedron build_polyhedron(const std::vector<ExponentVector>& input, std::size_t n) {
  if (n == 0) throw DomainError("Newton polyhedron needs at least one variable");
  if (input.empty()) throw DomainError("empty support: the zero polynomial has no Newton polyhedron");
  std::set<IVec> uniq;
  for (const auto& k : input) {
    if (k.size() != n) throw DomainError("exponent vector length does not match dimension");
    for (auto e : k)
      if (e < 0) throw DomainError("negative exponent in support");
    if (is_zero(k)) throw DomainError("support contains the origin (f(0) != 0)");
    uniq.insert(k);
  }
  NewtonPolyhedron g;
  g.n_ = n;
  g.support_.assign(uniq.begin(), uniq.end());
  const auto cand = minimal_points(g.support_);

  // Candidate facet normals: hyperplanes through n - |J| candidate points
  // that are parallel to the coordinate directions in J.
  std::set<IVec> normals;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> dirs;
    for (std::size_t j = 0; j < n; ++j)
      if (mask & (std::size_t{1} << j)) dirs.push_back(j);
    if (dirs.size() >= n) continue;
    const std::size_t k = n - dirs.size();
    for_each_combination(cand.size(), k, [&](const std::vector<std::size_t>& idx) {
      std::vector<IVec> rows;
      for (std::size_t i = 1; i < k; ++i) rows.push_back(sub(cand[idx[i]], cand[idx[0]]));
      for (auto j : dirs) rows.push_back(unit(n, j));
      auto ker = rows.empty() ? std::vector<IVec>{} : integer_kernel(rows, n);
      IVec a;
      if (rows.empty()) {
        a = IVec{1};  // n == 1
      } else {
        if (ker.size() != 1) return;
        a = ker.front();
      }
      bool pos = false, neg = false;
      for (auto x : a) {
        pos |= x > 0;
        neg |= x < 0;
      }
      if (pos && neg) return;
      if (neg) a = scale(a, -1);
      std::int64_t N = dot(a, cand[idx[0]]);
      for (const auto& p : cand)
        if (dot(a, p) < N) return;
      normals.insert(a);
    });
  }

  struct Raw {
    IVec a;
    std::int64_t N;
  };
  std::vector<Raw> facets;
  for (const auto& a : normals) {
    std::int64_t N = dot(a, cand.front());
    for (const auto& p : cand) N = std::min(N, dot(a, p));
    std::vector<IVec> tight;
    for (const auto& p : cand)
      if (dot(a, p) == N) tight.push_back(p);
    std::vector<IVec> span;
    for (std::size_t i = 1; i < tight.size(); ++i) span.push_back(sub(tight[i], tight[0]));
    for (std::size_t j = 0; j < n; ++j)
      if (a[j] == 0) span.push_back(unit(n, j));
    if (rank(span) == static_cast<int>(n) - 1) facets.push_back({a, N});
  }

  for (const auto& p : cand) {
    std::vector<IVec> tight_normals;
    for (const auto& f : facets)
      if (dot(f.a, p) == f.N) tight_normals.push_back(f.a);
    if (rank(tight_normals) == static_cast<int>(n)) g.vertices_.push_back(p);
  }
  std::sort(g.vertices_.begin(), g.vertices_.end());

  for (const auto& f : facets) {
    FacetData fd;
    fd.normal = f.a;
    fd.N = f.N;
    fd.nu = coord_sum(f.a);
    fd.compact = std::all_of(f.a.begin(), f.a.end(), [](std::int64_t x) { return x > 0; });
    g.facets_.push_back(fd);
  }

  // Face lattice by closing facet intersections.
  const auto& verts = g.vertices_;
  auto closure = [&](const std::vector<int>& facet_set, Face& out) -> bool {
    std::vector<int> V;
    for (std::size_t v = 0; v < verts.size(); ++v) {
      bool ok = true;
      for (int f : facet_set)
        if (dot(g.facets_[f].normal, verts[v]) != g.facets_[f].N) { ok = false; break; }
      if (ok) V.push_back(static_cast<int>(v));
    }
    if (V.empty()) return false;
    std::vector<std::size_t> R;
    for (std::size_t j = 0; j < n; ++j) {
      bool ok = true;
      for (int f : facet_set)
        if (g.facets_[f].normal[j] != 0) { ok = false; break; }
      if (ok) R.push_back(j);
    }
    std::vector<int> C;
    for (std::size_t f = 0; f < g.facets_.size(); ++f) {
      const auto& fd = g.facets_[f];
      bool ok = true;
      for (int v : V)
        if (dot(fd.normal, verts[v]) != fd.N) { ok = false; break; }
      for (auto j : R)
        if (ok && fd.normal[j] != 0) ok = false;
      if (ok) C.push_back(static_cast<int>(f));
    }
    std::vector<IVec> span;
    for (std::size_t i = 1; i < V.size(); ++i) span.push_back(sub(verts[V[i]], verts[V[0]]));
    for (auto j : R) span.push_back(unit(n, j));
    out.dim = rank(span);
    out.vertex_ids = V;
    out.recession = R;
    out.facet_ids = C;
    out.compact = R.empty();
    return true;
  };

  std::map<FaceKey, Face> found;
  std::vector<std::vector<int>> queue;
  for (std::size_t f = 0; f < g.facets_.size(); ++f) queue.push_back({static_cast<int>(f)});
  while (!queue.empty()) {
    auto s = queue.back();
    queue.pop_back();
    Face face;
    if (!closure(s, face)) continue;
    FaceKey key{face.vertex_ids, face.recession};
    if (found.count(key)) continue;
    auto facet_set = face.facet_ids;
    found.emplace(key, face);
    for (std::size_t f = 0; f < g.facets_.size(); ++f) {
      if (std::binary_search(facet_set.begin(), facet_set.end(), static_cast<int>(f))) continue;
      auto next = facet_set;
      next.push_back(static_cast<int>(f));
      std::sort(next.begin(), next.end());
      queue.push_back(next);
    }
  }
  Face whole;
  whole.dim = static_cast<int>(n);
  whole.vertex_ids.resize(verts.size());
  std::iota(whole.vertex_ids.begin(), whole.vertex_ids.end(), 0);
  for (std::size_t j = 0; j < n; ++j) whole.recession.push_back(j);
  whole.compact = false;

  std::vector<Face> all;
  for (auto& [k, f] : found) all.push_back(f);
  all.push_back(whole);
  std::sort(all.begin(), all.end(), [](const Face& a, const Face& b) {
    return std::tie(a.dim, a.vertex_ids, a.recession) < std::tie(b.dim, b.vertex_ids, b.recession);
  });
  for (std::size_t i = 0; i < all.size(); ++i) {
    Face& f = all[i];
    f.id = static_cast<int>(i);
    if (f.dim == static_cast<int>(n)) g.whole_face_ = f.id;
    if (f.compact) {
      std::set<std::size_t> nz;
      for (int v : f.vertex_ids)
        for (std::size_t j = 0; j < n; ++j)
          if (verts[v][j] != 0) nz.insert(j);
      if (static_cast<int>(nz.size()) == f.dim + 1)
        f.v_face_index_set = std::vector<std::size_t>(nz.begin(), nz.end());
    }
    if (f.dim == static_cast<int>(n) - 1 && f.facet_ids.size() == 1) g.facets_[f.facet_ids[0]].face_id = f.id;
  }
  g.faces_ = std::move(all);
  return g;
}

std::int64_t NewtonPolyhedron::lattice_value(const IVec& a) const {
  std::int64_t best = dot(a, vertices_.front());
  for (const auto& v : vertices_) best = std::min(best, dot(a, v));
  return best;
}

bool NewtonPolyhedron::point_on_face(const IVec& k, int face_id) const {
  for (const auto& f : facets_)
    if (dot(f.normal, k) < f.N) return false;
  for (int fi : face(face_id).facet_ids)
    if (dot(facets_[fi].normal, k) != facets_[fi].N) return false;
  return true;
}

std::optional<int> NewtonPolyhedron::find_face(const std::vector<int>& vertex_ids,
                                               const std::vector<std::size_t>& recession) const {
  for (const auto& f : faces_)
    if (f.vertex_ids == vertex_ids && f.recession == recession) return f.id;
  return std::nullopt;
}

std::optional<int> NewtonPolyhedron::find_compact_face(std::vector<int> vertex_ids) const {
  std::sort(vertex_ids.begin(), vertex_ids.end());
  return find_face(vertex_ids, {});
}

bool NewtonPolyhedron::face_contains(int outer, int inner) const {
  const auto& o = face(outer);
  const auto& i = face(inner);
  return std::includes(o.vertex_ids.begin(), o.vertex_ids.end(), i.vertex_ids.begin(), i.vertex_ids.end()) &&
         std::includes(o.recession.begin(), o.recession.end(), i.recession.begin(), i.recession.end());
}

std::vector<int> NewtonPolyhedron::subfaces_of_codim_one(int face_id) const {
  std::vector<int> out;
  const int d = face(face_id).dim;
  for (const auto& f : faces_)
    if (f.dim == d - 1 && face_contains(face_id, f.id)) out.push_back(f.id);
  return out;
}

std::vector<IVec> NewtonPolyhedron::face_vertices(int face_id) const {
  std::vector<IVec> out;
  for (int v : face(face_id).vertex_ids) out.push_back(vertices_[v]);
  return out;
}

FaceOfVector face_of_vector(const NewtonPolyhedron& gamma, const IVec& a) {
  if (a.size() != gamma.n()) throw DomainError("weight vector has wrong dimension");
  for (auto x : a)
    if (x < 0) throw DomainError("weight vector must be non-negative");
  if (is_zero(a)) throw DomainError("weight vector must be non-zero");
  const std::int64_t N = gamma.lattice_value(a);
  std::vector<int> V;
  for (std::size_t v = 0; v < gamma.vertices().size(); ++v)
    if (dot(a, gamma.vertices()[v]) == N) V.push_back(static_cast<int>(v));
  std::vector<std::size_t> R;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] == 0) R.push_back(j);
  auto id = gamma.find_face(V, R);
  if (!id) throw DomainError("internal: minimizing face missing from the face lattice");
  return {*id, N, coord_sum(a)};
}

std::vector<IVec> dual_cone(const NewtonPolyhedron& gamma, int face_id) {
  if (face_id == gamma.whole_face_id())
    throw DomainError("the dual cone of the whole polyhedron is {0}");
  std::vector<IVec> gens;
  for (int f : gamma.face(face_id).facet_ids) gens.push_back(gamma.facets()[f].normal);
  return gens;
}

std::vector<VFace> v_faces(const NewtonPolyhedron& gamma) {
  std::vector<VFace> out;
  for (const auto& f : gamma.faces())
    if (f.v_face_index_set) out.push_back({f.id, *f.v_face_index_set});
  return out;
}

bool noncompact_for(const NewtonPolyhedron& gamma, int face_id, std::size_t j) {
  const auto& r = gamma.face(face_id).recession;
  return std::find(r.begin(), r.end(), j) != r.end();
}

namespace {

void pull(const NewtonPolyhedron& gamma, int face_id, const std::vector<int>& rank_of,
          std::vector<Simplex>& out) {
  const Face& f = gamma.face(face_id);
  if (static_cast<int>(f.vertex_ids.size()) == f.dim + 1) {
    out.push_back(f.vertex_ids);
    return;
  }
  int apex = f.vertex_ids.front();
  for (int v : f.vertex_ids)
    if (rank_of[v] < rank_of[apex]) apex = v;
  for (int sub : gamma.subfaces_of_codim_one(face_id)) {
    const auto& sv = gamma.face(sub).vertex_ids;
    if (std::binary_search(sv.begin(), sv.end(), apex)) continue;
    std::vector<Simplex> part;
    pull(gamma, sub, rank_of, part);
    for (auto& s : part) {
      s.push_back(apex);
      std::sort(s.begin(), s.end());
      out.push_back(std::move(s));
    }
  }
}

}  // namespace

std::vector<Simplex> triangulate_face(const NewtonPolyhedron& gamma, int face_id,
                                      const std::vector<int>& priority) {
  if (!gamma.face(face_id).compact) throw DomainError("cannot triangulate a non-compact face");
  std::vector<int> rank_of(gamma.vertices().size());
  for (std::size_t i = 0; i < priority.size(); ++i) rank_of[priority[i]] = static_cast<int>(i);
  std::vector<Simplex> out;
  pull(gamma, face_id, rank_of, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> canonical_vertex_priority(const NewtonPolyhedron& gamma) {
  std::vector<int> p(gamma.vertices().size());
  std::iota(p.begin(), p.end(), 0);
  return p;
}

std::vector<int> random_vertex_priority(const NewtonPolyhedron& gamma, std::mt19937_64& rng) {
  auto p = canonical_vertex_priority(gamma);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

std::vector<FacetSimplex> triangulate_compact_facets(const NewtonPolyhedron& gamma,
                                                     const std::vector<int>& priority) {
  std::vector<FacetSimplex> out;
  for (std::size_t i = 0; i < gamma.facets().size(); ++i) {
    const auto& fd = gamma.facets()[i];
    if (!fd.compact) continue;
    for (auto& s : triangulate_face(gamma, fd.face_id, priority))
      out.push_back({static_cast<int>(i), std::move(s)});
  }
  return out;
}

std::vector<FacetSimplex> triangulate_compact_facets(const NewtonPolyhedron& gamma) {
  return triangulate_compact_facets(gamma, canonical_vertex_priority(gamma));
}

NewtonPolyhedron project_polyhedron(const NewtonPolyhedron& gamma, std::size_t j) {
  if (j >= gamma.n()) throw DomainError("projection index out of range");
  if (gamma.n() < 2) throw DomainError("cannot project a one-dimensional polyhedron");
  std::vector<IVec> pts;
  for (const auto& v : gamma.vertices()) {
    IVec w;
    for (std::size_t c = 0; c < v.size(); ++c)
      if (c != j) w.push_back(v[c]);
    if (is_zero(w)) throw DomainError("degenerate projection: the image contains the origin");
    pts.push_back(w);
  }
  return build_polyhedron(pts, gamma.n() - 1);
}

}  // namespace holozeta
