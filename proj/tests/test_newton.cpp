#include "doctest.h"

#include <algorithm>
#include <random>

#include "holozeta/error.hpp"
#include "holozeta/lattice.hpp"
#include "holozeta/newton.hpp"

using namespace holozeta;

namespace {

NewtonPolyhedron cusp() { return build_polyhedron({{2, 0}, {0, 3}}, 2); }

std::optional<int> vertex_face(const NewtonPolyhedron& g, const IVec& v) {
  for (std::size_t i = 0; i < g.vertices().size(); ++i)
    if (g.vertices()[i] == v) return g.find_compact_face({static_cast<int>(i)});
  return std::nullopt;
}

const FacetData* facet_with_normal(const NewtonPolyhedron& g, const IVec& a) {
  for (const auto& f : g.facets())
    if (f.normal == a) return &f;
  return nullptr;
}

}  // namespace

TEST_CASE("cusp polyhedron") {
  const auto g = cusp();
  CHECK(g.vertices() == std::vector<IVec>{{0, 3}, {2, 0}});
  REQUIRE(g.facets().size() == 3);
  const auto* seg = facet_with_normal(g, {3, 2});
  REQUIRE(seg);
  CHECK(seg->N == 6);
  CHECK(seg->nu == 5);
  CHECK(seg->compact);
  CHECK(facet_with_normal(g, {1, 0})->N == 0);
  CHECK(facet_with_normal(g, {0, 1})->N == 0);
}

TEST_CASE("single point is a translated orthant") {
  const auto g = build_polyhedron({{4, 0, 0}}, 3);
  CHECK(g.vertices().size() == 1);
  REQUIRE(g.facets().size() == 3);
  CHECK(facet_with_normal(g, {1, 0, 0})->N == 4);
  CHECK(facet_with_normal(g, {0, 1, 0})->N == 0);
  CHECK(facet_with_normal(g, {0, 0, 1})->N == 0);
}

TEST_CASE("X2 triangle is a compact facet") {
  const auto g = build_polyhedron({{3, 0, 0}, {0, 2, 0}, {2, 0, 2}}, 3);
  const auto* t = facet_with_normal(g, {2, 3, 1});
  REQUIRE(t);
  CHECK(t->N == 6);
  CHECK(t->compact);
}

TEST_CASE("empty support is refused") { CHECK_THROWS_AS(build_polyhedron({}, 2), DomainError); }

TEST_CASE("face_of_vector on the cusp") {
  const auto g = cusp();
  auto r = face_of_vector(g, {3, 2});
  CHECK(g.face(r.face_id).dim == 1);
  CHECK(g.face(r.face_id).compact);
  CHECK(r.N == 6);
  CHECK(r.nu == 5);
  r = face_of_vector(g, {1, 1});
  CHECK(r.face_id == *vertex_face(g, {2, 0}));
  CHECK(r.N == 2);
  r = face_of_vector(g, {1, 0});
  CHECK(r.N == 0);
  CHECK(!g.face(r.face_id).compact);
  CHECK(g.face(r.face_id).dim == 1);
  CHECK_THROWS_AS(face_of_vector(g, {0, 0}), DomainError);
  CHECK_THROWS_AS(face_of_vector(g, {-1, 2}), DomainError);
}

TEST_CASE("dual cones on the cusp") {
  const auto g = cusp();
  auto sorted = [](std::vector<IVec> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  for (const auto& f : g.faces())
    if (f.compact && f.dim == 1) CHECK(dual_cone(g, f.id) == std::vector<IVec>{{3, 2}});
  CHECK(sorted(dual_cone(g, *vertex_face(g, {0, 3}))) == sorted({{3, 2}, {1, 0}}));
  CHECK(sorted(dual_cone(g, *vertex_face(g, {2, 0}))) == sorted({{3, 2}, {0, 1}}));
  CHECK_THROWS_AS(dual_cone(g, g.whole_face_id()), DomainError);
}

TEST_CASE("V-faces") {
  const auto g = cusp();
  const auto vf = v_faces(g);
  CHECK(vf.size() == 3);
  for (const auto& v : vf) {
    const auto& f = g.face(v.face_id);
    if (f.dim == 1) CHECK(v.index_set == std::vector<std::size_t>{0, 1});
    if (f.dim == 0 && g.vertices()[static_cast<std::size_t>(f.vertex_ids[0])] == IVec{2, 0})
      CHECK(v.index_set == std::vector<std::size_t>{0});
    if (f.dim == 0 && g.vertices()[static_cast<std::size_t>(f.vertex_ids[0])] == IVec{0, 3})
      CHECK(v.index_set == std::vector<std::size_t>{1});
  }
  CHECK(v_faces(build_polyhedron({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3)).size() == 7);
  const auto h = build_polyhedron({{1, 1, 0}, {0, 0, 2}}, 3);
  bool saw_z = false;
  for (const auto& v : v_faces(h)) {
    const auto& f = h.face(v.face_id);
    if (f.dim != 0) continue;
    const auto& x = h.vertices()[static_cast<std::size_t>(f.vertex_ids[0])];
    CHECK(x != IVec{1, 1, 0});
    if (x == IVec{0, 0, 2}) saw_z = true;
  }
  CHECK(saw_z);
}

TEST_CASE("noncompact_for") {
  const auto g = cusp();
  for (const auto& f : g.faces()) {
    if (f.dim != 1) continue;
    if (f.compact) {
      CHECK(!noncompact_for(g, f.id, 0));
      CHECK(!noncompact_for(g, f.id, 1));
    }
  }
  // the vertical facet through (0,3) recedes along y
  const auto* vert = facet_with_normal(g, {1, 0});
  CHECK(noncompact_for(g, vert->face_id, 1));
  CHECK(!noncompact_for(g, vert->face_id, 0));
  const auto h = build_polyhedron({{1, 1, 0}, {0, 0, 2}}, 3);
  for (const auto& fd : h.facets())
    CHECK(noncompact_for(h, fd.face_id, 1) == (fd.normal[1] == 0));
}

TEST_CASE("triangulations fan from the first vertex") {
  const auto tri = build_polyhedron({{3, 0, 0}, {0, 2, 0}, {2, 0, 2}}, 3);
  for (const auto& fs : triangulate_compact_facets(tri)) CHECK(fs.simplex.size() == 3);
  CHECK(triangulate_compact_facets(tri).size() == 1);
  // square x + y + z = 2 cut by four points: facet conv{(2,0,0),(0,2,0),(1,0,1),(0,1,1)}
  const auto sq = build_polyhedron({{2, 0, 0}, {0, 2, 0}, {1, 0, 1}, {0, 1, 1}}, 3);
  for (std::size_t fi = 0; fi < sq.facets().size(); ++fi) {
    const auto& fd = sq.facets()[fi];
    if (!fd.compact) continue;
    const auto& verts = sq.face(fd.face_id).vertex_ids;
    if (verts.size() != 4) continue;
    const auto simp = triangulate_face(sq, fd.face_id, canonical_vertex_priority(sq));
    CHECK(simp.size() == 2);
    for (const auto& s : simp) CHECK(std::find(s.begin(), s.end(), verts.front()) != s.end());
  }
  // pentagon in the plane x + y + z = 3
  const auto pent = build_polyhedron({{3, 0, 0}, {0, 3, 0}, {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {1, 2, 0}}, 3);
  for (const auto& fd : pent.facets())
    if (fd.compact && pent.face(fd.face_id).vertex_ids.size() == 5)
      CHECK(triangulate_face(pent, fd.face_id, canonical_vertex_priority(pent)).size() == 3);
}

TEST_CASE("triangulation preserves normalized volume") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> c(0, 6);
  for (int t = 0; t < 40; ++t) {
    std::vector<IVec> pts{{c(rng) + 1, 0, 0}, {0, c(rng) + 1, 0}, {0, 0, c(rng) + 1}};
    for (int e = 0; e < 3; ++e) pts.push_back({c(rng), c(rng), c(rng)});
    std::erase_if(pts, [](const IVec& v) { return is_zero(v); });
    const auto g = build_polyhedron(pts, 3);
    const auto prio = random_vertex_priority(g, rng);
    for (const auto& fd : g.facets()) {
      if (!fd.compact) continue;
      std::int64_t sum = 0;
      for (const auto& s : triangulate_face(g, fd.face_id, prio)) {
        std::vector<IVec> vs;
        for (int v : s) vs.push_back(g.vertices()[static_cast<std::size_t>(v)]);
        sum += simplex_normalized_volume(vs);
      }
      CHECK(sum == normalized_volume(g, fd.face_id));
    }
  }
}

TEST_CASE("polyhedron soundness on random supports") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::int64_t> c(0, 7);
  for (int t = 0; t < 60; ++t) {
    std::vector<IVec> pts;
    for (int e = 0; e < 5; ++e) pts.push_back({c(rng), c(rng), c(rng)});
    std::erase_if(pts, [](const IVec& v) { return is_zero(v); });
    if (pts.empty()) continue;
    const auto g = build_polyhedron(pts, 3);
    for (const auto& fd : g.facets()) {
      CHECK(gcd_of(fd.normal) == 1);
      for (const auto& p : pts) CHECK(dot(fd.normal, p) >= fd.N);
    }
    for (const auto& f : g.faces())
      if (f.id != g.whole_face_id()) CHECK(rank(dual_cone(g, f.id)) == static_cast<int>(3 - f.dim));
  }
}

TEST_CASE("projection") {
  CHECK_THROWS_AS(project_polyhedron(cusp(), 1), DomainError);
  const auto g = build_polyhedron({{3, 0, 0}, {0, 2, 0}, {2, 0, 2}}, 3);
  const auto pz = project_polyhedron(g, 2);
  CHECK(pz.vertices() == std::vector<IVec>{{0, 2}, {2, 0}});
  const auto h = build_polyhedron({{0, 0, 2}, {2, 0, 1}, {5, 0, 0}}, 3);
  const auto py = project_polyhedron(h, 1);
  CHECK(py.vertices() == std::vector<IVec>{{0, 2}, {2, 1}, {5, 0}});
  CHECK_THROWS_AS(project_polyhedron(build_polyhedron({{2, 0, 0}, {0, 3, 0}, {0, 0, 2}}, 3), 2), DomainError);
}
