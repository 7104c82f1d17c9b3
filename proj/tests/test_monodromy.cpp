#include "doctest.h"

#include <algorithm>
#include <random>

#include "holozeta/conjecture.hpp"
#include "holozeta/error.hpp"
#include "holozeta/lattice.hpp"
#include "holozeta/monodromy.hpp"
#include "holozeta/suites.hpp"

using namespace holozeta;

namespace {

using Factors = std::map<std::int64_t, std::int64_t>;

NewtonPolyhedron G(const std::string& s, const std::vector<std::string>& v = {"x", "y", "z"}) {
  const auto f = parse_polynomial(s, v);
  return build_polyhedron(support(f), f.n());
}

Simplex ids_of(const NewtonPolyhedron& g, const std::vector<IVec>& pts) {
  Simplex s;
  for (const auto& p : pts)
    for (std::size_t i = 0; i < g.vertices().size(); ++i)
      if (g.vertices()[i] == p) s.push_back(static_cast<int>(i));
  std::sort(s.begin(), s.end());
  return s;
}

bool positive_at_multiple(const CycloFactorization& z, std::int64_t N) {
  for (const auto& [m, x] : z.phi_form())
    if (m % N == 0 && x > 0) return true;
  return false;
}

std::vector<NewtonPolyhedron> sample_polyhedra() {
  std::vector<NewtonPolyhedron> out;
  for (const auto& e : audit_corpus())
    if (e.vars.size() == 3) out.push_back(G(e.text, e.vars));
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::int64_t> axis(1, 9), inner(0, 5), extra(0, 4);
  for (int t = 0; t < 60; ++t) {
    std::vector<IVec> pts{{axis(rng), 0, 0}, {0, axis(rng), 0}, {0, 0, axis(rng)}};
    for (std::int64_t k = extra(rng); k > 0; --k) pts.push_back({inner(rng), inner(rng), inner(rng)});
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.front() == IVec{0, 0, 0}) pts.erase(pts.begin());
    out.push_back(build_polyhedron(pts, 3));
  }
  return out;
}

}  // namespace

TEST_CASE("Varchenko products") {
  CHECK(varchenko_zeta(G("x^2+y^3", {"x", "y"})).factors() == Factors{{2, 1}, {3, 1}, {6, -1}});
  for (std::int64_t a = 1; a <= 6; ++a) CHECK(varchenko_zeta(build_polyhedron({{a}}, 1)).factors() == Factors{{a, 1}});
  CHECK(varchenko_zeta(G("x+y+z")).phi_form() == Factors{{1, 1}});
  // two X2 facets sharing the y-vertex
  const CycloFactorization want(Factors{{2, 1}, {3, 1}, {7, 1}});
  CHECK(varchenko_zeta(G("x^3+z^2+x^2*y^2+y^7")).phi_form() == want.phi_form());
  CHECK(zeta_via_ftau(G("x^3+z^2+x^2*y^2+y^7")).phi_form() == want.phi_form());
}

TEST_CASE("F_tau of special simplices") {
  const auto x2 = build_polyhedron({{3, 0, 0}, {2, 0, 2}, {0, 2, 0}}, 3);
  CHECK(f_tau_factor(x2, ids_of(x2, {{3, 0, 0}, {2, 0, 2}, {0, 2, 0}})).factors() == Factors{{3, 1}});
  const auto b1 = build_polyhedron({{2, 0, 0}, {0, 3, 0}, {1, 0, 1}}, 3);
  CHECK(f_tau_factor(b1, ids_of(b1, {{2, 0, 0}, {0, 3, 0}, {1, 0, 1}})).phi_form().empty());
  // no 1-dimensional V-face: F_tau is the facet factor alone
  const auto inner = build_polyhedron({{4, 0, 0}, {0, 4, 0}, {0, 0, 4}, {1, 1, 1}}, 3);
  for (const auto& fs : triangulate_compact_facets(inner)) {
    const auto& fd = inner.facets()[static_cast<std::size_t>(fs.facet_index)];
    int vedges = 0;
    for (const auto& f : inner.faces())
      if (f.dim == 1 && f.v_face_index_set && std::includes(fs.simplex.begin(), fs.simplex.end(), f.vertex_ids.begin(),
                                                            f.vertex_ids.end()))
        ++vedges;
    if (vedges > 0) continue;
    std::vector<IVec> pts;
    for (int v : fs.simplex) pts.push_back(inner.vertices()[static_cast<std::size_t>(v)]);
    const auto F = f_tau_factor(inner, fs.simplex);
    CHECK(F.factors() == Factors{{fd.N, simplex_normalized_volume(pts)}});
  }
}

TEST_CASE("F_tau product equals the Varchenko product") {
  std::mt19937_64 rng(5);
  for (const auto& g : sample_polyhedra()) {
    const auto want = varchenko_zeta(g).phi_form();
    CHECK(zeta_via_ftau(g).phi_form() == want);
    CHECK(zeta_via_ftau(g, random_vertex_priority(g, rng)).phi_form() == want);
  }
}

TEST_CASE("F_tau is a polynomial and vanishes at exp(-2 pi i / N) off B1 and X2") {
  int other = 0, special = 0;
  for (const auto& g : sample_polyhedra())
    for (const auto& fs : triangulate_compact_facets(g)) {
      const auto F = f_tau_factor(g, fs.simplex);
      for (const auto& [m, x] : F.phi_form()) CHECK(x >= 0);
      const std::int64_t N = g.facets()[static_cast<std::size_t>(fs.facet_index)].N;
      if (classify_simplex(g, fs.simplex) == FacetKind::Other) {
        ++other;
        CHECK(positive_at_multiple(F, N));
      } else {
        ++special;
      }
    }
  CHECK(other > 20);
  CHECK(special > 0);
  // the two exceptional shapes really are exceptions
  const auto x2 = build_polyhedron({{3, 0, 0}, {2, 0, 2}, {0, 2, 0}}, 3);
  CHECK_FALSE(positive_at_multiple(f_tau_factor(x2, ids_of(x2, {{3, 0, 0}, {2, 0, 2}, {0, 2, 0}})), 6));
  const auto b1 = build_polyhedron({{2, 0, 0}, {0, 3, 0}, {1, 0, 1}}, 3);
  CHECK_FALSE(positive_at_multiple(f_tau_factor(b1, ids_of(b1, {{2, 0, 0}, {0, 3, 0}, {1, 0, 1}})), 6));
}

TEST_CASE("eigenvalue orders") {
  const CycloFactorization cusp(Factors{{2, 1}, {3, 1}, {6, -1}});
  CHECK(cusp.phi_form() == Factors{{1, 1}, {6, -1}});
  for (std::int64_t d : {1, 2, 3, 6}) CHECK(eigenvalue_order_divisible(cusp, d));
  for (std::int64_t d : {4, 5, 7}) CHECK_FALSE(eigenvalue_order_divisible(cusp, d));
  const CycloFactorization x6(Factors{{6, 1}});
  for (std::int64_t d = 1; d <= 12; ++d) CHECK(eigenvalue_order_divisible(x6, d) == (6 % d == 0));
  for (std::int64_t d = 1; d <= 5; ++d) CHECK_FALSE(eigenvalue_order_divisible(CycloFactorization(), d));
  CHECK((cusp * cusp.inverse()).empty());
  CHECK(cusp.eigenvalue_orders() == std::set<std::int64_t>{1, 6});
}

TEST_CASE("generic axis zeta") {
  // z is absent, so the projection along y changes nothing but the ambient dimension
  const auto g = G("z^2+x^2*z+x^5");
  CHECK(generic_axis_zeta(g, 1).phi_form() == varchenko_zeta(G("z^2+x^2*z+x^5", {"x", "z"})).phi_form());
  CHECK_THROWS_AS(generic_axis_zeta(G("x^2+y^3+z^2"), 2), DomainError);
  // X2 facet whose second facet through q and r is non-compact in z: 1/(1 - t^x1) with x1 = 4
  const auto z = generic_axis_zeta(G("x^5+y^2+x^4*z^2"), 2);
  CHECK(z.factors() == Factors{{2, 1}, {4, -1}});
  CHECK(z.factors().at(4) == -1);
}
