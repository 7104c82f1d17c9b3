#include "doctest.h"

#include <algorithm>

#include "holozeta/conjecture.hpp"
#include "holozeta/error.hpp"
#include "holozeta/suites.hpp"

using namespace holozeta;

namespace {

IntPolynomial P(const std::string& s, const std::vector<std::string>& v = {"x", "y", "z"}) {
  return parse_polynomial(s, v);
}

int vertex(const NewtonPolyhedron& g, const IVec& p) {
  for (std::size_t i = 0; i < g.vertices().size(); ++i)
    if (g.vertices()[i] == p) return static_cast<int>(i);
  FAIL("not a vertex");
  return -1;
}

int face(const NewtonPolyhedron& g, const std::vector<IVec>& pts) {
  std::vector<int> ids;
  for (const auto& p : pts) ids.push_back(vertex(g, p));
  const auto id = g.find_compact_face(ids);
  REQUIRE(id.has_value());
  return *id;
}

int facet(const NewtonPolyhedron& g, const std::vector<IVec>& pts) {
  const int id = face(g, pts);
  for (std::size_t i = 0; i < g.facets().size(); ++i)
    if (g.facets()[i].face_id == id) return static_cast<int>(i);
  FAIL("not a facet");
  return -1;
}

ContributionTerm term(int id) { return {id, std::nullopt}; }

}  // namespace

TEST_CASE("facet classification") {
  const auto b1 = build_polyhedron({{2, 0, 0}, {0, 3, 0}, {1, 0, 1}}, 3);
  auto c = classify_facet(b1, facet(b1, {{2, 0, 0}, {0, 3, 0}, {1, 0, 1}}));
  CHECK(c.kind == FacetKind::B1Simplex);
  CHECK(c.variable == 2);
  CHECK(b1.vertices()[static_cast<std::size_t>(c.apex_vertex)] == IVec{1, 0, 1});

  const auto x2 = build_polyhedron({{3, 0, 0}, {2, 0, 2}, {0, 2, 0}}, 3);
  c = classify_facet(x2, facet(x2, {{3, 0, 0}, {2, 0, 2}, {0, 2, 0}}));
  CHECK(c.kind == FacetKind::X2);
  CHECK(c.x2_params == std::vector<std::int64_t>{3, 2, 0});

  const auto plain = build_polyhedron({{4, 0, 0}, {0, 4, 0}, {0, 0, 4}}, 3);
  CHECK(classify_facet(plain, facet(plain, {{4, 0, 0}, {0, 4, 0}, {0, 0, 4}})).kind == FacetKind::Other);

  // x + y z: every compact facet has a distance-one vertex
  const auto lin = build_polyhedron({{1, 0, 0}, {0, 1, 1}}, 3);
  for (const auto& cl : classify_facets(lin))
    if (lin.facets()[static_cast<std::size_t>(cl.facet_index)].compact) CHECK(cl.kind != FacetKind::Other);
}

TEST_CASE("candidate poles") {
  const auto cusp = build_polyhedron({{2, 0}, {0, 3}}, 2);
  auto compact = [&](std::int64_t d) {
    std::vector<PoleFamily> out;
    for (const auto& c : candidate_poles(cusp, d))
      if (!c.zero_N) out.push_back({c.nu, c.N});
    return out;
  };
  CHECK(compact(2) == std::vector<PoleFamily>{{5, 6}});
  CHECK(compact(3) == std::vector<PoleFamily>{{5, 6}});
  CHECK(compact(4).empty());
  const auto all = candidate_poles(cusp, 4);
  CHECK(std::all_of(all.begin(), all.end(), [](const CandidatePole& c) { return c.zero_N && c.N == 0; }));
  CHECK(all.size() == 2);
}

TEST_CASE("vanishing face contributions") {
  // vertex (1,1,1)
  const auto f = P("x^4+y^4+z^4+x*y*z");
  const auto g = build_polyhedron(support(f), 3);
  for (std::int64_t p : {5, 7}) {
    const auto fbar = reduce_mod_p(f, p);
    for (const auto& chi : nontrivial_characters(p))
      CHECK(face_contribution(g, face(g, {{1, 1, 1}}), fbar, chi).is_zero());
  }
  // vertex (3,0,0): zero exactly when ord(chi) does not divide 3
  const auto h = P("x^3+y^5+z^5");
  const auto gh = build_polyhedron(support(h), 3);
  for (const auto& chi : nontrivial_characters(7)) {
    INFO("d=" << chi.order());
    CHECK(face_contribution(gh, face(gh, {{3, 0, 0}}), reduce_mod_p(h, 7), chi).is_zero() == (3 % chi.order() != 0));
  }
  // segment from (1,1,1) to (0,0,3)
  const auto s = P("x*y*z+z^3+x^6+y^6");
  const auto gs = build_polyhedron(support(s), 3);
  const int seg = face(gs, {{1, 1, 1}, {0, 0, 3}});
  for (std::int64_t p : {5, 7, 13})
    for (const auto& chi : nontrivial_characters(p))
      if (3 % chi.order() != 0) CHECK(face_contribution(gs, seg, reduce_mod_p(s, p), chi).is_zero());
}

TEST_CASE("X2 group cancellation") {
  // p(3,0,0), q(2,0,2), r(0,2,0) with ord(chi) = 6 at p = 13
  const auto f = P("x^3+y^2+3*x^2*z^2+z^7");
  const auto g = build_polyhedron(support(f), 3);
  const Character chi(13, 6, 1);
  const auto fbar = reduce_mod_p(f, 13);
  const IVec p{3, 0, 0}, q{2, 0, 2}, r{0, 2, 0};
  const std::vector<ContributionTerm> group{term(face(g, {p, q})), term(face(g, {p, r})), term(face(g, {p, q, r}))};
  CHECK(cancellation_check(g, fbar, chi, group));
  CHECK(group_sum(g, fbar, chi, group).is_zero());
  // the cancellation is between summands, not termwise
  for (const auto& t : group) CHECK_FALSE(cancellation_check(g, fbar, chi, {t}));
  // at p = 5 with ord(chi) = 4 the three terms already vanish one by one
  CHECK(cancellation_check(g, reduce_mod_p(f, 5), Character(5, 4, 1), group));

  // p(3,0,0), q(0,0,2), r(0,2,0)
  const auto h = P("x^3+y^2+z^2");
  const auto gh = build_polyhedron(support(h), 3);
  const IVec qq{0, 0, 2};
  const std::vector<ContributionTerm> pair{term(face(gh, {qq})), term(face(gh, {r})), term(face(gh, {qq, r}))};
  const Character quadratic(5, 2, 1);
  CHECK(cancellation_check(gh, reduce_mod_p(h, 5), quadratic, pair));
  for (const auto& t : pair) CHECK_FALSE(cancellation_check(gh, reduce_mod_p(h, 5), quadratic, {t}));
  CHECK(cancellation_check(gh, reduce_mod_p(h, 5), Character(5, 4, 1), pair));
}

TEST_CASE("holomorphy verdicts") {
  auto r = holomorphy_report(P("x^2", {"x"}), 5, 4, 1);
  CHECK(r.verdict == Verdict::Holomorphic);
  CHECK(r.zeta.local_poles.empty());
  CHECK(r.zeta.global_poles.empty());

  r = holomorphy_report(P("x^2", {"x"}), 3, 2, 1);
  CHECK(r.verdict == Verdict::PoleExplained);
  CHECK(r.witness_order == 2);
  CHECK(r.witness_location == "origin");
  CHECK(r.zeta.global_poles == std::vector<PoleFamily>{{1, 2}});

  r = holomorphy_report(P("x^2+y^3", {"x", "y"}), 7, 6, 1);
  CHECK(r.origin.factors() == std::map<std::int64_t, std::int64_t>{{2, 1}, {3, 1}, {6, -1}});
  CHECK(r.verdict != Verdict::Violation);
  if (!r.zeta.local_poles.empty()) {
    CHECK(r.verdict == Verdict::PoleExplained);
    CHECK(r.witness_order == 6);
  }

  // X2 facet (2,1,1): N = 6, nu = 4; the pole line is false when ord(chi) = 6
  r = holomorphy_report(P("x^3+x^2*y^2+x^2*z^2"), 7, 6, 1);
  CHECK(std::find(r.zeta.local_poles.begin(), r.zeta.local_poles.end(), PoleFamily{4, 6}) == r.zeta.local_poles.end());
  CHECK(r.verdict != Verdict::Violation);

  CHECK_THROWS_AS(holomorphy_report(P("x^2+2*x*y+y^2", {"x", "y"}), 3, 2, 1), DomainError);
}

TEST_CASE("verdict strings") {
  CHECK(to_string(Verdict::Holomorphic) == "holomorphic");
  CHECK(to_string(Verdict::PoleExplained) == "pole_explained");
  CHECK(to_string(Verdict::Violation) == "VIOLATION");
}
