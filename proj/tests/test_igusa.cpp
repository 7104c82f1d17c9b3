#include "doctest.h"

#include <algorithm>

#include "holozeta/error.hpp"
#include "holozeta/igusa.hpp"
#include "holozeta/oracle.hpp"
#include "holozeta/suites.hpp"

using namespace holozeta;

namespace {

IntPolynomial P(const std::string& s, const std::vector<std::string>& v) { return parse_polynomial(s, v); }

// sum c_i T^i
TPoly tp(std::vector<mpq_class> c) {
  std::vector<Cyclo> v(c.begin(), c.end());
  return TPoly(v);
}

std::optional<int> face_with_vertices(const NewtonPolyhedron& g, const std::vector<IVec>& pts) {
  std::vector<int> ids;
  for (const auto& p : pts)
    for (std::size_t i = 0; i < g.vertices().size(); ++i)
      if (g.vertices()[i] == p) ids.push_back(static_cast<int>(i));
  return g.find_compact_face(ids);
}

std::vector<Cyclo> rationals(std::vector<mpq_class> c) { return {c.begin(), c.end()}; }

}  // namespace

TEST_CASE("S_cone on the cusp") {
  const auto cusp = build_polyhedron({{2, 0}, {0, 3}}, 2);
  // open ray (3,2): sum_k q^-5k T^6k
  const RationalFunctionT ray(3, 1, tp({0, 0, 0, 0, 0, 0, 1}), {{{5, 6}, 1}});
  CHECK(same_function(S_cone({{3, 2}}, cusp, 3), ray));
  // cone of the vertex (0,3): box points (0,0) and (2,1), the (1,0) direction has N = 0
  const RationalFunctionT vertex(3, 1, tp({0, 0, 0, mpq_class(27, 2), 0, 0, mpq_class(1, 2)}), {{{5, 6}, 1}});
  CHECK(same_function(S_cone({{3, 2}, {1, 0}}, cusp, 3), vertex));
  const auto line = build_polyhedron({{2}}, 1);
  CHECK(same_function(S_cone({{1}}, line, 5), RationalFunctionT(5, 1, tp({0, 0, 1}), {{{1, 2}, 1}})));
}

TEST_CASE("series expansion") {
  const RationalFunctionT ray(3, 1, tp({0, 0, 0, 0, 0, 0, 1}), {{{5, 6}, 1}});
  auto s = series_expand(ray, 12);
  REQUIRE(s.size() == 13);
  for (std::size_t i = 0; i <= 12; ++i) {
    const mpq_class want = i == 6 ? mpq_class(1, 243) : i == 12 ? mpq_class(1, 59049) : mpq_class(0);
    CHECK(s[i] == Cyclo(want));
  }
  for (const auto& c : series_expand(RationalFunctionT(3, 1), 5)) CHECK(c.is_zero());
  const RationalFunctionT g(3, 1, tp({2}), {{{1, 2}, 1}});
  CHECK(series_expand(g, 4) == rationals({mpq_class(2, 3), 0, mpq_class(2, 9), 0, mpq_class(2, 27)}));
}

TEST_CASE("local and global zeta of x^2 at p = 3") {
  const Character chi(3, 2, 1);
  const auto f = P("x^2", {"x"});
  const auto local = igusa_local(f, chi);
  CHECK(same_function(local, RationalFunctionT(3, 2, tp({0, 0, mpq_class(2, 3)}), {{{1, 2}, 1}})));
  const auto global = igusa_global(f, chi);
  CHECK(same_function(global, RationalFunctionT(3, 2, tp({2}), {{{1, 2}, 1}})));
  CHECK(series_expand(global, 4) == rationals({mpq_class(2, 3), 0, mpq_class(2, 9), 0, mpq_class(2, 27)}));
  const auto fams = facet_families(build_polyhedron(support(f), 1));
  CHECK(actual_pole_lines(reduce_rational(global), fams) == std::vector<PoleFamily>{{1, 2}});
}

TEST_CASE("vanishing zeta functions") {
  const auto x2 = P("x^2", {"x"});
  const Character quartic(5, 4, 1);
  CHECK(igusa_local(x2, quartic).is_zero());
  CHECK(reduce_rational(igusa_global(x2, quartic)).is_zero());
  CHECK(actual_pole_lines(reduce_rational(igusa_global(x2, quartic)), {{1, 2}}).empty());
  const auto x = P("x", {"x"});
  for (std::int64_t p : {3, 5, 7})
    for (const auto& chi : nontrivial_characters(p)) {
      CHECK(reduce_rational(igusa_local(x, chi)).is_zero());
      CHECK(reduce_rational(igusa_global(x, chi)).is_zero());
    }
}

TEST_CASE("reduce_rational") {
  const std::int64_t q = 3;
  // (q - T^2) / ((q - T^2)(q^2 - T^3))
  const RationalFunctionT r(q, 1, TPoly::pole_factor(q, 1, 2), {{{1, 2}, 1}, {{2, 3}, 1}});
  const auto red = reduce_rational(r);
  CHECK(red.factors() == RationalFunctionT::FactorMap{{{2, 3}, 1}});
  CHECK(red.divisors().empty());
  CHECK(red.numerator() == tp({1}));
  // already reduced
  const RationalFunctionT s(q, 1, tp({1, 1}), {{{1, 2}, 1}});
  const auto red_s = reduce_rational(s);
  CHECK(red_s.numerator() == s.numerator());
  CHECK(red_s.factors() == s.factors());
  // numerator (q - T^2)^2 (1 + T) over a single (q - T^2)
  const auto num = power(TPoly::pole_factor(q, 1, 2), 2) * tp({1, 1});
  const auto red_t = reduce_rational(RationalFunctionT(q, 1, num, {{{1, 2}, 1}}));
  CHECK(red_t.factors().empty());
  CHECK(red_t.numerator() == TPoly::pole_factor(q, 1, 2) * tp({1, 1}));
  // partial cancellation: (q - T^2) divides q^2 - T^4 = (q - T^2)(q + T^2)
  const auto red_u = reduce_rational(RationalFunctionT(q, 1, TPoly::pole_factor(q, 1, 2), {{{2, 4}, 1}}));
  CHECK(same_function(red_u, RationalFunctionT(q, 1, TPoly::pole_factor(q, 1, 2), {{{2, 4}, 1}})));
  CHECK(red_u.expanded_denominator().degree() == 2);
  CHECK(actual_pole_lines(red_u, {{1, 2}}).empty());
  CHECK(actual_pole_lines(red_u, {{2, 4}}) == std::vector<PoleFamily>{{2, 4}});
}

TEST_CASE("global zeta is local zeta plus the non-compact faces") {
  for (const auto& e : corpus()) {
    const auto f = P(e.text, e.vars);
    const auto g = build_polyhedron(support(f), f.n());
    for (std::int64_t p : {3, 5}) {
      if (!check_nondegenerate(f, g, p, FaceSet::All).nondegenerate) continue;
      const auto fbar = reduce_mod_p(f, p);
      for (const auto& chi : nontrivial_characters(p)) {
        INFO(e.text << " p=" << p << " d=" << chi.order());
        auto sum = igusa_local(f, chi);
        for (const auto& face : g.faces())
          if (!face.compact) sum = sum + face_contribution(g, face.id, fbar, chi);
        CHECK(same_function(sum, igusa_global(f, chi)));
      }
    }
  }
}

TEST_CASE("pole lines come from candidate facets") {
  for (const auto& e : corpus()) {
    const auto f = P(e.text, e.vars);
    const auto g = build_polyhedron(support(f), f.n());
    for (const auto& chi : nontrivial_characters(5)) {
      ZetaReport r;
      try {
        r = zeta_report(f, chi);
      } catch (const DomainError&) {
        continue;
      }
      const auto cands = candidate_families(g, chi.order());
      for (const auto& fam : r.local_poles) {
        INFO(e.text << " d=" << chi.order());
        CHECK(std::find(cands.begin(), cands.end(), fam) != cands.end());
      }
      for (const auto& fam : r.global_poles) CHECK(std::find(cands.begin(), cands.end(), fam) != cands.end());
    }
  }
}

TEST_CASE("degenerate input is refused unless forced") {
  const auto f = P("x^2+2*x*y+y^2", {"x", "y"});
  const Character chi(3, 2, 1);
  CHECK_THROWS_AS(igusa_local(f, chi), DomainError);
  const auto r = zeta_report(f, chi, {true});
  CHECK_FALSE(r.trusted);
  CHECK(zeta_report(P("x^2+y^3", {"x", "y"}), chi).trusted);
}
