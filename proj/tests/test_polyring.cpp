#include "doctest.h"

#include <algorithm>
#include <random>

#include "holozeta/error.hpp"
#include "holozeta/newton.hpp"
#include "holozeta/polyring.hpp"

using namespace holozeta;

namespace {

IntPolynomial P(const std::string& s, const std::vector<std::string>& v) { return parse_polynomial(s, v); }

IntPolynomial random_poly(std::mt19937_64& rng, std::size_t n) {
  IntPolynomial f(n);
  std::uniform_int_distribution<int> e(0, 3), c(-20, 20), t(1, 5);
  const int terms = t(rng);
  for (int i = 0; i < terms; ++i) {
    IVec k(n);
    for (auto& x : k) x = e(rng);
    f.add_term(k, c(rng));
  }
  return f;
}

}  // namespace

TEST_CASE("parse reads monomials and combines like terms") {
  const auto f = P("x^2+y^3", {"x", "y"});
  CHECK(f.terms() == IntPolynomial::TermMap{{{2, 0}, 1}, {{0, 3}, 1}});
  CHECK(P("x*y - x*y", {"x", "y"}).is_zero());
  const auto g = P("3x^2z^2 + y^2 + x^3", {"x", "y", "z"});
  CHECK(g.terms() == IntPolynomial::TermMap{{{2, 0, 2}, 3}, {{0, 2, 0}, 1}, {{3, 0, 0}, 1}});
}

TEST_CASE("parse handles big and signed integers") {
  const auto f = P("-123456789012345678901234567890*x + 2", {"x"});
  CHECK(f.coefficient({1}) == mpz_class("-123456789012345678901234567890"));
  CHECK(f.coefficient({0}) == 2);
  CHECK(P("x y^2", {"x", "y"}).coefficient({1, 2}) == 1);
}

TEST_CASE("parse errors carry an offset") {
  CHECK_THROWS_AS(P("x^2 + w", {"x", "y"}), ParseError);
  CHECK_THROWS_AS(P("x^^2", {"x"}), ParseError);
  CHECK_THROWS_AS(P("x + 1.5", {"x"}), ParseError);
  try {
    P("x + * y", {"x", "y"});
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.offset() > 0);
  }
}

TEST_CASE("support is the key set") {
  CHECK(support(P("x^2+y^3", {"x", "y"})) == std::vector<IVec>{{0, 3}, {2, 0}});
  CHECK(support(IntPolynomial(2)).empty());
  CHECK(support(P("x^3+y^2+3*x^2*z^2", {"x", "y", "z"})) == std::vector<IVec>{{0, 2, 0}, {2, 0, 2}, {3, 0, 0}});
}

TEST_CASE("reduce_mod_p") {
  const auto a = reduce_mod_p(P("3x^2 + y", {"x", "y"}), 3);
  CHECK(a.terms() == FpPolynomial::TermMap{{{0, 1}, 1}});
  const auto b = reduce_mod_p(P("x^2+y^3", {"x", "y"}), 5);
  CHECK(b.terms() == FpPolynomial::TermMap{{{2, 0}, 1}, {{0, 3}, 1}});
  const auto c = reduce_mod_p(P("7x - 2y", {"x", "y"}), 5);
  CHECK(c.terms() == FpPolynomial::TermMap{{{1, 0}, 2}, {{0, 1}, 3}});
  CHECK_THROWS_AS(reduce_mod_p(P("x", {"x"}), 4), DomainError);
}

TEST_CASE("reduce_mod_p is a ring homomorphism") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 100; ++t) {
    const auto f = random_poly(rng, 2), g = random_poly(rng, 2);
    for (std::int64_t p : {2, 3, 5, 7}) {
      CHECK(reduce_mod_p(f * g, p) == reduce_mod_p(f, p) * reduce_mod_p(g, p));
      CHECK(reduce_mod_p(f + g, p) == reduce_mod_p(f, p) + reduce_mod_p(g, p));
    }
  }
}

TEST_CASE("printing round-trips through the parser") {
  std::mt19937_64 rng(11);
  const std::vector<std::string> vars{"x", "y", "z"};
  for (int t = 0; t < 200; ++t) {
    const auto f = random_poly(rng, 3);
    CHECK(parse_polynomial(to_string(f, vars), vars) == f);
  }
}

TEST_CASE("restrict_to_face") {
  // x*y^2 lies above the segment 3x + 2y = 6 (3 + 4 > 6)
  const auto f = P("x^2+y^3+x*y^2", {"x", "y"});
  const auto g = build_polyhedron(support(f), 2);
  int seg = -1, v20 = -1;
  for (const auto& fc : g.faces()) {
    if (fc.compact && fc.dim == 1) seg = fc.id;
    if (fc.compact && fc.dim == 0 && g.vertices()[static_cast<std::size_t>(fc.vertex_ids[0])] == IVec{2, 0})
      v20 = fc.id;
  }
  REQUIRE(seg >= 0);
  REQUIRE(v20 >= 0);
  CHECK(restrict_to_face(f, g, seg) == P("x^2+y^3", {"x", "y"}));
  CHECK(restrict_to_face(f, g, v20) == P("x^2", {"x", "y"}));
  CHECK(restrict_to_face(f, g, g.whole_face_id()) == f);
  const auto fb = reduce_mod_p(f, 5);
  CHECK(restrict_to_face(fb, g, seg) == reduce_mod_p(P("x^2+y^3", {"x", "y"}), 5));
}

TEST_CASE("restriction to an intersection factors through either face") {
  const auto f = P("x^3+y^2+x^2*z^2+z^4+x*y*z", {"x", "y", "z"});
  const auto g = build_polyhedron(support(f), 3);
  for (const auto& a : g.faces())
    for (const auto& b : g.faces()) {
      std::vector<int> common;
      for (int v : a.vertex_ids)
        if (std::find(b.vertex_ids.begin(), b.vertex_ids.end(), v) != b.vertex_ids.end()) common.push_back(v);
      if (common.empty()) continue;
      for (const auto& c : g.faces())
        if (g.face_contains(a.id, c.id) && g.face_contains(b.id, c.id) && c.vertex_ids == common && c.compact) {
          CHECK(restrict_to_face(restrict_to_face(f, g, a.id), g, c.id) == restrict_to_face(f, g, c.id));
        }
    }
}

TEST_CASE("shift_variable") {
  const std::vector<std::string> v{"x", "y", "z"};
  CHECK(shift_variable(P("z^2", v), 2, 1) == P("z^2 - 2z + 1", v));
  CHECK(shift_variable(P("x", v), 2, 5) == P("x", v));
  CHECK(shift_variable(P("z^3", v), 2, 1) == P("z^3 - 3z^2 + 3z - 1", v));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const auto f = random_poly(rng, 3);
    CHECK(shift_variable(shift_variable(f, 1, 4), 1, -4) == f);
  }
}
