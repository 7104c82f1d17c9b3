#include "doctest.h"

#include "holozeta/error.hpp"
#include "holozeta/igusa.hpp"
#include "holozeta/oracle.hpp"

using namespace holozeta;

namespace {

IntPolynomial P(const std::string& s, const std::vector<std::string>& v) { return parse_polynomial(s, v); }

mpz_class pow_z(std::int64_t p, std::int64_t e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
  return r;
}

}  // namespace

TEST_CASE("counts for x^2 modulo powers of 3") {
  const auto f = P("x^2", {"x"});
  const auto m1 = count_solutions(f, 3, 1, false);
  REQUIRE(m1.size() == 3);
  CHECK(m1[0] == 1);
  CHECK(m1[1] == 2);
  CHECK(m1[2] == 0);
  const auto m2 = count_solutions(f, 3, 2, false);
  CHECK(m2[3] == 0);
  CHECK(m2[6] == 0);
  const auto m3 = count_solutions(f, 3, 3, false);
  CHECK(m3[9] == 6);
  CHECK(m3[18] == 0);
}

TEST_CASE("mass conservation and level compatibility") {
  const std::vector<std::string> v{"x", "y"};
  for (const char* s : {"x^2+y^3", "x*y+y^4", "3*x^2-y^2"})
    for (std::int64_t p : {3, 5})
      for (bool restricted : {false, true})
        for (int i = 1; i <= 3; ++i) {
          const auto f = P(s, v);
          const auto m = count_solutions(f, p, i, restricted);
          mpz_class total = 0;
          for (const auto& c : m) total += c;
          CHECK(total == pow_z(p, 2 * (restricted ? i - 1 : i)));
          const auto next = count_solutions(f, p, i + 1, restricted);
          const std::size_t mod = m.size();
          for (std::size_t u = 0; u < mod; ++u) {
            mpz_class lifts = 0;
            for (std::size_t w = u; w < next.size(); w += mod) lifts += next[w];
            CHECK(pow_z(p, 2) * m[u] == lifts);
          }
        }
}

TEST_CASE("truncated series") {
  CHECK(truncated_series(P("x^2", {"x"}), Character(3, 2, 1), 2, false) ==
        std::vector<Cyclo>{Cyclo(mpq_class(2, 3)), Cyclo(0), Cyclo(mpq_class(2, 9))});
  for (const auto& chi : nontrivial_characters(5)) {
    const auto s = truncated_series(P("x", {"x"}), chi, 3, false);
    CHECK(s.size() == 4);
    for (const auto& c : s) CHECK(c.is_zero());
  }
  for (bool local : {false, true})
    for (const auto& c : truncated_series(P("x^2", {"x"}), Character(5, 4, 1), 2, local)) CHECK(c.is_zero());
}

TEST_CASE("series depth and budget") {
  CHECK(max_series_terms(3, 3, 1e8) == 4);
  CHECK(max_series_terms(7, 2, 1e8) == 3);
  CHECK(max_series_terms(7, 3, 100) == -1);
  CHECK_THROWS_AS(count_solutions(P("x+y+z", {"x", "y", "z"}), 7, 4, false, 1e4), BudgetExceeded);
}

TEST_CASE("oracle agrees with the closed forms on small cases") {
  const std::vector<std::string> v{"x", "y"};
  for (const char* s : {"x^2+y^3", "x^2*y+y^4", "x*y"})
    for (std::int64_t p : {3, 5, 7}) {
      const auto f = P(s, v);
      const int k = max_series_terms(p, 2, 1e6);
      REQUIRE(k >= 1);
      for (const auto& chi : nontrivial_characters(p)) {
        INFO(s << " p=" << p << " d=" << chi.order() << " k=" << chi.index());
        CHECK(truncated_series(f, chi, k, true, 1e6) == series_expand(igusa_local(f, chi), static_cast<std::size_t>(k)));
        CHECK(truncated_series(f, chi, k, false, 1e6) ==
              series_expand(igusa_global(f, chi), static_cast<std::size_t>(k)));
      }
    }
}

TEST_CASE("nondegeneracy") {
  const std::vector<std::string> v{"x", "y"};
  CHECK(check_nondegenerate(P("x^2+y^3", v), 5, FaceSet::Compact).nondegenerate);
  CHECK(check_nondegenerate(P("x^2+y^3", v), 3, FaceSet::Compact).nondegenerate);
  const auto bad = check_nondegenerate(P("x^2+2*x*y+y^2", v), 3, FaceSet::Compact);
  CHECK_FALSE(bad.nondegenerate);
  CHECK(bad.witness.size() == 2);
  // the witness lies on the torus and kills the face polynomial mod 3
  CHECK((bad.witness[0] + bad.witness[1]) % 3 == 0);
  CHECK(bad.witness[0] % 3 != 0);
  // x^2 (y+1)^2: the only compact face is the vertex x^2, the vertical face is singular at y = -1
  const auto f = P("x^2*y^2+2*x^2*y+x^2", v);
  CHECK(check_nondegenerate(f, 3, FaceSet::Compact).nondegenerate);
  const auto all = check_nondegenerate(f, 3, FaceSet::All);
  CHECK_FALSE(all.nondegenerate);
  CHECK(all.witness[1] == 2);
}

TEST_CASE("shifted scan") {
  const std::vector<std::string> v{"x", "y", "z"};
  CHECK_FALSE(shifted_nondegenerate_scan(P("x^2+y^3+z^2", v), 2, {1, 2, 3, 4}, 5).empty());
  const auto g = P("x^2+y^3", v);
  const bool base = check_nondegenerate(g, 5, FaceSet::Compact).nondegenerate;
  CHECK(shifted_nondegenerate_scan(g, 2, {1, 2, 3}, 5).size() == (base ? 3u : 0u));
  CHECK(shifted_nondegenerate_scan(g, 2, {}, 5).empty());
}
