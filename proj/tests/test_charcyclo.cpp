#include "doctest.h"

#include "holozeta/character.hpp"
#include "holozeta/cyclo.hpp"
#include "holozeta/error.hpp"
#include "holozeta/suites.hpp"

using namespace holozeta;

namespace {

Cyclo z(std::int64_t m, std::int64_t e = 1) { return Cyclo::zeta_power(m, e); }

FpPolynomial fp(const std::string& s, const std::vector<std::string>& v, std::int64_t p) {
  return reduce_mod_p(parse_polynomial(s, v), p);
}

}  // namespace

TEST_CASE("cyclotomic relations") {
  CHECK(z(4) * z(4) == Cyclo(-1));
  CHECK(z(6) * z(6) == z(6) - Cyclo(1));
  CHECK(Cyclo(mpq_class(1, 2)) + Cyclo(mpq_class(1, 2)) == Cyclo(1));
  CHECK(cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
  CHECK(euler_phi(12) == 4);
  CHECK(z(12, 3) == z(4));
  CHECK(z(5) * z(5, 4) == Cyclo(1));
  const Cyclo a = Cyclo(3) + z(5) * Cyclo(mpq_class(2, 7));
  CHECK(a * a.inverse() == Cyclo(1));
  CHECK_THROWS_AS(Cyclo(0).inverse(), DomainError);
  // 1 + zeta_3 + zeta_3^2 = 0
  CHECK((Cyclo(1) + z(3) + z(3, 2)).is_zero());
}

TEST_CASE("character values") {
  const Character chi(5, 4, 1);
  CHECK(chi.generator() == 2);
  CHECK(chi.eval(2) == z(4));
  CHECK(chi.eval(4) == Cyclo(-1));
  CHECK(chi.eval(3) == -z(4));
  CHECK(chi.eval(0).is_zero());
  CHECK(chi.eval(1) == Cyclo(1));
  CHECK(Character(3, 2, 1).eval(2) == Cyclo(-1));
  for (std::int64_t p : {5, 7, 11, 13})
    for (const auto& c : nontrivial_characters(p))
      for (std::int64_t x = 1; x < p; ++x)
        for (std::int64_t y = 1; y < p; ++y) CHECK(c.eval(x * y % p) == c.eval(x) * c.eval(y));
  CHECK_THROWS_AS(Character(6, 2, 1), DomainError);
  CHECK_THROWS_AS(Character(7, 4, 1), DomainError);
  CHECK_THROWS_AS(Character(7, 6, 2), DomainError);
  CHECK(characters_of_order(13, 12).size() == 4);
  CHECK(nontrivial_characters(7).size() == 5);
}

TEST_CASE("raw character sums") {
  CHECK(raw_char_sum(fp("x+y^2+z^2", {"x", "y", "z"}, 3), Character(3, 2, 1)) == Cyclo(4));
  CHECK(raw_char_sum(fp("x^2", {"x"}, 5), Character(5, 4, 1)).is_zero());
  CHECK(raw_char_sum(fp("x^2+y^2", {"x", "y"}, 5), Character(5, 4, 1)).is_zero());
}

TEST_CASE("L_tau") {
  CHECK(L_tau(fp("x^2", {"x"}, 3), Character(3, 2, 1)) == Cyclo(mpq_class(2, 3)));
  for (std::int64_t p : {3, 5, 7})
    for (const auto& c : nontrivial_characters(p)) CHECK(L_tau(fp("x", {"x"}, p), c).is_zero());
  CHECK(L_tau(fp("x^2", {"x"}, 5), Character(5, 4, 1)).is_zero());
}

TEST_CASE("histogram route equals the direct sum") {
  const auto f = fp("x^3+2*x*y^2+y+z^2", {"x", "y", "z"}, 7);
  for (const auto& c : nontrivial_characters(7))
    CHECK(char_sum_from_histogram(torus_value_histogram(f), c) == raw_char_sum(f, c));
}

TEST_CASE("character-sum identities on a reduced sweep") {
  const auto r = verify_lemmas(5, 20, {3, 5, 7});
  for (const auto& c : r.checks) {
    INFO(c.name);
    CHECK(c.failures == 0);
    CHECK(c.cases > 0);
  }
}
