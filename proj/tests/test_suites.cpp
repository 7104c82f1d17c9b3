#include "doctest.h"

#include <algorithm>

#include "holozeta/json_io.hpp"
#include "holozeta/suites.hpp"

using namespace holozeta;

namespace {

void all_green(const SuiteReport& r) {
  CHECK(r.passed());
  for (const auto& c : r.checks) {
    INFO(r.suite << ": " << c.name << (c.examples.empty() ? "" : " e.g. " + c.examples.front()));
    CHECK(c.failures == 0);
  }
}

}  // namespace

TEST_CASE("tallies") {
  SuiteReport r;
  r.check("a").record(true, [] { return std::string("x"); });
  CHECK(r.passed());
  r.check("a").record(false, [] { return std::string("bad"); });
  CHECK_FALSE(r.passed());
  CHECK(r.checks.size() == 1);
  CHECK(r.checks.front().cases == 2);
  CHECK(r.checks.front().examples == std::vector<std::string>{"bad"});
}

TEST_CASE("lemma sweep") { all_green(verify_lemmas(1, 10, {3, 5})); }

TEST_CASE("normalized volumes") {
  const auto r = nv_suite(2, 40, 20, 8);
  all_green(r);
  CHECK(r.checks.size() > 0);
}

TEST_CASE("cancellation instances") {
  const auto r = cancel_suite(3, 2);
  all_green(r);
  for (const char* g : {"unit_vertex", "coordinate_edge", "b1_pair", "b1_cluster", "x2_triangle", "x2_order_two"}) {
    INFO(g);
    const auto it = std::find_if(r.checks.begin(), r.checks.end(),
                                 [&](const CheckTally& c) { return c.name == std::string(g) + ".generated"; });
    REQUIRE(it != r.checks.end());
    CHECK(it->failures == 0);
  }
}

TEST_CASE("suites are reproducible from the seed") {
  CHECK(suite_json(cancel_suite(9, 2)).dump() == suite_json(cancel_suite(9, 2)).dump());
  CHECK(suite_json(nv_suite(9, 20, 10, 8)).dump() == suite_json(nv_suite(9, 20, 10, 8)).dump());
  CHECK(suite_json(structural_suite(9, 20, 10)).dump() == suite_json(structural_suite(9, 20, 10)).dump());
}

TEST_CASE("audit at a single prime") {
  const auto r = theorem_audit({5});
  all_green(r);
  CHECK(r.counters.at("instances") > 20);
  CHECK(r.counters.count("VIOLATION") == 0);
}
