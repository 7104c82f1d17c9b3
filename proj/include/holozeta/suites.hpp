#pragma once

// Randomized and exhaustive property suites: character-sum identities,
// normalized-volume relations, cancellation instances, structural checks on
// cones and triangulations, and the holomorphy audit over the corpus.

#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace holozeta {

struct CheckTally {
  std::string name;
  std::int64_t cases = 0;
  std::int64_t failures = 0;
  std::vector<std::string> examples;  // first few failures

  void record(bool ok, const std::function<std::string()>& what);
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::deque<CheckTally> checks;  // references from check() stay valid
  std::map<std::string, std::int64_t> counters;

  CheckTally& check(const std::string& name);
  bool passed() const;
};

struct CorpusEntry {
  std::string text;
  std::vector<std::string> vars;
};

// The oracle-equality corpus.
const std::vector<CorpusEntry>& corpus();
// Corpus plus a few extra surfaces used by the audit.
const std::vector<CorpusEntry>& audit_corpus();

const std::vector<std::int64_t>& suite_primes();

SuiteReport verify_lemmas(std::uint64_t seed, int random_count = 200,
                          const std::vector<std::int64_t>& primes = suite_primes());

SuiteReport nv_suite(std::uint64_t seed, int count3 = 500, int count4 = 200, std::int64_t bound = 12);

// At least `count` instances per Fact, Case and X2 lemma.
SuiteReport cancel_suite(std::uint64_t seed, int count = 5);

// S_cone against lattice enumeration, triangulation independence of the F_tau
// product, and fundamental-point counts of random simplicial cones.
SuiteReport structural_suite(std::uint64_t seed, int cones = 200, std::int64_t height = 30);

SuiteReport theorem_audit(const std::vector<std::int64_t>& primes = suite_primes());

}  // namespace holozeta
