#include "holozeta/suites.hpp"

#include <algorithm>

namespace holozeta {

void CheckTally::record(bool ok, const std::function<std::string()>& what) {
  ++cases;
  if (ok) return;
  ++failures;
  if (examples.size() < 5) examples.push_back(what());
}

CheckTally& SuiteReport::check(const std::string& name) {
  for (auto& c : checks)
    if (c.name == name) return c;
  checks.push_back(CheckTally{name, 0, 0, {}});
  return checks.back();
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckTally& c) { return c.failures == 0; });
}

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> c = {
      {"x^2+y^3", {"x", "y"}},
      {"x^3+y^3", {"x", "y"}},
      {"x^2+y^3+z^2", {"x", "y", "z"}},
      {"x^3+y^2+x^2*z^2+z^4", {"x", "y", "z"}},
      {"x*y+z^3", {"x", "y", "z"}},
      {"x^2+y^2+z^2", {"x", "y", "z"}},
  };
  return c;
}

const std::vector<CorpusEntry>& audit_corpus() {
  static const std::vector<CorpusEntry> c = [] {
    auto v = corpus();
    v.push_back({"x^3+y^2+z^2", {"x", "y", "z"}});
    v.push_back({"x^3+y^2+3*x^2*z^2+z^4", {"x", "y", "z"}});
    v.push_back({"x^3+y^2+3*x^2*z^2+z^7", {"x", "y", "z"}});
    v.push_back({"x^3+x^2*y^2+x^2*z^2", {"x", "y", "z"}});
    v.push_back({"x^3+x*y^2*z+z^4", {"x", "y", "z"}});
    v.push_back({"x^2+y^3+x*y*z+z^4", {"x", "y", "z"}});
    v.push_back({"z^2+x^2*z+x^5", {"x", "y", "z"}});
    v.push_back({"x^5+y^3+x*y*z^2+z^3", {"x", "y", "z"}});
    return v;
  }();
  return c;
}

const std::vector<std::int64_t>& suite_primes() {
  static const std::vector<std::int64_t> p = {3, 5, 7, 11, 13};
  return p;
}

}  // namespace holozeta
