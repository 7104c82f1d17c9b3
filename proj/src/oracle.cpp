#include "holozeta/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "holozeta/error.hpp"

namespace holozeta {

double default_budget() {
  if (const char* env = std::getenv("HOLOZETA_BUDGET")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && v > 0) return v;
  }
  return kDefaultBudget;
}

namespace {

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

void check_budget(std::int64_t p, std::size_t n, int level, double budget) {
  const double need = std::pow(static_cast<double>(p), static_cast<double>(n) * level);
  if (need > budget)
    throw BudgetExceeded("enumeration of " + std::to_string(p) + "^" + std::to_string(n * level) +
                             " points exceeds the budget",
                         need);
  if (ipow(p, level) > 3037000499LL)  // values times coefficients must fit in int64
    throw BudgetExceeded("modulus too large for machine arithmetic", need);
}

// Calls visit(value mod M) for every x in (Z/M)^n, or x in (pZ/M)^n when
// restricted.
template <class Visit>
void enumerate_values(const IntPolynomial& f, std::int64_t p, int level, bool restricted, Visit visit) {
  const std::size_t n = f.n();
  const std::int64_t M = ipow(p, level);
  const std::int64_t step = restricted ? p : 1;
  const std::int64_t count = M / step;
  struct Term {
    std::int64_t c;
    IVec e;
  };
  std::vector<Term> terms;
  std::int64_t max_e = 0;
  for (const auto& [k, c] : f.terms()) {
    mpz_class r = c % M;
    if (r < 0) r += M;
    if (r == 0) continue;
    terms.push_back({r.get_si(), k});
    for (auto e : k) max_e = std::max(max_e, e);
  }
  // pw[t][e] = (t*step)^e mod M
  std::vector<std::vector<std::int64_t>> pw(static_cast<std::size_t>(count),
                                            std::vector<std::int64_t>(static_cast<std::size_t>(max_e) + 1));
  for (std::int64_t t = 0; t < count; ++t) {
    const std::int64_t x = t * step % M;
    pw[t][0] = 1 % M;
    for (std::int64_t e = 1; e <= max_e; ++e) pw[t][e] = pw[t][e - 1] * x % M;
  }
  std::vector<std::int64_t> x(n, 0);
  if (n == 0) return;
  while (true) {
    std::int64_t v = 0;
    for (const auto& t : terms) {
      std::int64_t m = t.c;
      for (std::size_t i = 0; i < n; ++i)
        if (t.e[i]) m = m * pw[x[i]][t.e[i]] % M;
      v += m;
    }
    visit(v % M);
    std::size_t i = 0;
    while (i < n && x[i] == count - 1) x[i++] = 0;
    if (i == n) break;
    ++x[i];
  }
}

}  // namespace

std::vector<mpz_class> count_solutions(const IntPolynomial& f, std::int64_t p, int i, bool restricted,
                                       double budget) {
  if (!is_prime(p)) throw DomainError("modulus " + std::to_string(p) + " is not prime");
  if (i < 1) throw DomainError("level must be at least 1");
  check_budget(p, f.n(), i, budget);
  std::vector<std::int64_t> counts(static_cast<std::size_t>(ipow(p, i)), 0);
  enumerate_values(f, p, i, restricted, [&](std::int64_t v) { ++counts[static_cast<std::size_t>(v)]; });
  std::vector<mpz_class> out;
  out.reserve(counts.size());
  for (auto c : counts) out.emplace_back(static_cast<long>(c));
  return out;
}

CountTable build_count_table(const IntPolynomial& f, std::int64_t p, int levels, bool restricted, double budget) {
  if (!is_prime(p)) throw DomainError("modulus " + std::to_string(p) + " is not prime");
  if (levels < 1) throw DomainError("level must be at least 1");
  check_budget(p, f.n(), levels, budget);
  CountTable t;
  t.p = p;
  t.n = f.n();
  t.levels = levels;
  t.restricted = restricted;
  t.bins.assign(static_cast<std::size_t>(levels), std::vector<std::int64_t>(static_cast<std::size_t>(p), 0));
  const std::int64_t M = ipow(p, levels);
  // (order, digit) of every residue, flattened as order * p + digit
  std::vector<std::int32_t> code(static_cast<std::size_t>(M), -1);
  for (std::int64_t v = 1; v < M; ++v) {
    std::int64_t w = v;
    int i = 0;
    while (w % p == 0) {
      w /= p;
      ++i;
    }
    code[v] = static_cast<std::int32_t>(i * p + w % p);
  }
  std::vector<std::int64_t> flat(static_cast<std::size_t>(levels * p), 0);
  enumerate_values(f, p, levels, restricted, [&](std::int64_t v) {
    const auto c = code[static_cast<std::size_t>(v)];
    if (c >= 0) ++flat[static_cast<std::size_t>(c)];
  });
  for (int i = 0; i < levels; ++i)
    for (std::int64_t u = 0; u < p; ++u) t.bins[i][u] = flat[static_cast<std::size_t>(i * p + u)];
  return t;
}

int max_series_terms(std::int64_t p, std::size_t n, double budget) {
  int k = -1;
  while (std::pow(static_cast<double>(p), static_cast<double>(n) * (k + 2)) <= budget) ++k;
  return k;
}

std::vector<Cyclo> series_from_table(const CountTable& t, const Character& chi) {
  if (chi.p() != t.p) throw DomainError("character and count table use different primes");
  mpz_class total;
  mpz_ui_pow_ui(total.get_mpz_t(), static_cast<unsigned long>(t.p), t.n * static_cast<unsigned long>(t.levels));
  const mpq_class scale(mpz_class(1), total);
  std::vector<Cyclo> out;
  for (int i = 0; i < t.levels; ++i) {
    std::vector<std::int64_t> counts(static_cast<std::size_t>(chi.order()), 0);
    for (std::int64_t u = 1; u < t.p; ++u) counts[chi.exponent(u)] += t.bins[i][u];
    out.push_back(cyclo_from_counts(counts, chi.order()) * scale);
  }
  return out;
}

std::vector<Cyclo> truncated_series(const IntPolynomial& f, const Character& chi, int k, bool local, double budget) {
  if (k < 0) throw DomainError("number of series terms must be non-negative");
  return series_from_table(build_count_table(f, chi.p(), k + 1, local, budget), chi);
}

NondegeneracyResult check_nondegenerate(const IntPolynomial& f, std::int64_t p, FaceSet which) {
  if (f.is_zero()) throw DomainError("zero polynomial");
  return check_nondegenerate(f, build_polyhedron(support(f), f.n()), p, which);
}

NondegeneracyResult check_nondegenerate(const IntPolynomial& f, const NewtonPolyhedron& gamma, std::int64_t p,
                                        FaceSet which) {
  const FpPolynomial fbar = reduce_mod_p(f, p);
  if (fbar.is_zero()) throw DomainError("polynomial vanishes identically mod " + std::to_string(p));
  const std::size_t n = f.n();
  std::vector<int> order;
  for (const auto& face : gamma.faces())
    if (which == FaceSet::All || face.compact) order.push_back(face.id);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return gamma.face(a).dim < gamma.face(b).dim; });
  for (int id : order) {
    const FpPolynomial ft = restrict_to_face(fbar, gamma, id);
    std::vector<FpPolynomial> partials;
    for (std::size_t j = 0; j < n; ++j) partials.push_back(ft.derivative(j));
    std::vector<std::int64_t> x(n, 1);
    while (true) {
      bool singular = ft.evaluate(x) == 0;
      for (std::size_t j = 0; singular && j < n; ++j) singular = partials[j].evaluate(x) == 0;
      if (singular) return {false, id, x};
      std::size_t i = 0;
      while (i < n && x[i] == p - 1) x[i++] = 1;
      if (i == n) break;
      ++x[i];
    }
  }
  return {};
}

std::vector<std::int64_t> shifted_nondegenerate_scan(const IntPolynomial& f, std::size_t j,
                                                     const std::vector<std::int64_t>& candidates, std::int64_t p) {
  std::vector<std::int64_t> out;
  const ExponentVector origin(f.n(), 0);
  for (auto c : candidates) {
    const IntPolynomial g = shift_variable(f, j, c);
    if (g.is_zero()) continue;
    const mpz_class c0 = g.coefficient(origin);
    if (c0 != 0) {
      // the shifted point is off the hypersurface: the only compact face is
      // the origin, whose face polynomial is the constant term
      if (c0 % p != 0) out.push_back(c);
      continue;
    }
    if (check_nondegenerate(g, p, FaceSet::Compact).nondegenerate) out.push_back(c);
  }
  return out;
}

}  // namespace holozeta
