#include "holozeta/character.hpp"

#include <numeric>

#include "holozeta/error.hpp"

namespace holozeta {

std::int64_t smallest_primitive_root(std::int64_t p) {
  if (!is_prime(p)) throw DomainError("modulus " + std::to_string(p) + " is not prime");
  if (p == 2) return 1;
  std::vector<std::int64_t> factors;
  std::int64_t m = p - 1;
  for (std::int64_t q = 2; q * q <= m; ++q) {
    if (m % q) continue;
    factors.push_back(q);
    while (m % q == 0) m /= q;
  }
  if (m > 1) factors.push_back(m);
  for (std::int64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto q : factors)
      if (mod_pow(g, (p - 1) / q, p) == 1) { ok = false; break; }
    if (ok) return g;
  }
  throw DomainError("no primitive root found");
}

Character::Character(std::int64_t p, std::int64_t d, std::int64_t k) : p_(p), d_(d), k_(k) {
  if (!is_prime(p)) throw DomainError("modulus " + std::to_string(p) + " is not prime");
  if (d <= 1) throw DomainError("character order must exceed 1");
  if ((p - 1) % d != 0)
    throw DomainError("character order " + std::to_string(d) + " does not divide p-1 = " + std::to_string(p - 1));
  k_ = ((k % d) + d) % d;
  if (std::gcd(k_, d) != 1)
    throw DomainError("character index " + std::to_string(k) + " is not coprime to the order " + std::to_string(d));
  g_ = smallest_primitive_root(p);
  dlog_.assign(static_cast<std::size_t>(p), -1);
  std::int64_t x = 1;
  for (std::int64_t e = 0; e < p - 1; ++e) {
    dlog_[static_cast<std::size_t>(x)] = e;
    x = x * g_ % p;
  }
}

std::int64_t Character::exponent(std::int64_t x) const {
  x %= p_;
  if (x < 0) x += p_;
  const std::int64_t e = dlog_[static_cast<std::size_t>(x)];
  if (e < 0) return -1;
  return (k_ * e) % d_;
}

Cyclo Character::eval(std::int64_t x) const {
  const std::int64_t j = exponent(x);
  if (j < 0) return Cyclo(0);
  return Cyclo::zeta_power(d_, j);
}

std::vector<Character> characters_of_order(std::int64_t p, std::int64_t d) {
  std::vector<Character> out;
  for (std::int64_t k = 1; k < d; ++k)
    if (std::gcd(k, d) == 1) out.emplace_back(p, d, k);
  return out;
}

std::vector<Character> nontrivial_characters(std::int64_t p) {
  std::vector<Character> out;
  for (std::int64_t d = 2; d <= p - 1; ++d) {
    if ((p - 1) % d) continue;
    for (auto& c : characters_of_order(p, d)) out.push_back(c);
  }
  return out;
}

std::vector<std::int64_t> torus_value_histogram(const FpPolynomial& f) {
  const std::int64_t p = f.p();
  const std::size_t n = f.n();
  std::vector<std::int64_t> hist(static_cast<std::size_t>(p), 0);
  struct Term {
    std::int64_t c;
    IVec e;
  };
  std::vector<Term> terms;
  std::int64_t max_e = 0;
  for (const auto& [k, c] : f.terms()) {
    terms.push_back({c, k});
    for (auto e : k) max_e = std::max(max_e, e);
  }
  // pow_table[x][e] = x^e mod p
  std::vector<std::vector<std::int64_t>> pw(static_cast<std::size_t>(p),
                                            std::vector<std::int64_t>(static_cast<std::size_t>(max_e) + 1));
  for (std::int64_t x = 1; x < p; ++x) {
    pw[x][0] = 1;
    for (std::int64_t e = 1; e <= max_e; ++e) pw[x][e] = pw[x][e - 1] * x % p;
  }
  std::vector<std::int64_t> x(n, 1);
  while (true) {
    std::int64_t v = 0;
    for (const auto& t : terms) {
      std::int64_t m = t.c;
      for (std::size_t i = 0; i < n; ++i)
        if (t.e[i]) m = m * pw[x[i]][t.e[i]] % p;
      v += m;
    }
    ++hist[static_cast<std::size_t>(v % p)];
    std::size_t i = 0;
    while (i < n && x[i] == p - 1) x[i++] = 1;
    if (i == n) break;
    ++x[i];
  }
  return hist;
}

std::vector<std::int64_t> power_counts(const std::vector<std::int64_t>& hist, const Character& chi) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(chi.order()), 0);
  for (std::size_t v = 1; v < hist.size(); ++v)
    if (hist[v]) counts[static_cast<std::size_t>(chi.exponent(static_cast<std::int64_t>(v)))] += hist[v];
  return counts;
}

std::vector<std::int64_t> reduce_power_counts(std::vector<std::int64_t> counts, std::int64_t d) {
  const auto& phi = cyclotomic_polynomial(d);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = counts.size(); k-- > deg;) {
    const std::int64_t lead = counts[k];
    if (!lead) continue;
    for (std::size_t j = 0; j <= deg; ++j) counts[k - deg + j] -= lead * phi[j];
  }
  counts.resize(deg);
  return counts;
}

Cyclo cyclo_from_counts(const std::vector<std::int64_t>& counts, std::int64_t d) {
  std::vector<mpq_class> v;
  v.reserve(counts.size());
  for (auto c : counts) v.emplace_back(static_cast<long>(c));
  return Cyclo(d, std::move(v));
}

Cyclo char_sum_from_histogram(const std::vector<std::int64_t>& hist, const Character& chi) {
  return cyclo_from_counts(power_counts(hist, chi), chi.order());
}

Cyclo raw_char_sum(const FpPolynomial& f, const Character& chi) {
  if (f.p() != chi.p()) throw DomainError("polynomial and character live over different primes");
  return char_sum_from_histogram(torus_value_histogram(f), chi);
}

Cyclo L_tau(const FpPolynomial& f_tau, const Character& chi) {
  mpz_class pn;
  mpz_ui_pow_ui(pn.get_mpz_t(), static_cast<unsigned long>(chi.p()), f_tau.n());
  return raw_char_sum(f_tau, chi) * mpq_class(1, pn);
}

}  // namespace holozeta
