#include "holozeta/ratfunc.hpp"

#include <numeric>

#include "holozeta/error.hpp"

namespace holozeta {

namespace {

mpz_class pow_q(std::int64_t q, std::int64_t e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(e));
  return r;
}

}  // namespace

TPoly::TPoly(std::vector<Cyclo> coeffs) : c_(std::move(coeffs)) { trim(); }

void TPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

TPoly TPoly::constant(const Cyclo& c) { return TPoly({c}); }

TPoly TPoly::monomial(const Cyclo& c, std::size_t e) {
  std::vector<Cyclo> v(e + 1);
  v[e] = c;
  return TPoly(std::move(v));
}

TPoly TPoly::pole_factor(std::int64_t q, std::int64_t nu, std::int64_t N) {
  if (N <= 0) throw DomainError("pole factor needs N > 0");
  std::vector<Cyclo> v(static_cast<std::size_t>(N) + 1);
  v[0] = Cyclo(mpq_class(pow_q(q, nu)));
  v[static_cast<std::size_t>(N)] = Cyclo(-1);
  return TPoly(std::move(v));
}

TPoly TPoly::operator+(const TPoly& o) const {
  std::vector<Cyclo> v(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i < c_.size() && i < o.c_.size()) v[i] = c_[i] + o.c_[i];
    else if (i < c_.size()) v[i] = c_[i];
    else v[i] = o.c_[i];
  }
  return TPoly(std::move(v));
}

TPoly TPoly::operator-(const TPoly& o) const { return *this + (-o); }

TPoly TPoly::operator*(const TPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Cyclo> v(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      if (!o.c_[j].is_zero()) v[i + j] += c_[i] * o.c_[j];
  }
  return TPoly(std::move(v));
}

TPoly TPoly::operator*(const Cyclo& s) const {
  if (s.is_zero()) return {};
  std::vector<Cyclo> v = c_;
  for (auto& x : v) x = x * s;
  return TPoly(std::move(v));
}

bool TPoly::operator==(const TPoly& o) const {
  if (c_.size() != o.c_.size()) return false;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

TPoly TPoly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

void divmod(const TPoly& a, const TPoly& b, TPoly& quot, TPoly& rem) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Cyclo> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  if (r.size() <= db) {
    quot = TPoly();
    rem = a;
    return;
  }
  std::vector<Cyclo> q(r.size() - db);
  const Cyclo inv = b.leading().inverse();
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k].is_zero()) continue;
    const Cyclo c = r[k] * inv;
    q[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j)
      if (!bc[j].is_zero()) r[k - db + j] -= c * bc[j];
  }
  r.resize(db);
  quot = TPoly(std::move(q));
  rem = TPoly(std::move(r));
}

TPoly exact_divide(const TPoly& a, const TPoly& b) {
  TPoly q, r;
  divmod(a, b, q, r);
  if (!r.is_zero()) throw DomainError("internal: inexact polynomial division");
  return q;
}

bool divides(const TPoly& b, const TPoly& a) {
  TPoly q, r;
  divmod(a, b, q, r);
  return r.is_zero();
}

TPoly gcd(const TPoly& a, const TPoly& b) {
  TPoly x = a.monic(), y = b.monic();
  while (!y.is_zero()) {
    TPoly q, r;
    divmod(x, y, q, r);
    x = std::move(y);
    y = r.monic();
  }
  return x;
}

TPoly power(const TPoly& a, int e) {
  TPoly r = TPoly::constant(Cyclo(1));
  for (int i = 0; i < e; ++i) r = r * a;
  return r;
}

PoleFamily reduced_ratio(const PoleFamily& f) {
  const std::int64_t g = std::gcd(f.first, f.second);
  return {f.first / g, f.second / g};
}

RationalFunctionT::RationalFunctionT(std::int64_t q, std::int64_t d, TPoly num, FactorMap factors)
    : q_(q), d_(d), num_(std::move(num)), factors_(std::move(factors)) {
  for (auto it = factors_.begin(); it != factors_.end();) {
    if (it->first.second <= 0) throw DomainError("denominator factor with N <= 0");
    if (it->second < 0) throw DomainError("negative factor multiplicity");
    if (it->second == 0) it = factors_.erase(it);
    else ++it;
  }
}

RationalFunctionT RationalFunctionT::constant(std::int64_t q, std::int64_t d, const Cyclo& c) {
  return RationalFunctionT(q, d, TPoly::constant(c), {});
}

TPoly RationalFunctionT::expanded_denominator() const {
  TPoly den = TPoly::constant(Cyclo(1));
  for (const auto& [f, m] : factors_) den = den * power(TPoly::pole_factor(q_, f.first, f.second), m);
  for (const auto& [ratio, g] : divisors_) den = exact_divide(den, g);
  return den;
}

RationalFunctionT RationalFunctionT::operator+(const RationalFunctionT& o) const {
  if (q_ != o.q_) throw DomainError("adding rational functions over different q");
  if (!divisors_.empty() || !o.divisors_.empty())
    throw DomainError("internal: addition of reduced rational functions");
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  FactorMap common = factors_;
  for (const auto& [f, m] : o.factors_) common[f] = std::max(common[f], m);
  auto lift = [&](const RationalFunctionT& r) {
    TPoly num = r.num_;
    for (const auto& [f, m] : common) {
      auto it = r.factors_.find(f);
      const int have = it == r.factors_.end() ? 0 : it->second;
      if (m > have) num = num * power(TPoly::pole_factor(q_, f.first, f.second), m - have);
    }
    return num;
  };
  return RationalFunctionT(q_, std::max(d_, o.d_), lift(*this) + lift(o), common);
}

RationalFunctionT RationalFunctionT::operator*(const Cyclo& s) const {
  RationalFunctionT r = *this;
  r.num_ = r.num_ * s;
  return r;
}

RationalFunctionT RationalFunctionT::operator*(const RationalFunctionT& o) const {
  if (!divisors_.empty() || !o.divisors_.empty())
    throw DomainError("internal: product of reduced rational functions");
  FactorMap f = factors_;
  for (const auto& [k, m] : o.factors_) f[k] += m;
  return RationalFunctionT(q_, std::max(d_, o.d_), num_ * o.num_, f);
}

RationalFunctionT reduce_rational(const RationalFunctionT& r) {
  RationalFunctionT out(r.q_, r.d_);
  if (r.num_.is_zero()) return out;
  if (!r.divisors_.empty()) throw DomainError("rational function already reduced");
  // Factors with different reduced ratio nu/N have roots on different circles
  // |T| = q^{nu/N}, so their products are pairwise coprime and each group
  // can be reduced on its own.
  std::map<PoleFamily, RationalFunctionT::FactorMap> groups;
  for (const auto& [f, m] : r.factors_) groups[reduced_ratio(f)][f] = m;
  TPoly num = r.num_;
  RationalFunctionT::FactorMap factors;
  for (auto& [ratio, members] : groups) {
    TPoly D = TPoly::constant(Cyclo(1));
    for (const auto& [f, m] : members) D = D * power(TPoly::pole_factor(r.q_, f.first, f.second), m);
    TPoly quot, rem;
    divmod(num, D, quot, rem);
    TPoly g = rem.is_zero() ? D.monic() : gcd(rem, D);
    if (g.degree() > 0) {
      num = exact_divide(num, g);
      // peel whole factors off g, largest first
      for (auto it = members.rbegin(); it != members.rend(); ++it) {
        const TPoly F = TPoly::pole_factor(r.q_, it->first.first, it->first.second);
        while (it->second > 0 && g.degree() >= F.degree() && divides(F, g)) {
          g = exact_divide(g, F);
          --it->second;
        }
      }
      // g is monic up to the unit picked up by the whole-factor divisions
      if (g.degree() > 0) {
        out.divisors_[ratio] = g;
      } else {
        // the gcd was a constant c times whole factors, so the denominator
        // is now prod(F^m) / c
        num = num * g.coeff(0);
      }
    }
    for (const auto& [f, m] : members)
      if (m > 0) factors[f] = m;
  }
  out.num_ = num;
  out.factors_ = factors;
  return out;
}

bool same_function(const RationalFunctionT& a, const RationalFunctionT& b) {
  return a.numerator() * b.expanded_denominator() == b.numerator() * a.expanded_denominator();
}

std::vector<Cyclo> series_expand(const RationalFunctionT& r, std::size_t k) {
  std::vector<Cyclo> out(k + 1);
  if (r.is_zero()) return out;
  const TPoly den = r.expanded_denominator();
  const Cyclo d0 = den.coeff(0);
  if (d0.is_zero()) throw DomainError("denominator vanishes at T = 0");
  const Cyclo inv = d0.inverse();
  for (std::size_t i = 0; i <= k; ++i) {
    Cyclo c = r.numerator().coeff(i);
    for (std::size_t j = 1; j <= i && j < den.coeffs().size(); ++j)
      if (!den.coeffs()[j].is_zero()) c -= den.coeffs()[j] * out[i - j];
    out[i] = c * inv;
  }
  return out;
}

std::vector<PoleFamily> actual_pole_lines(const RationalFunctionT& r, const std::vector<PoleFamily>& families) {
  std::vector<PoleFamily> out;
  if (r.is_zero()) return out;
  // denominator part per reduced ratio
  std::map<PoleFamily, TPoly> parts;
  for (const auto& [f, m] : r.factors()) {
    auto key = reduced_ratio(f);
    auto it = parts.find(key);
    TPoly p = power(TPoly::pole_factor(r.q(), f.first, f.second), m);
    if (it == parts.end()) parts.emplace(key, p);
    else it->second = it->second * p;
  }
  for (auto& [key, p] : parts) {
    auto d = r.divisors().find(key);
    if (d != r.divisors().end()) p = exact_divide(p, d->second);
  }
  for (const auto& fam : families) {
    if (fam.second <= 0) continue;
    auto it = parts.find(reduced_ratio(fam));
    if (it == parts.end() || it->second.degree() <= 0) continue;
    if (gcd(it->second, TPoly::pole_factor(r.q(), fam.first, fam.second)).degree() > 0) out.push_back(fam);
  }
  return out;
}

}  // namespace holozeta
