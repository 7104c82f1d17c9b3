#include "holozeta/cyclo.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "holozeta/error.hpp"

namespace holozeta {

std::int64_t euler_phi(std::int64_t m) {
  if (m <= 0) throw DomainError("euler_phi of a non-positive integer");
  std::int64_t r = m;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    r -= r / p;
  }
  if (m > 1) r -= r / m;
  return r;
}

namespace {

using CycloCache = std::map<std::int64_t, std::vector<std::int64_t>>;

const std::vector<std::int64_t>& build_cyclotomic(std::int64_t m, CycloCache& cache) {
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  // t^m - 1 divided by Phi_e for every proper divisor e; all monic, so the
  // long division stays integral.
  std::vector<std::int64_t> num(static_cast<std::size_t>(m) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(m)] = 1;
  for (std::int64_t e = 1; e < m; ++e) {
    if (m % e) continue;
    const std::vector<std::int64_t> den = build_cyclotomic(e, cache);
    const std::size_t dd = den.size() - 1;
    std::vector<std::int64_t> quot(num.size() - dd, 0);
    for (std::size_t k = num.size(); k-- > dd;) {
      const std::int64_t lead = num[k];
      quot[k - dd] = lead;
      if (lead == 0) continue;
      for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= lead * den[j];
    }
    num = quot;
  }
  return cache.emplace(m, num).first->second;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t m) {
  static CycloCache cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  return build_cyclotomic(m, cache);
}

namespace {

void reduce_mod_phi(std::vector<mpq_class>& v, std::int64_t m) {
  const auto& phi = cyclotomic_polynomial(m);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = v.size(); k-- > deg;) {
    if (v[k] == 0) continue;
    const mpq_class lead = v[k];
    for (std::size_t j = 0; j <= deg; ++j) v[k - deg + j] -= lead * phi[j];
  }
  v.resize(deg);
}

// Q[t] helpers for the inverse.
using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

QPoly qsub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

void qdivmod(QPoly a, const QPoly& b, QPoly& quot, QPoly& rem) {
  trim(a);
  quot.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  const mpq_class inv = 1 / b.back();
  while (a.size() >= b.size()) {
    const mpq_class c = a.back() * inv;
    const std::size_t shift = a.size() - b.size();
    quot[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    a.pop_back();
    trim(a);
  }
  rem = a;
}

}  // namespace

Cyclo::Cyclo(std::int64_t m, std::vector<mpq_class> coeffs) : m_(m), c_(std::move(coeffs)) {
  if (m <= 0) throw DomainError("cyclotomic order must be positive");
  const std::size_t deg = static_cast<std::size_t>(euler_phi(m));
  if (c_.size() < deg) c_.resize(deg);
  reduce_mod_phi(c_, m);
}

Cyclo Cyclo::zeta_power(std::int64_t m, std::int64_t e) {
  e %= m;
  if (e < 0) e += m;
  std::vector<mpq_class> v(static_cast<std::size_t>(e) + 1);
  v[static_cast<std::size_t>(e)] = 1;
  return Cyclo(m, std::move(v));
}

bool Cyclo::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyclo::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

mpq_class Cyclo::rational_value() const {
  if (!is_rational()) throw DomainError("cyclotomic value is not rational");
  return c_.empty() ? mpq_class(0) : c_[0];
}

Cyclo Cyclo::promoted(std::int64_t target) const {
  if (target == m_) return *this;
  if (target % m_ != 0) throw DomainError("cannot promote to a non-multiple order");
  const std::int64_t step = target / m_;
  std::vector<mpq_class> v(static_cast<std::size_t>(step) * (c_.empty() ? 1 : c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * static_cast<std::size_t>(step)] = c_[i];
  return Cyclo(target, std::move(v));
}

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
  if (m_ != o.m_) {
    if (o.m_ == 1) { Cyclo r = *this; r.c_[0] += o.c_[0]; return r; }
    if (m_ == 1) return o + *this;
    const std::int64_t l = std::lcm(m_, o.m_);
    return promoted(l) + o.promoted(l);
  }
  Cyclo r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

Cyclo Cyclo::operator-(const Cyclo& o) const { return *this + (-o); }

Cyclo Cyclo::operator*(const mpq_class& s) const {
  Cyclo r = *this;
  for (auto& x : r.c_) x *= s;
  return r;
}

Cyclo Cyclo::operator*(const Cyclo& o) const {
  if (o.m_ == 1) return *this * o.c_[0];
  if (m_ == 1) return o * c_[0];
  if (m_ != o.m_) {
    const std::int64_t l = std::lcm(m_, o.m_);
    return promoted(l) * o.promoted(l);
  }
  std::vector<mpq_class> v(2 * c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      if (o.c_[j] != 0) v[i + j] += c_[i] * o.c_[j];
  }
  return Cyclo(m_, std::move(v));
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in a cyclotomic field");
  if (is_rational()) return Cyclo(m_, {1 / c_[0]});
  // extended Euclid on (a, Phi_m): s*a + t*Phi = 1
  QPoly a = c_;
  trim(a);
  const auto& phi_int = cyclotomic_polynomial(m_);
  QPoly b(phi_int.begin(), phi_int.end());
  QPoly s0{1}, s1{};
  QPoly r0 = a, r1 = b;
  // invariant: r_i == s_i * a (mod Phi)
  while (!r1.empty()) {
    QPoly q, r;
    qdivmod(r0, r1, q, r);
    QPoly s2 = qsub(s0, qmul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since Phi is irreducible
  const mpq_class inv = 1 / r0[0];
  for (auto& x : s0) x *= inv;
  return Cyclo(m_, s0);
}

bool Cyclo::operator==(const Cyclo& o) const {
  if (m_ == o.m_) return c_ == o.c_;
  return (*this - o).is_zero();
}

std::string rational_string(const mpq_class& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::vector<std::string> Cyclo::coefficient_strings(std::int64_t m) const {
  const Cyclo v = m == 0 ? *this : promoted(m);
  std::vector<std::string> out;
  for (const auto& x : v.c_) out.push_back(rational_string(x));
  return out;
}

std::string Cyclo::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const mpq_class& x = c_[i];
    if (x == 0) continue;
    mpq_class mag = abs(x);
    if (first) {
      if (x < 0) os << "-";
    } else {
      os << (x < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "z";
    if (i > 1) os << "^" << i;
  }
  if (first) return "0";
  return os.str();
}

}  // namespace holozeta
