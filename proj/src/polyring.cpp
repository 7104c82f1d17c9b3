#include "holozeta/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "holozeta/error.hpp"
#include "holozeta/newton.hpp"

namespace holozeta {

IntPolynomial::IntPolynomial(std::size_t n, TermMap terms) : n_(n) {
  for (auto& [k, c] : terms) add_term(k, c);
}

void IntPolynomial::add_term(const ExponentVector& k, const mpz_class& c) {
  if (k.size() != n_) throw DomainError("exponent vector length does not match dimension");
  if (c == 0) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

mpz_class IntPolynomial::coefficient(const ExponentVector& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  IntPolynomial r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  IntPolynomial r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
  return r;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  IntPolynomial r(n_);
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_) r.add_term(add(k1, k2), c1 * c2);
  return r;
}

void FpPolynomial::add_term(const ExponentVector& k, std::int64_t c) {
  c %= p_;
  if (c < 0) c += p_;
  if (c == 0) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second = (it->second + c) % p_;
  if (it->second == 0) terms_.erase(it);
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  std::int64_t result = 1 % mod;
  base %= mod;
  if (base < 0) base += mod;
  while (exp > 0) {
    if (exp & 1) result = static_cast<std::int64_t>((__int128)result * base % mod);
    base = static_cast<std::int64_t>((__int128)base * base % mod);
    exp >>= 1;
  }
  return result;
}

std::int64_t FpPolynomial::evaluate(const std::vector<std::int64_t>& x) const {
  std::int64_t s = 0;
  for (const auto& [k, c] : terms_) {
    std::int64_t m = c;
    for (std::size_t j = 0; j < n_; ++j)
      if (k[j] != 0) m = m * mod_pow(x[j], k[j], p_) % p_;
    s += m;
  }
  return s % p_;
}

FpPolynomial FpPolynomial::derivative(std::size_t j) const {
  FpPolynomial d(p_, n_);
  for (const auto& [k, c] : terms_) {
    if (k[j] == 0) continue;
    auto k2 = k;
    --k2[j];
    d.add_term(k2, (c * (k[j] % p_)) % p_);
  }
  return d;
}

FpPolynomial FpPolynomial::operator+(const FpPolynomial& o) const {
  FpPolynomial r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

FpPolynomial FpPolynomial::operator*(const FpPolynomial& o) const {
  FpPolynomial r(p_, n_);
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_) r.add_term(add(k1, k2), c1 * c2 % p_);
  return r;
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace {

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& vars) : s_(text), vars_(vars) {}

  IntPolynomial parse() {
    IntPolynomial f(vars_.size());
    skip_ws();
    if (pos_ == s_.size()) throw ParseError("empty expression", pos_);
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    parse_term(f, sign);
    while (true) {
      skip_ws();
      if (pos_ == s_.size()) break;
      char c = peek();
      if (c != '+' && c != '-') throw ParseError(std::string("unexpected character '") + c + "'", pos_);
      ++pos_;
      parse_term(f, c == '-' ? -1 : 1);
    }
    return f;
  }

 private:
  char peek() const { return s_[pos_]; }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  void parse_term(IntPolynomial& f, int sign) {
    skip_ws();
    // A sign may follow the operator, e.g. "x + -3y".
    while (pos_ < s_.size() && (peek() == '+' || peek() == '-')) {
      if (peek() == '-') sign = -sign;
      ++pos_;
      skip_ws();
    }
    if (pos_ == s_.size()) throw ParseError("expected a term", pos_);
    mpz_class coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_integer();
      have_coeff = true;
      skip_ws();
      if (pos_ < s_.size() && (peek() == '.' || peek() == '/' || peek() == 'e' || peek() == 'E') &&
          !starts_variable())
        throw ParseError("non-integer literal", pos_);
      if (pos_ < s_.size() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (pos_ == s_.size() || !starts_variable()) throw ParseError("expected a variable after '*'", pos_);
      }
    }
    ExponentVector k(vars_.size(), 0);
    bool have_monomial = false;
    while (true) {
      skip_ws();
      if (pos_ == s_.size() || !starts_variable()) {
        if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(peek())))
          throw ParseError("unknown variable", pos_);
        break;
      }
      std::size_t var = parse_variable();
      skip_ws();
      std::int64_t e = 1;
      if (pos_ < s_.size() && peek() == '^') {
        ++pos_;
        skip_ws();
        if (pos_ == s_.size() || !std::isdigit(static_cast<unsigned char>(peek())))
          throw ParseError("expected an unsigned exponent after '^'", pos_);
        mpz_class ez = parse_integer();
        if (!ez.fits_slong_p()) throw ParseError("exponent too large", pos_);
        e = ez.get_si();
      }
      k[var] += e;
      have_monomial = true;
      skip_ws();
      if (pos_ < s_.size() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (pos_ == s_.size() || !starts_variable()) throw ParseError("expected a variable after '*'", pos_);
      }
    }
    if (!have_coeff && !have_monomial) throw ParseError("expected a term", pos_);
    f.add_term(k, sign * coeff);
  }

  mpz_class parse_integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ < s_.size() && (peek() == '.' || peek() == '/')) throw ParseError("non-integer literal", pos_);
    return mpz_class(s_.substr(start, pos_ - start));
  }

  // Longest declared variable name matching at the cursor.
  std::optional<std::size_t> match_variable() const {
    std::optional<std::size_t> best;
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      const auto& v = vars_[i];
      if (v.size() > best_len && s_.compare(pos_, v.size(), v) == 0) {
        best = i;
        best_len = v.size();
      }
    }
    return best;
  }

  bool starts_variable() const { return match_variable().has_value(); }

  std::size_t parse_variable() {
    auto m = match_variable();
    pos_ += vars_[*m].size();
    return *m;
  }

  const std::string& s_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

IntPolynomial parse_polynomial(const std::string& text, const std::vector<std::string>& variables) {
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (variables[i].empty()) throw DomainError("empty variable name");
    for (std::size_t j = i + 1; j < variables.size(); ++j)
      if (variables[i] == variables[j]) throw DomainError("duplicate variable name '" + variables[i] + "'");
  }
  return Parser(text, variables).parse();
}

std::string to_string(const IntPolynomial& f, const std::vector<std::string>& variables) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : f.terms()) {
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = is_zero(k);
    bool wrote = false;
    if (mag != 1 || constant) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t j = 0; j < k.size(); ++j) {
      if (k[j] == 0) continue;
      if (wrote) os << "*";
      os << variables[j];
      if (k[j] != 1) os << "^" << k[j];
      wrote = true;
    }
  }
  return os.str();
}

std::vector<std::string> default_variable_names(std::size_t n) {
  if (n <= 3) {
    std::vector<std::string> xyz{"x", "y", "z"};
    return {xyz.begin(), xyz.begin() + static_cast<long>(n)};
  }
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

std::vector<std::string> split_variables(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<ExponentVector> support(const IntPolynomial& f) {
  std::vector<ExponentVector> out;
  for (const auto& [k, c] : f.terms()) out.push_back(k);
  return out;
}

FpPolynomial reduce_mod_p(const IntPolynomial& f, std::int64_t p) {
  if (!is_prime(p)) throw DomainError("modulus " + std::to_string(p) + " is not prime");
  FpPolynomial r(p, f.n());
  mpz_class pz = static_cast<long>(p);
  for (const auto& [k, c] : f.terms()) {
    mpz_class m;
    mpz_fdiv_r(m.get_mpz_t(), c.get_mpz_t(), pz.get_mpz_t());
    r.add_term(k, m.get_si());
  }
  return r;
}

namespace {

void check_face_of(const NewtonPolyhedron& gamma, int face_id, std::size_t n,
                   const std::vector<ExponentVector>& supp) {
  if (gamma.n() != n) throw DomainError("face belongs to a polyhedron of another dimension");
  if (face_id < 0 || static_cast<std::size_t>(face_id) >= gamma.faces().size())
    throw DomainError("no such face");
  for (const auto& k : supp)
    for (const auto& fd : gamma.facets())
      if (dot(fd.normal, k) < fd.N) throw DomainError("face is not a face of the polynomial's Newton polyhedron");
}

}  // namespace

IntPolynomial restrict_to_face(const IntPolynomial& f, const NewtonPolyhedron& gamma, int face_id) {
  check_face_of(gamma, face_id, f.n(), support(f));
  IntPolynomial r(f.n());
  for (const auto& [k, c] : f.terms())
    if (gamma.point_on_face(k, face_id)) r.add_term(k, c);
  return r;
}

FpPolynomial restrict_to_face(const FpPolynomial& f, const NewtonPolyhedron& gamma, int face_id) {
  std::vector<ExponentVector> supp;
  for (const auto& [k, c] : f.terms()) supp.push_back(k);
  check_face_of(gamma, face_id, f.n(), supp);
  FpPolynomial r(f.p(), f.n());
  for (const auto& [k, c] : f.terms())
    if (gamma.point_on_face(k, face_id)) r.add_term(k, c);
  return r;
}

IntPolynomial shift_variable(const IntPolynomial& f, std::size_t j, const mpz_class& c) {
  if (j >= f.n()) throw DomainError("variable index out of range");
  IntPolynomial r(f.n());
  for (const auto& [k, coeff] : f.terms()) {
    // (x_j - c)^e = sum_i binom(e, i) x_j^i (-c)^(e-i)
    const std::int64_t e = k[j];
    mpz_class binom = 1;
    for (std::int64_t i = 0; i <= e; ++i) {
      if (i > 0) binom = binom * (e - i + 1) / i;
      mpz_class pw;
      mpz_class negc = -c;
      mpz_pow_ui(pw.get_mpz_t(), negc.get_mpz_t(), static_cast<unsigned long>(e - i));
      auto k2 = k;
      k2[j] = i;
      r.add_term(k2, coeff * binom * pw);
    }
  }
  return r;
}

}  // namespace holozeta
