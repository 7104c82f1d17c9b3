#include "holozeta/linalg.hpp"

#include <numeric>
#include <stdexcept>

#include "holozeta/error.hpp"

namespace holozeta {

std::int64_t dot(const IVec& a, const IVec& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::int64_t coord_sum(const IVec& a) { return std::accumulate(a.begin(), a.end(), std::int64_t{0}); }

IVec add(const IVec& a, const IVec& b) {
  IVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IVec sub(const IVec& a, const IVec& b) {
  IVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IVec scale(const IVec& a, std::int64_t k) {
  IVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * k;
  return r;
}

std::int64_t gcd_of(const IVec& a) {
  std::int64_t g = 0;
  for (auto x : a) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

IVec make_primitive(const IVec& a) {
  std::int64_t g = gcd_of(a);
  if (g <= 1) return a;
  IVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] / g;
  return r;
}

bool is_zero(const IVec& a) {
  for (auto x : a)
    if (x != 0) return false;
  return true;
}

std::int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw DomainError("integer overflow: lattice coordinate exceeds 64 bits");
  return z.get_si();
}

std::int64_t floor_q(const mpq_class& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return to_int64(f);
}

mpz_class determinant(const std::vector<std::vector<mpz_class>>& input) {
  // Bareiss fraction-free elimination.
  auto m = input;
  const std::size_t n = m.size();
  if (n == 0) return 1;
  mpz_class sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

mpz_class determinant(const std::vector<IVec>& rows) {
  std::vector<std::vector<mpz_class>> m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    m[i].reserve(rows[i].size());
    for (auto x : rows[i]) m[i].emplace_back(static_cast<long>(x));
  }
  return determinant(m);
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<QVec>& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    mpq_class inv = 1 / m[row][col];
    for (std::size_t j = col; j < ncols; ++j) m[row][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      mpq_class factor = m[i][col];
      for (std::size_t j = col; j < ncols; ++j) m[i][j] -= factor * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<QVec> to_q(const std::vector<IVec>& rows) {
  std::vector<QVec> m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    m[i].reserve(rows[i].size());
    for (auto x : rows[i]) m[i].emplace_back(static_cast<long>(x));
  }
  return m;
}

}  // namespace

int rank(const std::vector<IVec>& rows) {
  if (rows.empty()) return 0;
  auto m = to_q(rows);
  return static_cast<int>(rref(m, rows.front().size()).size());
}

mpz_class maximal_minor_gcd(const std::vector<IVec>& rows) {
  const std::size_t r = rows.size();
  if (r == 0) return 1;
  const std::size_t n = rows.front().size();
  if (r > n) return 0;
  mpz_class g = 0;
  std::vector<std::size_t> cols(r);
  std::iota(cols.begin(), cols.end(), 0);
  while (true) {
    std::vector<IVec> sq(r, IVec(r));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) sq[i][j] = rows[i][cols[j]];
    mpz_class d = determinant(sq);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    // next combination
    std::size_t i = r;
    while (i > 0 && cols[i - 1] == n - r + (i - 1)) --i;
    if (i == 0) break;
    ++cols[i - 1];
    for (std::size_t j = i; j < r; ++j) cols[j] = cols[j - 1] + 1;
  }
  return g;
}

std::vector<IVec> integer_kernel(const std::vector<IVec>& rows, std::size_t ncols) {
  auto m = to_q(rows);
  auto pivots = rref(m, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<IVec> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    QVec v(ncols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    mpz_class lcm = 1;
    for (auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    IVec iv(ncols);
    for (std::size_t j = 0; j < ncols; ++j) {
      mpq_class s = v[j] * lcm;
      iv[j] = to_int64(s.get_num());
    }
    basis.push_back(make_primitive(iv));
  }
  return basis;
}

std::optional<QVec> coordinates_in(const std::vector<IVec>& generators, const IVec& point) {
  const std::size_t r = generators.size();
  const std::size_t n = point.size();
  // Solve sum_i lambda_i g_i = point: augmented n x (r+1) system.
  std::vector<QVec> m(n, QVec(r + 1));
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t i = 0; i < r; ++i) m[row][i] = static_cast<long>(generators[i][row]);
    m[row][r] = static_cast<long>(point[row]);
  }
  auto pivots = rref(m, r + 1);
  if (!pivots.empty() && pivots.back() == r) return std::nullopt;
  if (pivots.size() != r) throw DomainError("generators are linearly dependent");
  QVec lambda(r);
  for (std::size_t i = 0; i < r; ++i) lambda[pivots[i]] = m[i][r];
  return lambda;
}

}  // namespace holozeta
