#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "holozeta/character.hpp"
#include "holozeta/lattice.hpp"
#include "holozeta/newton.hpp"
#include "holozeta/suites.hpp"

namespace holozeta {

namespace {

using Hist = std::vector<std::int64_t>;

bool sum_vanishes(const Hist& hist, const Character& chi) {
  const auto r = reduce_power_counts(power_counts(hist, chi), chi.order());
  return std::all_of(r.begin(), r.end(), [](std::int64_t c) { return c == 0; });
}

Hist add_hists(const Hist& a, const Hist& b) {
  Hist r(a);
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

std::string chi_label(const Character& chi) {
  return "p=" + std::to_string(chi.p()) + " d=" + std::to_string(chi.order()) + " k=" +
         std::to_string(chi.index());
}

std::string poly_label(const FpPolynomial& f) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : f.terms()) {
    os << (first ? "" : " + ") << c << "*x^(";
    for (std::size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
    os << ")";
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::int64_t rand_in(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// Exponents in [0, 6]^n on a random hyperplane a.k = N with d not dividing N.
FpPolynomial hyperplane_polynomial(std::mt19937_64& rng, std::int64_t p, std::int64_t d) {
  for (;;) {
    const std::size_t n = static_cast<std::size_t>(rand_in(rng, 1, 3));
    IVec a(n), k0(n);
    for (auto& x : a) x = rand_in(rng, -3, 5);
    for (auto& x : k0) x = rand_in(rng, 0, 6);
    const std::int64_t N = dot(a, k0);
    if (N % d == 0) continue;
    std::vector<IVec> pts;
    IVec k(n, 0);
    for (;;) {
      if (dot(a, k) == N) pts.push_back(k);
      std::size_t i = 0;
      while (i < n && k[i] == 6) k[i++] = 0;
      if (i == n) break;
      ++k[i];
    }
    std::shuffle(pts.begin(), pts.end(), rng);
    const auto m = static_cast<std::size_t>(rand_in(rng, 1, std::min<std::int64_t>(4, static_cast<std::int64_t>(pts.size()))));
    FpPolynomial f(p, n);
    for (std::size_t i = 0; i < m; ++i) f.add_term(pts[i], rand_in(rng, 1, p - 1));
    return f;
  }
}

FpPolynomial random_poly(std::mt19937_64& rng, std::int64_t p, std::size_t n, int max_terms) {
  FpPolynomial f(p, n);
  const int terms = static_cast<int>(rand_in(rng, 0, max_terms));
  for (int t = 0; t < terms; ++t) {
    IVec k(n);
    for (auto& x : k) x = rand_in(rng, 0, 4);
    f.add_term(k, rand_in(rng, 1, p - 1));
  }
  return f;
}

// f(x_2..x_n) + x_1 g(x_2..x_n) as a polynomial in n variables.
FpPolynomial lift_linear(const FpPolynomial& f, const IVec& g_exp, std::int64_t g_coeff) {
  FpPolynomial out(f.p(), f.n() + 1);
  for (const auto& [k, c] : f.terms()) {
    IVec kk{0};
    kk.insert(kk.end(), k.begin(), k.end());
    out.add_term(kk, c);
  }
  IVec kk{1};
  kk.insert(kk.end(), g_exp.begin(), g_exp.end());
  out.add_term(kk, g_coeff);
  return out;
}

void lemma_linear_case(SuiteReport& rep, const std::vector<Character>& chars, const FpPolynomial& f,
                       const IVec& g_exp, std::int64_t g_coeff) {
  const FpPolynomial F = lift_linear(f, g_exp, g_coeff);
  const Hist lhs = torus_value_histogram(F);
  const Hist rhs = torus_value_histogram(f);
  const Hist both = add_hists(lhs, rhs);
  auto& chk = rep.check("lemma_linear_collapse");
  for (const auto& chi : chars)
    chk.record(sum_vanishes(both, chi), [&] { return chi_label(chi) + " F=" + poly_label(F); });
}

// Quadric family for one (a, i, alpha, beta, gamma), returned as the three
// value histograms of the three-variable and the two two-variable sums.
std::array<Hist, 3> conic_histograms(std::int64_t p, std::int64_t a, std::int64_t i, std::int64_t alpha,
                                     std::int64_t beta, std::int64_t gamma) {
  const auto P = static_cast<std::size_t>(p);
  Hist hy(P, 0), hz(P, 0), hyz(P, 0);
  for (std::int64_t y = 1; y < p; ++y) {
    ++hy[static_cast<std::size_t>(beta * y % p * y % p)];
    ++hz[static_cast<std::size_t>(gamma * y % p * y % p)];
  }
  for (std::size_t s = 0; s < P; ++s)
    for (std::size_t t = 0; t < P; ++t) hyz[(s + t) % P] += hy[s] * hz[t];
  std::array<Hist, 3> out{Hist(P, 0), Hist(P, 0), Hist(P, 0)};
  for (std::int64_t x = 1; x < p; ++x) {
    const std::int64_t A = alpha * mod_pow(x, a, p) % p;
    const std::int64_t B = mod_pow(x, i, p);
    for (std::size_t s = 0; s < P; ++s) {
      const auto v = static_cast<std::size_t>((A + B * static_cast<std::int64_t>(s)) % p);
      out[0][v] += hyz[s];
      out[1][v] += hy[s];
      out[2][v] += hz[s];
    }
  }
  return out;
}

}  // namespace

SuiteReport verify_lemmas(std::uint64_t seed, int random_count, const std::vector<std::int64_t>& primes) {
  SuiteReport rep;
  rep.suite = "verify-lemmas";
  rep.seed = seed;
  std::mt19937_64 rng(seed);
  for (std::int64_t p : primes) {
    const auto chars = nontrivial_characters(p);

    // power sums
    for (std::int64_t a = 1; a <= 12; ++a) {
      Hist h(static_cast<std::size_t>(p), 0);
      for (std::int64_t x = 1; x < p; ++x) ++h[static_cast<std::size_t>(mod_pow(x, a, p))];
      auto& chk = rep.check("lemma_power_sum");
      for (const auto& chi : chars) {
        if (a % chi.order() == 0) continue;
        chk.record(sum_vanishes(h, chi), [&] { return chi_label(chi) + " a=" + std::to_string(a); });
      }
    }

    // hyperplane-supported polynomials
    for (const auto& chi : chars) {
      auto& chk = rep.check("lemma_hyperplane");
      for (int t = 0; t < random_count; ++t) {
        const FpPolynomial f = hyperplane_polynomial(rng, p, chi.order());
        chk.record(raw_char_sum(f, chi).is_zero(), [&] { return chi_label(chi) + " f=" + poly_label(f); });
      }
    }

    // linear collapse: exhaustive in two variables, random in three
    for (std::int64_t c0 = 0; c0 < p; ++c0)
      for (std::int64_t c1 = 0; c1 < p; ++c1)
        for (std::int64_t e = 1; e <= 3; ++e)
          for (std::int64_t b = 1; b < p; ++b)
            for (std::int64_t m = 0; m <= 3; ++m) {
              FpPolynomial f(p, 1);
              f.add_term({0}, c0);
              f.add_term({e}, c1);
              lemma_linear_case(rep, chars, f, {m}, b);
            }
    for (int t = 0; t < random_count; ++t) {
      const FpPolynomial f = random_poly(rng, p, 2, 3);
      IVec g{rand_in(rng, 0, 4), rand_in(rng, 0, 4)};
      lemma_linear_case(rep, chars, f, g, rand_in(rng, 1, p - 1));
    }

    // the conic identity and its strengthened vanishing
    for (std::int64_t a = 1; a <= 8; ++a)
      for (std::int64_t i = 0; i <= 4; ++i)
        for (std::int64_t alpha = 0; alpha < p; ++alpha)
          for (std::int64_t beta = 1; beta < p; ++beta)
            for (std::int64_t gamma = 1; gamma < p; ++gamma) {
              const auto h = conic_histograms(p, a, i, alpha, beta, gamma);
              const Hist total = add_hists(add_hists(h[0], h[1]), h[2]);
              auto label = [&](const Character& chi) {
                return chi_label(chi) + " a=" + std::to_string(a) + " i=" + std::to_string(i) + " alpha=" +
                       std::to_string(alpha) + " beta=" + std::to_string(beta) + " gamma=" + std::to_string(gamma);
              };
              for (const auto& chi : chars) {
                const std::int64_t d = chi.order();
                if (a % d == 0) continue;
                rep.check("prop_conic_identity").record(sum_vanishes(total, chi), [&] { return label(chi); });
                if ((2 * a) % d != 0 || (a - i) % 2 == 0) {
                  const bool all_zero = sum_vanishes(h[0], chi) && sum_vanishes(h[1], chi) && sum_vanishes(h[2], chi);
                  rep.check("prop_conic_strengthened").record(all_zero, [&] { return label(chi); });
                }
              }
            }
  }
  return rep;
}

namespace {

struct VData {
  int face_id;
  std::vector<int> verts;
  std::int64_t nv;
  std::int64_t N;
};

std::string vec_label(const std::vector<IVec>& pts) {
  std::ostringstream os;
  for (const auto& v : pts) {
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
  }
  return os.str();
}

void check_facet(SuiteReport& rep, const NewtonPolyhedron& g, int facet_face) {
  const Face& tau = g.face(facet_face);
  const auto& tv = tau.vertex_ids;
  const std::string label = vec_label(g.face_vertices(facet_face));
  const std::size_t r = tv.size();
  std::vector<VData> vfaces;
  for (std::uint32_t mask = 1; mask < (1u << r); ++mask) {
    std::vector<int> sub;
    for (std::size_t i = 0; i < r; ++i)
      if (mask & (1u << i)) sub.push_back(tv[i]);
    const auto id = g.find_compact_face(sub);
    rep.check("faces_of_simplex").record(id.has_value(), [&] { return label; });
    if (!id || !g.face(*id).v_face_index_set) continue;
    const NVResult nvr = v_simplex_data(g, *id);
    rep.check("nv_definition").record(nvr.normalized_volume * nvr.N == nvr.multiplicity, [&] { return label; });
    vfaces.push_back({*id, sub, nvr.normalized_volume, nvr.N});
  }
  const auto self = std::find_if(vfaces.begin(), vfaces.end(), [&](const VData& v) { return v.face_id == facet_face; });
  rep.check("facet_is_vface").record(self != vfaces.end(), [&] { return label; });
  if (self == vfaces.end()) return;
  const VData T = *self;
  auto lookup = [&](int id) -> const VData* {
    for (const auto& v : vfaces)
      if (v.face_id == id) return &v;
    return nullptr;
  };

  for (const auto& s : vfaces)
    rep.check("nv_divides").record(T.nv % s.nv == 0, [&] { return label; });

  for (std::size_t x = 0; x < vfaces.size(); ++x)
    for (std::size_t y = x; y < vfaces.size(); ++y) {
      const VData& s1 = vfaces[x];
      const VData& s2 = vfaces[y];
      std::vector<int> common;
      std::set_intersection(s1.verts.begin(), s1.verts.end(), s2.verts.begin(), s2.verts.end(),
                            std::back_inserter(common));
      if (common.empty()) continue;
      const auto cap_id = g.find_compact_face(common);
      const int join_id = face_join(g, s1.face_id, s2.face_id);
      const VData* cap = cap_id ? lookup(*cap_id) : nullptr;
      const VData* join = lookup(join_id);
      rep.check("vface_closure").record(cap && join, [&] { return label; });
      if (!cap) continue;
      const std::int64_t lhs = T.nv * cap->nv, rhs = s1.nv * s2.nv;
      const bool integral = rhs > 0 && lhs % rhs == 0 && lhs / rhs >= 1;
      rep.check("nv_product_relation").record(integral, [&] { return label; });
      if (!integral || join_id != facet_face) continue;
      const std::int64_t M = lhs / rhs;
      const std::int64_t g12 = std::gcd(s1.N, s2.N);
      rep.check("lcm_of_distances").record(T.N == std::lcm(s1.N, s2.N), [&] { return label; });
      rep.check("gcd_criterion")
          .record((M == 1) == (cap->N == g12) && g12 % cap->N == 0 && M == g12 / cap->N, [&] { return label; });
      if (cap->N != g12) rep.check("m_at_least_two").record(M >= 2, [&] { return label; });
    }
}

int collect(SuiteReport& rep, std::mt19937_64& rng, std::size_t n, int count, std::int64_t bound) {
  int done = 0;
  std::bernoulli_distribution zero(0.45);
  for (int attempt = 0; done < count && attempt < count * 400; ++attempt) {
    const auto m = static_cast<std::size_t>(rand_in(rng, static_cast<std::int64_t>(n), static_cast<std::int64_t>(n) + 2));
    std::set<IVec> pts;
    while (pts.size() < m) {
      IVec v(n);
      for (auto& x : v) x = zero(rng) ? 0 : rand_in(rng, 1, bound);
      if (!is_zero(v)) pts.insert(v);
    }
    const NewtonPolyhedron g = build_polyhedron({pts.begin(), pts.end()}, n);
    std::vector<int> simplicial;
    for (const auto& fd : g.facets())
      if (fd.compact && g.face(fd.face_id).vertex_ids.size() == n) simplicial.push_back(fd.face_id);
    if (simplicial.empty()) continue;
    check_facet(rep, g, simplicial[static_cast<std::size_t>(rand_in(rng, 0, static_cast<std::int64_t>(simplicial.size()) - 1))]);
    ++done;
  }
  return done;
}

}  // namespace

SuiteReport nv_suite(std::uint64_t seed, int count3, int count4, std::int64_t bound) {
  SuiteReport rep;
  rep.suite = "nv-suite";
  rep.seed = seed;
  std::mt19937_64 rng(seed);
  const int got3 = collect(rep, rng, 3, count3, bound);
  const int got4 = collect(rep, rng, 4, count4, bound);
  rep.counters["facets_dim3"] = got3;
  rep.counters["facets_dim4"] = got4;
  rep.check("enough_facets").record(got3 == count3 && got4 == count4, [&] {
    return "generated " + std::to_string(got3) + " and " + std::to_string(got4) + " facets";
  });
  return rep;
}

}  // namespace holozeta
