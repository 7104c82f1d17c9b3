#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "holozeta/conjecture.hpp"
#include "holozeta/error.hpp"
#include "holozeta/igusa.hpp"
#include "holozeta/lattice.hpp"
#include "holozeta/monodromy.hpp"
#include "holozeta/suites.hpp"

namespace holozeta {

namespace {

std::int64_t rand_in(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// Every a >= 0, a != 0 with coordinate sum <= height.
void orthant_points(std::size_t n, std::int64_t height, const std::function<void(const IVec&)>& visit) {
  IVec a(n, 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
    if (i == n) {
      if (!is_zero(a)) visit(a);
      return;
    }
    for (std::int64_t v = 0; v <= left; ++v) {
      a[i] = v;
      rec(i + 1, left - v);
    }
    a[i] = 0;
  };
  rec(0, height);
}

// fp + sum k_i g_i with k_i >= 0 and coordinate sum <= height.
void cone_points(const IVec& fp, const std::vector<IVec>& gens, std::int64_t height,
                 const std::function<void(const IVec&)>& visit) {
  std::function<void(std::size_t, const IVec&)> rec = [&](std::size_t i, const IVec& a) {
    if (coord_sum(a) > height) return;
    if (i == gens.size()) {
      visit(a);
      return;
    }
    for (IVec b = a; coord_sum(b) <= height; b = add(b, gens[i])) rec(i + 1, b);
  };
  rec(0, fp);
}

using Bins = std::map<int, std::map<std::int64_t, std::int64_t>>;  // face -> nu -> count

std::string vec_string(const IVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

// Lattice points of the orthant binned by face_of_vector, against the same
// points rebuilt from the simplicial pieces of every dual cone.
void partition_check(SuiteReport& rep, const std::string& name, const NewtonPolyhedron& g, std::int64_t height) {
  Bins direct, pieces;
  orthant_points(g.n(), height, [&](const IVec& a) { ++direct[face_of_vector(g, a).face_id][coord_sum(a)]; });
  for (const auto& f : g.faces()) {
    if (f.id == g.whole_face_id()) continue;
    for (const auto& sc : subdivide_cone(dual_cone(g, f.id)))
      for (const auto& fp : fundamental_points(sc))
        cone_points(fp, sc.generators, height, [&](const IVec& a) { ++pieces[f.id][coord_sum(a)]; });
  }
  rep.check("cone_partition").record(direct == pieces, [&] { return name; });
}

// Taylor coefficients of S_cone at q = 3 against direct sums over the lattice
// points of the open dual cone. Only cones whose generators all have N > 0.
void s_cone_check(SuiteReport& rep, const std::string& name, const NewtonPolyhedron& g, std::int64_t height) {
  const std::int64_t q = 3;
  for (const auto& f : g.faces()) {
    if (f.id == g.whole_face_id()) continue;
    const auto gens = dual_cone(g, f.id);
    // nu(a) <= N(a) * max nu(g)/N(g) on the cone, so N <= K forces nu <= height
    mpq_class ratio = -1;
    bool positive = true;
    for (const auto& v : gens) {
      const std::int64_t N = g.lattice_value(v);
      if (N <= 0) positive = false;
      else if (ratio < 0 || mpq_class(N, coord_sum(v)) < ratio) ratio = mpq_class(N, coord_sum(v));
    }
    if (!positive) continue;
    const std::int64_t K = floor_q(ratio * height);
    if (K < 1) continue;
    std::vector<mpq_class> want(static_cast<std::size_t>(K) + 1, 0);
    orthant_points(g.n(), height, [&](const IVec& a) {
      const auto fv = face_of_vector(g, a);
      if (fv.face_id != f.id || fv.N > K) return;
      mpz_class den;
      mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(fv.nu));
      want[static_cast<std::size_t>(fv.N)] += mpq_class(1, den);
    });
    const auto got = series_expand(S_cone(gens, g, q), static_cast<std::size_t>(K));
    bool ok = got.size() == want.size();
    for (std::size_t i = 0; ok && i < want.size(); ++i) ok = got[i] == Cyclo(want[i]);
    rep.check("s_cone_series").record(ok, [&] { return name + " face " + std::to_string(f.id); });
  }
}

void triangulation_check(SuiteReport& rep, const std::string& name, const NewtonPolyhedron& g,
                         std::mt19937_64& rng) {
  const CycloFactorization want = varchenko_zeta(g);
  const auto canon = zeta_via_ftau(g);
  rep.check("ftau_product_canonical").record(canon.phi_form() == want.phi_form(), [&] { return name; });
  for (int t = 0; t < 3; ++t) {
    const auto prio = random_vertex_priority(g, rng);
    const auto z = zeta_via_ftau(g, prio);
    rep.check("ftau_triangulation_independent").record(z.phi_form() == canon.phi_form(), [&] { return name; });
  }
}

// Pure powers on all three axes plus a few inner points.
std::vector<IVec> random_convenient(std::mt19937_64& rng) {
  std::vector<IVec> pts{{rand_in(rng, 1, 8), 0, 0}, {0, rand_in(rng, 1, 8), 0}, {0, 0, rand_in(rng, 1, 8)}};
  const auto extra = rand_in(rng, 0, 3);
  for (std::int64_t e = 0; e < extra; ++e) {
    IVec v{rand_in(rng, 0, 5), rand_in(rng, 0, 5), rand_in(rng, 0, 5)};
    if (!is_zero(v)) pts.push_back(v);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

void fundamental_point_check(SuiteReport& rep, std::mt19937_64& rng) {
  const std::size_t n = static_cast<std::size_t>(rand_in(rng, 2, 4));
  const std::size_t r = static_cast<std::size_t>(rand_in(rng, 1, static_cast<std::int64_t>(n)));
  SimplicialCone sc;
  for (std::size_t i = 0; i < r; ++i) {
    IVec v(n);
    for (auto& x : v) x = rand_in(rng, -3, 6);
    sc.generators.push_back(v);
    sc.open.push_back(rand_in(rng, 0, 1) == 1);
  }
  if (rank(sc.generators) != static_cast<int>(r)) return;
  const auto pts = fundamental_points(sc);
  const auto label = [&] {
    std::string s;
    for (const auto& v : sc.generators) s += vec_string(v);
    return s;
  };
  rep.check("fundamental_count").record(mpz_class(static_cast<long>(pts.size())) == multiplicity(sc.generators),
                                        label);
  bool inside = true;
  for (const auto& p : pts) {
    const auto c = coordinates_in(sc.generators, p);
    if (!c) {
      inside = false;
      break;
    }
    for (std::size_t i = 0; i < r; ++i) {
      const mpq_class& l = (*c)[i];
      inside = inside && (sc.open[i] ? (l > 0 && l <= 1) : (l >= 0 && l < 1));
    }
  }
  auto sorted = pts;
  std::sort(sorted.begin(), sorted.end());
  const bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  rep.check("fundamental_in_parallelepiped").record(inside && distinct, label);
  ++rep.counters["random_cones"];
}

bool all_b1(const NewtonPolyhedron& g, const PoleFamily& fam) {
  const auto cls = facets_with_ratio(g, fam);
  return !cls.empty() &&
         std::all_of(cls.begin(), cls.end(), [&](int fi) { return !b1_variables(g, fi).empty(); });
}

}  // namespace

SuiteReport structural_suite(std::uint64_t seed, int cones, std::int64_t height) {
  SuiteReport rep;
  rep.suite = "structural";
  rep.seed = seed;
  std::mt19937_64 rng(seed);
  for (const auto& e : corpus()) {
    const IntPolynomial f = parse_polynomial(e.text, e.vars);
    const NewtonPolyhedron g = build_polyhedron(support(f), f.n());
    partition_check(rep, e.text, g, height);
    s_cone_check(rep, e.text, g, height);
    if (f.n() == 3) triangulation_check(rep, e.text, g, rng);
  }
  for (int t = 0; t < 40; ++t) {
    const auto pts = random_convenient(rng);
    const NewtonPolyhedron g = build_polyhedron(pts, 3);
    std::string name;
    for (const auto& v : pts) name += vec_string(v);
    triangulation_check(rep, name, g, rng);
    if (t < 10) partition_check(rep, name, g, std::min<std::int64_t>(height, 20));
  }
  for (int t = 0; t < cones;) {
    const auto before = rep.counters["random_cones"];
    fundamental_point_check(rep, rng);
    if (rep.counters["random_cones"] > before) ++t;
  }
  return rep;
}

SuiteReport theorem_audit(const std::vector<std::int64_t>& primes) {
  SuiteReport rep;
  rep.suite = "theorem-audit";
  for (const auto& e : audit_corpus()) {
    const IntPolynomial f = parse_polynomial(e.text, e.vars);
    const NewtonPolyhedron g = build_polyhedron(support(f), f.n());
    const auto families = facet_families(g);
    for (std::int64_t p : primes)
      for (const auto& chi : nontrivial_characters(p)) {
        const std::int64_t d = chi.order();
        HolomorphyReport r;
        try {
          r = holomorphy_report(f, p, d, chi.index());
        } catch (const DomainError&) {
          ++rep.counters["skipped_degenerate"];
          continue;
        }
        ++rep.counters["instances"];
        ++rep.counters[to_string(r.verdict)];
        const auto label = [&] {
          return e.text + " p=" + std::to_string(p) + " d=" + std::to_string(d) + " k=" + std::to_string(r.k);
        };
        rep.check("no_violation").record(r.verdict != Verdict::Violation, label);

        // a pole line can only come from a facet with d | N
        const auto cands = candidate_families(g, d);
        auto explained_by_candidate = [&](const PoleFamily& fam) {
          return std::any_of(cands.begin(), cands.end(),
                             [&](const PoleFamily& c) { return reduced_ratio(c) == reduced_ratio(fam); });
        };
        std::vector<const RationalFunctionT*> parts{&r.zeta.local};
        if (r.zeta.global) parts.push_back(&*r.zeta.global);
        for (const auto* part : parts)
          for (const auto& fam : actual_pole_lines(*part, families))
            rep.check("filter_sound").record(explained_by_candidate(fam), label);

        std::vector<PoleFamily> poles = r.zeta.local_poles;
        poles.insert(poles.end(), r.zeta.global_poles.begin(), r.zeta.global_poles.end());
        for (const auto& fam : poles)
          if (f.n() == 3 && all_b1(g, fam))
            rep.check("b1_fallback_origin").record(eigenvalue_order_divisible(r.origin, d), label);
      }
  }
  return rep;
}

}  // namespace holozeta
