#include <algorithm>
#include <array>
#include <random>
#include <set>

#include "holozeta/conjecture.hpp"
#include "holozeta/error.hpp"
#include "holozeta/lattice.hpp"
#include "holozeta/oracle.hpp"
#include "holozeta/suites.hpp"

namespace holozeta {

namespace {

using Group = std::vector<ContributionTerm>;
using NamedGroup = std::pair<std::string, Group>;
using Perm = std::array<int, 3>;

std::int64_t rand_in(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

IVec unit(std::size_t i) {
  IVec e(3, 0);
  e[i] = 1;
  return e;
}

IVec permute(const IVec& v, const Perm& perm) {
  IVec w(3);
  for (std::size_t i = 0; i < 3; ++i) w[static_cast<std::size_t>(perm[i])] = v[i];
  return w;
}

Perm random_perm(std::mt19937_64& rng) {
  Perm p{0, 1, 2};
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

std::optional<int> vertex_of(const NewtonPolyhedron& g, const IVec& v) {
  const auto& vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (vs[i] == v) return static_cast<int>(i);
  return std::nullopt;
}

std::optional<int> facet_of_face(const NewtonPolyhedron& g, int face_id) {
  for (std::size_t i = 0; i < g.facets().size(); ++i)
    if (g.facets()[i].face_id == face_id) return static_cast<int>(i);
  return std::nullopt;
}

// Facet index with normal e_i containing the face, if any.
std::optional<int> coordinate_facet(const NewtonPolyhedron& g, std::size_t i, int face_id) {
  for (int fi : g.face(face_id).facet_ids)
    if (g.facets()[static_cast<std::size_t>(fi)].normal == unit(i)) return fi;
  return std::nullopt;
}

bool facet_has_b1(const NewtonPolyhedron& g, int fi) { return !b1_variables(g, fi).empty(); }

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

bool contains_family(const std::vector<PoleFamily>& v, const PoleFamily& f) {
  return std::find(v.begin(), v.end(), f) != v.end();
}

PoleFamily family_of(const NewtonPolyhedron& g, int fi) {
  const auto& fd = g.facets()[static_cast<std::size_t>(fi)];
  return {fd.nu, fd.N};
}

struct Pick {
  IntPolynomial f;
  std::optional<Character> chi;
  bool global = false;
};

// A prime, coefficients and a character with pred(order); f must be
// nondegenerate for the compact faces (and all faces when need_global).
std::optional<Pick> pick(std::mt19937_64& rng, const NewtonPolyhedron& g, const std::vector<IVec>& exps,
                         const std::function<bool(std::int64_t)>& pred, bool need_global) {
  auto primes = suite_primes();
  std::shuffle(primes.begin(), primes.end(), rng);
  for (std::int64_t p : primes) {
    std::vector<Character> chars;
    for (const auto& c : nontrivial_characters(p))
      if (pred(c.order())) chars.push_back(c);
    if (chars.empty()) continue;
    IntPolynomial f(3);
    for (const auto& e : exps) f.add_term(e, mpz_class(static_cast<long>(rand_in(rng, 1, p - 1))));
    if (!check_nondegenerate(f, g, p, FaceSet::Compact).nondegenerate) continue;
    const bool global = check_nondegenerate(f, g, p, FaceSet::All).nondegenerate;
    if (need_global && !global) continue;
    Pick pk{f, chars[static_cast<std::size_t>(rand_in(rng, 0, static_cast<std::int64_t>(chars.size()) - 1))], global};
    return pk;
  }
  return std::nullopt;
}

std::string label(const Pick& pk) {
  return to_string(pk.f, {"x", "y", "z"}) + " p=" + std::to_string(pk.chi->p()) + " d=" +
         std::to_string(pk.chi->order()) + " k=" + std::to_string(pk.chi->index());
}

void run(SuiteReport& rep, const std::string& kind, const NewtonPolyhedron& g, const Pick& pk,
         const std::vector<NamedGroup>& groups, const std::vector<PoleFamily>& absent) {
  const FpPolynomial fbar = reduce_mod_p(pk.f, pk.chi->p());
  for (const auto& [name, grp] : groups) {
    bool ok = false;
    try {
      ok = cancellation_check(g, fbar, *pk.chi, grp);
    } catch (const DomainError&) {
      ok = false;
    }
    rep.check(kind + "." + name).record(ok, [&] { return label(pk); });
  }
  if (!absent.empty()) {
    const ZetaReport zr = zeta_report(pk.f, *pk.chi);
    for (const auto& fam : absent) {
      auto fam_label = [&] {
        return label(pk) + " family (" + std::to_string(fam.first) + "," + std::to_string(fam.second) + ")";
      };
      rep.check(kind + ".local_pole_absent").record(!contains_family(zr.local_poles, fam), fam_label);
      if (zr.global)
        rep.check(kind + ".global_pole_absent").record(!contains_family(zr.global_poles, fam), fam_label);
    }
  }
  ++rep.counters[kind];
}

// ---- Facts -------------------------------------------------------------

std::vector<IVec> random_others(std::mt19937_64& rng, int count, std::int64_t lo, std::int64_t hi) {
  std::vector<IVec> out;
  while (static_cast<int>(out.size()) < count) {
    IVec v{rand_in(rng, lo, hi), rand_in(rng, lo, hi), rand_in(rng, lo, hi)};
    if (!is_zero(v)) out.push_back(v);
  }
  return out;
}

std::vector<IVec> dedupe(std::vector<IVec> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// vertex P(1,.,.)
bool unit_vertex(SuiteReport& rep, std::mt19937_64& rng) {
  const Perm perm = random_perm(rng);
  const IVec P{1, rand_in(rng, 0, 4), rand_in(rng, 0, 4)};
  std::vector<IVec> exps{P, {rand_in(rng, 2, 7), 0, 0}, {0, rand_in(rng, 2, 7), 0}, {0, 0, rand_in(rng, 2, 7)}};
  for (auto& e : exps) e = permute(e, perm);
  exps = dedupe(exps);
  const NewtonPolyhedron g = build_polyhedron(exps, 3);
  const auto v = vertex_of(g, permute(P, perm));
  if (!v) return false;
  const auto pk = pick(rng, g, exps, [](std::int64_t) { return true; }, false);
  if (!pk) return false;
  run(rep, "unit_vertex", g, *pk, {{"vertex_zero", {{*g.find_compact_face({*v}), std::nullopt}}}}, {});
  return true;
}

// vertex P(a,0,0) with ord(chi) not dividing a
bool axis_vertex(SuiteReport& rep, std::mt19937_64& rng) {
  const Perm perm = random_perm(rng);
  const std::int64_t a = rand_in(rng, 1, 8);
  std::vector<IVec> exps{{a, 0, 0}};
  for (const auto& o : random_others(rng, static_cast<int>(rand_in(rng, 2, 3)), 0, 6)) exps.push_back(o);
  for (auto& e : exps) e = permute(e, perm);
  exps = dedupe(exps);
  const NewtonPolyhedron g = build_polyhedron(exps, 3);
  const auto v = vertex_of(g, permute({a, 0, 0}, perm));
  if (!v) return false;
  const auto pk = pick(rng, g, exps, [a](std::int64_t d) { return a % d != 0; }, false);
  if (!pk) return false;
  run(rep, "axis_vertex", g, *pk, {{"vertex_zero", {{*g.find_compact_face({*v}), std::nullopt}}}}, {});
  return true;
}

// segment (1,1,b)-(0,0,a) with ord(chi) not dividing a
bool unit_segment(SuiteReport& rep, std::mt19937_64& rng) {
  const Perm perm = random_perm(rng);
  const std::int64_t a = rand_in(rng, 2, 8), b = rand_in(rng, 0, a - 1);
  const IVec P{1, 1, b}, Q{0, 0, a};
  std::vector<IVec> exps{P, Q, {rand_in(rng, 2, 8), 0, 0}, {0, rand_in(rng, 2, 8), 0}};
  if (rand_in(rng, 0, 1)) exps.push_back(random_others(rng, 1, 0, 6)[0]);
  for (auto& e : exps) e = permute(e, perm);
  exps = dedupe(exps);
  const NewtonPolyhedron g = build_polyhedron(exps, 3);
  const auto vp = vertex_of(g, permute(P, perm)), vq = vertex_of(g, permute(Q, perm));
  if (!vp || !vq) return false;
  const auto sigma = g.find_compact_face({*vp, *vq});
  if (!sigma || g.face(*sigma).dim != 1) return false;
  const auto pk = pick(rng, g, exps, [a](std::int64_t d) { return a % d != 0; }, false);
  if (!pk) return false;
  run(rep, "unit_segment", g, *pk, {{"segment_zero", {{*sigma, std::nullopt}}}}, {});
  return true;
}

// Random surface with points at height 0 and 1 in some coordinate, the
// shape the B1 facts look for.
std::vector<IVec> b1_template(std::mt19937_64& rng, bool pure_y) {
  std::vector<IVec> exps{{rand_in(rng, 1, 8), 0, 0}, {rand_in(rng, 0, 4), rand_in(rng, 0, 4), 1}};
  if (pure_y) exps.push_back({0, rand_in(rng, 1, 8), 0});
  else exps.push_back({rand_in(rng, 0, 4), rand_in(rng, 1, 4), rand_in(rng, 0, 4)});
  if (rand_in(rng, 0, 1)) exps.push_back({0, 0, rand_in(rng, 2, 8)});
  if (rand_in(rng, 0, 1)) exps.push_back({rand_in(rng, 0, 5), rand_in(rng, 0, 5), rand_in(rng, 0, 1)});
  const Perm perm = random_perm(rng);
  for (auto& e : exps) e = permute(e, perm);
  exps.erase(std::remove_if(exps.begin(), exps.end(), [](const IVec& v) { return is_zero(v); }), exps.end());
  return dedupe(exps);
}

// sigma = PQ in {x_i = 0}, tau = PQR with R at height one
bool coordinate_edge(SuiteReport& rep, std::mt19937_64& rng) {
  const auto exps = b1_template(rng, true);
  const NewtonPolyhedron g = build_polyhedron(exps, 3);
  for (std::size_t fi = 0; fi < g.facets().size(); ++fi) {
    const auto& fd = g.facets()[fi];
    if (!fd.compact) continue;
    for (int i : b1_variables(g, static_cast<int>(fi))) {
      std::vector<int> base;
      for (int v : g.face(fd.face_id).vertex_ids)
        if (g.vertices()[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)] == 0) base.push_back(v);
      const auto sigma = g.find_compact_face(base);
      if (!sigma || !coordinate_facet(g, static_cast<std::size_t>(i), *sigma)) continue;
      rep.check("coordinate_edge.unimodular").record(multiplicity(dual_cone(g, *sigma)) == 1, [] { return "Delta_sigma"; });
      const auto pk = pick(rng, g, exps, [](std::int64_t) { return true; }, false);
      if (!pk) return false;
      run(rep, "coordinate_edge", g, *pk, {{"sigma_tau", {{*sigma, std::nullopt}, {fd.face_id, std::nullopt}}}}, {});
      return true;
    }
  }
  return false;
}

// Compact edges PQ with P_i = 0 and Q_i = 1.
struct HeightEdge {
  int face_id, P, Q;
  std::size_t i;
};

std::vector<HeightEdge> height_edges(const NewtonPolyhedron& g) {
  std::vector<HeightEdge> out;
  for (const auto& f : g.faces()) {
    if (f.dim != 1 || !f.compact) continue;
    for (std::size_t i = 0; i < 3; ++i)
      for (int s = 0; s < 2; ++s) {
        const int P = f.vertex_ids[static_cast<std::size_t>(s)], Q = f.vertex_ids[static_cast<std::size_t>(1 - s)];
        if (g.vertices()[static_cast<std::size_t>(P)][i] == 0 && g.vertices()[static_cast<std::size_t>(Q)][i] == 1)
          out.push_back({f.id, P, Q, i});
      }
  }
  return out;
}

// sigma = PQ with P at height 0, Q at height 1; delta_P spanned by the
// normals of {x_i = 0} and the two facets through sigma
bool edge_cone_split(SuiteReport& rep, std::mt19937_64& rng) {
  const auto exps = b1_template(rng, rand_in(rng, 0, 1) == 1);
  const NewtonPolyhedron g = build_polyhedron(exps, 3);
  for (const auto& e : height_edges(g)) {
    const int pface = *g.find_compact_face({e.P});
    if (!coordinate_facet(g, e.i, pface)) continue;
    const auto& fids = g.face(e.face_id).facet_ids;
    if (fids.size() != 2) continue;
    std::vector<IVec> delta{unit(e.i), g.facets()[static_cast<std::size_t>(fids[0])].normal,
                            g.facets()[static_cast<std::size_t>(fids[1])].normal};
    if (rank(delta) != 3) continue;
    const auto pk = pick(rng, g, exps, [](std::int64_t) { return true; }, false);
    if (!pk) return false;
    run(rep, "edge_cone_split", g, *pk, {{"sigma_deltaP", {{e.face_id, std::nullopt}, {pface, delta}}}}, {});
    return true;
  }
  return false;
}

struct NoncompactB1 {
  int facet, face_id;
  std::size_t i, j;
  HeightEdge edge;
};

std::vector<NoncompactB1> noncompact_b1(const NewtonPolyhedron& g) {
  std::vector<NoncompactB1> out;
  const auto edges = height_edges(g);
  for (std::size_t fi = 0; fi < g.facets().size(); ++fi) {
    const auto& fd = g.facets()[fi];
    const Face& face = g.face(fd.face_id);
    if (fd.compact || fd.N == 0 || face.recession.size() != 1) continue;
    for (int i : b1_variables(g, static_cast<int>(fi)))
      for (const auto& e : edges)
        if (e.i == static_cast<std::size_t>(i) && g.face_contains(fd.face_id, e.face_id))
          out.push_back({static_cast<int>(fi), fd.face_id, e.i, face.recession[0], e});
  }
  return out;
}

// tau_1 cap tau_2: the half line from Q along the recession direction
bool recession_half_line(SuiteReport& rep, std::mt19937_64& rng) {
  const auto exps = b1_template(rng, false);
  const NewtonPolyhedron g = build_polyhedron(exps, 3);
  for (const auto& c : noncompact_b1(g)) {
    const auto h = g.find_face({c.edge.Q}, {c.j});
    if (!h || !g.face_contains(c.face_id, *h)) continue;
    const auto pk = pick(rng, g, exps, [](std::int64_t) { return true; }, true);
    if (!pk) return false;
    run(rep, "recession_half_line", g, *pk, {{"half_line_zero", {{*h, std::nullopt}}}}, {});
    return true;
  }
  return false;
}

// tau_1 and the half line sigma_1 from P
bool facet_and_half_line(SuiteReport& rep, std::mt19937_64& rng) {
  const auto exps = b1_template(rng, false);
  const NewtonPolyhedron g = build_polyhedron(exps, 3);
  for (const auto& c : noncompact_b1(g)) {
    const auto s1 = g.find_face({c.edge.P}, {c.j});
    if (!s1 || !g.face_contains(c.face_id, *s1) || !coordinate_facet(g, c.i, *s1)) continue;
    // the height-one part of f on tau_1 must be a single monomial
    int top = 0;
    for (const auto& k : exps)
      if (k[c.i] == 1 && g.point_on_face(k, c.face_id)) ++top;
    if (top != 1) continue;
    rep.check("facet_and_half_line.unimodular").record(multiplicity(dual_cone(g, *s1)) == 1, [] { return "Delta_sigma1"; });
    const auto pk = pick(rng, g, exps, [](std::int64_t) { return true; }, true);
    if (!pk) return false;
    run(rep, "facet_and_half_line", g, *pk, {{"tau_sigma1", {{c.face_id, std::nullopt}, {*s1, std::nullopt}}}}, {});
    return true;
  }
  return false;
}

// ---- Cases -------------------------------------------------------------

// Candidate families, for this d, of the facets sharing the ratio of `fi`.
std::vector<PoleFamily> class_candidates(const NewtonPolyhedron& g, int fi, std::int64_t d) {
  std::vector<PoleFamily> out;
  for (int c : facets_with_ratio(g, family_of(g, fi))) {
    const auto fam = family_of(g, c);
    if (fam.second % d == 0 && !contains_family(out, fam)) out.push_back(fam);
  }
  return out;
}

bool share_edge(const NewtonPolyhedron& g, int fa, int fb) {
  for (const auto& f : g.faces())
    if (f.dim == 1 && contains(f.facet_ids, fa) && contains(f.facet_ids, fb)) return true;
  return false;
}

// one B1 simplex PQR w.r.t. z, plus whatever else the ratio class holds
bool b1_simplex(SuiteReport& rep, std::mt19937_64& rng) {
  const auto exps = b1_template(rng, true);
  const NewtonPolyhedron g = build_polyhedron(exps, 3);
  for (std::size_t fi = 0; fi < g.facets().size(); ++fi) {
    if (!g.facets()[fi].compact || !facet_has_b1(g, static_cast<int>(fi))) continue;
    const auto cls = facets_with_ratio(g, family_of(g, static_cast<int>(fi)));
    bool ok = true;
    for (int a : cls) {
      if (!facet_has_b1(g, a)) ok = false;
      for (int b : cls) {
        if (a >= b || !share_edge(g, a, b)) continue;
        const auto va = b1_variables(g, a), vb = b1_variables(g, b);
        if (std::none_of(va.begin(), va.end(), [&](int v) { return contains(vb, v); })) ok = false;
      }
    }
    if (!ok) continue;
    const std::int64_t N = g.facets()[fi].N;
    const auto pk = pick(rng, g, exps, [N](std::int64_t d) { return N % d == 0; }, false);
    if (!pk) continue;
    run(rep, "b1_simplex", g, *pk, {}, class_candidates(g, static_cast<int>(fi), pk->chi->order()));
    return true;
  }
  return false;
}

// A(.,0,.), B(1,1,b), C(0,.,.), D(0,0,a); tau_1 = ABD, tau_2 = BCD.
struct TwoFacet {
  std::vector<IVec> exps;
  NewtonPolyhedron g;
  int t1 = -1, t2 = -1;
  std::int64_t a = 0;
};

std::optional<TwoFacet> compact_pair(std::mt19937_64& rng, int extras) {
  const std::int64_t a = rand_in(rng, 2, 8), b = rand_in(rng, 0, a - 1);
  const IVec D{0, 0, a}, B{1, 1, b};
  const IVec A{rand_in(rng, 2, 6), 0, rand_in(rng, 0, a - 1)};
  const IVec C = rand_in(rng, 0, 1) ? IVec{0, A[0], A[2]} : IVec{0, rand_in(rng, 2, 6), rand_in(rng, 0, a - 1)};
  std::vector<IVec> exps{A, B, C, D};
  if (rand_in(rng, 0, 1)) {
    const std::int64_t X = rand_in(rng, 2, 9);
    exps.push_back({X, 0, 0});
    exps.push_back({0, X, 0});
  }
  for (int e = 0; e < extras; ++e) {
    IVec v{rand_in(rng, 0, 6), 0, rand_in(rng, 0, a)};
    if (rand_in(rng, 0, 1)) std::swap(v[0], v[1]);
    if (!is_zero(v)) exps.push_back(v);
  }
  exps = dedupe(exps);
  TwoFacet tf{exps, build_polyhedron(exps, 3), -1, -1, a};
  const auto va = vertex_of(tf.g, A), vb = vertex_of(tf.g, B), vc = vertex_of(tf.g, C), vd = vertex_of(tf.g, D);
  if (!va || !vb || !vc || !vd) return std::nullopt;
  const auto f1 = tf.g.find_compact_face({*va, *vb, *vd}), f2 = tf.g.find_compact_face({*vb, *vc, *vd});
  if (!f1 || !f2 || tf.g.face(*f1).dim != 2 || tf.g.face(*f2).dim != 2) return std::nullopt;
  tf.t1 = *facet_of_face(tf.g, *f1);
  tf.t2 = *facet_of_face(tf.g, *f2);
  if (!contains(b1_variables(tf.g, tf.t1), 1) || !contains(b1_variables(tf.g, tf.t2), 0)) return std::nullopt;
  return tf;
}

bool b1_pair(SuiteReport& rep, std::mt19937_64& rng) {
  auto tf = compact_pair(rng, 0);
  if (!tf) return false;
  auto cls = facets_with_ratio(tf->g, family_of(tf->g, tf->t1));
  std::vector<int> want{tf->t1, tf->t2};
  std::sort(want.begin(), want.end());
  if (cls != want) return false;
  const std::int64_t N1 = tf->g.facets()[static_cast<std::size_t>(tf->t1)].N;
  const std::int64_t N2 = tf->g.facets()[static_cast<std::size_t>(tf->t2)].N;
  const std::int64_t a = tf->a;
  const auto pk =
      pick(rng, tf->g, tf->exps, [=](std::int64_t d) { return (N1 % d == 0 || N2 % d == 0) && a % d != 0; }, false);
  if (!pk) return false;
  run(rep, "b1_pair", tf->g, *pk, {}, class_candidates(tf->g, tf->t1, pk->chi->order()));
  return true;
}

// two non-compact B1 facets through a common half line: A(.,0,.), B(0,.,.),
// C(1,1,.), no pure power of z
bool b1_noncompact_pair(SuiteReport& rep, std::mt19937_64& rng) {
  const IVec A{rand_in(rng, 2, 7), 0, rand_in(rng, 0, 4)};
  const IVec B{0, rand_in(rng, 2, 7), rand_in(rng, 0, 4)};
  const IVec C{1, 1, rand_in(rng, 0, 4)};
  std::vector<IVec> exps{A, B, C};
  if (rand_in(rng, 0, 1)) exps.push_back({rand_in(rng, 2, 6), rand_in(rng, 2, 6), rand_in(rng, 0, 4)});
  exps = dedupe(exps);
  const NewtonPolyhedron g = build_polyhedron(exps, 3);
  const auto vc = vertex_of(g, C);
  if (!vc) return false;
  const auto line = g.find_face({*vc}, {2});
  if (!line) return false;
  const auto& fids = g.face(*line).facet_ids;
  if (fids.size() != 2) return false;
  const int t1 = fids[0], t2 = fids[1];
  for (int t : {t1, t2}) {
    const Face& f = g.face(g.facets()[static_cast<std::size_t>(t)].face_id);
    if (f.compact || f.recession != std::vector<std::size_t>{2}) return false;
  }
  const auto v1 = b1_variables(g, t1), v2 = b1_variables(g, t2);
  if (v1.empty() || v2.empty() || std::any_of(v1.begin(), v1.end(), [&](int v) { return contains(v2, v); }))
    return false;
  auto cls = facets_with_ratio(g, family_of(g, t1));
  if (cls != std::vector<int>{std::min(t1, t2), std::max(t1, t2)}) return false;
  const std::int64_t N1 = g.facets()[static_cast<std::size_t>(t1)].N, N2 = g.facets()[static_cast<std::size_t>(t2)].N;
  const auto pk = pick(rng, g, exps, [=](std::int64_t d) { return N1 % d == 0 || N2 % d == 0; }, false);
  if (!pk) return false;
  run(rep, "b1_noncompact_pair", g, *pk, {}, class_candidates(g, t1, pk->chi->order()));
  return true;
}

// common compact segment A(0,0,a)-B(1,1,b) of two non-compact B1 facets
bool b1_noncompact_compact_edge(SuiteReport& rep, std::mt19937_64& rng) {
  const std::int64_t a = rand_in(rng, 2, 9), b = rand_in(rng, 0, a - 1);
  const IVec A{0, 0, a}, B{1, 1, b};
  std::vector<IVec> exps{A, B};
  if (rand_in(rng, 0, 1)) exps.push_back({rand_in(rng, 2, 6), rand_in(rng, 2, 6), 0});
  exps = dedupe(exps);
  const NewtonPolyhedron g = build_polyhedron(exps, 3);
  const auto va = vertex_of(g, A), vb = vertex_of(g, B);
  if (!va || !vb) return false;
  const auto seg = g.find_compact_face({*va, *vb});
  if (!seg || g.face(*seg).dim != 1) return false;
  std::vector<int> b1;
  for (int t : g.face(*seg).facet_ids) {
    const Face& f = g.face(g.facets()[static_cast<std::size_t>(t)].face_id);
    if (!f.compact && f.recession.size() == 1 && facet_has_b1(g, t)) b1.push_back(t);
  }
  if (b1.size() != 2) return false;
  std::vector<PoleFamily> fams;
  for (int t : b1) fams.push_back(family_of(g, t));
  const auto pk = pick(rng, g, exps, [a](std::int64_t d) { return a % d != 0; }, false);
  if (!pk) return false;
  run(rep, "b1_noncompact_compact_edge", g, *pk, {}, fams);
  return true;
}

// compact tau_1 = ABD (B1 for y) and the non-compact facet through BD
bool b1_compact_noncompact(SuiteReport& rep, std::mt19937_64& rng) {
  const std::int64_t a = rand_in(rng, 2, 8), b = rand_in(rng, 0, a - 1);
  const IVec D{0, 0, a}, B{1, 1, b}, A{rand_in(rng, 2, 6), 0, rand_in(rng, 0, a - 1)};
  std::vector<IVec> exps{A, B, D};
  if (rand_in(rng, 0, 1)) exps.push_back({rand_in(rng, A[0], 9), 0, 0});
  exps = dedupe(exps);
  const NewtonPolyhedron g = build_polyhedron(exps, 3);
  const auto va = vertex_of(g, A), vb = vertex_of(g, B), vd = vertex_of(g, D);
  if (!va || !vb || !vd) return false;
  const auto f1 = g.find_compact_face({*va, *vb, *vd});
  const auto bd = g.find_compact_face({*vb, *vd});
  if (!f1 || !bd || g.face(*f1).dim != 2) return false;
  const int t1 = *facet_of_face(g, *f1);
  if (!contains(b1_variables(g, t1), 1)) return false;
  int t2 = -1;
  for (int t : g.face(*bd).facet_ids)
    if (t != t1) t2 = t;
  if (t2 < 0) return false;
  const Face& f2 = g.face(g.facets()[static_cast<std::size_t>(t2)].face_id);
  if (f2.compact || f2.recession != std::vector<std::size_t>{1} || !contains(b1_variables(g, t2), 0)) return false;
  for (int c : facets_with_ratio(g, family_of(g, t1)))
    if (c != t1 && c != t2) return false;
  const std::int64_t N = g.facets()[static_cast<std::size_t>(t1)].N;
  const auto pk = pick(rng, g, exps, [=](std::int64_t d) { return N % d == 0 && a % d != 0; }, false);
  if (!pk) return false;
  run(rep, "b1_compact_noncompact", g, *pk, {}, class_candidates(g, t1, pk->chi->order()));
  return true;
}

// For each edge shared by two facets of `cls` that are B1 only for different
// variables: the nonzero coordinate of its vertex on a coordinate axis (the
// "a" of that pair). Zero if such an edge has no axis vertex.
std::vector<std::int64_t> pair_heights(const NewtonPolyhedron& g, const std::vector<int>& cls) {
  std::vector<std::int64_t> out;
  for (const auto& f : g.faces()) {
    if (f.dim != 1) continue;
    std::vector<int> in;
    for (int t : f.facet_ids)
      if (contains(cls, t)) in.push_back(t);
    if (in.size() != 2) continue;
    const auto va = b1_variables(g, in[0]), vb = b1_variables(g, in[1]);
    if (std::any_of(va.begin(), va.end(), [&](int v) { return contains(vb, v); })) continue;
    std::int64_t h = 0;
    for (int v : f.vertex_ids) {
      const IVec& x = g.vertices()[static_cast<std::size_t>(v)];
      if (std::count(x.begin(), x.end(), 0) == 2) h = *std::max_element(x.begin(), x.end());
    }
    out.push_back(h);
  }
  return out;
}

// the b1_pair core with further B1 facets meeting tau_1 or tau_2 in an edge
bool b1_cluster(SuiteReport& rep, std::mt19937_64& rng) {
  auto tf = compact_pair(rng, static_cast<int>(rand_in(rng, 1, 2)));
  if (!tf) return false;
  const auto& g = tf->g;
  const auto cls = facets_with_ratio(g, family_of(g, tf->t1));
  if (!contains(cls, tf->t2)) return false;
  for (int c : cls)
    if (!facet_has_b1(g, c)) return false;
  bool neighbour = false;
  for (std::size_t fi = 0; fi < g.facets().size(); ++fi) {
    const int f = static_cast<int>(fi);
    if (f == tf->t1 || f == tf->t2 || !facet_has_b1(g, f)) continue;
    if (share_edge(g, f, tf->t1) || share_edge(g, f, tf->t2)) neighbour = true;
  }
  if (!neighbour) return false;
  // every adjacent different-variable pair needs its own order condition
  const auto heights = pair_heights(g, cls);
  if (std::find(heights.begin(), heights.end(), 0) != heights.end()) return false;
  const std::int64_t N1 = g.facets()[static_cast<std::size_t>(tf->t1)].N;
  const auto pk = pick(
      rng, g, tf->exps,
      [&](std::int64_t d) {
        return N1 % d == 0 && std::none_of(heights.begin(), heights.end(), [d](std::int64_t h) { return h % d == 0; });
      },
      false);
  if (!pk) return false;
  run(rep, "b1_cluster", g, *pk, {}, class_candidates(g, tf->t1, pk->chi->order()));
  return true;
}

// ---- X2 facets -----------------------------------------------------------

struct X2Faces {
  int tau, p, q, r, pq, pr, qr;
};

std::optional<X2Faces> x2_faces(const NewtonPolyhedron& g, const IVec& P, const IVec& Q, const IVec& R) {
  const auto vp = vertex_of(g, P), vq = vertex_of(g, Q), vr = vertex_of(g, R);
  if (!vp || !vq || !vr) return std::nullopt;
  const auto tau = g.find_compact_face({*vp, *vq, *vr});
  if (!tau || g.face(*tau).dim != 2) return std::nullopt;
  const auto pq = g.find_compact_face({*vp, *vq}), pr = g.find_compact_face({*vp, *vr}),
             qr = g.find_compact_face({*vq, *vr});
  return X2Faces{*tau, *g.find_compact_face({*vp}), *g.find_compact_face({*vq}), *g.find_compact_face({*vr}),
                 *pq, *pr, *qr};
}

std::vector<NamedGroup> x2_groups(const X2Faces& x, bool order_two_shape) {
  auto one = [](int id) { return Group{{id, std::nullopt}}; };
  std::vector<NamedGroup> out{{"sigma1_sigma2_tau", {{x.pq, std::nullopt}, {x.pr, std::nullopt}, {x.tau, std::nullopt}}}};
  if (order_two_shape) {
    out.push_back({"q_r_qr", {{x.q, std::nullopt}, {x.r, std::nullopt}, {x.qr, std::nullopt}}});
  } else {
    out.push_back({"vertex_p_zero", one(x.p)});
    out.push_back({"vertex_q_zero", one(x.q)});
    out.push_back({"vertex_r_zero", one(x.r)});
    out.push_back({"edge_qr_zero", one(x.qr)});
  }
  return out;
}

void x2_instance(SuiteReport& rep, const std::string& kind, const NewtonPolyhedron& g, const Pick& pk,
                 const X2Faces& x, bool order_two_shape) {
  const int fi = *facet_of_face(g, x.tau);
  std::vector<PoleFamily> absent;
  const auto fam = family_of(g, fi);
  if (facets_with_ratio(g, fam) == std::vector<int>{fi} && fam.second % pk.chi->order() == 0) absent.push_back(fam);
  run(rep, kind, g, pk, x2_groups(x, order_two_shape), absent);
}

// p(a,0,0), q(x1,0,2), r(x2,2,0), a - x_i odd; ord(chi) not dividing a, not 2
bool x2_triangle(SuiteReport& rep, std::mt19937_64& rng) {
  const std::int64_t a = rand_in(rng, 2, 7);
  auto odd_gap = [&] {
    for (;;) {
      const std::int64_t x = rand_in(rng, 0, a - 1);
      if ((a - x) % 2 != 0) return x;
    }
  };
  const Perm perm = random_perm(rng);
  const IVec P = permute({a, 0, 0}, perm), Q = permute({odd_gap(), 0, 2}, perm), R = permute({odd_gap(), 2, 0}, perm);
  std::vector<IVec> exps{P, Q, R};
  if (rand_in(rng, 0, 1)) exps.push_back(permute({0, 0, rand_in(rng, 2 * a, 2 * a + 3)}, perm));
  const NewtonPolyhedron g = build_polyhedron(exps, 3);
  const auto x = x2_faces(g, P, Q, R);
  if (!x) return false;
  const auto pk = pick(rng, g, exps, [a](std::int64_t d) { return a % d != 0 && d != 2 && (2 * a) % d == 0; }, false);
  if (!pk) return false;
  x2_instance(rep, "x2_triangle", g, *pk, *x, false);
  return true;
}

// p(a,0,0), q(0,0,2), r(0,2,0) with a odd; ord(chi) not dividing a
bool x2_order_two(SuiteReport& rep, std::mt19937_64& rng) {
  const std::int64_t a = 2 * rand_in(rng, 1, 4) + 1;
  const Perm perm = random_perm(rng);
  const IVec P = permute({a, 0, 0}, perm), Q = permute({0, 0, 2}, perm), R = permute({0, 2, 0}, perm);
  const std::vector<IVec> exps{P, Q, R};
  const NewtonPolyhedron g = build_polyhedron(exps, 3);
  const auto x = x2_faces(g, P, Q, R);
  if (!x) return false;
  const auto pk = pick(rng, g, exps, [a](std::int64_t d) { return a % d != 0 && (2 * a) % d == 0; }, false);
  if (!pk) return false;
  x2_instance(rep, "x2_order_two", g, *pk, *x, true);
  return true;
}

// Fixed instances, every admissible character.
void explicit_x2(SuiteReport& rep) {
  struct Fixed {
    const char* text;
    std::int64_t p, d;
    IVec P, Q, R;
    bool order_two_shape;
  };
  const std::vector<Fixed> cases = {
      {"x^3+y^2+3*x^2*z^2+z^7", 7, 6, {3, 0, 0}, {2, 0, 2}, {0, 2, 0}, false},
      {"x^3+y^2+3*x^2*z^2+z^7", 13, 6, {3, 0, 0}, {2, 0, 2}, {0, 2, 0}, false},
      {"x^3+y^2+3*x^2*z^2+z^7", 5, 4, {3, 0, 0}, {2, 0, 2}, {0, 2, 0}, false},
      {"x^3+x^2*y^2+x^2*z^2", 5, 4, {3, 0, 0}, {2, 0, 2}, {2, 2, 0}, false},
      {"x^3+x^2*y^2+x^2*z^2", 7, 6, {3, 0, 0}, {2, 0, 2}, {2, 2, 0}, false},
      {"x^3+x^2*y^2+x^2*z^2", 13, 6, {3, 0, 0}, {2, 0, 2}, {2, 2, 0}, false},
      {"x^3+y^2+z^2", 5, 2, {3, 0, 0}, {0, 0, 2}, {0, 2, 0}, true},
      {"x^3+y^2+z^2", 7, 2, {3, 0, 0}, {0, 0, 2}, {0, 2, 0}, true},
      {"x^3+y^2+z^2", 13, 6, {3, 0, 0}, {0, 0, 2}, {0, 2, 0}, true},
      {"x^3+y^2+z^2", 5, 4, {3, 0, 0}, {0, 0, 2}, {0, 2, 0}, true},
  };
  for (const auto& c : cases) {
    const IntPolynomial f = parse_polynomial(c.text, {"x", "y", "z"});
    const NewtonPolyhedron g = build_polyhedron(support(f), 3);
    const auto x = x2_faces(g, c.P, c.Q, c.R);
    rep.check("explicit_x2.shape").record(x.has_value(), [&] { return std::string(c.text); });
    if (!x) continue;
    for (const auto& chi : characters_of_order(c.p, c.d)) {
      Pick pk{f, chi, check_nondegenerate(f, g, c.p, FaceSet::All).nondegenerate};
      x2_instance(rep, c.order_two_shape ? "explicit_x2_order_two" : "explicit_x2", g, pk, *x, c.order_two_shape);
    }
  }
}

}  // namespace

SuiteReport cancel_suite(std::uint64_t seed, int count) {
  SuiteReport rep;
  rep.suite = "cancel-suite";
  rep.seed = seed;
  using Gen = bool (*)(SuiteReport&, std::mt19937_64&);
  const std::vector<std::pair<std::string, Gen>> gens = {
      {"unit_vertex", unit_vertex},
      {"axis_vertex", axis_vertex},
      {"unit_segment", unit_segment},
      {"coordinate_edge", coordinate_edge},
      {"edge_cone_split", edge_cone_split},
      {"recession_half_line", recession_half_line},
      {"facet_and_half_line", facet_and_half_line},
      {"b1_simplex", b1_simplex},
      {"b1_pair", b1_pair},
      {"b1_noncompact_pair", b1_noncompact_pair},
      {"b1_noncompact_compact_edge", b1_noncompact_compact_edge},
      {"b1_compact_noncompact", b1_compact_noncompact},
      {"b1_cluster", b1_cluster},
      {"x2_triangle", x2_triangle},
      {"x2_order_two", x2_order_two},
  };

  for (std::size_t k = 0; k < gens.size(); ++k) {
    std::mt19937_64 rng(seed * 1000003 + k);
    const auto& [name, gen] = gens[k];
    int made = 0;
    for (int attempt = 0; made < count && attempt < 20000; ++attempt)
      if (gen(rep, rng)) ++made;
    rep.check(name + ".generated").record(made >= count, [&, made = made] {
      return "only " + std::to_string(made) + " instances";
    });
  }
  explicit_x2(rep);
  return rep;
}

}  // namespace holozeta
