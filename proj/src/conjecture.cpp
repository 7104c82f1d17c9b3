#include "holozeta/conjecture.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "holozeta/error.hpp"
#include "holozeta/oracle.hpp"

namespace holozeta {

namespace {

// n-1 points with x_i = 0 and one with x_i = 1; returns i and the apex index.
std::optional<std::pair<int, int>> b1_shape(const std::vector<IVec>& pts, std::size_t n) {
  if (pts.size() != n) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i) {
    int zeros = 0, apex = -1, ones = 0;
    for (std::size_t v = 0; v < pts.size(); ++v) {
      if (pts[v][i] == 0) ++zeros;
      else if (pts[v][i] == 1) { ++ones; apex = static_cast<int>(v); }
    }
    if (zeros == static_cast<int>(n) - 1 && ones == 1) return std::make_pair(static_cast<int>(i), apex);
  }
  return std::nullopt;
}

struct X2Match {
  std::array<int, 3> order;  // indices into pts for p, q, r
  std::array<int, 3> axes;   // k, l, m
  std::int64_t a, x1, x2;
};

std::optional<X2Match> x2_shape(const std::vector<IVec>& pts) {
  if (pts.size() != 3 || pts[0].size() != 3) return std::nullopt;
  std::array<int, 3> ax{0, 1, 2};
  do {
    std::array<int, 3> ord{0, 1, 2};
    do {
      const IVec& P = pts[static_cast<std::size_t>(ord[0])];
      const IVec& Q = pts[static_cast<std::size_t>(ord[1])];
      const IVec& R = pts[static_cast<std::size_t>(ord[2])];
      const auto k = static_cast<std::size_t>(ax[0]), l = static_cast<std::size_t>(ax[1]),
                 m = static_cast<std::size_t>(ax[2]);
      if (P[k] > 0 && P[l] == 0 && P[m] == 0 && Q[l] == 0 && Q[m] == 2 && R[l] == 2 && R[m] == 0) {
        const std::int64_t a = P[k], x1 = Q[k], x2 = R[k];
        if ((a - x1) % 2 != 0 && (a - x2) % 2 != 0) return X2Match{ord, ax, a, x1, x2};
      }
    } while (std::next_permutation(ord.begin(), ord.end()));
  } while (std::next_permutation(ax.begin(), ax.end()));
  return std::nullopt;
}

// Smallest m with d | m and Phi(m) != 0.
std::int64_t divisible_order(const CycloFactorization& z, std::int64_t d) {
  for (const auto& [m, mult] : z.phi_form())
    if (mult != 0 && m % d == 0) return m;
  return 0;
}

}  // namespace

std::string to_string(FacetKind k) {
  switch (k) {
    case FacetKind::B1Simplex: return "B1_simplex";
    case FacetKind::B1Noncompact: return "B1_noncompact";
    case FacetKind::X2: return "X2";
    case FacetKind::Other: return "other";
  }
  return "other";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holomorphic: return "holomorphic";
    case Verdict::PoleExplained: return "pole_explained";
    case Verdict::Violation: return "VIOLATION";
  }
  return "VIOLATION";
}

FacetClass classify_facet(const NewtonPolyhedron& gamma, int facet_index) {
  const FacetData& fd = gamma.facets().at(static_cast<std::size_t>(facet_index));
  const Face& face = gamma.face(fd.face_id);
  const auto pts = gamma.face_vertices(fd.face_id);
  const std::size_t n = gamma.n();
  FacetClass c;
  c.facet_index = facet_index;

  if (face.compact) {
    if (auto b = b1_shape(pts, n)) {
      c.kind = FacetKind::B1Simplex;
      c.variable = b->first;
      c.apex_vertex = face.vertex_ids[static_cast<std::size_t>(b->second)];
      return c;
    }
    if (n == 3) {
      if (auto x = x2_shape(pts)) {
        c.kind = FacetKind::X2;
        for (int o : x->order) c.x2_vertices.push_back(face.vertex_ids[static_cast<std::size_t>(o)]);
        c.x2_params = {x->a, x->x1, x->x2};
        c.x2_axes = {x->axes.begin(), x->axes.end()};
      }
    }
    return c;
  }

  if (face.recession.size() != 1 || n < 2) return c;
  const std::size_t j = face.recession[0];
  // pi_j(tau) is the hull of the projected vertices; keep its extreme points.
  std::set<IVec> proj;
  for (const auto& v : pts) {
    IVec w;
    for (std::size_t t = 0; t < n; ++t)
      if (t != j) w.push_back(v[t]);
    proj.insert(w);
  }
  std::vector<IVec> ext;
  if (n == 3) {
    if (proj.size() < 2) return c;
    ext = {*proj.begin(), *proj.rbegin()};  // collinear: lexicographic ends
  } else {
    ext.assign(proj.begin(), proj.end());
  }
  if (auto b = b1_shape(ext, n - 1)) {
    c.kind = FacetKind::B1Noncompact;
    const auto i = static_cast<std::size_t>(b->first);
    c.variable = static_cast<int>(i < j ? i : i + 1);
    c.noncompact_variable = static_cast<int>(j);
    // the apex is the vertex of tau that projects to the distance-one end
    const IVec& target = ext[static_cast<std::size_t>(b->second)];
    std::int64_t best = -1;
    for (std::size_t v = 0; v < pts.size(); ++v) {
      IVec w;
      for (std::size_t t = 0; t < n; ++t)
        if (t != j) w.push_back(pts[v][t]);
      if (w == target && (best < 0 || pts[v][j] < best)) {
        best = pts[v][j];
        c.apex_vertex = face.vertex_ids[v];
      }
    }
  }
  return c;
}

std::vector<FacetClass> classify_facets(const NewtonPolyhedron& gamma) {
  std::vector<FacetClass> out;
  for (std::size_t i = 0; i < gamma.facets().size(); ++i) out.push_back(classify_facet(gamma, static_cast<int>(i)));
  return out;
}

std::vector<int> b1_variables(const NewtonPolyhedron& gamma, int facet_index) {
  const FacetData& fd = gamma.facets().at(static_cast<std::size_t>(facet_index));
  const Face& face = gamma.face(fd.face_id);
  const auto pts = gamma.face_vertices(fd.face_id);
  const std::size_t n = gamma.n();
  std::vector<int> out;
  auto test = [&](const std::vector<IVec>& q, std::size_t m, std::size_t skip) {
    if (q.size() != m) return;
    for (std::size_t i = 0; i < m; ++i) {
      int zeros = 0, ones = 0;
      for (const auto& v : q) {
        if (v[i] == 0) ++zeros;
        else if (v[i] == 1) ++ones;
      }
      if (zeros == static_cast<int>(m) - 1 && ones == 1)
        out.push_back(static_cast<int>(skip <= i && skip < n ? i + 1 : i));
    }
  };
  if (face.compact) {
    test(pts, n, n);
  } else if (face.recession.size() == 1 && n >= 3) {
    const std::size_t j = face.recession[0];
    std::set<IVec> proj;
    for (const auto& v : pts) {
      IVec w;
      for (std::size_t t = 0; t < n; ++t)
        if (t != j) w.push_back(v[t]);
      proj.insert(w);
    }
    if (n == 3 && proj.size() >= 2) test({*proj.begin(), *proj.rbegin()}, 2, j);
    else if (n > 3) test({proj.begin(), proj.end()}, n - 1, j);
  }
  return out;
}

std::vector<int> facets_with_ratio(const NewtonPolyhedron& gamma, const PoleFamily& family) {
  const PoleFamily r = reduced_ratio(family);
  std::vector<int> out;
  for (std::size_t i = 0; i < gamma.facets().size(); ++i) {
    const auto& fd = gamma.facets()[i];
    if (fd.N > 0 && reduced_ratio({fd.nu, fd.N}) == r) out.push_back(static_cast<int>(i));
  }
  return out;
}

FacetKind classify_simplex(const NewtonPolyhedron& gamma, const Simplex& simplex) {
  std::vector<IVec> pts;
  for (int v : simplex) pts.push_back(gamma.vertices().at(static_cast<std::size_t>(v)));
  if (b1_shape(pts, gamma.n())) return FacetKind::B1Simplex;
  if (gamma.n() == 3 && x2_shape(pts)) return FacetKind::X2;
  return FacetKind::Other;
}

std::vector<CandidatePole> candidate_poles(const NewtonPolyhedron& gamma, std::int64_t d) {
  if (d < 1) throw DomainError("character order must be positive");
  std::vector<CandidatePole> out;
  for (std::size_t i = 0; i < gamma.facets().size(); ++i) {
    const auto& fd = gamma.facets()[i];
    if (fd.N % d != 0) continue;
    CandidatePole c;
    c.facet_index = static_cast<int>(i);
    c.nu = fd.nu;
    c.N = fd.N;
    c.zero_N = fd.N == 0;
    c.cls = classify_facet(gamma, static_cast<int>(i));
    out.push_back(c);
  }
  return out;
}

RationalFunctionT group_sum(const NewtonPolyhedron& gamma, const FpPolynomial& fbar, const Character& chi,
                            const std::vector<ContributionTerm>& group) {
  RationalFunctionT total(chi.p(), chi.order());
  for (const auto& t : group) {
    if (!t.cone) {
      total = total + face_contribution(gamma, t.face_id, fbar, chi);
      continue;
    }
    const Cyclo L = L_tau(restrict_to_face(fbar, gamma, t.face_id), chi);
    if (L.is_zero()) continue;
    total = total + S_cone(*t.cone, gamma, chi.p(), chi.order()) * L;
  }
  return total;
}

bool cancellation_check(const NewtonPolyhedron& gamma, const FpPolynomial& fbar, const Character& chi,
                        const std::vector<ContributionTerm>& group) {
  return reduce_rational(group_sum(gamma, fbar, chi, group)).is_zero();
}

HolomorphyReport holomorphy_report(const IntPolynomial& f, std::int64_t p, std::int64_t d, std::int64_t k) {
  const Character chi(p, d, k);
  if (f.is_zero()) throw DomainError("zero polynomial");
  HolomorphyReport rep;
  rep.f = f;
  rep.p = p;
  rep.d = d;
  rep.k = chi.index();
  const NewtonPolyhedron gamma = build_polyhedron(support(f), f.n());
  rep.nondegenerate_compact = check_nondegenerate(f, gamma, p, FaceSet::Compact).nondegenerate;
  if (!rep.nondegenerate_compact)
    throw DomainError("polynomial is degenerate mod " + std::to_string(p) + " for a compact face");
  rep.nondegenerate_all = check_nondegenerate(f, gamma, p, FaceSet::All).nondegenerate;
  rep.candidates = candidate_poles(gamma, d);
  rep.zeta = zeta_report(f, chi, IgusaOptions{true});
  if (!rep.nondegenerate_all) {
    rep.zeta.global.reset();
    rep.zeta.global_poles.clear();
  }
  rep.zeta.trusted = true;

  rep.origin = varchenko_zeta(gamma);
  for (std::size_t j = 0; j < f.n(); ++j) {
    AxisEigenvalues ax;
    ax.axis = j;
    if (f.n() >= 2) {
      try {
        ax.zeta = generic_axis_zeta(gamma, j);
        ax.available = true;
      } catch (const DomainError&) {
        ax.available = false;
      }
    }
    rep.axes.push_back(ax);
  }

  if (rep.zeta.local_poles.empty() && rep.zeta.global_poles.empty()) {
    rep.verdict = Verdict::Holomorphic;
    return rep;
  }
  if (std::int64_t m = divisible_order(rep.origin, d)) {
    rep.verdict = Verdict::PoleExplained;
    rep.witness_order = m;
    rep.witness_location = "origin";
    return rep;
  }
  for (const auto& ax : rep.axes) {
    if (!ax.available) continue;
    if (std::int64_t m = divisible_order(ax.zeta, d)) {
      rep.verdict = Verdict::PoleExplained;
      rep.witness_order = m;
      rep.witness_location = "axis " + std::to_string(ax.axis);
      return rep;
    }
  }
  rep.verdict = Verdict::Violation;
  return rep;
}

}  // namespace holozeta
