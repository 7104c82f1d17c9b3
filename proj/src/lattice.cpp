#include "holozeta/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "holozeta/error.hpp"

namespace holozeta {

mpz_class multiplicity(const std::vector<IVec>& vectors) {
  if (vectors.empty()) return 1;
  mpz_class g = maximal_minor_gcd(vectors);
  if (g == 0) throw DomainError("multiplicity of linearly dependent vectors");
  return g;
}

VFaceEquation lattice_distance_vface(const NewtonPolyhedron& gamma, int face_id) {
  const Face& f = gamma.face(face_id);
  if (!f.v_face_index_set) throw DomainError("face is not a V-face");
  const auto& I = *f.v_face_index_set;
  std::vector<IVec> rows;
  for (int v : f.vertex_ids) {
    IVec r;
    for (auto i : I) r.push_back(gamma.vertices()[v][i]);
    r.push_back(-1);
    rows.push_back(r);
  }
  auto ker = integer_kernel(rows, I.size() + 1);
  if (ker.size() != 1) throw DomainError("affine span is not a hyperplane of L_I");
  IVec a = ker.front();
  if (a.back() < 0) a = scale(a, -1);
  VFaceEquation eq;
  eq.N = a.back();
  if (eq.N <= 0) throw DomainError("V-face hyperplane passes through the origin");
  IVec coeffs(I.begin(), I.end());
  IVec ai(a.begin(), a.end() - 1);
  const std::int64_t g = gcd_of(ai);
  eq.N /= g;
  eq.coefficients.assign(gamma.n(), 0);
  for (std::size_t t = 0; t < I.size(); ++t) eq.coefficients[I[t]] = ai[t] / g;
  return eq;
}

std::int64_t simplex_normalized_volume(const std::vector<IVec>& vertices) {
  if (vertices.size() <= 1) return 1;
  std::vector<IVec> diffs;
  for (std::size_t i = 1; i < vertices.size(); ++i) diffs.push_back(sub(vertices[i], vertices[0]));
  mpz_class g = maximal_minor_gcd(diffs);
  if (g == 0) throw DomainError("degenerate simplex");
  return to_int64(g);
}

std::int64_t normalized_volume(const NewtonPolyhedron& gamma, int face_id) {
  const Face& f = gamma.face(face_id);
  if (!f.compact) throw DomainError("normalized volume of a non-compact face");
  if (f.dim == 0) return 1;
  std::int64_t total = 0;
  for (const auto& s : triangulate_face(gamma, face_id, canonical_vertex_priority(gamma))) {
    std::vector<IVec> pts;
    for (int v : s) pts.push_back(gamma.vertices()[v]);
    total += simplex_normalized_volume(pts);
  }
  return total;
}

NVResult v_simplex_data(const NewtonPolyhedron& gamma, int face_id) {
  const Face& f = gamma.face(face_id);
  if (!f.v_face_index_set || static_cast<int>(f.vertex_ids.size()) != f.dim + 1)
    throw DomainError("face is not a V-simplex");
  NVResult r;
  r.face_id = face_id;
  r.normalized_volume = normalized_volume(gamma, face_id);
  r.N = lattice_distance_vface(gamma, face_id).N;
  r.multiplicity = to_int64(multiplicity(gamma.face_vertices(face_id)));
  return r;
}

int face_join(const NewtonPolyhedron& gamma, int a, int b) {
  std::vector<int> u;
  const auto& va = gamma.face(a).vertex_ids;
  const auto& vb = gamma.face(b).vertex_ids;
  std::set_union(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(u));
  auto id = gamma.find_compact_face(u);
  if (!id) throw DomainError("faces do not span a face of the polyhedron");
  return *id;
}

namespace {

// Basis of the span, chosen among the generators.
std::vector<IVec> span_basis(const std::vector<IVec>& gens) {
  std::vector<IVec> basis;
  for (const auto& g : gens) {
    auto trial = basis;
    trial.push_back(g);
    if (rank(trial) > static_cast<int>(basis.size())) basis = std::move(trial);
  }
  return basis;
}

std::vector<std::vector<int>> facets_of_subset(const std::vector<IVec>& all, const std::vector<int>& subset) {
  std::vector<IVec> gens;
  for (int i : subset) gens.push_back(all[i]);
  const auto basis = span_basis(gens);
  const std::size_t r = basis.size();
  std::set<std::vector<int>> out;
  if (r <= 1) {
    // a ray has the apex {0} as its only facet
    return {std::vector<int>{}};
  }
  std::vector<int> idx(r - 1);
  const std::size_t k = subset.size();
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::vector<IVec> chosen;
    for (int i : idx) chosen.push_back(gens[i]);
    if (rank(chosen) == static_cast<int>(r) - 1) {
      std::vector<IVec> rows;
      for (const auto& c : chosen) {
        IVec row;
        for (const auto& b : basis) row.push_back(dot(b, c));
        rows.push_back(row);
      }
      auto ker = integer_kernel(rows, r);
      if (ker.size() == 1) {
        IVec w(gens.front().size(), 0);
        for (std::size_t i = 0; i < r; ++i) w = add(w, scale(basis[i], ker[0][i]));
        bool pos = false, neg = false;
        std::vector<int> on;
        for (std::size_t t = 0; t < k; ++t) {
          auto v = dot(w, gens[t]);
          pos |= v > 0;
          neg |= v < 0;
          if (v == 0) on.push_back(subset[t]);
        }
        if (!(pos && neg)) out.insert(on);
      }
    }
    std::size_t i = r - 1;
    while (i > 0 && static_cast<std::size_t>(idx[i - 1]) == k - (r - 1) + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < r - 1; ++j) idx[j] = idx[j - 1] + 1;
  }
  return {out.begin(), out.end()};
}

void pull_cone(const std::vector<IVec>& all, const std::vector<int>& subset, std::vector<std::vector<int>>& out) {
  std::vector<IVec> gens;
  for (int i : subset) gens.push_back(all[i]);
  const int r = rank(gens);
  if (static_cast<int>(subset.size()) == r) {
    out.push_back(subset);
    return;
  }
  const int apex = subset.front();
  for (const auto& facet : facets_of_subset(all, subset)) {
    if (std::find(facet.begin(), facet.end(), apex) != facet.end()) continue;
    std::vector<std::vector<int>> part;
    pull_cone(all, facet, part);
    for (auto& s : part) {
      s.insert(s.begin(), apex);
      std::sort(s.begin(), s.end());
      out.push_back(std::move(s));
    }
  }
}

}  // namespace

std::vector<std::vector<int>> cone_facets(const std::vector<IVec>& generators) {
  std::vector<int> all(generators.size());
  std::iota(all.begin(), all.end(), 0);
  return facets_of_subset(generators, all);
}

std::vector<SimplicialCone> subdivide_cone(const std::vector<IVec>& input) {
  if (input.empty()) throw DomainError("cone without generators");
  std::set<IVec> uniq;
  for (const auto& g : input) {
    if (is_zero(g)) throw DomainError("zero cone generator");
    uniq.insert(make_primitive(g));
  }
  std::vector<IVec> gens(uniq.begin(), uniq.end());
  const int r = rank(gens);
  if (r == static_cast<int>(gens.size())) return {SimplicialCone{gens, std::vector<bool>(gens.size(), true)}};

  const auto facets = cone_facets(gens);
  {
    // pointed iff the facet normals span the whole span, i.e. the facets
    // cut out the apex alone
    std::set<int> in_some_facet;
    bool pointed = !facets.empty();
    if (pointed) {
      std::vector<IVec> apex_rays;
      // the apex is the intersection of all facets: no generator lies on all of them
      for (std::size_t i = 0; i < gens.size(); ++i) {
        bool on_all = true;
        for (const auto& f : facets)
          if (std::find(f.begin(), f.end(), static_cast<int>(i)) == f.end()) { on_all = false; break; }
        if (on_all) pointed = false;
      }
    }
    if (!pointed || r <= 1) throw DomainError("cone is not pointed");
  }

  std::vector<int> all(gens.size());
  std::iota(all.begin(), all.end(), 0);
  std::vector<std::vector<int>> maximal;
  pull_cone(gens, all, maximal);

  std::set<std::vector<int>> pieces;
  for (const auto& s : maximal) {
    const std::size_t m = s.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
      std::vector<int> sub;
      for (std::size_t i = 0; i < m; ++i)
        if (mask & (std::size_t{1} << i)) sub.push_back(s[i]);
      pieces.insert(sub);
    }
  }
  std::vector<SimplicialCone> out;
  for (const auto& piece : pieces) {
    bool boundary = false;
    for (const auto& f : facets) {
      if (std::includes(f.begin(), f.end(), piece.begin(), piece.end())) {
        boundary = true;
        break;
      }
    }
    if (boundary) continue;
    SimplicialCone c;
    for (int i : piece) c.generators.push_back(gens[i]);
    c.open.assign(piece.size(), true);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<IVec> fundamental_points(const SimplicialCone& cone) {
  const auto& gens = cone.generators;
  const std::size_t r = gens.size();
  if (r == 0) return {IVec{}};
  const std::size_t n = gens.front().size();
  const mpz_class mult = multiplicity(gens);

  // Coordinate projection that is injective on the span, with the smallest
  // determinant; lattice points of the parallelepiped project into a set of
  // coset representatives of Z^r modulo the projected generators.
  std::vector<std::size_t> best_cols;
  mpz_class best_det = 0;
  {
    std::vector<std::size_t> cols(r);
    std::iota(cols.begin(), cols.end(), 0);
    while (true) {
      std::vector<IVec> sq(r, IVec(r));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) sq[i][j] = gens[i][cols[j]];
      mpz_class d = abs(determinant(sq));
      if (d != 0 && (best_det == 0 || d < best_det)) {
        best_det = d;
        best_cols = cols;
      }
      std::size_t i = r;
      while (i > 0 && cols[i - 1] == n - r + (i - 1)) --i;
      if (i == 0) break;
      ++cols[i - 1];
      for (std::size_t j = i; j < r; ++j) cols[j] = cols[j - 1] + 1;
    }
  }
  std::vector<IVec> proj(r, IVec(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) proj[i][j] = gens[i][best_cols[j]];

  auto lambdas = [&](const IVec& y) {
    auto l = coordinates_in(proj, y);
    return *l;  // proj is invertible
  };
  auto reduce = [&](const IVec& y) {
    auto l = lambdas(y);
    IVec out = y;
    for (std::size_t i = 0; i < r; ++i) {
      std::int64_t shift = floor_q(l[i]);
      if (cone.open[i]) {
        // want l - shift in (0, 1]
        if (l[i] == mpq_class(shift)) shift -= 1;
      }
      if (shift != 0) out = sub(out, scale(proj[i], shift));
    }
    return out;
  };

  std::set<IVec> seen;
  std::vector<IVec> frontier{reduce(IVec(r, 0))};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    IVec y = frontier.back();
    frontier.pop_back();
    for (std::size_t j = 0; j < r; ++j) {
      IVec z = y;
      z[j] += 1;
      z = reduce(z);
      if (seen.insert(z).second) frontier.push_back(z);
    }
  }

  std::vector<IVec> out;
  for (const auto& y : seen) {
    auto l = lambdas(y);
    IVec h(n, 0);
    bool integral = true;
    for (std::size_t c = 0; c < n && integral; ++c) {
      mpq_class s = 0;
      for (std::size_t i = 0; i < r; ++i) s += l[i] * static_cast<long>(gens[i][c]);
      if (s.get_den() != 1) integral = false;
      else h[c] = to_int64(s.get_num());
    }
    if (integral) out.push_back(h);
  }
  if (mpz_class(static_cast<long>(out.size())) != mult)
    throw DomainError("internal: fundamental point count differs from the multiplicity");
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace holozeta
