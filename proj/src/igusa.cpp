#include "holozeta/igusa.hpp"

#include <algorithm>
#include <set>

#include "holozeta/error.hpp"
#include "holozeta/lattice.hpp"
#include "holozeta/oracle.hpp"

namespace holozeta {

namespace {

mpz_class pow_q(std::int64_t q, std::int64_t e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(e));
  return r;
}

// One relatively open simplicial cone:
//   sum_h q^{-nu(h)} T^{N(h)} prod_i q^{nu_i} / (q^{nu_i} - T^{N_i}),
// h over the lattice points with every l_i in (0, 1].
RationalFunctionT simplicial_term(const SimplicialCone& cone, const NewtonPolyhedron& gamma, std::int64_t q,
                                  std::int64_t d) {
  RationalFunctionT::FactorMap factors;
  std::int64_t nu_total = 0;
  mpq_class constant = 1;
  for (const auto& a : cone.generators) {
    const std::int64_t nu = coord_sum(a);
    const std::int64_t N = gamma.lattice_value(a);
    nu_total += nu;
    if (N > 0) {
      ++factors[{nu, N}];
    } else {
      constant /= mpq_class(pow_q(q, nu) - 1);
    }
  }
  std::vector<Cyclo> num;
  for (const auto& h : fundamental_points(cone)) {
    const std::int64_t nu_h = coord_sum(h);
    const std::int64_t N_h = gamma.lattice_value(h);
    if (num.size() <= static_cast<std::size_t>(N_h)) num.resize(static_cast<std::size_t>(N_h) + 1);
    mpq_class c = constant;
    if (nu_total >= nu_h) c *= mpq_class(pow_q(q, nu_total - nu_h));
    else c /= mpq_class(pow_q(q, nu_h - nu_total));
    num[static_cast<std::size_t>(N_h)] += Cyclo(c);
  }
  return RationalFunctionT(q, d, TPoly(std::move(num)), factors);
}

void require_usable(const IntPolynomial& f, const Character& chi, const NewtonPolyhedron& gamma, FaceSet which,
                    bool force) {
  const FpPolynomial fbar = reduce_mod_p(f, chi.p());
  if (fbar.is_zero()) throw DomainError("polynomial vanishes identically mod " + std::to_string(chi.p()));
  if (force) return;
  const auto nd = check_nondegenerate(f, gamma, chi.p(), which);
  if (!nd.nondegenerate) {
    std::string w;
    for (auto x : nd.witness) w += (w.empty() ? "" : ",") + std::to_string(x);
    throw DomainError("polynomial is degenerate mod " + std::to_string(chi.p()) + " on face " +
                      std::to_string(nd.face_id) + " at (" + w + ")");
  }
}

RationalFunctionT assemble(const IntPolynomial& f, const Character& chi, const NewtonPolyhedron& gamma,
                           bool compact_only) {
  const FpPolynomial fbar = reduce_mod_p(f, chi.p());
  RationalFunctionT total(chi.p(), chi.order());
  for (const auto& face : gamma.faces()) {
    if (compact_only && !face.compact) continue;
    total = total + face_contribution(gamma, face.id, fbar, chi);
  }
  return total;
}

}  // namespace

RationalFunctionT S_cone(const std::vector<IVec>& generators, const NewtonPolyhedron& gamma, std::int64_t q,
                         std::int64_t d) {
  RationalFunctionT total(q, d);
  for (const auto& cone : subdivide_cone(generators)) total = total + simplicial_term(cone, gamma, q, d);
  return total;
}

RationalFunctionT face_contribution(const NewtonPolyhedron& gamma, int face_id, const FpPolynomial& fbar,
                                    const Character& chi) {
  const Cyclo L = L_tau(restrict_to_face(fbar, gamma, face_id), chi);
  if (L.is_zero()) return RationalFunctionT(chi.p(), chi.order());
  if (face_id == gamma.whole_face_id()) return RationalFunctionT::constant(chi.p(), chi.order(), L);
  return S_cone(dual_cone(gamma, face_id), gamma, chi.p(), chi.order()) * L;
}

RationalFunctionT igusa_local(const IntPolynomial& f, const Character& chi, IgusaOptions opt) {
  if (f.is_zero()) throw DomainError("zero polynomial");
  const NewtonPolyhedron gamma = build_polyhedron(support(f), f.n());
  require_usable(f, chi, gamma, FaceSet::Compact, opt.force);
  return assemble(f, chi, gamma, true);
}

RationalFunctionT igusa_global(const IntPolynomial& f, const Character& chi, IgusaOptions opt) {
  if (f.is_zero()) throw DomainError("zero polynomial");
  const NewtonPolyhedron gamma = build_polyhedron(support(f), f.n());
  require_usable(f, chi, gamma, FaceSet::All, opt.force);
  return assemble(f, chi, gamma, false);
}

std::vector<PoleFamily> facet_families(const NewtonPolyhedron& gamma) {
  std::set<PoleFamily> s;
  for (const auto& fd : gamma.facets())
    if (fd.N > 0) s.insert({fd.nu, fd.N});
  return {s.begin(), s.end()};
}

std::vector<PoleFamily> candidate_families(const NewtonPolyhedron& gamma, std::int64_t d) {
  std::vector<PoleFamily> out;
  for (const auto& fam : facet_families(gamma))
    if (fam.second % d == 0) out.push_back(fam);
  return out;
}

ZetaReport zeta_report(const IntPolynomial& f, const Character& chi, IgusaOptions opt) {
  if (f.is_zero()) throw DomainError("zero polynomial");
  const NewtonPolyhedron gamma = build_polyhedron(support(f), f.n());
  ZetaReport rep;
  rep.trusted = !opt.force;
  require_usable(f, chi, gamma, FaceSet::Compact, opt.force);
  const auto families = facet_families(gamma);
  rep.candidates = candidate_families(gamma, chi.order());
  rep.local = reduce_rational(assemble(f, chi, gamma, true));
  rep.local_poles = actual_pole_lines(rep.local, families);
  bool global_ok = opt.force || check_nondegenerate(f, gamma, chi.p(), FaceSet::All).nondegenerate;
  if (global_ok) {
    rep.global = reduce_rational(assemble(f, chi, gamma, false));
    rep.global_poles = actual_pole_lines(*rep.global, families);
  }
  return rep;
}

}  // namespace holozeta
