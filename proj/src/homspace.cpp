#include "modvol/homspace.hpp"

#include <stdexcept>

namespace modvol {

HomogeneousSpaceSpec make_homogeneous_space(std::string name, LieBialgebra B, std::vector<Vector> h_basis) {
  Subalgebra h = make_subalgebra(B.g, std::move(h_basis));
  return HomogeneousSpaceSpec{std::move(name), std::move(B), std::move(h)};
}

namespace {

std::vector<Vector> as_vectors(const std::vector<Covector>& xs) {
  std::vector<Vector> out;
  for (const auto& x : xs) out.push_back(Vector{x.c});
  return out;
}

}  // namespace

bool coisotropy_check(const HomogeneousSpaceSpec& S) {
  auto h0 = annihilator(S.bialgebra.g, S.h);
  return is_subalgebra(S.bialgebra.dual, as_vectors(h0));
}

std::string to_string(SubgroupType t) {
  switch (t) {
    case SubgroupType::poisson_lie_subgroup: return "poisson_lie_subgroup";
    case SubgroupType::coisotropic_only: return "coisotropic_only";
    case SubgroupType::not_coisotropic: return "not_coisotropic";
  }
  return "?";
}

SubgroupType subgroup_type(const HomogeneousSpaceSpec& S) {
  if (!coisotropy_check(S)) return SubgroupType::not_coisotropic;
  auto h0 = annihilator(S.bialgebra.g, S.h);
  if (is_ideal(S.bialgebra.dual, as_vectors(h0))) return SubgroupType::poisson_lie_subgroup;
  return SubgroupType::coisotropic_only;
}

ChiH0 chi_h0(const HomogeneousSpaceSpec& S) {
  const LieAlgebra& g = S.bialgebra.g;
  int m = g.dim();
  ChiH0 out;
  out.h0_basis = annihilator(g, S.h);
  auto vecs = as_vectors(out.h0_basis);
  if (!is_subalgebra(S.bialgebra.dual, vecs))
    throw std::domain_error("χ_{h⁰} undefined: h⁰ is not a subalgebra of g* (not coisotropic)");
  if (!vecs.empty()) out.on_h0 = modular_character(induced_algebra(S.bialgebra.dual, vecs)).c;
  out.zero = all_zero(out.on_h0);
  Matrix A;
  for (const auto& xi : out.h0_basis) A.push_back(xi.c);
  auto lift = min_support_solution(A, out.on_h0, m);
  if (!lift) throw std::logic_error("chi_h0: pairing system infeasible");
  out.lift = Vector{*lift};
  return out;
}

std::string to_string(VolumeCertificate::Kind k) {
  switch (k) {
    case VolumeCertificate::Kind::invariant: return "invariant";
    case VolumeCertificate::Kind::semi_invariant_algebra_level: return "semi_invariant_algebra_level";
    case VolumeCertificate::Kind::none: return "none";
  }
  return "?";
}

std::vector<Scalar> restriction_target(const HomogeneousSpaceSpec& S) {
  auto chig = restrict_covector(modular_character(S.bialgebra.g), S.h);
  auto chih = subalgebra_modular_character(S.bialgebra.g, S.h);
  for (std::size_t a = 0; a < chig.size(); ++a) chig[a] -= chih[a];
  return chig;
}

InvariantVolumeResult invariant_volume_exists(const HomogeneousSpaceSpec& S) {
  const LieAlgebra& g = S.bialgebra.g;
  InvariantVolumeResult out;
  out.certificate.V0 = top_wedge(annihilator(g, S.h), g.dim());
  out.exists = all_zero(restriction_target(S));
  if (out.exists) {
    if (!ce_differential(g, out.certificate.V0).is_zero())
      throw std::logic_error("invariant_volume_exists: d V0 != 0 although χg|h = χh");
    out.certificate.kind = VolumeCertificate::Kind::invariant;
    out.certificate.theta0 = zero_covector(g.dim());
  }
  return out;
}

namespace {

void add_closed_rows(const LieAlgebra& g, Matrix& A, Row& b) {
  int m = g.dim();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      A.push_back(g.basis_bracket(i, j));
      b.push_back(0);
    }
}

void add_restriction_rows(const HomogeneousSpaceSpec& S, Matrix& A, Row& b) {
  auto target = restriction_target(S);
  for (std::size_t a = 0; a < S.h.basis.size(); ++a) {
    A.push_back(S.h.basis[a].c);
    b.push_back(target[a]);
  }
}

bool satisfies_system(const LinearSystem& s, const Covector& x) { return satisfies(s.A, x.c, s.b); }

}  // namespace

SemiInvariantSolutions semi_invariant_solutions(const HomogeneousSpaceSpec& S) {
  const LieAlgebra& g = S.bialgebra.g;
  int m = g.dim();
  LinearSystem sys;
  sys.cols = m;
  add_closed_rows(g, sys.A, sys.b);
  add_restriction_rows(S, sys.A, sys.b);
  SemiInvariantSolutions out;
  auto sol = solve_affine(sys.A, sys.b, m);
  if (!sol.feasible) return out;
  out.feasible = true;
  for (auto& v : sol.homogeneous) out.homogeneous.push_back(Covector{v});
  Covector chig = modular_character(g);
  if (satisfies_system(sys, chig)) {
    out.particular = chig;
  } else {
    out.particular = Covector{*min_support_solution(sys.A, sys.b, m)};
  }
  return out;
}

std::string to_string(MuStatus s) {
  switch (s) {
    case MuStatus::multiplicative_unimodular: return "multiplicative_unimodular";
    case MuStatus::fails_condition_i: return "fails_condition_i";
    case MuStatus::fails_condition_ii: return "fails_condition_ii";
  }
  return "?";
}

LinearSystem mu_condition_system(const HomogeneousSpaceSpec& S) {
  const LieBialgebra& B = S.bialgebra;
  int m = B.g.dim();
  LinearSystem sys;
  sys.cols = m;
  add_closed_rows(B.g, sys.A, sys.b);
  add_restriction_rows(S, sys.A, sys.b);
  Covector chig = modular_character(B.g);
  Vector chidual = dual_modular_character(B);
  for (int i = 0; i < m; ++i) {
    const ExteriorElement& d = B.delta.images[i];
    // i(θ0) δ(X_i) = Σ_k θ_k i(e^k) δ(X_i)
    std::vector<Vector> cols;
    for (int k = 0; k < m; ++k) {
      ExteriorElement c = interior(basis_covector(m, k), d);
      Vector v = zero_vector(m);
      for (const auto& [mask, coef] : c.terms()) v.c[mask_indices(mask)[0]] = coef;
      cols.push_back(v);
    }
    Vector lhs_const = bracket(B.g, basis_vector(m, i), chidual);
    ExteriorElement ichi = interior(chig, d);
    for (const auto& [mask, coef] : ichi.terms()) lhs_const.c[mask_indices(mask)[0]] -= coef;
    for (int p = 0; p < m; ++p) {
      Row r(m);
      for (int k = 0; k < m; ++k) r[k] = cols[k].c[p];
      sys.A.push_back(r);
      sys.b.push_back(-lhs_const.c[p] / 2);
    }
  }
  return sys;
}

bool mu_condition_holds(const HomogeneousSpaceSpec& S, const Covector& theta0) {
  return satisfies_system(mu_condition_system(S), theta0);
}

UnimodularityReport multiplicative_unimodularity_check(const HomogeneousSpaceSpec& S) {
  UnimodularityReport rep;
  rep.chi = chi_h0(S);
  rep.h0_unimodular = rep.chi.zero;
  int m = S.bialgebra.g.dim();
  LinearSystem sys = mu_condition_system(S);
  auto sol = solve_affine(sys.A, sys.b, m);
  rep.cocycle_solution_space_dim = sol.feasible ? static_cast<int>(sol.homogeneous.size()) : -1;

  std::optional<Covector> witness;
  if (sol.feasible) {
    Covector chig = modular_character(S.bialgebra.g);
    Covector candidate = S.h.basis.empty() ? Scalar(1, 2) * chig : chig;
    if (satisfies_system(sys, candidate))
      witness = candidate;
    else
      witness = Covector{*min_support_solution(sys.A, sys.b, m)};
  }
  if (!rep.h0_unimodular) {
    rep.mu_status = MuStatus::fails_condition_i;
  } else if (!witness) {
    rep.mu_status = MuStatus::fails_condition_ii;
  } else {
    rep.mu_status = MuStatus::multiplicative_unimodular;
    rep.mu_witness_theta0 = witness;
    // Re-verify: the wedge form of the first constraint and the cocycle part.
    ExteriorElement V0 = top_wedge(rep.chi.h0_basis, m);
    ExteriorElement lhs = ce_differential(S.bialgebra.g, V0) + wedge(ExteriorElement::from_covector(*witness), V0);
    if (!lhs.is_zero() || !mu_condition_holds(S, *witness))
      throw std::logic_error("multiplicative_unimodularity_check: witness failed re-verification");
  }
  return rep;
}

LuVerdict lu_xl_crosscheck(const HomogeneousSpaceSpec& S) {
  const LieBialgebra& B = S.bialgebra;
  int m = B.g.dim();
  ChiH0 chi = chi_h0(S);
  std::vector<DoubleElement> lbasis;
  for (const auto& x : S.h.basis) lbasis.push_back(DoubleElement{x, zero_covector(m)});
  for (const auto& xi : chi.h0_basis) lbasis.push_back(DoubleElement{zero_vector(m), xi});
  std::vector<Row> flat;
  for (const auto& e : lbasis) {
    Row r = e.x.c;
    r.insert(r.end(), e.xi.c.begin(), e.xi.c.end());
    flat.push_back(r);
  }
  Vector chidual = dual_modular_character(B);
  LuVerdict out;
  out.ok = true;
  for (std::size_t a = 0; a < chi.h0_basis.size(); ++a) {
    DoubleElement xi{zero_vector(m), chi.h0_basis[a]};
    Scalar tr = 0;
    for (std::size_t b = 0; b < lbasis.size(); ++b) {
      DoubleElement img = double_bracket(B, xi, lbasis[b]);
      Row r = img.x.c;
      r.insert(r.end(), img.xi.c.begin(), img.xi.c.end());
      auto coords = coordinates_in_span(flat, r);
      if (!coords) throw std::logic_error("lu_xl_crosscheck: h ⊕ h⁰ is not closed in the double");
      tr += (*coords)[b];
    }
    Scalar rhs = pairing(chi.h0_basis[a], Scalar(-1) * chidual + Scalar(2) * chi.lift);
    out.chi_l.push_back(tr);
    out.rhs.push_back(rhs);
    if (tr != rhs) out.ok = false;
  }
  return out;
}

ClassificationRow classify(const HomogeneousSpaceSpec& S) {
  ClassificationRow row;
  row.name = S.name;
  row.type = subgroup_type(S);
  row.coisotropic = row.type != SubgroupType::not_coisotropic;
  row.invariant_volume = invariant_volume_exists(S).exists;
  row.semi_invariant = semi_invariant_solutions(S).feasible;
  if (row.coisotropic) {
    auto rep = multiplicative_unimodularity_check(S);
    row.chi_h0_zero = rep.chi.zero;
    row.mu = rep.mu_status;
    row.witness = rep.mu_witness_theta0;
  }
  return row;
}

std::vector<ClassificationRow> classification_report(const std::vector<HomogeneousSpaceSpec>& specs) {
  std::vector<ClassificationRow> rows;
  for (const auto& s : specs) rows.push_back(classify(s));
  return rows;
}

namespace {

// e_a -> Σ_k Q[k][a] e'_k on Λ^k g.
ExteriorElement transform_primal(const ExteriorElement& w, const Matrix& Q) {
  int m = w.dim();
  ExteriorElement out(m, Space::primal, w.degree());
  for (const auto& [mask, c] : w.terms()) {
    ExteriorElement piece = ExteriorElement::scalar(m, Space::primal, c);
    for (int a : mask_indices(mask)) {
      Vector v = zero_vector(m);
      for (int k = 0; k < m; ++k) v.c[k] = Q[k][a];
      piece = wedge(piece, ExteriorElement::from_vector(v));
    }
    out = out + piece;
  }
  return out;
}

Vector mat_apply(const Matrix& Q, const Vector& v) {
  Vector out = zero_vector(static_cast<int>(v.c.size()));
  for (std::size_t k = 0; k < v.c.size(); ++k)
    for (std::size_t a = 0; a < v.c.size(); ++a) out.c[k] += Q[k][a] * v.c[a];
  return out;
}

}  // namespace

HomogeneousSpaceSpec change_basis(const HomogeneousSpaceSpec& S, const Matrix& P) {
  const LieBialgebra& B = S.bialgebra;
  int m = B.g.dim();
  auto Pinv = inverse(P);
  if (!Pinv) throw std::invalid_argument("change_basis: singular matrix");
  LieAlgebra g2 = change_basis(B.g, P);
  CocommutatorMap d2;
  for (int i = 0; i < m; ++i) {
    ExteriorElement img(m, Space::primal, 2);
    for (int j = 0; j < m; ++j)
      if (!is_zero(P[j][i])) img = img + P[j][i] * B.delta.images[j];
    d2.images.push_back(transform_primal(img, *Pinv));
  }
  std::vector<Vector> hb;
  for (const auto& v : S.h.basis) hb.push_back(mat_apply(*Pinv, v));
  return make_homogeneous_space(S.name, make_bialgebra(std::move(g2), std::move(d2)), std::move(hb));
}

}  // namespace modvol
