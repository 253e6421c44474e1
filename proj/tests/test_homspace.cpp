#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "modvol/catalog.hpp"
#include "modvol/checks.hpp"
#include "support.hpp"

using namespace modvol;
using namespace testing_support;

namespace {

HomogeneousSpaceSpec entry(const std::string& name) { return find_algebraic(name, 1)->space; }

// χ(X) = tr ad_X straight from structure constants.
Covector trace_character(const LieAlgebra& L) {
  Covector chi = zero_covector(L.dim());
  for (int i = 0; i < L.dim(); ++i)
    for (int j = 0; j < L.dim(); ++j) chi.c[i] += L.C(i, j, j);
  return chi;
}

// χ_h on the h basis via ad_Y restricted to h, solved column by column.
std::vector<Scalar> subalgebra_trace(const LieAlgebra& L, const Subalgebra& h) {
  std::vector<Row> span;
  for (const auto& b : h.basis) span.push_back(b.c);
  std::vector<Scalar> out;
  for (const auto& y : h.basis) {
    Scalar t = 0;
    for (int j = 0; j < h.dim(); ++j) t += (*coordinates_in_span(span, bracket(L, y, h.basis[j]).c))[j];
    out.push_back(t);
  }
  return out;
}

bool same_verdicts(const ClassificationRow& a, const ClassificationRow& b) {
  return a.coisotropic == b.coisotropic && a.type == b.type && a.chi_h0_zero == b.chi_h0_zero &&
         a.invariant_volume == b.invariant_volume && a.semi_invariant == b.semi_invariant && a.mu == b.mu;
}

}  // namespace

TEST_CASE("coisotropy and subgroup type") {
  CHECK(coisotropy_check(entry("subgroup-sphere")));
  CHECK(coisotropy_check(entry("coisotropic-sphere")));
  auto trivial = make_homogeneous_space("trivial", make_bialgebra(so3_algebra(), zero_cocommutator(3)),
                                        {basis_vector(3, 0)});
  CHECK(coisotropy_check(trivial));

  CHECK(subgroup_type(entry("subgroup-sphere")) == SubgroupType::poisson_lie_subgroup);
  CHECK(subgroup_type(entry("coisotropic-sphere")) == SubgroupType::coisotropic_only);
  CHECK(subgroup_type(entry("ads2-hyperbolic")) == SubgroupType::poisson_lie_subgroup);

  // Every line in so(3) is coisotropic for r = J1^J2; in the four-dimensional
  // example h = <X1 + X3> gives an annihilator that is not closed.
  auto skew = make_homogeneous_space("skew", semi_invariant_bialgebra(), {Vector{{1, 0, 1, 0}}});
  CHECK_FALSE(coisotropy_check(skew));
  CHECK(subgroup_type(skew) == SubgroupType::not_coisotropic);
  CHECK_THROWS_AS(chi_h0(skew), std::domain_error);
  CHECK_THROWS_AS(multiplicative_unimodularity_check(skew), std::domain_error);
}

TEST_CASE("modular character of the annihilator") {
  CHECK(chi_h0(entry("subgroup-sphere")).zero);
  CHECK_FALSE(chi_h0(entry("coisotropic-sphere")).zero);
  auto toda = chi_h0(entry("toda-n3"));
  // D1 + D2 = E11 - E33
  CHECK(toda.lift.c == std::vector<Scalar>{-2, -2, 0, 0, 0, 0, 0, 0});
  for (std::size_t i = 0; i < toda.h0_basis.size(); ++i)
    CHECK(pairing(toda.h0_basis[i], toda.lift) == toda.on_h0[i]);
}

TEST_CASE("invariant volumes") {
  auto plane = invariant_volume_exists(entry("invariant-plane"));
  CHECK(plane.exists);
  CHECK(plane.certificate.kind == VolumeCertificate::Kind::invariant);
  CHECK(plane.certificate.V0.degree() == 2);
  CHECK(!is_zero(plane.certificate.V0.coefficient({1, 2})));
  CHECK(ce_differential(invariant_plane_bialgebra().g, plane.certificate.V0).is_zero());

  CHECK_FALSE(invariant_volume_exists(entry("semi-invariant-3d")).exists);
  CHECK(invariant_volume_exists(entry("toda-n3")).exists);
}

TEST_CASE("semi-invariant solutions") {
  auto semi = semi_invariant_solutions(entry("semi-invariant-3d"));
  REQUIRE(semi.feasible);
  CHECK(semi.algebra_level_only);
  // X^4 lies in the affine solution set.
  std::vector<Row> span;
  for (const auto& h : semi.homogeneous) span.push_back(h.c);
  Covector diff = basis_covector(4, 3) - semi.particular;
  CHECK((is_zero(diff) || coordinates_in_span(span, diff.c).has_value()));

  auto borel = make_homogeneous_space("borel", sl2_bialgebra(Sl2Structure::hyperbolic, Sl2Basis::ladder, 1),
                                      {basis_vector(3, 0), basis_vector(3, 2)});
  CHECK_FALSE(semi_invariant_solutions(borel).feasible);

  auto sphere = semi_invariant_solutions(entry("subgroup-sphere"));
  CHECK(sphere.feasible);
  CHECK(is_zero(sphere.particular));
}

TEST_CASE("multiplicative unimodularity") {
  auto plane = multiplicative_unimodularity_check(entry("invariant-plane"));
  CHECK(plane.mu_status == MuStatus::multiplicative_unimodular);
  REQUIRE(plane.mu_witness_theta0);
  CHECK(*plane.mu_witness_theta0 == basis_covector(3, 2));
  CHECK(plane.condition_iii_assumes_simply_connected);

  CHECK(multiplicative_unimodularity_check(entry("subgroup-sphere")).mu_status == MuStatus::fails_condition_ii);
  CHECK(multiplicative_unimodularity_check(entry("coisotropic-sphere")).mu_status == MuStatus::fails_condition_i);

  auto full = multiplicative_unimodularity_check(entry("full-group"));
  CHECK(full.mu_status == MuStatus::multiplicative_unimodular);
  REQUIRE(full.mu_witness_theta0);
  CHECK(*full.mu_witness_theta0 == rat(1, 2) * modular_character(semi_invariant_bialgebra().g));
}

TEST_CASE("Lu cross-check") {
  CHECK(lu_xl_crosscheck(entry("subgroup-sphere")).ok);
  CHECK(lu_xl_crosscheck(entry("ads2-hyperbolic")).ok);
  auto trivial = make_homogeneous_space("trivial", make_bialgebra(so3_algebra(), zero_cocommutator(3)),
                                        {basis_vector(3, 2)});
  auto v = lu_xl_crosscheck(trivial);
  CHECK(v.ok);
  CHECK(all_zero(v.chi_l));
  CHECK(all_zero(v.rhs));
}

TEST_CASE("classification rows match the transcribed golden verdicts") {
  CHECK(classification_report({}).empty());
  for (Scalar eta : {Scalar(1), Scalar(2), rat(1, 3)})
    for (const auto& e : algebraic_catalog(eta)) {
      auto row = classify(e.space);
      INFO(e.name);
      CHECK(row.coisotropic == e.golden.coisotropic);
      CHECK(row.type == e.golden.type);
      CHECK(row.chi_h0_zero == e.golden.chi_h0_zero);
      CHECK(row.invariant_volume == e.golden.invariant_volume);
      CHECK(row.semi_invariant == e.golden.semi_invariant);
      CHECK(row.mu == e.golden.mu);
      if (e.golden.witness) CHECK(row.witness == e.golden.witness);
    }
}

TEST_CASE("catalog invariants") {
  for (const auto& e : algebraic_catalog(1)) {
    INFO(e.name);
    const auto& S = e.space;
    if (!coisotropy_check(S)) continue;
    auto rep = multiplicative_unimodularity_check(S);
    auto semi = semi_invariant_solutions(S);
    if (rep.mu_status == MuStatus::multiplicative_unimodular) {
      CHECK(rep.chi.zero);
      REQUIRE(rep.mu_witness_theta0);
      CHECK(mu_condition_holds(S, *rep.mu_witness_theta0));
      REQUIRE(semi.feasible);
      std::vector<Row> span;
      for (const auto& h : semi.homogeneous) span.push_back(h.c);
      Covector diff = *rep.mu_witness_theta0 - semi.particular;
      CHECK((is_zero(diff) || coordinates_in_span(span, diff.c).has_value()));
    }
    // invariant volume iff θ0 = 0 solves the restriction constraint
    CHECK(invariant_volume_exists(S).exists == all_zero(restriction_target(S)));
  }
}

TEST_CASE("volume identity holds exactly when the restriction identity does") {
  std::mt19937_64 rng(kSeed);
  auto catalog = algebraic_catalog(1);
  for (int t = 0; t < kInstances; ++t) {
    const auto& S = catalog[t % catalog.size()].space;
    const auto& L = S.bialgebra.g;
    auto ann = annihilator(L, S.h);
    auto V0 = top_wedge(ann, L.dim());
    Covector theta = random_covector(rng, L.dim());
    if (t % 2 == 0) {
      theta = theta0_from_V0(L, S.h, V0);
      for (const auto& a : ann) theta = theta + small_rational(rng) * a;
    }
    bool wedge_identity = ce_differential(L, V0) == -wedge(ExteriorElement::from_covector(theta), V0);
    auto lhs = restrict_covector(theta, S.h);
    auto chi_g = restrict_covector(trace_character(L), S.h);
    auto chi_h = subalgebra_trace(L, S.h);
    bool restriction_identity = true;
    for (std::size_t i = 0; i < lhs.size(); ++i) restriction_identity &= lhs[i] == chi_g[i] - chi_h[i];
    CHECK(wedge_identity == restriction_identity);
    if (t % 2 == 0) CHECK(wedge_identity);
  }
}

TEST_CASE("verdicts are invariant under change of basis") {
  std::mt19937_64 rng(kSeed + 1);
  auto catalog = algebraic_catalog(1);
  std::vector<CatalogEntry> small;
  for (const auto& e : catalog)
    if (e.space.bialgebra.g.dim() <= 4) small.push_back(e);
  std::vector<ClassificationRow> base;
  for (const auto& e : small) base.push_back(classify(e.space));
  for (int t = 0; t < kInstances; ++t) {
    std::size_t i = t % small.size();
    const auto& S = small[i].space;
    auto P = random_basis_change(S.bialgebra.g.dim(), rng);
    // Recombining h alone must also leave everything unchanged.
    std::vector<Vector> hb = S.h.basis;
    if (hb.size() == 1) hb[0] = rat(t % 5 + 1, 3) * hb[0];
    auto rebased = make_homogeneous_space(S.name, S.bialgebra, hb);
    INFO(small[i].name);
    CHECK(same_verdicts(classify(change_basis(S, P)), base[i]));
    CHECK(same_verdicts(classify(rebased), base[i]));
  }
  // The eight-dimensional entry once.
  auto toda = find_algebraic("toda-n3", 1)->space;
  auto P = random_basis_change(8, rng);
  CHECK(same_verdicts(classify(change_basis(toda, P)), classify(toda)));
}
