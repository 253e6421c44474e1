#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>

#include "modvol/catalog.hpp"
#include "support.hpp"

using namespace modvol;
using namespace testing_support;

namespace {

ExteriorElement biv(int dim, int i, int j, const Scalar& c = 1) {
  return ExteriorElement::monomial(dim, Space::primal, {i, j}, c);
}

ExteriorElement random_bivector(std::mt19937_64& rng, int dim) {
  ExteriorElement e(dim, Space::primal, 2);
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) e.add_term((1u << i) | (1u << j), small_rational(rng));
  return e;
}

// Mixed bracket [X + 0, 0 + ξ] expanded from structure constants:
// g part  -Σ_k <[X^k, ξ]_*, X> X_k, dual part  Σ_k -<ξ, [X, X_k]> X^k.
DoubleElement mixed_oracle(const LieBialgebra& B, const Vector& x, const Covector& xi) {
  const int m = B.g.dim();
  DoubleElement out{zero_vector(m), zero_covector(m)};
  for (int k = 0; k < m; ++k) {
    Vector kb = bracket(B.dual, basis_vector(m, k), Vector{xi.c});
    Scalar gx = 0, gd = 0;
    for (int a = 0; a < m; ++a) gx += kb.c[a] * x.c[a];
    out.x.c[k] = -gx;
    Vector xk = bracket(B.g, x, basis_vector(m, k));
    for (int a = 0; a < m; ++a) gd += xi.c[a] * xk.c[a];
    out.xi.c[k] = -gd;
  }
  return out;
}

}  // namespace

TEST_CASE("coboundary cocommutators") {
  const Scalar eta = rat(3, 5);
  auto so3 = so3_algebra();
  auto d = cocommutator_from_rmatrix(so3, biv(3, 0, 1, eta));
  CHECK(d.images[0] == biv(3, 0, 2, eta));
  CHECK(d.images[1] == biv(3, 1, 2, eta));
  CHECK(d.images[2].is_zero());

  auto zero = cocommutator_from_rmatrix(so3, ExteriorElement(3, Space::primal, 2));
  for (const auto& img : zero.images) CHECK(img.is_zero());

  // ladder order J+, J-, J3
  auto sl2 = sl2_algebra(Sl2Basis::ladder);
  auto dh = cocommutator_from_rmatrix(sl2, sl2_rmatrix(Sl2Structure::hyperbolic, Sl2Basis::ladder, eta));
  CHECK(dh.images[0] == biv(3, 0, 2, eta));
  CHECK(dh.images[1] == biv(3, 1, 2, eta));
  CHECK(dh.images[2].is_zero());
}

TEST_CASE("dual structure constants") {
  const Scalar eta = 2;
  auto B = so3_bialgebra(eta);
  CHECK(bracket(B.dual, basis_vector(3, 0), basis_vector(3, 2)) == eta * basis_vector(3, 0));
  CHECK(bracket(B.dual, basis_vector(3, 1), basis_vector(3, 2)) == eta * basis_vector(3, 1));
  CHECK(is_zero(bracket(B.dual, basis_vector(3, 0), basis_vector(3, 1))));

  CHECK(dual_constants(so3_algebra(), zero_cocommutator(3)).is_abelian());

  auto H = sl2_bialgebra(Sl2Structure::hyperbolic, Sl2Basis::ladder, eta);
  CHECK(bracket(H.dual, basis_vector(3, 2), basis_vector(3, 0)) == -eta * basis_vector(3, 0));
  CHECK(bracket(H.dual, basis_vector(3, 2), basis_vector(3, 1)) == -eta * basis_vector(3, 1));
  CHECK(is_zero(bracket(H.dual, basis_vector(3, 0), basis_vector(3, 1))));
}

TEST_CASE("cocycle condition") {
  CHECK(cocycle_check(so3_algebra(), so3_bialgebra(1).delta).ok);
  auto semi = semi_invariant_bialgebra();
  CHECK(cocycle_check(semi.g, semi.delta).ok);
  CHECK(semi.delta.images[0] == biv(4, 0, 1));

  auto broken = so3_bialgebra(1).delta;
  broken.images[2] = biv(3, 0, 1);
  CHECK_FALSE(cocycle_check(so3_algebra(), broken).ok);
  CHECK_THROWS_AS(make_bialgebra(so3_algebra(), broken), BialgebraError);
}

TEST_CASE("Drinfeld double bracket") {
  auto B = so3_bialgebra(1);
  DoubleElement j1{basis_vector(3, 0), zero_covector(3)}, j2{basis_vector(3, 1), zero_covector(3)};
  auto r = double_bracket(B, j1, j2);
  CHECK(r.x == basis_vector(3, 2));
  CHECK(is_zero(r.xi));

  DoubleElement d1{zero_vector(3), basis_covector(3, 0)}, d3{zero_vector(3), basis_covector(3, 2)};
  auto s = double_bracket(B, d1, d3);
  CHECK(is_zero(s.x));
  CHECK(s.xi == basis_covector(3, 0));

  DoubleElement j3{basis_vector(3, 2), zero_covector(3)};
  auto mixed = double_bracket(B, j3, d1);
  CHECK(mixed == mixed_oracle(B, basis_vector(3, 2), basis_covector(3, 0)));

  CHECK(double_jacobi_check(B).ok);
  CHECK(double_jacobi_check(make_bialgebra(so3_algebra(), zero_cocommutator(3))).ok);

  auto bad = make_bialgebra_unchecked(so3_algebra(), invariant_plane_bialgebra().dual);
  CHECK_FALSE(double_jacobi_check(bad).ok);
  CHECK_THROWS(make_bialgebra_from_dual(so3_algebra(), invariant_plane_bialgebra().dual));
}

TEST_CASE("dual modular characters") {
  for (Scalar eta : {Scalar(1), Scalar(2), rat(1, 3)}) {
    CHECK(dual_modular_character(so3_bialgebra(eta)) == Vector{{0, 0, -2 * eta}});
    auto rb = Sl2Basis::rotation_boost;  // P1, P2, J12
    CHECK(dual_modular_character(sl2_bialgebra(Sl2Structure::hyperbolic, rb, eta)) == Vector{{0, 0, -4 * eta}});
    CHECK(dual_modular_character(sl2_bialgebra(Sl2Structure::elliptic, rb, eta)) == Vector{{-4 * eta, 0, 0}});
    CHECK(dual_modular_character(sl2_bialgebra(Sl2Structure::parabolic, Sl2Basis::ladder, eta)) ==
          Vector{{-2 * eta, 0, 0}});
  }
  CHECK(is_zero(dual_modular_character(make_bialgebra(so3_algebra(), zero_cocommutator(3)))));
}

TEST_CASE("standard structure on sl(n) reduces to the hyperbolic one at n = 2") {
  auto s2 = make_homogeneous_space("sl2", sln_standard(2).bialgebra, {});
  Matrix P = {{0, 0, rat(1, 2)}, {0, rat(1, 2), 0}, {rat(1, 2), 0, 0}};
  auto moved = change_basis(s2, P).bialgebra;
  auto hyp = sl2_bialgebra(Sl2Structure::hyperbolic, Sl2Basis::rotation_boost, 1);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      CHECK(moved.g.basis_bracket(i, j) == hyp.g.basis_bracket(i, j));
      CHECK(moved.dual.basis_bracket(i, j) == hyp.dual.basis_bracket(i, j));
    }
  auto s3 = sln_standard(3);
  CHECK(s3.bialgebra.g.dim() == 8);
  CHECK(jacobi_check(s3.bialgebra.dual).ok);
  CHECK(double_jacobi_check(s3.bialgebra).ok);
}

TEST_CASE("random coboundaries on three-dimensional unimodular algebras") {
  std::mt19937_64 rng(kSeed);
  std::vector<LieAlgebra> algs = {so3_algebra(), sl2_algebra(Sl2Basis::ladder), sl2_algebra(Sl2Basis::rotation_boost)};
  for (int t = 0; t < kInstances; ++t) {
    const auto& g = algs[t % algs.size()];
    auto delta = cocommutator_from_rmatrix(g, random_bivector(rng, 3));
    CHECK(cocycle_check(g, delta).ok);
    auto dual = dual_constants(g, delta);
    CHECK(jacobi_check(dual).ok);
    auto back = cocommutator_from_dual(dual);
    for (int i = 0; i < 3; ++i) CHECK(back.images[i] == delta.images[i]);

    auto B = make_bialgebra(g, delta);
    if (t % 10 == 0) CHECK(double_jacobi_check(B).ok);
    auto x = random_vector(rng, 3), y = random_vector(rng, 3);
    auto xi = random_covector(rng, 3), zeta = random_covector(rng, 3);
    auto gg = double_bracket(B, {x, zero_covector(3)}, {y, zero_covector(3)});
    CHECK(gg.x == bracket(g, x, y));
    CHECK(is_zero(gg.xi));
    auto dd = double_bracket(B, {zero_vector(3), xi}, {zero_vector(3), zeta});
    CHECK(is_zero(dd.x));
    CHECK(dd.xi.c == bracket(dual, Vector{xi.c}, Vector{zeta.c}).c);
    CHECK(double_bracket(B, {x, zero_covector(3)}, {zero_vector(3), xi}) == mixed_oracle(B, x, xi));
  }
}

TEST_CASE("catalog bialgebras are compatible") {
  for (const auto& e : algebraic_catalog(rat(1, 3))) {
    const auto& B = e.space.bialgebra;
    CHECK(jacobi_check(B.dual).ok);
    CHECK(cocycle_check(B.g, B.delta).ok);
    CHECK(double_jacobi_check(B).ok);
  }
}
