#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "modvol/catalog.hpp"
#include "support.hpp"

using namespace modvol;
using namespace testing_support;

namespace {

Vector v3(long a, long b, long c) { return Vector{{a, b, c}}; }

// tr ad_X computed straight from the structure constants.
Scalar trace_oracle(const LieAlgebra& L, const Vector& x) {
  Scalar t = 0;
  for (int i = 0; i < L.dim(); ++i)
    for (int j = 0; j < L.dim(); ++j) t += x.c[i] * L.C(i, j, j);
  return t;
}

std::vector<LieAlgebra> algebras() {
  std::vector<LieAlgebra> out;
  for (const auto& e : algebraic_catalog(1)) {
    out.push_back(e.space.bialgebra.g);
    out.push_back(e.space.bialgebra.dual);
  }
  out.push_back(sl2_algebra(Sl2Basis::ladder));
  out.push_back(sln_standard(3).bialgebra.g);
  return out;
}

}  // namespace

TEST_CASE("basic brackets") {
  auto so3 = so3_algebra();
  CHECK(bracket(so3, basis_vector(3, 0), basis_vector(3, 1)) == basis_vector(3, 2));
  LieAlgebra abelian({"X1", "X2", "X3"});
  CHECK(is_zero(bracket(abelian, basis_vector(3, 0), basis_vector(3, 1))));
  auto sl2 = sl2_algebra(Sl2Basis::ladder);
  // ladder basis order J+, J-, J3
  CHECK(bracket(sl2, basis_vector(3, 2), basis_vector(3, 0)) == v3(2, 0, 0));
}

TEST_CASE("jacobi check finds a genuine violation") {
  CHECK(jacobi_check(so3_algebra()).ok);
  CHECK(jacobi_check(LieAlgebra({"X1", "X2"})).ok);

  // Rescaling one cyclic constant of so(3) still gives a Lie algebra.
  auto scaled = so3_algebra();
  scaled.set_bracket(0, 1, std::vector<Scalar>{0, 0, 2});
  CHECK(jacobi_check(scaled).ok);

  auto broken = so3_algebra();
  broken.set_bracket(0, 1, std::vector<Scalar>{1, 0, 1});
  auto v = jacobi_check(broken);
  CHECK_FALSE(v.ok);
  CHECK(v.i == 0);
  CHECK(v.j == 1);
  CHECK(v.k == 2);
}

TEST_CASE("adjoint matrices and modular characters") {
  auto so3 = so3_algebra();
  Matrix ad = adjoint_matrix(so3, basis_vector(3, 2));
  Matrix expected = {{0, -1, 0}, {1, 0, 0}, {0, 0, 0}};
  CHECK(ad == expected);
  CHECK(adjoint_matrix(LieAlgebra({"X1", "X2"}), Vector{{3, 4}}) == zero_matrix(2, 2));

  auto plane = invariant_plane_bialgebra().g;
  CHECK(trace(adjoint_matrix(plane, basis_vector(3, 2))) == 1);
  CHECK(trace(adjoint_matrix(plane, basis_vector(3, 2))) == trace_oracle(plane, basis_vector(3, 2)));

  CHECK(is_zero(modular_character(so3)));
  CHECK(modular_character(plane) == basis_covector(3, 2));
  CHECK(modular_character(semi_invariant_bialgebra().g) == basis_covector(4, 3));
}

TEST_CASE("subalgebras and annihilators") {
  auto so3 = so3_algebra();
  CHECK(is_subalgebra(so3, {basis_vector(3, 2)}));
  CHECK_FALSE(is_subalgebra(so3, {basis_vector(3, 0), basis_vector(3, 1)}));
  auto dual = so3_bialgebra(1).dual;
  CHECK(is_subalgebra(dual, {basis_vector(3, 0), basis_vector(3, 1)}));
  CHECK_THROWS(make_subalgebra(so3, {basis_vector(3, 0), basis_vector(3, 0)}));

  auto h = make_subalgebra(so3, {basis_vector(3, 2)});
  auto ann = annihilator(so3, h);
  REQUIRE(ann.size() == 2);
  std::vector<Row> rows;
  for (const auto& a : ann) rows.push_back(a.c);
  CHECK(coordinates_in_span(rows, basis_covector(3, 0).c));
  CHECK(coordinates_in_span(rows, basis_covector(3, 1).c));

  auto full = make_subalgebra(so3, {basis_vector(3, 0), basis_vector(3, 1), basis_vector(3, 2)});
  CHECK(annihilator(so3, full).empty());

  auto rb = sl2_algebra(Sl2Basis::rotation_boost);
  auto ann2 = annihilator(rb, make_subalgebra(rb, {basis_vector(3, 2)}));
  REQUIRE(ann2.size() == 2);
  for (const auto& a : ann2) CHECK(is_zero(a.c[2]));
}

TEST_CASE("restrictions and closed one-forms") {
  auto plane = invariant_plane_bialgebra().g;
  auto h = make_subalgebra(plane, {basis_vector(3, 0)});
  CHECK(all_zero(restrict_covector(modular_character(plane), h)));
  CHECK(all_zero(restrict_covector(zero_covector(3), h)));

  auto semi = semi_invariant_bialgebra().g;
  auto h4 = make_subalgebra(semi, {basis_vector(4, 3)});
  CHECK_FALSE(all_zero(restrict_covector(modular_character(semi), h4)));
  CHECK(is_closed_one_form(semi, basis_covector(4, 3)));
  CHECK(is_closed_one_form(LieAlgebra({"X1", "X2"}), Covector{{1, 1}}));
  CHECK_FALSE(is_closed_one_form(so3_algebra(), basis_covector(3, 0)));
}

TEST_CASE("change of basis maps brackets consistently") {
  auto ladder = sl2_algebra(Sl2Basis::ladder);
  auto rb = change_basis(ladder, sl2_ladder_to_rotation_boost());
  auto expected = sl2_algebra(Sl2Basis::rotation_boost);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(rb.basis_bracket(i, j) == expected.basis_bracket(i, j));
}

TEST_CASE("antisymmetry and Jacobi on random vectors") {
  std::mt19937_64 rng(kSeed);
  auto algs = algebras();
  for (int t = 0; t < kInstances; ++t) {
    const auto& L = algs[t % algs.size()];
    REQUIRE(jacobi_check(L).ok);
    int m = L.dim();
    auto u = random_vector(rng, m), v = random_vector(rng, m), w = random_vector(rng, m);
    CHECK(is_zero(bracket(L, u, v) + bracket(L, v, u)));
    auto jac = bracket(L, u, bracket(L, v, w)) + bracket(L, v, bracket(L, w, u)) + bracket(L, w, bracket(L, u, v));
    CHECK(is_zero(jac));
  }
}

TEST_CASE("modular character is closed and matches ad traces") {
  std::mt19937_64 rng(kSeed + 1);
  auto algs = algebras();
  for (int t = 0; t < kInstances; ++t) {
    const auto& L = algs[t % algs.size()];
    auto chi = modular_character(L);
    CHECK(is_closed_one_form(L, chi));
    auto x = random_vector(rng, L.dim());
    CHECK(pairing(chi, x) == trace_oracle(L, x));
  }
}

TEST_CASE("annihilator dimension and vanishing on random subalgebras") {
  std::mt19937_64 rng(kSeed + 2);
  auto algs = algebras();
  for (int t = 0; t < kInstances; ++t) {
    const auto& L = algs[t % algs.size()];
    // One-dimensional spans are always subalgebras.
    Vector x = random_vector(rng, L.dim());
    if (is_zero(x)) x = basis_vector(L.dim(), 0);
    auto h = make_subalgebra(L, {x});
    auto ann = annihilator(L, h);
    CHECK(static_cast<int>(ann.size()) + h.dim() == L.dim());
    for (const auto& a : ann) CHECK(is_zero(pairing(a, x)));
  }
}
