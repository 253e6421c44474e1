#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>

#include "modvol/catalog.hpp"
#include "support.hpp"

using namespace modvol;
using namespace testing_support;

namespace {

ExteriorElement random_element(std::mt19937_64& rng, int dim, Space s, int degree) {
  ExteriorElement e(dim, s, degree);
  for (std::uint32_t mask = 0; mask < (1u << dim); ++mask)
    if (std::popcount(mask) == degree && rng() % 2 == 0) e.add_term(mask, small_rational(rng));
  return e;
}

ExteriorElement form(int dim, std::vector<int> idx, const Scalar& c = 1) {
  return ExteriorElement::monomial(dim, Space::dual, idx, c);
}

ExteriorElement multivector(int dim, std::vector<int> idx, const Scalar& c = 1) {
  return ExteriorElement::monomial(dim, Space::primal, idx, c);
}

std::vector<LieAlgebra> algebras() {
  std::vector<LieAlgebra> out;
  for (const auto& e : algebraic_catalog(1)) {
    out.push_back(e.space.bialgebra.g);
    out.push_back(e.space.bialgebra.dual);
  }
  return out;
}

}  // namespace

TEST_CASE("wedge signs") {
  CHECK(wedge(form(4, {0}), form(4, {0})).is_zero());
  CHECK(wedge(form(4, {3}), form(4, {0, 1, 2})) == form(4, {0, 1, 2, 3}, -1));
  const Scalar lambda = rat(5, 7);
  CHECK(wedge(form(4, {3}, -1), form(4, {0, 1, 2}, lambda)) == form(4, {0, 1, 2, 3}, lambda));
  CHECK_THROWS(wedge(form(3, {0}), multivector(3, {1})));
}

TEST_CASE("interior products") {
  CHECK(interior(basis_vector(2, 0), form(2, {0, 1})) == form(2, {1}));
  CHECK(interior(basis_vector(2, 1), form(2, {0, 1})) == form(2, {0}, -1));
  auto so3 = so3_bialgebra(1);
  CHECK(interior(zero_covector(3), so3.delta.images[0]).is_zero());
  CHECK_THROWS(interior(basis_vector(2, 0), ExteriorElement::scalar(2, Space::dual, 1)));
}

TEST_CASE("Chevalley-Eilenberg differential calibration") {
  const Scalar lambda = rat(3, 2);
  auto plane = invariant_plane_bialgebra().g;
  CHECK(ce_differential(plane, form(3, {1, 2}, lambda)).is_zero());

  auto semi = semi_invariant_bialgebra().g;
  CHECK(ce_differential(semi, form(4, {0, 1, 2}, lambda)) == form(4, {0, 1, 2, 3}, lambda));

  LieAlgebra abelian({"X1", "X2", "X3"});
  CHECK(ce_differential(abelian, form(3, {0, 1})).is_zero());
  CHECK_THROWS(ce_differential(abelian, multivector(3, {0})));

  // degree one: (dθ)(X,Y) = -θ([X,Y])
  auto so3 = so3_algebra();
  auto d = ce_differential(so3, form(3, {2}));
  CHECK(evaluate(d, std::vector<Vector>{basis_vector(3, 0), basis_vector(3, 1)}) == -1);
}

TEST_CASE("adjoint extension") {
  auto so3 = so3_algebra();
  CHECK(ad_extension(so3, basis_vector(3, 2), multivector(3, {0, 1})).is_zero());
  const Scalar eta = rat(2, 3);
  CHECK(ad_extension(so3, basis_vector(3, 0), multivector(3, {0, 1}, eta)) == multivector(3, {0, 2}, eta));
  LieAlgebra abelian({"X1", "X2", "X3"});
  CHECK(ad_extension(abelian, basis_vector(3, 0), multivector(3, {1, 2})).is_zero());
}

TEST_CASE("Schouten square of sl(2) r-matrices") {
  auto sl2 = sl2_algebra(Sl2Basis::ladder);
  for (Scalar eta : {Scalar(1), Scalar(2), rat(1, 3)}) {
    CHECK(schouten_square(sl2, sl2_rmatrix(Sl2Structure::parabolic, Sl2Basis::ladder, eta)).is_zero());
    auto hyp = schouten_square(sl2, sl2_rmatrix(Sl2Structure::hyperbolic, Sl2Basis::ladder, eta));
    CHECK_FALSE(hyp.is_zero());
    CHECK(is_ad_invariant(sl2, hyp));
    auto ell = schouten_square(sl2, sl2_rmatrix(Sl2Structure::elliptic, Sl2Basis::ladder, eta));
    CHECK_FALSE(ell.is_zero());
    CHECK(is_ad_invariant(sl2, ell));
  }
  CHECK(schouten_square(sl2, ExteriorElement(3, Space::primal, 2)).is_zero());
  CHECK_THROWS(schouten_square(sl2, multivector(3, {0})));
}

TEST_CASE("theta0 from a volume element") {
  const Scalar lambda = rat(-4, 3);
  auto semi = semi_invariant_bialgebra().g;
  auto h = make_subalgebra(semi, {basis_vector(4, 3)});
  auto theta = theta0_from_V0(semi, h, form(4, {0, 1, 2}, lambda));
  CHECK(theta.c[3] == 1);

  auto plane = invariant_plane_bialgebra().g;
  auto h1 = make_subalgebra(plane, {basis_vector(3, 0)});
  CHECK(all_zero(restrict_covector(theta0_from_V0(plane, h1, form(3, {1, 2}, lambda)), h1)));

  LieAlgebra abelian({"X1", "X2", "X3"});
  auto ha = make_subalgebra(abelian, {basis_vector(3, 1)});
  CHECK(is_zero(theta0_from_V0(abelian, ha, form(3, {0, 2}))));

  CHECK_THROWS(theta0_from_V0(semi, h, ExteriorElement(4, Space::dual, 3)));
  CHECK_THROWS(theta0_from_V0(semi, h, form(4, {0, 1, 3})));
}

TEST_CASE("d squared vanishes on random forms of every degree") {
  std::mt19937_64 rng(kSeed);
  auto algs = algebras();
  for (int t = 0; t < kInstances; ++t) {
    const auto& L = algs[t % algs.size()];
    int k = static_cast<int>(rng() % (L.dim() + 1));
    auto w = random_element(rng, L.dim(), Space::dual, k);
    CHECK(ce_differential(L, ce_differential(L, w)).is_zero());
  }
}

TEST_CASE("wedge is associative and graded commutative") {
  std::mt19937_64 rng(kSeed + 1);
  for (int t = 0; t < kInstances; ++t) {
    int dim = 3 + static_cast<int>(rng() % 4);
    int p = static_cast<int>(rng() % 3), q = static_cast<int>(rng() % 3), r = static_cast<int>(rng() % 2);
    Space s = (t % 2) ? Space::primal : Space::dual;
    auto a = random_element(rng, dim, s, p), b = random_element(rng, dim, s, q), c = random_element(rng, dim, s, r);
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    auto ba = wedge(b, a);
    CHECK(wedge(a, b) == ((p * q) % 2 ? -ba : ba));
  }
}

TEST_CASE("interior product squares to zero and is a graded derivation") {
  std::mt19937_64 rng(kSeed + 2);
  for (int t = 0; t < kInstances; ++t) {
    int dim = 3 + static_cast<int>(rng() % 3);
    int p = 1 + static_cast<int>(rng() % 2), q = 1 + static_cast<int>(rng() % 2);
    auto x = random_vector(rng, dim);
    auto a = random_element(rng, dim, Space::dual, p), b = random_element(rng, dim, Space::dual, q);
    auto ab = wedge(a, b);
    CHECK(interior(x, interior(x, ab)).is_zero());
    auto rhs = wedge(interior(x, a), b);
    auto second = wedge(a, interior(x, b));
    rhs = (p % 2) ? rhs - second : rhs + second;
    CHECK(interior(x, ab) == rhs);
  }
}

TEST_CASE("theta0 satisfies the restriction identity and is unique on h") {
  std::mt19937_64 rng(kSeed + 3);
  auto catalog = algebraic_catalog(1);
  for (int t = 0; t < kInstances; ++t) {
    const auto& S = catalog[t % catalog.size()].space;
    const auto& L = S.bialgebra.g;
    auto ann = annihilator(L, S.h);
    const Scalar scale = small_rational(rng) + 7;  // never zero
    auto V0 = scale * top_wedge(ann, L.dim());
    auto theta = theta0_from_V0(L, S.h, V0);
    CHECK(ce_differential(L, V0) == -wedge(ExteriorElement::from_covector(theta), V0));

    auto lhs = restrict_covector(theta, S.h);
    auto chi_g = restrict_covector(modular_character(L), S.h);
    auto chi_h = subalgebra_modular_character(L, S.h);
    for (std::size_t i = 0; i < lhs.size(); ++i) CHECK(lhs[i] == chi_g[i] - chi_h[i]);

    // Shifting by any element of h⁰ keeps the identity.
    Covector xi = zero_covector(L.dim());
    for (const auto& a : ann) xi = xi + small_rational(rng) * a;
    auto shifted = theta + xi;
    CHECK(ce_differential(L, V0) == -wedge(ExteriorElement::from_covector(shifted), V0));
    CHECK(all_zero(restrict_covector(shifted - theta, S.h)));
  }
}

TEST_CASE("Schouten square is quadratic") {
  std::mt19937_64 rng(kSeed + 4);
  std::vector<LieAlgebra> algs = {so3_algebra(), sl2_algebra(Sl2Basis::ladder), sl2_algebra(Sl2Basis::rotation_boost),
                                  semi_invariant_bialgebra().g};
  for (int t = 0; t < kInstances; ++t) {
    const auto& L = algs[t % algs.size()];
    auto r = random_element(rng, L.dim(), Space::primal, 2);
    Scalar c = small_rational(rng);
    CHECK(schouten_square(L, c * r) == (c * c) * schouten_square(L, r));
  }
}
