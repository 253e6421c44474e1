#pragma once

// Seeded property suites shared by the unit tests and the acceptance run.
// Each suite returns how many random instances it checked and the first
// failure, if any.

#include <bit>
#include <functional>
#include <string>

#include "modvol/catalog.hpp"
#include "modvol/checks.hpp"
#include "support.hpp"

namespace testing_support {

struct SuiteResult {
  std::string name;
  int instances = 0;
  bool ok = true;
  std::string failure;
};

namespace detail {

inline modvol::ExteriorElement random_element(std::mt19937_64& rng, int dim, modvol::Space s, int degree) {
  modvol::ExteriorElement e(dim, s, degree);
  for (std::uint32_t mask = 0; mask < (1u << dim); ++mask)
    if (std::popcount(mask) == degree && rng() % 2 == 0) e.add_term(mask, small_rational(rng));
  return e;
}

inline std::vector<modvol::LieAlgebra> catalog_algebras() {
  std::vector<modvol::LieAlgebra> out;
  for (const auto& e : modvol::algebraic_catalog(1)) {
    out.push_back(e.space.bialgebra.g);
    out.push_back(e.space.bialgebra.dual);
  }
  return out;
}

inline bool same_verdicts(const modvol::ClassificationRow& a, const modvol::ClassificationRow& b) {
  return a.coisotropic == b.coisotropic && a.type == b.type && a.chi_h0_zero == b.chi_h0_zero &&
         a.invariant_volume == b.invariant_volume && a.semi_invariant == b.semi_invariant && a.mu == b.mu;
}

inline void fail(SuiteResult& r, const std::string& why) {
  if (r.ok) r.failure = why;
  r.ok = false;
}

}  // namespace detail

inline SuiteResult suite_d_squared(std::uint64_t seed) {
  using namespace modvol;
  SuiteResult r{"d^2 = 0"};
  std::mt19937_64 rng(seed);
  auto algs = detail::catalog_algebras();
  for (int t = 0; t < kInstances; ++t, ++r.instances) {
    const auto& L = algs[t % algs.size()];
    int k = static_cast<int>(rng() % (L.dim() + 1));
    auto w = detail::random_element(rng, L.dim(), Space::dual, k);
    if (!ce_differential(L, ce_differential(L, w)).is_zero()) detail::fail(r, "degree " + std::to_string(k));
  }
  return r;
}

inline SuiteResult suite_wedge(std::uint64_t seed) {
  using namespace modvol;
  SuiteResult r{"wedge associativity / graded commutativity"};
  std::mt19937_64 rng(seed);
  for (int t = 0; t < kInstances; ++t, ++r.instances) {
    int dim = 3 + static_cast<int>(rng() % 4);
    int p = static_cast<int>(rng() % 3), q = static_cast<int>(rng() % 3), s = static_cast<int>(rng() % 2);
    Space sp = (t % 2) ? Space::primal : Space::dual;
    auto a = detail::random_element(rng, dim, sp, p), b = detail::random_element(rng, dim, sp, q),
         c = detail::random_element(rng, dim, sp, s);
    if (!(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)))) detail::fail(r, "associativity");
    auto ba = wedge(b, a);
    if (!(wedge(a, b) == ((p * q) % 2 ? -ba : ba))) detail::fail(r, "graded commutativity");
  }
  return r;
}

// Catalog algebras, their duals and doubles, plus random coboundaries.
inline SuiteResult suite_jacobi(std::uint64_t seed) {
  using namespace modvol;
  SuiteResult r{"Jacobi of algebras, duals and doubles"};
  for (const auto& e : algebraic_catalog(1)) {
    const auto& B = e.space.bialgebra;
    ++r.instances;
    if (!jacobi_check(B.g).ok) detail::fail(r, e.name + " algebra");
    if (!jacobi_check(B.dual).ok) detail::fail(r, e.name + " dual");
    if (!double_jacobi_check(B).ok) detail::fail(r, e.name + " double");
  }
  std::mt19937_64 rng(seed);
  std::vector<LieAlgebra> algs = {so3_algebra(), sl2_algebra(Sl2Basis::ladder), sl2_algebra(Sl2Basis::rotation_boost)};
  for (int t = 0; t < kInstances; ++t, ++r.instances) {
    const auto& g = algs[t % algs.size()];
    auto rm = detail::random_element(rng, 3, Space::primal, 2);
    auto delta = cocommutator_from_rmatrix(g, rm);
    auto dual = dual_constants(g, delta);
    if (!jacobi_check(dual).ok) detail::fail(r, "random coboundary dual");
    LieBialgebra B{g, delta, dual};
    if (!double_jacobi_check(B).ok) detail::fail(r, "random coboundary double");
    auto u = random_vector(rng, 3), v = random_vector(rng, 3), w = random_vector(rng, 3);
    auto jac = bracket(dual, u, bracket(dual, v, w)) + bracket(dual, v, bracket(dual, w, u)) +
               bracket(dual, w, bracket(dual, u, v));
    if (!is_zero(jac)) detail::fail(r, "random vectors in a dual");
  }
  return r;
}

// d V0 = -θ∧V0  <=>  θ|h = χg|h − χh, both directions.
inline SuiteResult suite_volume_equivalence(std::uint64_t seed) {
  using namespace modvol;
  SuiteResult r{"volume identity <=> restriction identity"};
  std::mt19937_64 rng(seed);
  auto catalog = algebraic_catalog(1);
  int agree_true = 0, agree_false = 0;
  for (int t = 0; t < kInstances; ++t, ++r.instances) {
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
    auto chi_g = restrict_covector(modular_character(L), S.h);
    auto chi_h = subalgebra_modular_character(L, S.h);
    bool restriction_identity = true;
    for (std::size_t i = 0; i < lhs.size(); ++i) restriction_identity &= lhs[i] == chi_g[i] - chi_h[i];
    if (wedge_identity != restriction_identity) detail::fail(r, S.name);
    (wedge_identity ? agree_true : agree_false)++;
  }
  if (agree_true == 0 || agree_false == 0) detail::fail(r, "one side of the equivalence never exercised");
  return r;
}

inline SuiteResult suite_chi_closed(std::uint64_t seed) {
  using namespace modvol;
  SuiteResult r{"modular characters are closed"};
  std::mt19937_64 rng(seed);
  auto algs = detail::catalog_algebras();
  for (int t = 0; t < kInstances; ++t, ++r.instances) {
    auto L = algs[t % algs.size()];
    if (L.dim() <= 4) L = change_basis(L, random_basis_change(L.dim(), rng));
    if (!is_closed_one_form(L, modular_character(L))) detail::fail(r, std::to_string(t));
  }
  return r;
}

inline SuiteResult suite_lu(std::uint64_t seed) {
  using namespace modvol;
  SuiteResult r{"Lu cross-check x_l = -chi_g* + 2 x_h0"};
  std::vector<HomogeneousSpaceSpec> spaces;
  for (const auto& e : algebraic_catalog(1))
    if (coisotropy_check(e.space)) spaces.push_back(e.space);
  std::mt19937_64 rng(seed);
  for (int t = 0; t < kInstances; ++t, ++r.instances) {
    auto S = spaces[t % spaces.size()];
    if (t >= static_cast<int>(spaces.size()) && S.bialgebra.g.dim() <= 4)
      S = change_basis(S, random_basis_change(S.bialgebra.g.dim(), rng));
    if (!lu_xl_crosscheck(S).ok) detail::fail(r, S.name);
  }
  return r;
}

inline SuiteResult suite_basis_change(std::uint64_t seed) {
  using namespace modvol;
  SuiteResult r{"verdicts invariant under change of basis"};
  std::mt19937_64 rng(seed);
  std::vector<CatalogEntry> small;
  for (const auto& e : algebraic_catalog(1))
    if (e.space.bialgebra.g.dim() <= 4) small.push_back(e);
  std::vector<ClassificationRow> base;
  for (const auto& e : small) base.push_back(classify(e.space));
  for (int t = 0; t < kInstances; ++t, ++r.instances) {
    std::size_t i = t % small.size();
    auto P = random_basis_change(small[i].space.bialgebra.g.dim(), rng);
    if (!detail::same_verdicts(classify(change_basis(small[i].space, P)), base[i])) detail::fail(r, small[i].name);
  }
  auto toda = find_algebraic("toda-n3", 1)->space;
  ++r.instances;
  if (!detail::same_verdicts(classify(change_basis(toda, random_basis_change(8, rng))), classify(toda)))
    detail::fail(r, "toda-n3");
  return r;
}

inline std::vector<std::function<SuiteResult(std::uint64_t)>> all_suites() {
  return {suite_d_squared, suite_wedge, suite_jacobi, suite_volume_equivalence,
          suite_chi_closed, suite_lu, suite_basis_change};
}

}  // namespace testing_support
