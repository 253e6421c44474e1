#pragma once

#include <string>
#include <vector>

#include "modvol/exterior.hpp"
#include "modvol/lie.hpp"

namespace modvol {

struct CocommutatorMap {
  std::vector<ExteriorElement> images;  // δ(X_i) in Λ²g
};

CocommutatorMap zero_cocommutator(int m);
CocommutatorMap cocommutator_from_rmatrix(const LieAlgebra& g, const ExteriorElement& r);
// Transpose of dual structure constants: (δX_k)^{ij} = [X^i,X^j]_{g*}(X_k).
CocommutatorMap cocommutator_from_dual(const LieAlgebra& dual);

// [X^i,X^j]_{g*} = Σ_k (δX_k)^{ij} X^k, labels X^i.
LieAlgebra dual_constants(const LieAlgebra& g, const CocommutatorMap& delta);

struct CocycleVerdict {
  bool ok = true;
  int i = -1, j = -1;
};
CocycleVerdict cocycle_check(const LieAlgebra& g, const CocommutatorMap& delta);

struct LieBialgebra {
  LieAlgebra g;
  CocommutatorMap delta;
  LieAlgebra dual;
};

// Throws BialgebraError when the dual fails Jacobi or δ is not a cocycle.
struct BialgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
LieBialgebra make_bialgebra(LieAlgebra g, CocommutatorMap delta);
LieBialgebra make_bialgebra_from_dual(LieAlgebra g, const LieAlgebra& dual);
// No validation; used to build deliberately incompatible pairs.
LieBialgebra make_bialgebra_unchecked(LieAlgebra g, const LieAlgebra& dual);

struct DoubleElement {
  Vector x;
  Covector xi;
  bool operator==(const DoubleElement&) const = default;
};

// (ad^{g*})*_ξ X (ξ') = <[ξ',ξ]_{g*}, X>
Vector coad_dual(const LieBialgebra& B, const Covector& xi, const Vector& x);
// (ad^g)*_X ξ (X') = -<ξ, [X,X']_g>
Covector coad_primal(const LieBialgebra& B, const Vector& x, const Covector& xi);

DoubleElement double_bracket(const LieBialgebra& B, const DoubleElement& a, const DoubleElement& b);

struct DoubleJacobiVerdict {
  bool ok = true;
  int i = -1, j = -1, k = -1;  // indices in the 2m basis (g first, then g*)
};
DoubleJacobiVerdict double_jacobi_check(const LieBialgebra& B);

Vector dual_modular_character(const LieBialgebra& B);

// Standard structure on sl(n,R) from the map R = -id on strictly upper,
// 0 on diagonal, +id on strictly lower triangular matrices, with
// [A,B]_* = [RA,B] + [A,RB] and g* identified with g by the trace form.
// Basis order: D_1..D_{n-1}, S_ij (i<j), Q_ij (i<j).
struct SlnStandard {
  int n = 0;
  LieBialgebra bialgebra;
  std::vector<Matrix> basis_matrices;
  std::vector<int> q_indices;  // positions of the Q_ij
};
SlnStandard sln_standard(int n);

}  // namespace modvol
