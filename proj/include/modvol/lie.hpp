#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "modvol/linalg.hpp"
#include "modvol/scalar.hpp"

namespace modvol {

struct Vector {
  std::vector<Scalar> c;
  bool operator==(const Vector&) const = default;
};

struct Covector {
  std::vector<Scalar> c;
  bool operator==(const Covector&) const = default;
};

Vector basis_vector(int m, int i);
Covector basis_covector(int m, int i);
Vector zero_vector(int m);
Covector zero_covector(int m);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& a);
Covector operator+(const Covector& a, const Covector& b);
Covector operator-(const Covector& a, const Covector& b);
Covector operator*(const Scalar& s, const Covector& a);
Scalar pairing(const Covector& xi, const Vector& x);
bool is_zero(const Vector& v);
bool is_zero(const Covector& v);

// Structure constants stored once per unordered pair (i<j); the (j,i) entry
// is the negative, so antisymmetry holds by construction.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  explicit LieAlgebra(std::vector<std::string> labels);

  int dim() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  int index_of(const std::string& label) const;  // -1 when absent

  // [X_i, X_j] = v; i != j. Setting (j,i) stores -v.
  void set_bracket(int i, int j, const std::vector<Scalar>& v);
  void set_bracket(int i, int j, int k, const Scalar& coef);  // [X_i,X_j] += coef X_k
  std::vector<Scalar> basis_bracket(int i, int j) const;
  Scalar C(int i, int j, int k) const;
  bool is_abelian() const;

  bool operator==(const LieAlgebra& o) const {
    return labels_ == o.labels_ && table_ == o.table_;
  }

 private:
  std::size_t slot(int i, int j) const;  // i<j
  std::vector<std::string> labels_;
  std::vector<std::vector<Scalar>> table_;
};

std::string describe(const LieAlgebra& L, const Vector& v);
std::string describe_dual(const LieAlgebra& L, const Covector& v);
std::string dual_label(const std::string& label);  // "J1" -> "J^1"

Vector bracket(const LieAlgebra& L, const Vector& u, const Vector& v);

struct JacobiVerdict {
  bool ok = true;
  int i = -1, j = -1, k = -1;  // first violating basis triple
};
JacobiVerdict jacobi_check(const LieAlgebra& L);

Matrix adjoint_matrix(const LieAlgebra& L, const Vector& x);
Covector modular_character(const LieAlgebra& L);
bool is_subalgebra(const LieAlgebra& L, const std::vector<Vector>& basis);
// Span of the given vectors is mapped into itself by ad of every basis element
// of L (an ideal test).
bool is_ideal(const LieAlgebra& L, const std::vector<Vector>& basis);

struct Subalgebra {
  std::vector<Vector> basis;
  bool verified = false;
  int dim() const { return static_cast<int>(basis.size()); }
};

// Throws when the vectors are dependent or not closed under the bracket.
Subalgebra make_subalgebra(const LieAlgebra& L, std::vector<Vector> basis);

std::vector<Covector> annihilator(const LieAlgebra& L, const Subalgebra& h);
std::vector<Scalar> restrict_covector(const Covector& theta, const Subalgebra& h);
bool is_closed_one_form(const LieAlgebra& L, const Covector& theta);

// Structure constants of span(basis) in that basis. Requires closure.
LieAlgebra induced_algebra(const LieAlgebra& L, const std::vector<Vector>& basis,
                           std::vector<std::string> labels = {});

// Modular character of the subalgebra itself, as values on its basis.
std::vector<Scalar> subalgebra_modular_character(const LieAlgebra& L, const Subalgebra& h);

// X'_i = sum_j P[j][i] X_j; returns constants in the primed basis.
LieAlgebra change_basis(const LieAlgebra& L, const Matrix& P, std::vector<std::string> labels = {});

}  // namespace modvol
