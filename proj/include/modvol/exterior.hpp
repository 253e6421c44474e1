#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "modvol/lie.hpp"

namespace modvol {

enum class Space { primal, dual };  // Λ^k g or Λ^k g*

// Sparse element of a single degree. An index set i1<...<ik is stored as a
// bitmask, which caps the dimension at 32.
class ExteriorElement {
 public:
  ExteriorElement() = default;
  ExteriorElement(int dim, Space space, int degree);

  static ExteriorElement scalar(int dim, Space space, const Scalar& s);
  static ExteriorElement from_vector(const Vector& v);
  static ExteriorElement from_covector(const Covector& v);
  // Product of basis elements in the given order, sign included.
  static ExteriorElement monomial(int dim, Space space, const std::vector<int>& indices,
                                  const Scalar& coef = Scalar(1));

  int dim() const { return dim_; }
  Space space() const { return space_; }
  int degree() const { return degree_; }
  const std::map<std::uint32_t, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar coefficient(const std::vector<int>& sorted_indices) const;
  void add_term(std::uint32_t mask, const Scalar& coef);

  ExteriorElement operator+(const ExteriorElement& o) const;
  ExteriorElement operator-(const ExteriorElement& o) const;
  ExteriorElement operator-() const;
  bool operator==(const ExteriorElement& o) const;

  std::string to_string(const std::vector<std::string>& labels) const;

 private:
  void check_compatible(const ExteriorElement& o) const;
  int dim_ = 0;
  Space space_ = Space::primal;
  int degree_ = 0;
  std::map<std::uint32_t, Scalar> terms_;
};

ExteriorElement operator*(const Scalar& s, const ExteriorElement& a);

std::vector<int> mask_indices(std::uint32_t mask);
std::uint32_t indices_mask(const std::vector<int>& sorted);

ExteriorElement wedge(const ExteriorElement& a, const ExteriorElement& b);

// Contraction on the first slot. A covector contracts Λg, a vector contracts Λg*.
ExteriorElement interior(const Covector& xi, const ExteriorElement& w);
ExteriorElement interior(const Vector& x, const ExteriorElement& w);

// ω(X_1,...,X_k) = det[ω-factor pairing] extended linearly.
Scalar evaluate(const ExteriorElement& form, const std::vector<Vector>& args);
// P(ξ_1,...,ξ_k) for a multivector.
Scalar evaluate(const ExteriorElement& multivector, const std::vector<Covector>& args);

// (dω)(X0..Xk) = Σ_{i<j} (-1)^{i+j} ω([Xi,Xj], X0..^i..^j..Xk).
ExteriorElement ce_differential(const LieAlgebra& L, const ExteriorElement& form);

// Derivation extension of ad_X to Λ^k g.
ExteriorElement ad_extension(const LieAlgebra& L, const Vector& x, const ExteriorElement& p);

// Algebraic Schouten bracket [r,r] for r in Λ²g.
ExteriorElement schouten_square(const LieAlgebra& L, const ExteriorElement& r);
bool is_ad_invariant(const LieAlgebra& L, const ExteriorElement& p);

// θ0 with d V0 = -θ0 ∧ V0 for V0 spanning Λ^top h⁰.
Covector theta0_from_V0(const LieAlgebra& L, const Subalgebra& h, const ExteriorElement& V0);

// Top wedge of the given covectors (in order).
ExteriorElement top_wedge(const std::vector<Covector>& xs, int dim);

}  // namespace modvol
