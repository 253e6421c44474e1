#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "modvol/scalar.hpp"

namespace modvol {

// Sparse multivariate polynomial with rational coefficients.
class Polynomial {
 public:
  using Exponent = std::vector<std::uint16_t>;

  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}
  static Polynomial constant(int nvars, const Scalar& s);
  static Polynomial variable(int nvars, int i);

  int nvars() const { return nvars_; }
  const std::map<Exponent, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;
  int total_degree() const;

  void add_term(const Exponent& e, const Scalar& c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial pow(unsigned k) const;
  bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  Polynomial derivative(int i) const;
  Scalar evaluate(const std::vector<Scalar>& point) const;
  double evaluate(const std::vector<double>& point) const;
  // Replace variable i by images[i] (all images share one variable count).
  Polynomial compose(const std::vector<Polynomial>& images) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void check(const Polynomial& o) const;
  int nvars_ = 0;
  std::map<Exponent, Scalar> terms_;
};

Polynomial operator*(const Scalar& s, const Polynomial& p);

// Grammar: sums/differences of products of factors; factors are integers,
// identifiers, parenthesised expressions, with optional ^k. Division is
// allowed only by nonzero constants. Identifiers must be variables or keys
// of `constants`.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t column);
  std::size_t column;
};
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars,
                            const std::map<std::string, Scalar>& constants = {});

struct PolyVectorField {
  std::vector<Polynomial> comp;
  int n() const { return static_cast<int>(comp.size()); }
  bool is_zero() const;
  bool operator==(const PolyVectorField&) const = default;
};

PolyVectorField zero_field(int n);
PolyVectorField operator+(const PolyVectorField& a, const PolyVectorField& b);
PolyVectorField operator-(const PolyVectorField& a, const PolyVectorField& b);
PolyVectorField operator*(const Scalar& s, const PolyVectorField& a);
// X(f) = Σ X_i ∂f/∂x_i
Polynomial apply_field(const PolyVectorField& X, const Polynomial& f);
std::string to_string(const PolyVectorField& X, const std::vector<std::string>& names);

// Double-precision snapshot for fast repeated evaluation.
class CompiledPolynomial {
 public:
  CompiledPolynomial() = default;
  explicit CompiledPolynomial(const Polynomial& p);
  double operator()(const double* x) const;

 private:
  std::vector<double> coef_;
  std::vector<std::uint16_t> exps_;
  int nvars_ = 0;
};

}  // namespace modvol
