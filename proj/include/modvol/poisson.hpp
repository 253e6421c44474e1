#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "modvol/bialgebra.hpp"
#include "modvol/linalg.hpp"
#include "modvol/polynomial.hpp"

namespace modvol {

// How to draw exact rational points on the model's variety.
enum class VarietyKind {
  euclidean,          // no constraints
  unit_sphere,        // x²+y²+z²+t² = 1 (4 variables)
  unimodular_matrix,  // det = 1, variables are matrix entries row by row
};

struct PolynomialPoissonModel {
  std::string name;
  std::vector<std::string> vars;
  std::vector<std::vector<Polynomial>> bracket;  // Π[i][j] = {x_i, x_j}
  std::vector<Polynomial> constraints;
  // Product map in 2n variables: the first n belong to the left factor.
  std::optional<std::vector<Polynomial>> group_mult;
  std::vector<Scalar> base_point;
  bool poisson_lie = false;
  // +1 when Π linearises at the base point to δ, -1 when to -δ (the bracket
  // then realises →r - ←r rather than ←r - →r).
  int cobracket_sign = 1;
  VarietyKind variety = VarietyKind::euclidean;

  int n() const { return static_cast<int>(vars.size()); }
};

PolynomialPoissonModel empty_model(std::string name, std::vector<std::string> vars);
// Sets Π[i][j] = p and Π[j][i] = -p.
void set_bracket(PolynomialPoissonModel& M, int i, int j, const Polynomial& p);
// Antisymmetry, base point on the variety, Π(base) = 0 for Poisson-Lie models.
void validate(const PolynomialPoissonModel& M);
bool brackets_antisymmetric(const PolynomialPoissonModel& M);

std::vector<Scalar> sample_rational_point(const PolynomialPoissonModel& M, std::mt19937_64& rng);

// X_h(x_j) = Σ_i ∂h/∂x_i Π[i][j], i.e. X_h = {h, ·}.
PolyVectorField hamiltonian_vf(const PolynomialPoissonModel& M, const Polynomial& h);
// Π♯(α)_j = Σ_i α_i Π[i][j] for a polynomial 1-form α.
PolyVectorField sharp(const PolynomialPoissonModel& M, const std::vector<Polynomial>& alpha);

struct JacobiReport {
  bool ok = false;
  bool symbolic_zero = false;
  int samples = 0;
  double max_sampled = 0;  // |jacobiator| over sampled points (exact evaluation)
};
JacobiReport jacobi_symbolic(const PolynomialPoissonModel& M, std::uint64_t seed = 1, int samples = 100);
Polynomial jacobiator(const PolynomialPoissonModel& M, int i, int j, int k);

Polynomial divergence(const PolynomialPoissonModel& M, const PolyVectorField& X, const Polynomial& log_density);

struct KernelObstructionCertificate {
  enum class Status { certified, kernel_residual_nonzero, inconclusive };
  std::vector<Polynomial> covector;
  PolyVectorField target;
  std::vector<Polynomial> kernel_residual;  // Σ_j c_j Π[i][j] for each i
  Polynomial obstruction;                   // Σ_j c_j H_j
  std::vector<Scalar> witness_point;
  Scalar witness_value;
  Status status = Status::inconclusive;
};
std::string to_string(KernelObstructionCertificate::Status s);
KernelObstructionCertificate kernel_obstruction_verify(const PolynomialPoissonModel& M,
                                                       const std::vector<Polynomial>& c,
                                                       const PolyVectorField& H, std::uint64_t seed = 7);

// H = -Π♯(dσ) + ½(right - left + Π♯(χg form)).
PolyVectorField field_from_character_data(const PolynomialPoissonModel& M, const PolyVectorField& left,
                                          const PolyVectorField& right,
                                          const std::optional<std::vector<Polynomial>>& chi_g_form,
                                          const Polynomial& log_density);

// X_h(σ+τ) + ½(right(h) - left(h) - χg_form(X_h)).
Polynomial preservation_residual(const PolynomialPoissonModel& M, const Polynomial& h, const Polynomial& sigma,
                                 const Polynomial& tau, const PolyVectorField& left,
                                 const PolyVectorField& right,
                                 const std::optional<std::vector<Polynomial>>& chi_g_form);

bool basic_function_check(const Polynomial& h, const std::vector<PolyVectorField>& vertical);

std::vector<Scalar> evaluate_field_at(const PolyVectorField& X, const std::vector<Scalar>& point);
Scalar evaluate_at(const Polynomial& p, const std::vector<Scalar>& point);

// H_ij = V_i(V_j(h)) at the point. Throws if some V_i(h) is nonzero there.
Matrix hessian_at(const Polynomial& h, const std::vector<Scalar>& point, const std::vector<PolyVectorField>& frame);

// Fields generated by group_mult from their value at the base point:
// left-invariant ←v(g) = ∂_2 m(g,e) v, right-invariant →v(g) = ∂_1 m(e,g) v.
PolyVectorField left_invariant_field(const PolynomialPoissonModel& M, const std::vector<Scalar>& v);
PolyVectorField right_invariant_field(const PolynomialPoissonModel& M, const std::vector<Scalar>& v);

struct MultiplicativityReport {
  double max_residual = 0;
  bool identity_exact = false;  // Π(base) = 0 exactly
  int pairs = 0;
};
MultiplicativityReport multiplicativity_spotcheck(const PolynomialPoissonModel& M, int pairs = 100,
                                                  std::uint64_t seed = 11);

// frame[a] = coordinate direction at the base point representing basis X_a.
double linearization_vs_cocommutator(const PolynomialPoissonModel& M, const LieBialgebra& B,
                                     const std::vector<std::vector<Scalar>>& frame, double step = 1e-4);

struct FlowTrace {
  std::vector<double> t;
  std::vector<std::vector<double>> x;
  std::vector<double> divint;  // ∫_0^t div dt, composite Simpson
  std::vector<double> drift;   // max |constraint| at each row
  double divergence_integral() const { return divint.empty() ? 0.0 : divint.back(); }
  double max_drift() const;
};

struct FlowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

FlowTrace rk4_flow(const PolynomialPoissonModel& M, const Polynomial& h, const std::vector<double>& x0, double T,
                   double dt, const Polynomial& log_density);
void write_csv(const FlowTrace& trace, const std::vector<std::string>& names, std::ostream& os);

}  // namespace modvol
