#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modvol/bialgebra.hpp"

namespace modvol {

struct HomogeneousSpaceSpec {
  std::string name;
  LieBialgebra bialgebra;
  Subalgebra h;
};

HomogeneousSpaceSpec make_homogeneous_space(std::string name, LieBialgebra B, std::vector<Vector> h_basis);

bool coisotropy_check(const HomogeneousSpaceSpec& S);

enum class SubgroupType { poisson_lie_subgroup, coisotropic_only, not_coisotropic };
std::string to_string(SubgroupType t);
SubgroupType subgroup_type(const HomogeneousSpaceSpec& S);

struct ChiH0 {
  std::vector<Covector> h0_basis;
  std::vector<Scalar> on_h0;  // χ_{h⁰} evaluated on h0_basis
  Vector lift;                // x_{h⁰}: <ξ, x> = χ_{h⁰}(ξ) for ξ in h⁰, minimum support
  bool zero = true;
};
// Throws std::domain_error when h⁰ is not a subalgebra of g*.
ChiH0 chi_h0(const HomogeneousSpaceSpec& S);

struct VolumeCertificate {
  enum class Kind { invariant, semi_invariant_algebra_level, none };
  ExteriorElement V0;
  std::optional<Covector> theta0;
  Kind kind = Kind::none;
};
std::string to_string(VolumeCertificate::Kind k);

struct InvariantVolumeResult {
  bool exists = false;
  VolumeCertificate certificate;
};
InvariantVolumeResult invariant_volume_exists(const HomogeneousSpaceSpec& S);

struct SemiInvariantSolutions {
  bool feasible = false;
  Covector particular;
  std::vector<Covector> homogeneous;
  bool algebra_level_only = true;  // integration to G assumes G simply connected
};
SemiInvariantSolutions semi_invariant_solutions(const HomogeneousSpaceSpec& S);

// χg|h − χh as values on the h basis.
std::vector<Scalar> restriction_target(const HomogeneousSpaceSpec& S);

enum class MuStatus { multiplicative_unimodular, fails_condition_i, fails_condition_ii };
std::string to_string(MuStatus s);

struct UnimodularityReport {
  ChiH0 chi;
  bool h0_unimodular = false;
  std::optional<Covector> mu_witness_theta0;
  MuStatus mu_status = MuStatus::fails_condition_i;
  int cocycle_solution_space_dim = -1;  // -1 when condition ii is infeasible
  bool condition_iii_assumes_simply_connected = true;
};

// Linear system for condition ii over θ0 ∈ g* (rows of A θ0 = b).
struct LinearSystem {
  Matrix A;
  Row b;
  std::size_t cols = 0;
};
LinearSystem mu_condition_system(const HomogeneousSpaceSpec& S);
bool mu_condition_holds(const HomogeneousSpaceSpec& S, const Covector& theta0);

UnimodularityReport multiplicative_unimodularity_check(const HomogeneousSpaceSpec& S);

struct LuVerdict {
  bool ok = false;
  std::vector<Scalar> chi_l;  // χ_𝔩 on the h⁰ basis
  std::vector<Scalar> rhs;    // <ξ, −χ_{g*} + 2 x_{h⁰}> on the h⁰ basis
};
LuVerdict lu_xl_crosscheck(const HomogeneousSpaceSpec& S);

struct ClassificationRow {
  std::string name;
  bool coisotropic = false;
  SubgroupType type = SubgroupType::not_coisotropic;
  std::optional<bool> chi_h0_zero;  // absent when not coisotropic
  bool invariant_volume = false;
  bool semi_invariant = false;
  std::optional<MuStatus> mu;
  std::optional<Covector> witness;
};
ClassificationRow classify(const HomogeneousSpaceSpec& S);
std::vector<ClassificationRow> classification_report(const std::vector<HomogeneousSpaceSpec>& specs);

// Same space written in the basis X'_i = Σ_j P[j][i] X_j (δ and h transported).
HomogeneousSpaceSpec change_basis(const HomogeneousSpaceSpec& S, const Matrix& P);

}  // namespace modvol
