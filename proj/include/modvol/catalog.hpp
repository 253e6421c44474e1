#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modvol/homspace.hpp"
#include "modvol/poisson.hpp"

namespace modvol {

// Expected verdicts, transcribed from the published tables and worked
// examples. Never computed by the library.
struct GoldenVerdict {
  bool coisotropic = true;
  SubgroupType type = SubgroupType::coisotropic_only;
  std::optional<bool> chi_h0_zero;
  bool invariant_volume = false;
  bool semi_invariant = false;
  std::optional<MuStatus> mu;
  std::optional<Covector> witness;
};

struct CatalogEntry {
  std::string name;
  std::string summary;
  HomogeneousSpaceSpec space;
  GoldenVerdict golden;
  std::optional<Vector> chi_dual;  // expected χ_{g*}
  std::string table;               // "sphere-quotients", "sl2-quotients" or empty
  std::string structure;           // table column
  std::string quotient;            // table row
  std::vector<std::string> anchors;
};

enum class Sl2Structure { hyperbolic, elliptic, parabolic };
enum class Sl2Basis {
  rotation_boost,  // P1, P2, J12
  ladder,          // J+, J-, J3
};
std::string to_string(Sl2Structure s);

LieAlgebra so3_algebra();
LieBialgebra so3_bialgebra(const Scalar& eta);
LieAlgebra sl2_algebra(Sl2Basis b);
ExteriorElement sl2_rmatrix(Sl2Structure s, Sl2Basis b, const Scalar& eta);
LieBialgebra sl2_bialgebra(Sl2Structure s, Sl2Basis b, const Scalar& eta);
// Columns are P1, P2, J12 in ladder coordinates, in the convention of
// change_basis (X'_i = Σ_j P[j][i] X_j).
Matrix sl2_ladder_to_rotation_boost();

LieBialgebra invariant_plane_bialgebra();
LieBialgebra semi_invariant_bialgebra();

std::vector<CatalogEntry> algebraic_catalog(const Scalar& eta = 1);
std::optional<CatalogEntry> find_algebraic(const std::string& name, const Scalar& eta = 1);

struct CoordinateEntry {
  std::string name;
  std::string summary;
  PolynomialPoissonModel model;
  std::optional<LieBialgebra> bialgebra;
  std::vector<std::vector<Scalar>> frame;  // tangent at the base point of each basis element
  std::optional<Vector> chi_dual;
  std::optional<PolyVectorField> left_chi, right_chi, horizontal;
  std::vector<Polynomial> kernel_covector;  // empty when the entry carries no certificate
  std::vector<std::string> calibration_notes;
  std::vector<std::string> anchors;
};

std::vector<CoordinateEntry> coordinate_catalog(const Scalar& eta = 1);
std::optional<CoordinateEntry> find_coordinate(const std::string& name, const Scalar& eta = 1);

// g(a) = antidiag(a, -1/a) ⊕ 1 as a point of the 3×3 model.
std::vector<Scalar> toda_point(const Scalar& a);

struct DynamicsCase {
  enum class Test { divergence_free, preservation };
  std::string name;
  std::string summary;
  std::string model;  // coordinate entry name
  Polynomial h;
  Polynomial log_density;
  std::vector<Scalar> x0;
  double T = 10, dt = 1e-3;
  Test test = Test::divergence_free;
  std::vector<PolyVectorField> vertical;                 // q-basic check
  std::optional<std::vector<Scalar>> obstruction_point;  // where a nonzero residual is exhibited
  std::vector<PolyVectorField> morse_frame;              // Hessian frame at the base point
  std::vector<std::string> anchors;
};

std::vector<DynamicsCase> dynamics_cases(const Scalar& eta = 1);
std::optional<DynamicsCase> find_dynamics(const std::string& name, const Scalar& eta = 1);

}  // namespace modvol
