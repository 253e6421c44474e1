#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modvol/catalog.hpp"

namespace modvol {

struct DynamicsOutcome {
  std::string verdict;  // "volume preserved", "no preserved volume (certificate)" or "undecided"
  bool preserved = false;
  FlowTrace trace;
  std::optional<Scalar> obstruction_value;  // residual at the case's singular point
  std::optional<Matrix> hessian;
  std::vector<std::string> notes;
};

// Runs the case's algebraic verdict and an RK4 flow. Throws FlowError on
// constraint drift.
DynamicsOutcome run_dynamics(const DynamicsCase& c, const Scalar& eta, std::optional<double> T = std::nullopt,
                             std::optional<double> dt = std::nullopt);

struct CheckResult {
  std::string name;
  std::string anchor;
  bool ok = false;
  std::string detail;
};

// Every catalog re-verification, certificate, table diff and spot check.
// Independent checks run concurrently; results come back in manifest order.
std::vector<CheckResult> run_all_checks(const Scalar& eta = 1, std::uint64_t seed = 20240611);

// Random invertible rational matrix (product of unit triangular factors and
// a diagonal of small rationals).
Matrix random_basis_change(int m, std::mt19937_64& rng);

}  // namespace modvol
