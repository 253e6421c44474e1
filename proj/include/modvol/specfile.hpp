#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "modvol/homspace.hpp"
#include "modvol/poisson.hpp"

namespace modvol {

struct SpecError : std::runtime_error {
  SpecError(std::string msg, int line, int column);
  std::string message;
  int line, column;  // 1-based; 0 when not tied to a position
};

struct LinearTerm {
  Scalar coef;
  std::string label;
  bool operator==(const LinearTerm&) const = default;
};

struct WedgeTerm {
  Scalar coef;
  std::string a, b;
  bool operator==(const WedgeTerm&) const = default;
};

struct BracketLine {
  std::string a, b;
  std::vector<LinearTerm> rhs;
  bool operator==(const BracketLine&) const = default;
};

struct DeltaLine {
  std::string x;
  std::vector<WedgeTerm> rhs;
  bool operator==(const DeltaLine&) const = default;
};

struct CoordinateModelBlock {
  std::vector<std::string> vars;
  std::vector<std::tuple<std::string, std::string, Polynomial>> brackets;
  std::vector<Polynomial> constraints;
  std::vector<Scalar> base;
  std::vector<std::pair<std::string, Polynomial>> mult;  // over a.<var>, b.<var>
  std::vector<std::pair<std::string, PolyVectorField>> fields;
  bool poisson_lie = false;
  std::string variety = "none";  // none | sphere | unimodular
  bool operator==(const CoordinateModelBlock&) const = default;
};

struct SpecDocument {
  std::string name;
  std::vector<std::string> labels;
  std::vector<BracketLine> brackets;  // one line per unordered pair
  std::optional<std::vector<DeltaLine>> delta;
  std::optional<std::vector<WedgeTerm>> rmatrix;
  std::optional<std::vector<std::vector<LinearTerm>>> subalgebra;
  std::optional<CoordinateModelBlock> model;
  bool operator==(const SpecDocument&) const = default;
};

// `constants` may be referenced inside coordinate-model polynomials
// (the CLI passes eta).
SpecDocument parse_spec(const std::string& text, const std::map<std::string, Scalar>& constants = {});
SpecDocument parse_spec_file(const std::string& path, const std::map<std::string, Scalar>& constants = {});
std::string serialize_spec(const SpecDocument& doc);

LieAlgebra build_algebra(const SpecDocument& doc);
// Throws SpecError when algebra, cocommutator or subalgebra data are missing or invalid.
HomogeneousSpaceSpec build_space(const SpecDocument& doc);
PolynomialPoissonModel build_model(const SpecDocument& doc);

// Inverse of build_space, for export and round-trip testing.
SpecDocument document_from_space(const HomogeneousSpaceSpec& S);

}  // namespace modvol
