#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modvol/catalog.hpp"
#include "json.hpp"

namespace modvol {

struct AnalysisReport {
  std::string name;
  ClassificationRow row;
  std::optional<UnimodularityReport> mu;  // present for coisotropic quotients
  InvariantVolumeResult volume;
  SemiInvariantSolutions semi;
  Covector chi_g;
  Vector chi_dual;
  std::vector<Scalar> chi_h;
  std::vector<std::string> anchors;
  HomogeneousSpaceSpec space;
};

AnalysisReport analyze(const HomogeneousSpaceSpec& S, std::vector<std::string> anchors = {});
nlohmann::json to_json(const AnalysisReport& r);
std::string to_text(const AnalysisReport& r);

// Empty string when the row agrees with the golden verdict.
std::string golden_mismatch(const ClassificationRow& row, const GoldenVerdict& golden);

struct TableCell {
  std::string name, table, structure, quotient;
  ClassificationRow computed;
};
std::vector<TableCell> compute_tables(const Scalar& eta);
nlohmann::json builtin_golden_tables();

struct TableDiff {
  int cells = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty() && cells > 0; }
};
// Throws std::invalid_argument when the golden document is malformed.
TableDiff diff_tables(const std::vector<TableCell>& cells, const nlohmann::json& golden);
std::string render_tables(const std::vector<TableCell>& cells);

}  // namespace modvol
