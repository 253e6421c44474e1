#include "modvol/report.hpp"

#include <sstream>
#include <stdexcept>

namespace modvol {

namespace {

std::string join_values(const std::vector<Scalar>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

}  // namespace

AnalysisReport analyze(const HomogeneousSpaceSpec& S, std::vector<std::string> anchors) {
  AnalysisReport r;
  r.name = S.name;
  r.space = S;
  r.row = classify(S);
  if (r.row.coisotropic) r.mu = multiplicative_unimodularity_check(S);
  r.volume = invariant_volume_exists(S);
  r.semi = semi_invariant_solutions(S);
  r.chi_g = modular_character(S.bialgebra.g);
  r.chi_dual = dual_modular_character(S.bialgebra);
  r.chi_h = subalgebra_modular_character(S.bialgebra.g, S.h);
  r.anchors = std::move(anchors);
  return r;
}

nlohmann::json to_json(const AnalysisReport& r) {
  const auto& g = r.space.bialgebra.g;
  nlohmann::json j;
  j["name"] = r.name;
  j["coisotropic"] = r.row.coisotropic;
  j["subgroup_type"] = to_string(r.row.type);
  j["chi_h0_zero"] = r.row.chi_h0_zero ? nlohmann::json(*r.row.chi_h0_zero) : nlohmann::json(nullptr);
  j["invariant_volume"] = r.row.invariant_volume;
  j["semi_invariant"] = r.row.semi_invariant;
  j["mu_status"] = r.row.mu ? nlohmann::json(to_string(*r.row.mu)) : nlohmann::json(nullptr);
  j["witness_theta0"] = r.row.witness ? nlohmann::json(describe_dual(g, *r.row.witness)) : nlohmann::json(nullptr);
  j["anchors"] = r.anchors;
  return j;
}

std::string to_text(const AnalysisReport& r) {
  const auto& S = r.space;
  const auto& g = S.bialgebra.g;
  std::ostringstream os;
  os << "space: " << r.name << "\n";
  os << "  dim g = " << g.dim() << ", dim h = " << S.h.dim() << "\n";
  os << "  h basis:";
  if (S.h.basis.empty()) os << " (trivial)";
  for (const auto& v : S.h.basis) os << " [" << describe(g, v) << "]";
  os << "\n";
  os << "  chi_g = " << describe_dual(g, r.chi_g) << ", chi_h = " << join_values(r.chi_h)
     << ", chi_g* = " << describe(g, r.chi_dual) << "\n";
  os << "  coisotropic: " << (r.row.coisotropic ? "yes" : "no") << " (" << to_string(r.row.type) << ")\n";
  if (r.mu) {
    const auto& chi = r.mu->chi;
    os << "  h0 basis:";
    for (const auto& xi : chi.h0_basis) os << " [" << describe_dual(g, xi) << "]";
    os << "\n  chi_h0 on h0 basis = " << join_values(chi.on_h0) << (chi.zero ? " (zero)" : " (nonzero)") << "\n";
    if (!chi.zero) os << "  chi_h0 lift x_h0 = " << describe(g, chi.lift) << "\n";
  }
  os << "  invariant volume: " << (r.volume.exists ? "yes" : "no");
  if (r.volume.exists) os << ", V0 = " << r.volume.certificate.V0.to_string(g.labels());
  os << "\n  semi-invariant volume: " << (r.semi.feasible ? "yes" : "no");
  if (r.semi.feasible)
    os << ", theta0 = " << describe_dual(g, r.semi.particular) << " (+ span of " << r.semi.homogeneous.size()
       << " closed forms vanishing on h; algebra level, G simply connected)";
  os << "\n";
  if (r.mu) {
    os << "  multiplicative unimodularity: " << to_string(r.mu->mu_status) << "\n";
    if (r.mu->mu_witness_theta0) os << "  witness theta0 = " << describe_dual(g, *r.mu->mu_witness_theta0) << "\n";
    if (r.mu->cocycle_solution_space_dim >= 0)
      os << "  cocycle condition solution space dim = " << r.mu->cocycle_solution_space_dim << "\n";
    os << "  group-level integration assumes G simply connected\n";
  }
  for (const auto& a : r.anchors) os << "  anchor: " << a << "\n";
  return os.str();
}

std::string golden_mismatch(const ClassificationRow& row, const GoldenVerdict& golden) {
  std::ostringstream os;
  if (row.coisotropic != golden.coisotropic) os << " coisotropic";
  if (row.type != golden.type) os << " subgroup_type(" << to_string(row.type) << ")";
  if (row.chi_h0_zero != golden.chi_h0_zero) os << " chi_h0_zero";
  if (row.invariant_volume != golden.invariant_volume) os << " invariant_volume";
  if (row.semi_invariant != golden.semi_invariant) os << " semi_invariant";
  if (row.mu != golden.mu) os << " mu_status";
  if (golden.witness && (!row.witness || row.witness->c != golden.witness->c)) os << " witness_theta0";
  return os.str();
}

std::vector<TableCell> compute_tables(const Scalar& eta) {
  std::vector<TableCell> out;
  for (const auto& e : algebraic_catalog(eta)) {
    if (e.table.empty()) continue;
    out.push_back({e.name, e.table, e.structure, e.quotient, classify(e.space)});
  }
  return out;
}

nlohmann::json builtin_golden_tables() {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& e : algebraic_catalog(1)) {
    if (e.table.empty()) continue;
    nlohmann::json c;
    c["name"] = e.name;
    c["subgroup_type"] = to_string(e.golden.type);
    c["chi_h0_zero"] = *e.golden.chi_h0_zero;
    c["mu_status"] = to_string(*e.golden.mu);
    cells.push_back(c);
  }
  return {{"cells", cells}};
}

TableDiff diff_tables(const std::vector<TableCell>& cells, const nlohmann::json& golden) {
  if (!golden.is_object() || !golden.contains("cells") || !golden["cells"].is_array())
    throw std::invalid_argument("golden document needs a \"cells\" array");
  TableDiff d;
  std::vector<bool> used(cells.size(), false);
  for (const auto& g : golden["cells"]) {
    if (!g.is_object() || !g.contains("name") || !g["name"].is_string() || !g.contains("subgroup_type") ||
        !g.contains("chi_h0_zero") || !g.contains("mu_status"))
      throw std::invalid_argument("golden cell needs name, subgroup_type, chi_h0_zero, mu_status");
    auto name = g["name"].get<std::string>();
    std::size_t k = 0;
    while (k < cells.size() && cells[k].name != name) ++k;
    if (k == cells.size()) {
      d.mismatches.push_back(name + ": not a table cell");
      continue;
    }
    used[k] = true;
    ++d.cells;
    const auto& row = cells[k].computed;
    std::string why;
    if (g["subgroup_type"] != to_string(row.type)) why += " subgroup_type";
    if (!row.chi_h0_zero || g["chi_h0_zero"] != *row.chi_h0_zero) why += " chi_h0_zero";
    if (!row.mu || g["mu_status"] != to_string(*row.mu)) why += " mu_status";
    if (!why.empty()) d.mismatches.push_back(name + ":" + why);
  }
  for (std::size_t k = 0; k < cells.size(); ++k)
    if (!used[k]) d.mismatches.push_back(cells[k].name + ": missing from golden data");
  return d;
}

std::string render_tables(const std::vector<TableCell>& cells) {
  std::ostringstream os;
  std::string current;
  for (const auto& c : cells) {
    if (c.table != current) {
      current = c.table;
      os << "== " << current << " ==\n";
    }
    const auto& r = c.computed;
    os << "  " << c.quotient << " | " << c.structure << " | "
       << (r.type == SubgroupType::poisson_lie_subgroup ? "PL subgroup" : "coisotropic subgroup") << " | chi_h0 "
       << (r.chi_h0_zero.value_or(false) ? "= 0" : "!= 0") << " | "
       << (r.mu == MuStatus::fails_condition_ii  ? "not M.U. (cocycle condition fails)"
           : r.mu == MuStatus::fails_condition_i ? "not unimodular (h0 not unimodular)"
                                                 : (r.mu ? to_string(*r.mu) : "not coisotropic"))
       << "\n";
  }
  return os.str();
}

}  // namespace modvol
