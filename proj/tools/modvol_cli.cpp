#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "modvol/checks.hpp"
#include "modvol/report.hpp"
#include "modvol/specfile.hpp"

using namespace modvol;

namespace {

constexpr int kOk = 0, kVerifyFail = 1, kInputError = 2;

struct Globals {
  std::string eta_text = "1";
  Scalar eta = 1;
  std::uint64_t seed = 20240611;
  bool json = false;
};

int cmd_analyze(const Globals& G, const std::string& target) {
  std::optional<CatalogEntry> entry;
  HomogeneousSpaceSpec space;
  std::optional<PolynomialPoissonModel> model;
  std::vector<std::string> anchors;
  if (std::filesystem::exists(target)) {
    auto doc = parse_spec_file(target, {{"eta", G.eta}});
    space = build_space(doc);
    if (doc.model) model = build_model(doc);
    anchors.push_back("spec file " + std::filesystem::path(target).filename().string());
  } else {
    entry = find_algebraic(target, G.eta);
    if (!entry) {
      std::cerr << "error: '" << target << "' is neither a file nor a catalog entry (try 'catalog list')\n";
      return kInputError;
    }
    space = entry->space;
    anchors = entry->anchors;
  }
  auto rep = analyze(space, anchors);
  int code = kOk;
  std::string mismatch;
  if (entry) {
    mismatch = golden_mismatch(rep.row, entry->golden);
    if (!mismatch.empty()) code = kVerifyFail;
  }
  std::optional<JacobiReport> jac;
  if (model) {
    jac = jacobi_symbolic(*model, G.seed);
    if (!jac->ok) code = kVerifyFail;
  }
  if (G.json) {
    auto j = to_json(rep);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << to_text(rep);
    if (entry) std::cout << "  golden verdicts: " << (mismatch.empty() ? "match" : "MISMATCH" + mismatch) << "\n";
    if (model)
      std::cout << "  coordinate model: " << model->n() << " variables, Jacobi "
                << (jac->ok ? (jac->symbolic_zero ? "holds identically" : "holds at sampled points") : "FAILS")
                << "\n";
  }
  return code;
}

int cmd_tables(const Globals& G, const std::string& golden_path) {
  nlohmann::json golden;
  if (golden_path.empty()) {
    golden = builtin_golden_tables();
  } else {
    std::ifstream in(golden_path);
    if (!in) {
      std::cerr << "error: cannot open golden file '" << golden_path << "'\n";
      return kInputError;
    }
    try {
      golden = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      std::cerr << "error: golden file is not valid JSON: " << e.what() << "\n";
      return kInputError;
    }
  }
  auto cells = compute_tables(G.eta);
  TableDiff d;
  try {
    d = diff_tables(cells, golden);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  if (G.json) {
    nlohmann::json out;
    out["eta"] = G.eta_text;
    out["cells"] = nlohmann::json::array();
    for (const auto& c : cells)
      out["cells"].push_back({{"name", c.name},
                              {"table", c.table},
                              {"subgroup_type", to_string(c.computed.type)},
                              {"chi_h0_zero", *c.computed.chi_h0_zero},
                              {"mu_status", to_string(*c.computed.mu)}});
    out["mismatches"] = d.mismatches;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << render_tables(cells);
    if (d.ok()) std::cout << "all " << d.cells << " cells match the golden data (eta = " << G.eta_text << ")\n";
    for (const auto& m : d.mismatches) std::cout << "MISMATCH " << m << "\n";
  }
  return d.ok() ? kOk : kVerifyFail;
}

int cmd_dynamics(const Globals& G, const std::string& name, std::optional<double> T, std::optional<double> dt,
                 const std::string& out_path) {
  auto c = find_dynamics(name, G.eta);
  if (!c) {
    std::cerr << "error: unknown dynamics case '" << name << "' (try 'catalog list')\n";
    return kInputError;
  }
  if ((T && !(*T >= 0)) || (dt && !(*dt > 0))) {
    std::cerr << "error: need T >= 0 and dt > 0\n";
    return kInputError;
  }
  DynamicsOutcome out;
  try {
    out = run_dynamics(*c, G.eta, T, dt);
  } catch (const FlowError& e) {
    std::cerr << "integration aborted: " << e.what() << "\n";
    return kVerifyFail;
  }
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return kInputError;
    }
    write_csv(out.trace, find_coordinate(c->model, G.eta)->model.vars, f);
  }
  if (G.json) {
    nlohmann::json j = {{"case", c->name},
                        {"verdict", out.verdict},
                        {"divergence_integral", out.trace.divergence_integral()},
                        {"max_constraint_drift", out.trace.max_drift()},
                        {"steps", out.trace.t.empty() ? 0 : out.trace.t.size() - 1},
                        {"notes", out.notes}};
    if (out.obstruction_value) j["residual_at_witness"] = to_string(*out.obstruction_value);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << c->name << ": " << c->summary << "\n";
    for (const auto& n : out.notes) std::cout << "  " << n << "\n";
    std::cout << "verdict: " << out.verdict << "\n";
    if (!out_path.empty()) std::cout << "trace written to " << out_path << "\n";
  }
  return kOk;
}

int cmd_verify_all(const Globals& G) {
  auto results = run_all_checks(G.eta, G.seed);
  int failed = 0;
  for (const auto& r : results) failed += !r.ok;
  if (G.json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : results)
      j.push_back({{"check", r.name}, {"anchor", r.anchor}, {"ok", r.ok}, {"detail", r.detail}});
    std::cout << nlohmann::json{{"checks", j}, {"failed", failed}}.dump(2) << "\n";
  } else {
    std::cout << "coverage manifest (" << results.size() << " checks, eta = " << G.eta_text << ")\n";
    for (const auto& r : results) {
      std::cout << (r.ok ? "PASS " : "FAIL ") << r.name << "  [" << r.anchor << "]";
      if (!r.detail.empty()) std::cout << "  " << r.detail;
      std::cout << "\n";
    }
    std::cout << results.size() - failed << "/" << results.size() << " checks passed\n";
  }
  return failed ? kVerifyFail : kOk;
}

int cmd_catalog_list(const Globals& G) {
  auto alg = algebraic_catalog(G.eta);
  auto coord = coordinate_catalog(G.eta);
  auto dyn = dynamics_cases(G.eta);
  if (G.json) {
    nlohmann::json j;
    for (const auto& e : alg) j["homogeneous_spaces"].push_back({{"name", e.name}, {"summary", e.summary}});
    for (const auto& e : coord) j["coordinate_models"].push_back({{"name", e.name}, {"summary", e.summary}});
    for (const auto& e : dyn) j["dynamics"].push_back({{"name", e.name}, {"summary", e.summary}});
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  std::cout << "homogeneous spaces (analyze):\n";
  for (const auto& e : alg) std::cout << "  " << e.name << "  " << e.summary << "\n";
  std::cout << "coordinate models:\n";
  for (const auto& e : coord) std::cout << "  " << e.name << "  " << e.summary << "\n";
  std::cout << "dynamics cases (dynamics):\n";
  for (const auto& e : dyn) std::cout << "  " << e.name << "  " << e.summary << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"modvol: volume forms and unimodularity of Poisson homogeneous spaces"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals G;
  app.add_option("--eta", G.eta_text, "deformation parameter as p/q")->capture_default_str();
  app.add_option("--seed", G.seed, "seed for sampling")->capture_default_str();
  app.add_flag("--json", G.json, "machine-readable output");

  std::string target;
  auto* analyze = app.add_subcommand("analyze", "analyze a catalog entry or a spec file");
  analyze->add_option("target", target, "catalog name or spec file path")->required();

  std::string golden;
  auto* tables = app.add_subcommand("tables", "recompute the SO(3) and SL(2,R) quotient tables");
  tables->add_option("--golden", golden, "golden JSON to diff against (default: built in)");

  std::string dcase, out_path;
  std::optional<double> T, dt;
  auto* dynamics = app.add_subcommand("dynamics", "run a catalog Hamiltonian flow");
  dynamics->add_option("case", dcase, "dynamics case name")->required();
  dynamics->add_option("--T", T, "duration");
  dynamics->add_option("--dt", dt, "RK4 step");
  dynamics->add_option("--out", out_path, "CSV trace path");

  auto* verify = app.add_subcommand("verify-all", "run every check and print the coverage manifest");

  auto* catalog = app.add_subcommand("catalog", "catalog operations");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "list catalog entries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    G.eta = parse_rational(G.eta_text);
  } catch (const std::exception&) {
    std::cerr << "error: --eta expects a rational p/q, got '" << G.eta_text << "'\n";
    return kInputError;
  }
  if (is_zero(G.eta)) {
    std::cerr << "error: --eta must be nonzero\n";
    return kInputError;
  }

  try {
    if (*analyze) return cmd_analyze(G, target);
    if (*tables) return cmd_tables(G, golden);
    if (*dynamics) return cmd_dynamics(G, dcase, T, dt, out_path);
    if (*verify) return cmd_verify_all(G);
    if (*list) return cmd_catalog_list(G);
  } catch (const SpecError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFail;
  }
  return kInputError;
}
