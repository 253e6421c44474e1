#include "modvol/checks.hpp"

#include <cmath>
#include <functional>
#include <future>
#include <sstream>

#include "modvol/report.hpp"
#include "modvol/specfile.hpp"

namespace modvol {

namespace {

std::vector<double> doubles(const std::vector<Scalar>& v) {
  std::vector<double> out;
  for (const auto& s : v) out.push_back(to_double(s));
  return out;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

bool same_bialgebra(const LieBialgebra& a, const LieBialgebra& b) {
  int m = a.g.dim();
  if (b.g.dim() != m) return false;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        if (a.g.C(i, j, k) != b.g.C(i, j, k)) return false;
  for (int i = 0; i < m; ++i)
    if (a.delta.images[i].terms() != b.delta.images[i].terms()) return false;
  return true;
}

bool same_verdicts(const ClassificationRow& a, const ClassificationRow& b) {
  return a.coisotropic == b.coisotropic && a.type == b.type && a.chi_h0_zero == b.chi_h0_zero &&
         a.invariant_volume == b.invariant_volume && a.semi_invariant == b.semi_invariant && a.mu == b.mu;
}

using CheckFn = std::function<std::pair<bool, std::string>()>;

struct Pending {
  std::string name, anchor;
  CheckFn fn;
};

}  // namespace

Matrix random_basis_change(int m, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> small(-2, 2), den(1, 3), pick(1, 3);
  Matrix L = identity_matrix(m), U = identity_matrix(m), D = zero_matrix(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < i; ++j) L[i][j] = rat(small(rng), den(rng));
    for (int j = i + 1; j < m; ++j) U[i][j] = rat(small(rng), den(rng));
    int s = small(rng) < 0 ? -1 : 1;
    D[i][i] = rat(s * pick(rng), den(rng));
  }
  return multiply(multiply(L, D), U);
}

DynamicsOutcome run_dynamics(const DynamicsCase& c, const Scalar& eta, std::optional<double> T,
                             std::optional<double> dt) {
  auto entry = find_coordinate(c.model, eta);
  if (!entry) throw std::invalid_argument("dynamics case refers to unknown model " + c.model);
  const auto& M = entry->model;
  DynamicsOutcome out;
  if (!c.vertical.empty()) {
    bool basic = basic_function_check(c.h, c.vertical);
    out.notes.push_back(std::string("q-basic: ") + (basic ? "yes" : "no"));
  }
  if (!c.morse_frame.empty()) {
    out.hessian = hessian_at(c.h, M.base_point, c.morse_frame);
    std::ostringstream os;
    os << "Hessian at base point:";
    for (const auto& row : *out.hessian) {
      os << " [";
      for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << to_string(row[j]);
      os << "]";
    }
    os << (is_zero(determinant(*out.hessian)) ? " (degenerate)" : " (nondegenerate: H-Morse)");
    out.notes.push_back(os.str());
  }
  auto Xh = hamiltonian_vf(M, c.h);
  if (c.test == DynamicsCase::Test::divergence_free) {
    auto div = divergence(M, Xh, c.log_density);
    out.preserved = div.is_zero();
    out.notes.push_back("divergence of X_h: " + div.to_string(M.vars));
    out.verdict = out.preserved ? "volume preserved" : "undecided";
  } else {
    if (!entry->left_chi || !entry->right_chi) throw std::invalid_argument(c.model + " carries no invariant fields");
    auto res = preservation_residual(M, c.h, c.log_density, Polynomial(M.n()), *entry->left_chi, *entry->right_chi,
                                     std::nullopt);
    out.notes.push_back("preservation residual (sigma = tau = 0): " + res.to_string(M.vars));
    if (res.is_zero()) {
      out.preserved = true;
      out.verdict = "volume preserved";
    } else if (c.obstruction_point) {
      // At a zero of X_h every X_h(tau) vanishes, so a nonzero residual there
      // rules out every correction tau.
      bool singular = all_zero(evaluate_field_at(Xh, *c.obstruction_point));
      out.obstruction_value = res.evaluate(*c.obstruction_point);
      out.notes.push_back(std::string("X_h at witness point: ") + (singular ? "0" : "nonzero"));
      out.notes.push_back("residual at witness point: " + to_string(*out.obstruction_value));
      out.verdict = singular && !is_zero(*out.obstruction_value) ? "no preserved volume (certificate)" : "undecided";
    } else {
      out.verdict = "undecided";
    }
  }
  out.trace = rk4_flow(M, c.h, doubles(c.x0), T.value_or(c.T), dt.value_or(c.dt), c.log_density);
  out.notes.push_back("integral of divergence: " + fmt(out.trace.divergence_integral()) +
                      ", max constraint drift: " + fmt(out.trace.max_drift()));
  return out;
}

std::vector<CheckResult> run_all_checks(const Scalar& eta, std::uint64_t seed) {
  std::vector<Pending> list;
  auto add = [&](std::string name, std::string anchor, CheckFn fn) {
    list.push_back({std::move(name), std::move(anchor), std::move(fn)});
  };
  auto verdict = [](bool ok, std::string detail = {}) { return std::make_pair(ok, std::move(detail)); };

  // Sign arbiter for the Chevalley-Eilenberg differential: runs first.
  add("ce-differential-calibration", "semi-invariant-3d: d(lambda X^1 ^ X^2 ^ X^3) = lambda X^1 ^ X^2 ^ X^3 ^ X^4", [=] {
    auto B = semi_invariant_bialgebra();
    Scalar lambda = rat(5, 3);
    auto V0 = ExteriorElement::monomial(4, Space::dual, {0, 1, 2}, lambda);
    auto dV0 = ce_differential(B.g, V0);
    auto expect = ExteriorElement::monomial(4, Space::dual, {0, 1, 2, 3}, lambda);
    auto theta0 = ExteriorElement::from_covector(basis_covector(4, 3));
    bool ok = dV0 == expect && dV0 == -wedge(theta0, V0);
    return std::make_pair(ok, "d V0 = " + dV0.to_string({"X^1", "X^2", "X^3", "X^4"}));
  });
  add("theta0-from-volume", "semi-invariant-3d: theta0 = X^4 recovered from V0", [=] {
    auto e = *find_algebraic("semi-invariant-3d", eta);
    auto V0 = ExteriorElement::monomial(4, Space::dual, {0, 1, 2}, 1);
    auto th = theta0_from_V0(e.space.bialgebra.g, e.space.h, V0);
    return std::make_pair(th.c == basis_covector(4, 3).c, describe_dual(e.space.bialgebra.g, th));
  });
  for (const char* name : {"invariant-plane", "semi-invariant-3d", "full-group"}) {
    std::string n = name;
    add("mu-witness-" + n, "multiplicative unimodularity witness for " + n, [=] {
      auto e = *find_algebraic(n, eta);
      auto rep = multiplicative_unimodularity_check(e.space);
      bool ok = rep.mu_status == MuStatus::multiplicative_unimodular && rep.mu_witness_theta0 &&
                rep.mu_witness_theta0->c == e.golden.witness->c && mu_condition_holds(e.space, *rep.mu_witness_theta0);
      return std::make_pair(ok, rep.mu_witness_theta0 ? describe_dual(e.space.bialgebra.g, *rep.mu_witness_theta0)
                                                      : std::string("no witness"));
    });
  }
  add("catalog-jacobi", "every catalog algebra and its dual satisfy Jacobi", [=] {
    for (const auto& e : algebraic_catalog(eta)) {
      if (!jacobi_check(e.space.bialgebra.g).ok) return verdict(false, e.name + " g");
      if (!jacobi_check(e.space.bialgebra.dual).ok) return verdict(false, e.name + " g*");
    }
    return verdict(true);
  });
  add("catalog-cocycle", "every catalog cocommutator is a 1-cocycle", [=] {
    for (const auto& e : algebraic_catalog(eta))
      if (!cocycle_check(e.space.bialgebra.g, e.space.bialgebra.delta).ok) return verdict(false, e.name);
    return verdict(true);
  });
  add("double-jacobi", "Drinfeld double bracket satisfies Jacobi for every catalog bialgebra", [=] {
    for (const auto& e : algebraic_catalog(eta)) {
      auto v = double_jacobi_check(e.space.bialgebra);
      if (!v.ok)
        return verdict(false, e.name + " at (" + std::to_string(v.i) + "," + std::to_string(v.j) + "," +
                                  std::to_string(v.k) + ")");
    }
    return verdict(true);
  });
  for (const auto& e : algebraic_catalog(eta)) {
    std::string n = e.name;
    add("golden-" + n, e.anchors.front(), [=] {
      auto entry = *find_algebraic(n, eta);
      auto why = golden_mismatch(classify(entry.space), entry.golden);
      bool chi_ok = !entry.chi_dual || dual_modular_character(entry.space.bialgebra).c == entry.chi_dual->c;
      if (!chi_ok) why += " chi_g*";
      return verdict(why.empty(), why.empty() ? "" : "mismatch:" + why);
    });
  }
  for (const char* table : {"sphere-quotients", "sl2-quotients"}) {
    std::string t = table;
    add("table-" + t, t + " reproduced cell by cell", [=] {
      std::vector<TableCell> cells;
      for (auto& c : compute_tables(eta))
        if (c.table == t) cells.push_back(c);
      nlohmann::json golden = builtin_golden_tables();
      nlohmann::json filtered = {{"cells", nlohmann::json::array()}};
      for (const auto& g : golden["cells"])
        for (const auto& c : cells)
          if (g["name"] == c.name) filtered["cells"].push_back(g);
      auto d = diff_tables(cells, filtered);
      std::string detail = std::to_string(d.cells) + " cells";
      for (const auto& m : d.mismatches) detail += "; " + m;
      return verdict(d.ok(), detail);
    });
  }
  add("eta-genericity", "table verdicts identical at eta = 2 and eta = 1/3", [=] {
    auto golden = builtin_golden_tables();
    for (Scalar e2 : {Scalar(2), rat(1, 3)}) {
      auto d = diff_tables(compute_tables(e2), golden);
      if (!d.ok()) return verdict(false, "eta = " + to_string(e2));
    }
    return verdict(true);
  });

  add("rmatrix-so3", "r = eta J1^J2: [r,r] != 0", [=] {
    auto g = so3_algebra();
    auto r = ExteriorElement::monomial(3, Space::primal, {0, 1}, eta);
    auto rr = schouten_square(g, r);
    return verdict(!rr.is_zero() && is_ad_invariant(g, rr), "[r,r] = " + rr.to_string(g.labels()));
  });
  for (auto s : {Sl2Structure::hyperbolic, Sl2Structure::elliptic, Sl2Structure::parabolic}) {
    add("rmatrix-" + to_string(s), to_string(s) + " r-matrix: [r,r] " +
                                       (s == Sl2Structure::parabolic ? "= 0" : "!= 0 and ad-invariant"),
        [=] {
          auto g = sl2_algebra(Sl2Basis::rotation_boost);
          auto rr = schouten_square(g, sl2_rmatrix(s, Sl2Basis::rotation_boost, eta));
          bool ok = s == Sl2Structure::parabolic ? rr.is_zero() : (!rr.is_zero() && is_ad_invariant(g, rr));
          return verdict(ok, "[r,r] = " + rr.to_string(g.labels()));
        });
    add("ladder-basis-" + to_string(s), to_string(s) + " r-matrix agrees across the two sl(2) bases", [=] {
      auto ld = make_homogeneous_space("ladder", sl2_bialgebra(s, Sl2Basis::ladder, eta), {});
      auto moved = change_basis(ld, sl2_ladder_to_rotation_boost());
      return verdict(same_bialgebra(moved.bialgebra, sl2_bialgebra(s, Sl2Basis::rotation_boost, eta)));
    });
  }
  add("dual-character-so3", "chi_g* = -2 eta J3", [=] {
    auto chi = dual_modular_character(so3_bialgebra(eta));
    return verdict(chi.c == std::vector<Scalar>{0, 0, -2 * eta}, describe(so3_algebra(), chi));
  });
  add("sln-n2-hyperbolic", "SL(n) standard structure at n = 2 is the hyperbolic structure at eta = 1", [=] {
    auto s2 = make_homogeneous_space("sl2", sln_standard(2).bialgebra, {});
    Matrix P = {{0, 0, rat(1, 2)}, {0, rat(1, 2), 0}, {rat(1, 2), 0, 0}};
    auto moved = change_basis(s2, P);
    return verdict(same_bialgebra(moved.bialgebra, sl2_bialgebra(Sl2Structure::hyperbolic, Sl2Basis::rotation_boost, 1)));
  });
  add("toda-chi-h0", "toda-n3: chi_h0 = -2 sum D_k", [=] {
    auto e = *find_algebraic("toda-n3", eta);
    auto chi = chi_h0(e.space);
    bool ok = chi.lift.c == std::vector<Scalar>{-2, -2, 0, 0, 0, 0, 0, 0};
    return verdict(ok, "lift = " + describe(e.space.bialgebra.g, chi.lift));
  });
  add("lu-crosscheck", "x_l = -chi_g* + 2 x_h0 on every coisotropic catalog entry", [=] {
    for (const auto& e : algebraic_catalog(eta))
      if (coisotropy_check(e.space) && !lu_xl_crosscheck(e.space).ok) return verdict(false, e.name);
    return verdict(true);
  });
  add("basis-change-invariance", "verdicts unchanged under random changes of basis", [=] {
    std::mt19937_64 rng(seed);
    int n = 0;
    for (const auto& e : algebraic_catalog(eta)) {
      if (e.space.bialgebra.g.dim() > 4) continue;
      auto base = classify(e.space);
      for (int k = 0; k < 4; ++k, ++n) {
        auto P = random_basis_change(e.space.bialgebra.g.dim(), rng);
        if (!same_verdicts(classify(change_basis(e.space, P)), base)) return verdict(false, e.name);
      }
    }
    return verdict(true, std::to_string(n) + " instances");
  });
  add("spec-roundtrip", "catalog entries survive serialise / parse / rebuild", [=] {
    for (const auto& e : algebraic_catalog(eta)) {
      auto doc = document_from_space(e.space);
      auto doc2 = parse_spec(serialize_spec(doc));
      if (!(doc == doc2)) return verdict(false, e.name + ": document differs");
      if (!same_verdicts(classify(build_space(doc2)), classify(e.space))) return verdict(false, e.name + ": verdicts");
    }
    return verdict(true);
  });

  for (const auto& c : coordinate_catalog(eta)) {
    std::string n = c.name;
    add("coordinate-jacobi-" + n, c.anchors.front() + " satisfies Jacobi", [=] {
      auto r = jacobi_symbolic(find_coordinate(n, eta)->model, seed);
      return verdict(r.ok, r.symbolic_zero ? "symbolic" : std::to_string(r.samples) + " sampled points");
    });
    if (!c.model.group_mult) continue;
    add("multiplicativity-" + n, n + ": multiplicative bivector, Pi(e) = 0", [=] {
      auto r = multiplicativity_spotcheck(find_coordinate(n, eta)->model, 100, seed);
      return verdict(r.identity_exact && r.max_residual < 1e-10, "max residual " + fmt(r.max_residual));
    });
    add("linearization-" + n, n + ": derivative of Pi at e is the cocommutator", [=] {
      auto e = *find_coordinate(n, eta);
      double r = linearization_vs_cocommutator(e.model, *e.bialgebra, e.frame);
      return verdict(r < 1e-6, "max residual " + fmt(r) + ", sign " + std::to_string(e.model.cobracket_sign));
    });
    add("invariant-fields-" + n, n + ": transcribed left/right chi_g* fields match the product map", [=] {
      auto e = *find_coordinate(n, eta);
      std::vector<Scalar> v(e.model.n(), Scalar(0));
      for (std::size_t a = 0; a < e.frame.size(); ++a)
        for (int i = 0; i < e.model.n(); ++i) v[i] += e.chi_dual->c[a] * e.frame[a][i];
      auto L = left_invariant_field(e.model, v), R = right_invariant_field(e.model, v);
      // compared at sample points too, as the transcription is checked pointwise
      std::mt19937_64 rng(seed);
      bool pts = true;
      for (int k = 0; k < 10; ++k) {
        auto p = sample_rational_point(e.model, rng);
        pts = pts && evaluate_field_at(L, p) == evaluate_field_at(*e.left_chi, p) &&
              evaluate_field_at(R, p) == evaluate_field_at(*e.right_chi, p);
      }
      return verdict(pts && L == *e.left_chi && R == *e.right_chi);
    });
    if (c.kernel_covector.empty()) continue;
    add("kernel-certificate-" + n, c.anchors.back(), [=] {
      auto e = *find_coordinate(n, eta);
      auto H = field_from_character_data(e.model, *e.left_chi, *e.right_chi, std::nullopt, Polynomial(e.model.n()));
      if (!(H == *e.horizontal)) return verdict(false, "horizontal field differs from transcription");
      auto cert = kernel_obstruction_verify(e.model, e.kernel_covector, H, seed);
      std::string detail = "obstruction " + cert.obstruction.to_string(e.model.vars);
      if (cert.status == KernelObstructionCertificate::Status::certified)
        detail += ", value " + to_string(cert.witness_value) + " at a rational point";
      return verdict(cert.status == KernelObstructionCertificate::Status::certified, detail);
    });
  }

  add("compartmental-field", "compartmental model: x1' = 1 - x1, x2' = x1 - 1 - x3, x3' = x3", [=] {
    auto e = *find_coordinate("compartmental", eta);
    auto c = *find_dynamics("compartmental", eta);
    auto X = hamiltonian_vf(e.model, c.h);
    std::vector<std::string> v = e.model.vars;
    std::vector<Polynomial> expect = {parse_polynomial("1 - x1", v), parse_polynomial("x1 - 1 - x3", v),
                                      parse_polynomial("x3", v)};
    return verdict(X.comp == expect, to_string(X, v));
  });
  for (const auto& c : dynamics_cases(eta)) {
    std::string n = c.name;
    add("dynamics-" + n, c.anchors.front(), [=] {
      auto dc = *find_dynamics(n, eta);
      auto out = run_dynamics(dc, eta);
      bool expect_preserved = n != "toda-n3";
      double tol = n == "canonical-2d" ? 1e-12 : (n == "compartmental" ? 1e-9 : 1e-8);
      bool ok = out.preserved == expect_preserved;
      if (expect_preserved) ok = ok && std::fabs(out.trace.divergence_integral()) < tol;
      else ok = ok && out.verdict == "no preserved volume (certificate)";
      std::string detail = out.verdict;
      for (const auto& note : out.notes) detail += "; " + note;
      return verdict(ok, detail);
    });
  }
  add("sphere-morse-hessian", "sphere H-Morse Hessian diag(1/2,1/2), dh(e) = 0, left J3 (h) = 0", [=] {
    auto c = *find_dynamics("sphere-morse", eta);
    auto M = find_coordinate("su2", eta)->model;
    auto H = hessian_at(c.h, M.base_point, c.morse_frame);
    Matrix expect = {{rat(1, 2), 0}, {0, rat(1, 2)}};
    bool critical = true;
    for (int i = 0; i < M.n(); ++i) critical = critical && is_zero(c.h.derivative(i).evaluate(M.base_point));
    return verdict(H == expect && critical && basic_function_check(c.h, c.vertical));
  });
  add("toda-singular-points", "Toda: X_h(g(a)) = 0 and H(h)(g(a)) = -4/a^2 (a^2+1)(a+1)(a-1)", [=] {
    auto e = *find_coordinate("toda-sl3", eta);
    auto c = *find_dynamics("toda-n3", eta);
    auto X = hamiltonian_vf(e.model, c.h);
    auto res = preservation_residual(e.model, c.h, Polynomial(9), Polynomial(9), *e.left_chi, *e.right_chi,
                                     std::nullopt);
    std::string detail;
    for (Scalar a : {Scalar(2), Scalar(3), rat(1, 2)}) {
      auto p = toda_point(a);
      Scalar expect = Scalar(-4) / (a * a) * (a * a + 1) * (a + 1) * (a - 1);
      Scalar got = res.evaluate(p);
      if (!all_zero(evaluate_field_at(X, p)) || got != expect)
        return verdict(false, "a = " + to_string(a) + ": " + to_string(got));
      detail += (detail.empty() ? "" : ", ") + to_string(got);
    }
    return verdict(true, "residuals " + detail);
  });
  add("elliptic-h2-basic", "elliptic H2 x Z2: quadratic Hamiltonian is basic for left P1", [=] {
    auto c = *find_dynamics("elliptic-h2", eta);
    return verdict(basic_function_check(c.h, c.vertical));
  });

  // Run concurrently, report in order.
  std::vector<std::future<std::pair<bool, std::string>>> futures;
  for (auto& p : list)
    futures.push_back(std::async(std::launch::async, [fn = p.fn]() -> std::pair<bool, std::string> {
      try {
        return fn();
      } catch (const std::exception& e) {
        return {false, std::string("exception: ") + e.what()};
      }
    }));
  std::vector<CheckResult> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    auto [ok, detail] = futures[i].get();
    out.push_back({list[i].name, list[i].anchor, ok, detail});
  }
  return out;
}

}  // namespace modvol
