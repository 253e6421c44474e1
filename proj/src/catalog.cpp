#include "modvol/catalog.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace modvol {

namespace {

Vector vec(std::vector<Scalar> c) { return Vector{std::move(c)}; }
Covector covec(std::vector<Scalar> c) { return Covector{std::move(c)}; }

ExteriorElement biv(int m, int i, int j, const Scalar& c) {
  return ExteriorElement::monomial(m, Space::primal, {i, j}, c);
}

struct Vars {
  std::vector<std::string> names;
  std::map<std::string, Scalar> constants;
  Polynomial operator()(const std::string& text) const { return parse_polynomial(text, names, constants); }
  PolyVectorField field(const std::vector<std::string>& comps) const {
    PolyVectorField X;
    for (const auto& c : comps) X.comp.push_back((*this)(c));
    return X;
  }
  std::vector<Polynomial> form(const std::vector<std::string>& comps) const { return field(comps).comp; }
};

// group_mult written with a.<var> for the left factor and b.<var> for the right
std::vector<Polynomial> product_map(const std::vector<std::string>& vars, const std::vector<std::string>& comps) {
  std::vector<std::string> both;
  for (const auto& v : vars) both.push_back("a." + v);
  for (const auto& v : vars) both.push_back("b." + v);
  std::vector<Polynomial> out;
  for (const auto& c : comps) out.push_back(parse_polynomial(c, both));
  return out;
}

std::vector<std::string> matrix_product(int k, const std::vector<std::string>& vars) {
  std::vector<std::string> out;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      std::string s;
      for (int l = 0; l < k; ++l) {
        if (l) s += " + ";
        s += "a." + vars[i * k + l] + "*b." + vars[l * k + j];
      }
      out.push_back(s);
    }
  return out;
}

void brackets(PolynomialPoissonModel& M, const Vars& V,
              const std::vector<std::tuple<std::string, std::string, std::string>>& entries) {
  for (const auto& [a, b, p] : entries) {
    auto ia = std::find(M.vars.begin(), M.vars.end(), a) - M.vars.begin();
    auto ib = std::find(M.vars.begin(), M.vars.end(), b) - M.vars.begin();
    set_bracket(M, static_cast<int>(ia), static_cast<int>(ib), V(p));
  }
}

CatalogEntry table_entry(std::string name, std::string summary, const LieBialgebra& B, std::vector<Vector> h,
                         std::string table, std::string structure, std::string quotient, bool pl_subgroup,
                         Vector chi_dual) {
  CatalogEntry e;
  e.name = name;
  e.summary = std::move(summary);
  e.space = make_homogeneous_space(name, B, std::move(h));
  e.golden.coisotropic = true;
  e.golden.type = pl_subgroup ? SubgroupType::poisson_lie_subgroup : SubgroupType::coisotropic_only;
  // In every table cell the Poisson-Lie subgroup quotient has unimodular h⁰
  // and fails the cocycle condition; coisotropic-only quotients have χ_{h⁰} ≠ 0.
  e.golden.chi_h0_zero = pl_subgroup;
  e.golden.mu = pl_subgroup ? MuStatus::fails_condition_ii : MuStatus::fails_condition_i;
  // G and the one-dimensional H are unimodular in every cell.
  e.golden.invariant_volume = true;
  e.golden.semi_invariant = true;
  e.chi_dual = std::move(chi_dual);
  e.table = std::move(table);
  e.structure = std::move(structure);
  e.quotient = std::move(quotient);
  e.anchors = {e.table + ": " + e.quotient + " / " + e.structure};
  return e;
}

}  // namespace

std::string to_string(Sl2Structure s) {
  switch (s) {
    case Sl2Structure::hyperbolic: return "hyperbolic";
    case Sl2Structure::elliptic: return "elliptic";
    case Sl2Structure::parabolic: return "parabolic";
  }
  return "?";
}

LieAlgebra so3_algebra() {
  LieAlgebra g({"J1", "J2", "J3"});
  g.set_bracket(0, 1, 2, 1);
  g.set_bracket(1, 2, 0, 1);
  g.set_bracket(2, 0, 1, 1);
  return g;
}

LieBialgebra so3_bialgebra(const Scalar& eta) {
  auto g = so3_algebra();
  return make_bialgebra(g, cocommutator_from_rmatrix(g, biv(3, 0, 1, eta)));
}

LieAlgebra sl2_algebra(Sl2Basis b) {
  if (b == Sl2Basis::rotation_boost) {
    LieAlgebra g({"P1", "P2", "J12"});
    g.set_bracket(0, 2, 1, -1);  // [P1,J12] = -P2
    g.set_bracket(1, 2, 0, -1);  // [P2,J12] = -P1
    g.set_bracket(0, 1, 2, 1);   // [P1,P2] = J12
    return g;
  }
  LieAlgebra g({"J+", "J-", "J3"});
  g.set_bracket(2, 0, 0, 2);
  g.set_bracket(2, 1, 1, -2);
  g.set_bracket(0, 1, 2, 1);
  return g;
}

ExteriorElement sl2_rmatrix(Sl2Structure s, Sl2Basis b, const Scalar& eta) {
  if (b == Sl2Basis::rotation_boost) {
    switch (s) {
      case Sl2Structure::hyperbolic: return biv(3, 0, 1, 2 * eta);
      case Sl2Structure::elliptic: return biv(3, 2, 1, 2 * eta);
      case Sl2Structure::parabolic: return biv(3, 2, 0, eta) + biv(3, 2, 1, eta);
    }
  }
  switch (s) {
    case Sl2Structure::hyperbolic: return biv(3, 0, 1, eta);
    // ½ηJ3∧(J++J-): the same element as 2ηJ12∧P2 under J12 = ½J3, P2 = ½(J++J-)
    case Sl2Structure::elliptic: return biv(3, 2, 0, eta / 2) + biv(3, 2, 1, eta / 2);
    case Sl2Structure::parabolic: return biv(3, 2, 0, eta / 2);
  }
  throw std::logic_error("unreachable");
}

LieBialgebra sl2_bialgebra(Sl2Structure s, Sl2Basis b, const Scalar& eta) {
  auto g = sl2_algebra(b);
  return make_bialgebra(g, cocommutator_from_rmatrix(g, sl2_rmatrix(s, b, eta)));
}

Matrix sl2_ladder_to_rotation_boost() {
  return {{rat(1, 2), rat(1, 2), 0}, {rat(-1, 2), rat(1, 2), 0}, {0, 0, rat(1, 2)}};
}

LieBialgebra invariant_plane_bialgebra() {
  LieAlgebra g({"X1", "X2", "X3"});
  g.set_bracket(0, 2, 1, 1);
  g.set_bracket(1, 2, 1, -1);
  CocommutatorMap d = zero_cocommutator(3);
  d.images[2] = biv(3, 0, 1, 1);
  return make_bialgebra(g, d);
}

LieBialgebra semi_invariant_bialgebra() {
  LieAlgebra g({"X1", "X2", "X3", "X4"});
  g.set_bracket(2, 3, 2, -1);
  CocommutatorMap d = zero_cocommutator(4);
  d.images[0] = biv(4, 0, 1, 1);
  d.images[2] = biv(4, 1, 2, 1);
  return make_bialgebra(g, d);
}

std::vector<CatalogEntry> algebraic_catalog(const Scalar& eta) {
  std::vector<CatalogEntry> out;
  const std::string sphere = "sphere-quotients", sl2 = "sl2-quotients";

  auto so3 = so3_bialgebra(eta);
  Vector so3_chi = vec({0, 0, -2 * eta});
  out.push_back(table_entry("subgroup-sphere", "S^2 = SO(3)/S^1 with h = <J3>, a Poisson-Lie subgroup", so3,
                            {vec({0, 0, 1})}, sphere, "r = eta J1^J2", "subgroup sphere", true, so3_chi));
  out.push_back(table_entry("coisotropic-sphere", "S^2 = SO(3)/S^1 with h = <J1>, coisotropic only", so3,
                            {vec({1, 0, 0})}, sphere, "r = eta J1^J2", "coisotropic sphere", false, so3_chi));

  struct Column {
    Sl2Structure s;
    Vector chi_rb, chi_ladder;
    bool ads_pl, h2_pl, l2_pl;
  };
  const Column cols[] = {
      // χ_{g*}: -4ηJ12 = -2ηJ3
      {Sl2Structure::hyperbolic, vec({0, 0, -4 * eta}), vec({0, 0, -2 * eta}), true, false, false},
      // -4ηP1 = -2η(J+ - J-)
      {Sl2Structure::elliptic, vec({-4 * eta, 0, 0}), vec({-2 * eta, 2 * eta, 0}), false, true, false},
      // -2η(P1+P2) = -2ηJ+
      {Sl2Structure::parabolic, vec({-2 * eta, -2 * eta, 0}), vec({-2 * eta, 0, 0}), false, false, true},
  };
  for (const auto& c : cols) {
    auto name = to_string(c.s);
    auto rb = sl2_bialgebra(c.s, Sl2Basis::rotation_boost, eta);
    auto ld = sl2_bialgebra(c.s, Sl2Basis::ladder, eta);
    out.push_back(table_entry("ads2-" + name, "AdS2 = SL(2,R)/<J12>, " + name + " structure", rb, {vec({0, 0, 1})},
                              sl2, name, "AdS2", c.ads_pl, c.chi_rb));
    out.push_back(table_entry("h2-" + name, "H2 x Z2 = SL(2,R)/<P1>, " + name + " structure", rb, {vec({1, 0, 0})},
                              sl2, name, "H2 x Z2", c.h2_pl, c.chi_rb));
    out.push_back(table_entry("lightcone-" + name, "L2 = SL(2,R)/<J+>, " + name + " structure", ld,
                              {vec({1, 0, 0})}, sl2, name, "L2", c.l2_pl, c.chi_ladder));
  }

  {
    CatalogEntry e;
    e.name = "invariant-plane";
    e.summary = "3-dim solvable g, h = <X1>, delta(X3) = X1^X2; invariant volume and multiplicative unimodular";
    e.space = make_homogeneous_space(e.name, invariant_plane_bialgebra(), {vec({1, 0, 0})});
    e.golden = {true, SubgroupType::poisson_lie_subgroup, true, true, true, MuStatus::multiplicative_unimodular,
                covec({0, 0, 1})};
    e.chi_dual = vec({0, 0, 0});
    e.anchors = {"invariant-plane: chi_g = X^3 restricts to chi_h = 0",
                 "invariant-plane: h0 = <X^2,X^3> unimodular, witness theta0 = chi_g = X^3"};
    out.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "semi-invariant-3d";
    e.summary = "R^2 x r2 with h = <X4>; semi-invariant but no invariant volume, multiplicative unimodular";
    e.space = make_homogeneous_space(e.name, semi_invariant_bialgebra(), {vec({0, 0, 0, 1})});
    e.golden = {true, SubgroupType::poisson_lie_subgroup, true, false, true, MuStatus::multiplicative_unimodular,
                covec({0, 0, 0, 1})};
    e.chi_dual = vec({0, 0, 0, 0});
    e.anchors = {"semi-invariant-3d: chi_g = X^4 does not restrict to chi_h",
                 "semi-invariant-3d: d(lambda X^1 ^ X^2 ^ X^3) = lambda X^1 ^ X^2 ^ X^3 ^ X^4 with theta0 = X^4"};
    out.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "full-group";
    e.summary = "the semi-invariant-3d bialgebra with trivial isotropy; g* unimodular";
    e.space = make_homogeneous_space(e.name, semi_invariant_bialgebra(), {});
    e.golden = {true, SubgroupType::poisson_lie_subgroup, true, true, true, MuStatus::multiplicative_unimodular,
                covec({0, 0, 0, rat(1, 2)})};
    e.chi_dual = vec({0, 0, 0, 0});
    e.anchors = {"trivial isotropy: multiplicative unimodular iff g* unimodular, witness theta0 = chi_g / 2"};
    out.push_back(e);
  }
  {
    auto sl3 = sln_standard(3);
    CatalogEntry e;
    e.name = "toda-n3";
    e.summary = "SL(3,R)/SO(3,R) with the standard structure; coisotropic, chi_h0 != 0";
    std::vector<Vector> h;
    for (int q : sl3.q_indices) h.push_back(basis_vector(8, q));
    e.space = make_homogeneous_space(e.name, sl3.bialgebra, h);
    e.golden = {true, SubgroupType::coisotropic_only, false, true, true, MuStatus::fails_condition_i, std::nullopt};
    e.chi_dual = vec({-4, -4, 0, 0, 0, 0, 0, 0});  // -4(D1+D2)
    e.anchors = {"toda-n3: chi_h0 = -2 sum D_k, not unimodular", "toda-n3: chi_g* = -4 sum D_k"};
    out.push_back(e);
  }
  return out;
}

std::optional<CatalogEntry> find_algebraic(const std::string& name, const Scalar& eta) {
  for (auto& e : algebraic_catalog(eta))
    if (e.name == name) return e;
  return std::nullopt;
}

std::vector<Scalar> toda_point(const Scalar& a) {
  if (is_zero(a)) throw std::invalid_argument("toda_point: a must be nonzero");
  return {0, a, 0, -1 / a, 0, 0, 0, 0, 1};
}

namespace {

CoordinateEntry su2_entry(const Scalar& eta) {
  CoordinateEntry e;
  e.name = "su2";
  e.summary = "SU(2) ~ SO(3) double cover on the unit 3-sphere, r = eta J1^J2";
  std::vector<std::string> v = {"x", "y", "z", "t"};
  Vars V{v, {{"eta", eta}}};
  auto& M = e.model = empty_model("su2", v);
  brackets(M, V,
           {{"x", "y", "eta/2*(z^2 + t^2)"},
            {"x", "z", "-eta/2*y*z"},
            {"x", "t", "-eta/2*y*t"},
            {"y", "z", "eta/2*x*z"},
            {"y", "t", "eta/2*x*t"}});
  M.constraints = {V("x^2 + y^2 + z^2 + t^2 - 1")};
  M.base_point = {1, 0, 0, 0};
  M.group_mult = product_map(v, {"a.x*b.x - a.y*b.y - a.z*b.z - a.t*b.t",
                                 "a.x*b.y + a.y*b.x - a.z*b.t + a.t*b.z",
                                 "a.z*b.x - a.t*b.y + a.x*b.z + a.y*b.t",
                                 "a.z*b.y + a.t*b.x + a.x*b.t - a.y*b.z"});
  M.poisson_lie = true;
  M.cobracket_sign = -1;
  M.variety = VarietyKind::unit_sphere;
  e.bialgebra = so3_bialgebra(eta);
  // J1 ~ (i/2)σ2, J2 ~ (i/2)σ1, J3 ~ (i/2)σ3
  e.frame = {{0, 0, rat(-1, 2), 0}, {0, 0, 0, rat(1, 2)}, {0, rat(1, 2), 0, 0}};
  e.chi_dual = vec({0, 0, -2 * eta});
  e.left_chi = V.field({"eta*y", "-eta*x", "eta*t", "-eta*z"});
  e.right_chi = V.field({"eta*y", "-eta*x", "-eta*t", "eta*z"});
  e.horizontal = V.field({"0", "0", "-eta*t", "eta*z"});
  e.kernel_covector = V.form({"0", "0", "-t", "z"});
  e.calibration_notes = {
      "bracket linearises to -delta in the frame A -> (i/2)sigma; the coordinate bracket realises "
      "right(r) - left(r), recorded as cobracket_sign = -1"};
  e.anchors = {"SO(3) coordinate bracket", "SO(3) kernel obstruction eta(z^2+t^2)"};
  validate(M);
  return e;
}

PolynomialPoissonModel sl2_model(const std::string& name, const Vars& V,
                                  const std::vector<std::tuple<std::string, std::string, std::string>>& br) {
  auto M = empty_model(name, V.names);
  brackets(M, V, br);
  M.constraints = {V("x*t - y*z - 1")};
  M.base_point = {1, 0, 0, 1};
  M.group_mult = product_map(V.names, matrix_product(2, V.names));
  M.poisson_lie = true;
  M.cobracket_sign = -1;
  M.variety = VarietyKind::unimodular_matrix;
  validate(M);
  return M;
}

const char* sl2_sign_note =
    "bracket linearises to -delta in the frame A -> matrix of A; the coordinate bracket realises "
    "right(r) - left(r), recorded as cobracket_sign = -1";

std::vector<std::vector<Scalar>> rotation_boost_frame() {
  // P1 = ½(J+ - J-), P2 = ½(J+ + J-), J12 = ½ diag(1,-1)
  return {{0, rat(1, 2), rat(-1, 2), 0}, {0, rat(1, 2), rat(1, 2), 0}, {rat(1, 2), 0, 0, rat(-1, 2)}};
}

CoordinateEntry hyperbolic_entry(const Scalar& eta) {
  CoordinateEntry e;
  e.name = "sl2-hyperbolic";
  e.summary = "SL(2,R) with the hyperbolic (standard) structure r = 2 eta P1^P2";
  Vars V{{"x", "y", "z", "t"}, {{"eta", eta}}};
  e.model = sl2_model(e.name, V,
                      {{"x", "y", "eta*x*y"},
                       {"x", "z", "eta*x*z"},
                       {"x", "t", "2*eta*y*z"},
                       {"y", "t", "eta*y*t"},
                       {"z", "t", "eta*z*t"}});
  e.bialgebra = sl2_bialgebra(Sl2Structure::hyperbolic, Sl2Basis::rotation_boost, eta);
  e.frame = rotation_boost_frame();
  e.chi_dual = vec({0, 0, -4 * eta});
  e.left_chi = V.field({"-2*eta*x", "2*eta*y", "-2*eta*z", "2*eta*t"});
  e.right_chi = V.field({"-2*eta*x", "-2*eta*y", "2*eta*z", "2*eta*t"});
  e.horizontal = V.field({"0", "-2*eta*y", "2*eta*z", "0"});
  e.kernel_covector = V.form({"0", "z", "-y", "0"});
  e.calibration_notes = {sl2_sign_note};
  e.anchors = {"hyperbolic SL(2,R) bracket", "hyperbolic kernel obstruction -4 eta y z"};
  return e;
}

CoordinateEntry elliptic_entry(const Scalar& eta) {
  CoordinateEntry e;
  e.name = "sl2-elliptic";
  e.summary = "SL(2,R) with the elliptic structure r = 2 eta J12^P2";
  Vars V{{"x", "y", "z", "t"}, {{"eta", eta}}};
  e.model = sl2_model(e.name, V,
                      {{"x", "y", "eta/2*(x*(t - x) - y*(y + z))"},
                       {"x", "z", "eta/2*(x*(x - t) + z*(y + z))"},
                       {"x", "t", "eta/2*(x - t)*(y - z)"},
                       {"y", "z", "eta/2*(x + t)*(y + z)"},
                       {"y", "t", "eta/2*(-t*(x - t) + y*(y + z))"},
                       {"z", "t", "eta/2*(t*(x - t) - z*(y + z))"}});
  e.bialgebra = sl2_bialgebra(Sl2Structure::elliptic, Sl2Basis::rotation_boost, eta);
  e.frame = rotation_boost_frame();
  e.chi_dual = vec({-4 * eta, 0, 0});
  e.left_chi = V.field({"2*eta*y", "-2*eta*x", "2*eta*t", "-2*eta*z"});
  e.right_chi = V.field({"-2*eta*z", "-2*eta*t", "2*eta*x", "2*eta*y"});
  e.horizontal = V.field({"-eta*(y + z)", "eta*(x - t)", "eta*(x - t)", "eta*(y + z)"});
  e.kernel_covector = V.form({"-(y + z)", "x - t", "x - t", "y + z"});
  e.calibration_notes = {sl2_sign_note};
  e.anchors = {"elliptic SL(2,R) bracket", "elliptic kernel obstruction 2 eta((x-t)^2+(y+z)^2)"};
  return e;
}

CoordinateEntry parabolic_entry(const Scalar& eta) {
  CoordinateEntry e;
  e.name = "sl2-parabolic";
  e.summary = "SL(2,R) with the parabolic (triangular) structure r = eta/2 J3^J+";
  Vars V{{"x", "y", "z", "t"}, {{"eta", eta}}};
  e.model = sl2_model(e.name, V,
                      {{"x", "y", "eta/2*(-x*(x - t) - y*z)"},
                       {"x", "z", "eta/2*z^2"},
                       {"x", "t", "-eta/2*(x - t)*z"},
                       {"y", "z", "eta/2*(x + t)*z"},
                       {"y", "t", "eta/2*(-t*(x - t) + y*z)"},
                       {"z", "t", "-eta/2*z^2"}});
  e.bialgebra = sl2_bialgebra(Sl2Structure::parabolic, Sl2Basis::ladder, eta);
  e.frame = {{0, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, -1}};
  e.chi_dual = vec({-2 * eta, 0, 0});
  e.left_chi = V.field({"0", "-2*eta*x", "0", "-2*eta*z"});
  e.right_chi = V.field({"-2*eta*z", "-2*eta*t", "0", "0"});
  e.horizontal = V.field({"-eta*z", "eta*(x - t)", "0", "eta*z"});
  e.kernel_covector = V.form({"-z", "0", "x - t", "z"});
  e.calibration_notes = {sl2_sign_note,
                         "kernel covector (-z, 0, x-t, z); the constant-entry covector (-1, 0, x-t, 1) "
                         "is not in the kernel of the bracket"};
  e.anchors = {"parabolic SL(2,R) bracket", "parabolic kernel obstruction 2 eta z^2"};
  return e;
}

CoordinateEntry toda_entry() {
  CoordinateEntry e;
  e.name = "toda-sl3";
  e.summary = "SL(3,R) with the standard structure in matrix entries a_ij";
  std::vector<std::string> v;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) v.push_back("a" + std::to_string(i) + std::to_string(j));
  Vars V{v, {}};
  auto& M = e.model = empty_model(e.name, v);
  auto sgn = [](int k) { return (k > 0) - (k < 0); };
  // {a_ij, a_kl} = (ε(i-k) - ε(l-j)) a_il a_kj
  for (int p = 0; p < 9; ++p)
    for (int q = p + 1; q < 9; ++q) {
      int i = p / 3, j = p % 3, k = q / 3, l = q % 3;
      int c = sgn(i - k) - sgn(l - j);
      if (c == 0) continue;
      set_bracket(M, p, q,
                  Scalar(c) * (Polynomial::variable(9, i * 3 + l) * Polynomial::variable(9, k * 3 + j)));
    }
  M.constraints = {V("a11*(a22*a33 - a23*a32) - a12*(a21*a33 - a23*a31) + a13*(a21*a32 - a22*a31) - 1")};
  M.base_point = {1, 0, 0, 0, 1, 0, 0, 0, 1};
  M.group_mult = product_map(v, matrix_product(3, v));
  M.poisson_lie = true;
  M.cobracket_sign = 1;
  M.variety = VarietyKind::unimodular_matrix;
  validate(M);

  auto sl3 = sln_standard(3);
  e.bialgebra = sl3.bialgebra;
  for (const auto& B : sl3.basis_matrices) {
    std::vector<Scalar> f;
    for (const auto& row : B) f.insert(f.end(), row.begin(), row.end());
    e.frame.push_back(f);
  }
  e.chi_dual = vec({-4, -4, 0, 0, 0, 0, 0, 0});
  e.left_chi = V.field({"-4*a11", "0", "4*a13", "-4*a21", "0", "4*a23", "-4*a31", "0", "4*a33"});
  e.right_chi = V.field({"-4*a11", "-4*a12", "-4*a13", "0", "0", "0", "4*a31", "4*a32", "4*a33"});
  e.horizontal = rat(1, 2) * (*e.right_chi - *e.left_chi);
  e.calibration_notes = {
      "bracket {a_ij,a_kl} = (sgn(i-k) - sgn(l-j)) a_il a_kj; the alternating-sign form (-1)^(i-k) "
      "fails the Jacobi identity",
      "bracket linearises to +delta in the frame A -> matrix of A (for n = 2 it is the negative of the "
      "hyperbolic coordinate bracket), recorded as cobracket_sign = +1"};
  e.anchors = {"Toda lattice on SL(3,R)"};
  return e;
}

CoordinateEntry compartmental_entry() {
  CoordinateEntry e;
  e.name = "compartmental";
  e.summary = "quotient of the semi-invariant-3d group by <X4>; a compartmental epidemic model";
  Vars V{{"x1", "x2", "x3"}, {}};
  auto& M = e.model = empty_model(e.name, V.names);
  brackets(M, V, {{"x1", "x2", "x1 - 1"}, {"x2", "x3", "x3"}});
  validate(M);
  e.anchors = {"compartmental model bracket"};
  return e;
}

CoordinateEntry canonical_entry() {
  CoordinateEntry e;
  e.name = "canonical-2d";
  e.summary = "the canonical plane {q,p} = 1";
  Vars V{{"q", "p"}, {}};
  auto& M = e.model = empty_model(e.name, V.names);
  brackets(M, V, {{"q", "p", "1"}});
  validate(M);
  e.anchors = {"Liouville baseline"};
  return e;
}

}  // namespace

std::vector<CoordinateEntry> coordinate_catalog(const Scalar& eta) {
  return {su2_entry(eta),  hyperbolic_entry(eta),  elliptic_entry(eta), parabolic_entry(eta),
          toda_entry(),    compartmental_entry(), canonical_entry()};
}

std::optional<CoordinateEntry> find_coordinate(const std::string& name, const Scalar& eta) {
  for (auto& e : coordinate_catalog(eta))
    if (e.name == name) return e;
  return std::nullopt;
}

std::vector<DynamicsCase> dynamics_cases(const Scalar& eta) {
  std::vector<DynamicsCase> out;
  {
    DynamicsCase c;
    Vars V{{"x1", "x2", "x3"}, {}};
    c.name = "compartmental";
    c.summary = "h = x1+x2+x3 on the compartmental quotient, volume dx1^dx2^dx3";
    c.model = "compartmental";
    c.h = V("x1 + x2 + x3");
    c.log_density = Polynomial(3);
    c.x0 = {1, 1, 1};
    c.test = DynamicsCase::Test::divergence_free;
    c.anchors = {"compartmental model preserves dx1^dx2^dx3"};
    out.push_back(c);
  }
  {
    DynamicsCase c;
    Vars V{{"q", "p"}, {}};
    c.name = "canonical-2d";
    c.summary = "harmonic oscillator on the canonical plane";
    c.model = "canonical-2d";
    c.h = V("(q^2 + p^2)/2");
    c.log_density = Polynomial(2);
    c.x0 = {1, 0};
    c.test = DynamicsCase::Test::divergence_free;
    c.anchors = {"Liouville baseline"};
    out.push_back(c);
  }
  {
    auto su2 = su2_entry(eta);
    Vars V{su2.model.vars, {{"eta", eta}}};
    DynamicsCase c;
    c.name = "sphere-morse";
    c.summary = "h = (x^2+y^2)(z^2+t^2) on the subgroup sphere";
    c.model = "su2";
    c.h = V("(x^2 + y^2)*(z^2 + t^2)");
    c.log_density = Polynomial(4);
    c.x0 = {rat(1, 2), rat(1, 2), rat(1, 2), rat(1, 2)};
    c.test = DynamicsCase::Test::preservation;
    c.vertical = {V.field({"-y/2", "x/2", "-t/2", "z/2"})};  // left-invariant J3
    c.morse_frame = {left_invariant_field(su2.model, su2.frame[0]), left_invariant_field(su2.model, su2.frame[1])};
    c.anchors = {"sphere H-Morse function", "sphere H-Morse Hessian diag(1/2,1/2)"};
    out.push_back(c);
  }
  {
    Vars V{{"x", "y", "z", "t"}, {{"eta", eta}}};
    DynamicsCase c;
    c.name = "elliptic-h2";
    c.summary = "h = (x^2+y^2+z^2+t^2)/2 on H2 x Z2 with the elliptic structure";
    c.model = "sl2-elliptic";
    c.h = V("(x^2 + y^2 + z^2 + t^2)/2");
    c.log_density = Polynomial(4);
    c.x0 = {1, rat(1, 2), 0, 1};
    c.T = 1;
    c.test = DynamicsCase::Test::preservation;
    c.vertical = {V.field({"-y/2", "x/2", "-t/2", "z/2"})};  // left-invariant P1
    c.anchors = {"elliptic H2 x Z2 quadratic Hamiltonian preserves the invariant volume"};
    out.push_back(c);
  }
  {
    auto toda = toda_entry();
    Vars V{toda.model.vars, {}};
    DynamicsCase c;
    c.name = "toda-n3";
    c.summary = "Toda Hamiltonian Tr(AA^T) on SL(3,R)/SO(3,R)";
    c.model = "toda-sl3";
    c.h = V("a11^2 + a12^2 + a13^2 + a21^2 + a22^2 + a23^2 + a31^2 + a32^2 + a33^2");
    c.log_density = Polynomial(9);
    c.x0 = {1, rat(1, 10), 0, 0, 1, 0, 0, 0, 1};
    c.T = 1;
    c.test = DynamicsCase::Test::preservation;
    c.obstruction_point = toda_point(2);
    c.anchors = {"Toda singular point g(a)", "Toda horizontal field -4/a^2 (a^2+1)(a+1)(a-1)"};
    out.push_back(c);
  }
  return out;
}

std::optional<DynamicsCase> find_dynamics(const std::string& name, const Scalar& eta) {
  for (auto& c : dynamics_cases(eta))
    if (c.name == name) return c;
  return std::nullopt;
}

}  // namespace modvol
