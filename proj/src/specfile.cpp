#include "modvol/specfile.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace modvol {

SpecError::SpecError(std::string msg, int line, int column)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg
                                  : msg),
      message(std::move(msg)),
      line(line),
      column(column) {}

namespace {

struct Token {
  std::string text;
  int col;  // 1-based
};

std::vector<Token> tokenize(const std::string& s, int offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i >= s.size()) break;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    out.push_back({s.substr(i, j - i), offset + static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int leading_ws(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  return b == std::string::npos ? 0 : static_cast<int>(b);
}

enum class Section { top, algebra, delta, rmatrix, subalgebra, model };

class SpecParser {
 public:
  explicit SpecParser(const std::map<std::string, Scalar>& constants) : constants_(constants) {}

  SpecDocument run(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_;
      auto hash = raw.find('#');
      if (hash != std::string::npos) raw = raw.substr(0, hash);
      if (trim(raw).empty()) continue;
      line(raw);
    }
    if (doc_.model) finish_model();
    return doc_;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, int col) const { throw SpecError(msg, line_, col); }

  Scalar rational(const Token& t) const {
    if (!is_rational_literal(t.text)) fail("not a rational literal: '" + t.text + "'", t.col);
    return parse_rational(t.text);
  }

  int label_index(const std::string& label, int col) const {
    for (std::size_t i = 0; i < doc_.labels.size(); ++i)
      if (doc_.labels[i] == label) return static_cast<int>(i);
    fail("unknown label '" + label + "'", col);
  }

  std::vector<LinearTerm> linear_terms(const std::vector<Token>& toks) const {
    std::vector<LinearTerm> out;
    if (toks.size() == 1 && toks[0].text == "0") return out;
    if (toks.size() % 2) fail("expected coefficient/label pairs", toks.empty() ? 1 : toks.back().col);
    for (std::size_t i = 0; i < toks.size(); i += 2) {
      Scalar c = rational(toks[i]);
      label_index(toks[i + 1].text, toks[i + 1].col);
      out.push_back({c, toks[i + 1].text});
    }
    return out;
  }

  std::vector<WedgeTerm> wedge_terms(const std::vector<Token>& toks) const {
    std::vector<WedgeTerm> out;
    if (toks.size() == 1 && toks[0].text == "0") return out;
    if (toks.size() % 2) fail("expected coefficient/wedge pairs", toks.empty() ? 1 : toks.back().col);
    for (std::size_t i = 0; i < toks.size(); i += 2) {
      Scalar c = rational(toks[i]);
      const auto& w = toks[i + 1];
      auto caret = w.text.find('^');
      if (caret == std::string::npos) fail("expected a wedge A^B", w.col);
      std::string a = w.text.substr(0, caret), b = w.text.substr(caret + 1);
      label_index(a, w.col);
      label_index(b, w.col + static_cast<int>(caret) + 1);
      if (a == b) fail("wedge of a label with itself", w.col);
      out.push_back({c, a, b});
    }
    return out;
  }

  void line(const std::string& raw) {
    std::string t = trim(raw);
    if (t.front() == '[') {
      if (t.back() != ']') fail("unterminated section header", leading_ws(raw) + 1);
      std::string s = t.substr(1, t.size() - 2);
      if (s == "algebra") {
        section_ = Section::algebra;
      } else if (s == "delta") {
        if (doc_.delta) fail("duplicate [delta] section", 1);
        doc_.delta.emplace();
        section_ = Section::delta;
      } else if (s == "rmatrix") {
        if (doc_.rmatrix) fail("duplicate [rmatrix] section", 1);
        doc_.rmatrix.emplace();
        section_ = Section::rmatrix;
      } else if (s == "subalgebra") {
        if (doc_.subalgebra) fail("duplicate [subalgebra] section", 1);
        doc_.subalgebra.emplace();
        section_ = Section::subalgebra;
      } else if (s == "coordinate_model") {
        if (doc_.model) fail("duplicate [coordinate_model] section", 1);
        doc_.model.emplace();
        section_ = Section::model;
      } else {
        fail("unknown section [" + s + "]", leading_ws(raw) + 2);
      }
      if (section_ != Section::algebra && section_ != Section::model && !have_labels_)
        fail("section needs the [algebra] labels first", 1);
      return;
    }
    switch (section_) {
      case Section::top: top_line(raw); break;
      case Section::algebra: algebra_line(raw); break;
      case Section::delta: delta_line(raw); break;
      case Section::rmatrix: {
        auto terms = wedge_terms(tokenize(raw, 0));
        doc_.rmatrix->insert(doc_.rmatrix->end(), terms.begin(), terms.end());
        break;
      }
      case Section::subalgebra: doc_.subalgebra->push_back(linear_terms(tokenize(raw, 0))); break;
      case Section::model: model_line(raw); break;
    }
  }

  // "key: value" with the value's column offset
  std::pair<std::string, std::pair<std::string, int>> key_value(const std::string& raw) const {
    auto colon = raw.find(':');
    if (colon == std::string::npos) fail("expected 'key: value'", leading_ws(raw) + 1);
    return {trim(raw.substr(0, colon)), {raw.substr(colon + 1), static_cast<int>(colon) + 1}};
  }

  void top_line(const std::string& raw) {
    auto [k, v] = key_value(raw);
    if (k != "name") fail("unknown key '" + k + "' before the first section", leading_ws(raw) + 1);
    doc_.name = trim(v.first);
  }

  void algebra_line(const std::string& raw) {
    auto arrow = raw.find("->");
    if (arrow == std::string::npos) {
      auto [k, v] = key_value(raw);
      if (k != "labels") fail("expected 'labels:' or a bracket 'A,B -> ...'", leading_ws(raw) + 1);
      if (have_labels_) fail("labels given twice", leading_ws(raw) + 1);
      for (const auto& tok : tokenize(v.first, v.second)) {
        if (is_rational_literal(tok.text) || tok.text.find_first_of(",^") != std::string::npos)
          fail("invalid label '" + tok.text + "'", tok.col);
        for (const auto& l : doc_.labels)
          if (l == tok.text) fail("duplicate label '" + tok.text + "'", tok.col);
        doc_.labels.push_back(tok.text);
      }
      if (doc_.labels.empty()) fail("no labels", leading_ws(raw) + 1);
      if (doc_.labels.size() > 32) fail("at most 32 labels are supported", leading_ws(raw) + 1);
      have_labels_ = true;
      return;
    }
    if (!have_labels_) fail("brackets before 'labels:'", leading_ws(raw) + 1);
    std::string lhs = raw.substr(0, arrow);
    auto comma = lhs.find(',');
    if (comma == std::string::npos) fail("expected 'A,B' before '->'", leading_ws(raw) + 1);
    std::string a = trim(lhs.substr(0, comma)), b = trim(lhs.substr(comma + 1));
    int ca = leading_ws(lhs) + 1, cb = static_cast<int>(comma) + 2 + leading_ws(lhs.substr(comma + 1));
    int i = label_index(a, ca), j = label_index(b, cb);
    if (i == j) fail("bracket of a label with itself", ca);
    auto rhs = linear_terms(tokenize(raw.substr(arrow + 2), static_cast<int>(arrow) + 2));

    // normalised (i<j) dense image for conflict detection
    std::vector<Scalar> dense(doc_.labels.size(), Scalar(0));
    for (const auto& t : rhs) dense[label_index(t.label, 0)] += (i < j ? t.coef : Scalar(-t.coef));
    auto key = std::make_pair(std::min(i, j), std::max(i, j));
    auto it = seen_.find(key);
    if (it != seen_.end()) {
      if (it->second != dense)
        fail("asymmetry conflict: [" + a + "," + b + "] disagrees with an earlier line for the same pair", ca);
      return;
    }
    seen_[key] = dense;
    doc_.brackets.push_back({a, b, rhs});
  }

  void delta_line(const std::string& raw) {
    auto arrow = raw.find("->");
    if (arrow == std::string::npos) fail("expected 'X -> coefficient A^B ...'", leading_ws(raw) + 1);
    std::string x = trim(raw.substr(0, arrow));
    int cx = leading_ws(raw) + 1;
    label_index(x, cx);
    for (const auto& d : *doc_.delta)
      if (d.x == x) fail("cocommutator of '" + x + "' given twice", cx);
    doc_.delta->push_back({x, wedge_terms(tokenize(raw.substr(arrow + 2), static_cast<int>(arrow) + 2))});
  }

  Polynomial poly(const std::string& text, int offset, const std::vector<std::string>& vars) const {
    try {
      return parse_polynomial(text, vars, constants_);
    } catch (const ParseError& e) {
      std::string msg = e.what();
      auto p = msg.rfind(" (column");
      if (p != std::string::npos) msg = msg.substr(0, p);
      fail(msg, offset + static_cast<int>(e.column) + 1);
    }
  }

  void need_vars(int col) const {
    if (doc_.model->vars.empty()) fail("'variables:' must come first", col);
  }

  int var_index(const std::string& v, int col) const {
    const auto& vars = doc_.model->vars;
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == v) return static_cast<int>(i);
    fail("unknown variable '" + v + "'", col);
  }

  void model_line(const std::string& raw) {
    auto [key, val] = key_value(raw);
    auto& m = *doc_.model;
    const auto& [text, off] = val;
    int kcol = leading_ws(raw) + 1;
    if (key == "variables") {
      if (!m.vars.empty()) fail("variables given twice", kcol);
      for (const auto& t : tokenize(text, off)) m.vars.push_back(t.text);
      if (m.vars.empty()) fail("no variables", kcol);
    } else if (key == "constant") {
      auto eq = text.find('=');
      if (eq == std::string::npos) fail("expected 'constant: name = p/q'", off + 1);
      auto toks = tokenize(text.substr(eq + 1), off + static_cast<int>(eq) + 1);
      if (toks.size() != 1) fail("expected one rational value", off + static_cast<int>(eq) + 1);
      constants_[trim(text.substr(0, eq))] = rational(toks[0]);
    } else if (key == "bracket") {
      need_vars(kcol);
      auto eq = text.find('=');
      auto comma = text.find(',');
      if (eq == std::string::npos || comma == std::string::npos || comma > eq)
        fail("expected 'bracket: u, v = polynomial'", off + 1);
      std::string a = trim(text.substr(0, comma)), b = trim(text.substr(comma + 1, eq - comma - 1));
      int i = var_index(a, off + 1), j = var_index(b, off + static_cast<int>(comma) + 2);
      if (i == j) fail("bracket of a variable with itself", off + 1);
      for (const auto& [x, y, p] : m.brackets)
        if ((x == a && y == b) || (x == b && y == a)) fail("bracket {" + a + "," + b + "} given twice", off + 1);
      m.brackets.emplace_back(a, b, poly(text.substr(eq + 1), off + static_cast<int>(eq) + 1, m.vars));
    } else if (key == "constraint") {
      need_vars(kcol);
      m.constraints.push_back(poly(text, off, m.vars));
    } else if (key == "base") {
      need_vars(kcol);
      auto toks = tokenize(text, off);
      if (toks.size() != m.vars.size()) fail("base point needs one value per variable", off + 1);
      m.base.clear();
      for (const auto& t : toks) m.base.push_back(rational(t));
    } else if (key == "mult") {
      need_vars(kcol);
      auto eq = text.find('=');
      if (eq == std::string::npos) fail("expected 'mult: v = polynomial'", off + 1);
      std::string v = trim(text.substr(0, eq));
      var_index(v, off + 1);
      std::vector<std::string> both;
      for (const auto& x : m.vars) both.push_back("a." + x);
      for (const auto& x : m.vars) both.push_back("b." + x);
      m.mult.emplace_back(v, poly(text.substr(eq + 1), off + static_cast<int>(eq) + 1, both));
    } else if (key.rfind("field ", 0) == 0) {
      need_vars(kcol);
      PolyVectorField X;
      std::size_t start = 0;
      while (true) {
        auto comma = text.find(',', start);
        X.comp.push_back(poly(text.substr(start, comma - start), off + static_cast<int>(start), m.vars));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      if (X.n() != static_cast<int>(m.vars.size())) fail("field needs one component per variable", off + 1);
      m.fields.emplace_back(trim(key.substr(6)), X);
    } else if (key == "poisson_lie") {
      auto v = trim(text);
      if (v != "true" && v != "false") fail("expected true or false", off + 1);
      m.poisson_lie = v == "true";
    } else if (key == "variety") {
      auto v = trim(text);
      if (v != "none" && v != "sphere" && v != "unimodular") fail("expected none, sphere or unimodular", off + 1);
      m.variety = v;
    } else {
      fail("unknown coordinate-model key '" + key + "'", kcol);
    }
  }

  void finish_model() {
    auto& m = *doc_.model;
    if (m.vars.empty()) throw SpecError("[coordinate_model] without variables", 0, 0);
    if (m.base.empty()) m.base.assign(m.vars.size(), Scalar(0));
    if (!m.mult.empty() && m.mult.size() != m.vars.size())
      throw SpecError("product map must give one 'mult:' line per variable", 0, 0);
  }

  std::map<std::string, Scalar> constants_;
  SpecDocument doc_;
  Section section_ = Section::top;
  bool have_labels_ = false;
  int line_ = 0;
  std::map<std::pair<int, int>, std::vector<Scalar>> seen_;
};

std::string str(const Scalar& s) { return s.get_str(); }

}  // namespace

SpecDocument parse_spec(const std::string& text, const std::map<std::string, Scalar>& constants) {
  return SpecParser(constants).run(text);
}

SpecDocument parse_spec_file(const std::string& path, const std::map<std::string, Scalar>& constants) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open '" + path + "'", 0, 0);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str(), constants);
}

std::string serialize_spec(const SpecDocument& doc) {
  std::ostringstream os;
  if (!doc.name.empty()) os << "name: " << doc.name << "\n";
  os << "[algebra]\nlabels:";
  for (const auto& l : doc.labels) os << ' ' << l;
  os << '\n';
  auto linear = [&](const std::vector<LinearTerm>& ts) {
    if (ts.empty()) os << " 0";
    for (const auto& t : ts) os << ' ' << str(t.coef) << ' ' << t.label;
  };
  auto wedges = [&](const std::vector<WedgeTerm>& ts) {
    if (ts.empty()) os << " 0";
    for (const auto& t : ts) os << ' ' << str(t.coef) << ' ' << t.a << '^' << t.b;
  };
  for (const auto& b : doc.brackets) {
    os << b.a << ',' << b.b << " ->";
    linear(b.rhs);
    os << '\n';
  }
  if (doc.delta) {
    os << "[delta]\n";
    for (const auto& d : *doc.delta) {
      os << d.x << " ->";
      wedges(d.rhs);
      os << '\n';
    }
  }
  if (doc.rmatrix) {
    os << "[rmatrix]\n";
    if (!doc.rmatrix->empty()) {
      wedges(*doc.rmatrix);
      os << '\n';
    }
  }
  if (doc.subalgebra) {
    os << "[subalgebra]\n";
    for (const auto& v : *doc.subalgebra) {
      linear(v);
      os << '\n';
    }
  }
  if (doc.model) {
    const auto& m = *doc.model;
    os << "[coordinate_model]\nvariables:";
    for (const auto& v : m.vars) os << ' ' << v;
    os << '\n';
    for (const auto& [a, b, p] : m.brackets) os << "bracket: " << a << ", " << b << " = " << p.to_string(m.vars) << '\n';
    for (const auto& c : m.constraints) os << "constraint: " << c.to_string(m.vars) << '\n';
    os << "base:";
    for (const auto& s : m.base) os << ' ' << str(s);
    os << '\n';
    std::vector<std::string> both;
    for (const auto& x : m.vars) both.push_back("a." + x);
    for (const auto& x : m.vars) both.push_back("b." + x);
    for (const auto& [v, p] : m.mult) os << "mult: " << v << " = " << p.to_string(both) << '\n';
    if (m.variety != "none") os << "variety: " << m.variety << '\n';
    for (const auto& [name, X] : m.fields) {
      os << "field " << name << ":";
      for (int i = 0; i < X.n(); ++i) os << (i ? ", " : " ") << X.comp[i].to_string(m.vars);
      os << '\n';
    }
    os << "poisson_lie: " << (m.poisson_lie ? "true" : "false") << '\n';
  }
  return os.str();
}

LieAlgebra build_algebra(const SpecDocument& doc) {
  if (doc.labels.empty()) throw SpecError("missing [algebra] labels", 0, 0);
  LieAlgebra g(doc.labels);
  for (const auto& b : doc.brackets) {
    int i = g.index_of(b.a), j = g.index_of(b.b);
    for (const auto& t : b.rhs) g.set_bracket(i, j, g.index_of(t.label), t.coef);
  }
  auto jac = jacobi_check(g);
  if (!jac.ok)
    throw SpecError("brackets violate the Jacobi identity at (" + doc.labels[jac.i] + "," + doc.labels[jac.j] + "," +
                        doc.labels[jac.k] + ")",
                    0, 0);
  return g;
}

HomogeneousSpaceSpec build_space(const SpecDocument& doc) {
  LieAlgebra g = build_algebra(doc);
  int m = g.dim();
  if (doc.delta && doc.rmatrix) throw SpecError("give either [delta] or [rmatrix], not both", 0, 0);
  if (!doc.delta && !doc.rmatrix) throw SpecError("missing [delta] or [rmatrix] section", 0, 0);
  if (!doc.subalgebra) throw SpecError("missing [subalgebra] section", 0, 0);
  auto wedge_of = [&](const std::vector<WedgeTerm>& ts) {
    ExteriorElement w(m, Space::primal, 2);
    for (const auto& t : ts) w = w + ExteriorElement::monomial(m, Space::primal, {g.index_of(t.a), g.index_of(t.b)}, t.coef);
    return w;
  };
  CocommutatorMap delta = zero_cocommutator(m);
  if (doc.rmatrix) {
    delta = cocommutator_from_rmatrix(g, wedge_of(*doc.rmatrix));
  } else {
    for (const auto& d : *doc.delta) delta.images[g.index_of(d.x)] = wedge_of(d.rhs);
  }
  LieBialgebra B;
  try {
    B = make_bialgebra(g, delta);
  } catch (const BialgebraError& e) {
    throw SpecError(e.what(), 0, 0);
  }
  std::vector<Vector> h;
  for (const auto& terms : *doc.subalgebra) {
    Vector v = zero_vector(m);
    for (const auto& t : terms) v.c[g.index_of(t.label)] += t.coef;
    h.push_back(v);
  }
  try {
    return make_homogeneous_space(doc.name.empty() ? "unnamed" : doc.name, B, h);
  } catch (const std::exception& e) {
    throw SpecError(std::string("subalgebra: ") + e.what(), 0, 0);
  }
}

PolynomialPoissonModel build_model(const SpecDocument& doc) {
  if (!doc.model) throw SpecError("missing [coordinate_model] section", 0, 0);
  const auto& b = *doc.model;
  auto M = empty_model(doc.name.empty() ? "unnamed" : doc.name, b.vars);
  auto idx = [&](const std::string& v) {
    return static_cast<int>(std::find(b.vars.begin(), b.vars.end(), v) - b.vars.begin());
  };
  for (const auto& [x, y, p] : b.brackets) set_bracket(M, idx(x), idx(y), p);
  M.constraints = b.constraints;
  M.base_point = b.base;
  if (!b.mult.empty()) {
    std::vector<Polynomial> mult(b.vars.size());
    std::vector<bool> given(b.vars.size(), false);
    for (const auto& [v, p] : b.mult) {
      if (given[idx(v)]) throw SpecError("product map gives '" + v + "' twice", 0, 0);
      given[idx(v)] = true;
      mult[idx(v)] = p;
    }
    M.group_mult = mult;
  }
  M.poisson_lie = b.poisson_lie;
  if (b.variety == "sphere") M.variety = VarietyKind::unit_sphere;
  if (b.variety == "unimodular") M.variety = VarietyKind::unimodular_matrix;
  try {
    validate(M);
  } catch (const std::invalid_argument& e) {
    throw SpecError(e.what(), 0, 0);
  }
  return M;
}

SpecDocument document_from_space(const HomogeneousSpaceSpec& S) {
  const auto& g = S.bialgebra.g;
  int m = g.dim();
  SpecDocument doc;
  doc.name = S.name;
  doc.labels = g.labels();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      auto v = g.basis_bracket(i, j);
      if (all_zero(v)) continue;
      BracketLine line{g.labels()[i], g.labels()[j], {}};
      for (int k = 0; k < m; ++k)
        if (!is_zero(v[k])) line.rhs.push_back({v[k], g.labels()[k]});
      doc.brackets.push_back(line);
    }
  doc.delta.emplace();
  for (int i = 0; i < m; ++i) {
    const auto& img = S.bialgebra.delta.images[i];
    if (img.is_zero()) continue;
    DeltaLine d{g.labels()[i], {}};
    for (const auto& [mask, c] : img.terms()) {
      auto ix = mask_indices(mask);
      d.rhs.push_back({c, g.labels()[ix[0]], g.labels()[ix[1]]});
    }
    doc.delta->push_back(d);
  }
  doc.subalgebra.emplace();
  for (const auto& v : S.h.basis) {
    std::vector<LinearTerm> ts;
    for (int k = 0; k < m; ++k)
      if (!is_zero(v.c[k])) ts.push_back({v.c[k], g.labels()[k]});
    doc.subalgebra->push_back(ts);
  }
  return doc;
}

}  // namespace modvol
