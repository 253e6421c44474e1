#include "modvol/polynomial.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace modvol {

Polynomial Polynomial::constant(int nvars, const Scalar& s) {
  Polynomial p(nvars);
  p.add_term(Exponent(nvars, 0), s);
  return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw std::invalid_argument("variable index out of range");
  Polynomial p(nvars);
  Exponent e(nvars, 0);
  e[i] = 1;
  p.add_term(e, Scalar(1));
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (auto x : terms_.begin()->first)
    if (x) return false;
  return true;
}

Scalar Polynomial::constant_term() const {
  auto it = terms_.find(Exponent(nvars_, 0));
  return it == terms_.end() ? Scalar(0) : it->second;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (auto x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

void Polynomial::add_term(const Exponent& e, const Scalar& c) {
  if (modvol::is_zero(c)) return;
  if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("add_term: exponent length");
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (modvol::is_zero(it->second)) terms_.erase(it);
  }
}

void Polynomial::check(const Polynomial& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("polynomials over different variable sets");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  r += o;
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check(o);
  Polynomial r(nvars_);
  Exponent e(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      r.add_term(e, ca * cb);
    }
  return r;
}

Polynomial operator*(const Scalar& s, const Polynomial& p) {
  Polynomial r(p.nvars());
  for (const auto& [e, c] : p.terms()) r.add_term(e, s * c);
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial r = constant(nvars_, Scalar(1));
  Polynomial base = *this;
  while (k) {
    if (k & 1u) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

Polynomial Polynomial::derivative(int i) const {
  if (i < 0 || i >= nvars_) throw std::invalid_argument("derivative: variable index");
  Polynomial r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponent f = e;
    --f[i];
    r.add_term(f, c * e[i]);
  }
  return r;
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& point) const {
  if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("evaluate: point dimension");
  Scalar total = 0;
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    total += t;
  }
  return total;
}

double Polynomial::evaluate(const std::vector<double>& point) const {
  if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("evaluate: point dimension");
  double total = 0;
  for (const auto& [e, c] : terms_) {
    double t = c.get_d();
    for (int i = 0; i < nvars_; ++i)
      if (e[i]) t *= std::pow(point[i], e[i]);
    total += t;
  }
  return total;
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& images) const {
  if (static_cast<int>(images.size()) != nvars_) throw std::invalid_argument("compose: image count");
  int m = images.empty() ? 0 : images[0].nvars();
  Polynomial r(m);
  for (const auto& [e, c] : terms_) {
    Polynomial t = constant(m, c);
    for (int i = 0; i < nvars_; ++i)
      if (e[i]) t = t * images[i].pow(e[i]);
    r += t;
  }
  return r;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first reads more naturally.
  std::vector<std::pair<Exponent, Scalar>> ordered(terms_.rbegin(), terms_.rend());
  for (const auto& [e, c] : ordered) {
    Scalar a = c;
    if (!first) os << (sgn(a) < 0 ? " - " : " + ");
    else if (sgn(a) < 0) os << "-";
    if (sgn(a) < 0) a = -a;
    bool has_var = false;
    for (auto x : e) has_var |= x > 0;
    if (a != 1 || !has_var) os << a.get_str();
    bool need_star = a != 1;
    for (int i = 0; i < nvars_; ++i) {
      if (!e[i]) continue;
      if (need_star) os << "*";
      os << names[i];
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
    first = false;
  }
  return os.str();
}

ParseError::ParseError(const std::string& msg, std::size_t col)
    : std::runtime_error(msg + " (column " + std::to_string(col + 1) + ")"), column(col) {}

namespace {

class Parser {
 public:
  Parser(std::string_view s, const std::vector<std::string>& vars, const std::map<std::string, Scalar>& consts)
      : s_(s), vars_(vars), consts_(consts) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError("unexpected '" + std::string(1, s_[pos_]) + "'", pos_);
    return p;
  }

 private:
  int n() const { return static_cast<int>(vars_.size()); }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Polynomial expr() {
    Polynomial p = term();
    for (;;) {
      if (eat('+'))
        p += term();
      else if (eat('-'))
        p = p - term();
      else
        return p;
    }
  }
  Polynomial term() {
    Polynomial p = unary();
    for (;;) {
      if (eat('*')) {
        p = p * unary();
      } else if (eat('/')) {
        std::size_t at = pos_;
        Polynomial d = unary();
        if (!d.is_constant() || d.is_zero()) throw ParseError("division by a non-constant or zero", at);
        p = (Scalar(1) / d.constant_term()) * p;
      } else {
        return p;
      }
    }
  }
  Polynomial unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  Polynomial power() {
    Polynomial p = primary();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) throw ParseError("expected a nonnegative integer exponent", start);
      p = p.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return p;
  }
  Polynomial primary() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of expression", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Polynomial::constant(n(), parse_rational(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' ||
                                  s_[pos_] == '.'))
        ++pos_;
      std::string id(s_.substr(start, pos_ - start));
      for (int i = 0; i < n(); ++i)
        if (vars_[i] == id) return Polynomial::variable(n(), i);
      auto it = consts_.find(id);
      if (it != consts_.end()) return Polynomial::constant(n(), it->second);
      throw ParseError("unknown identifier '" + id + "'", start);
    }
    throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
  }

  std::string_view s_;
  const std::vector<std::string>& vars_;
  const std::map<std::string, Scalar>& consts_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars,
                            const std::map<std::string, Scalar>& constants) {
  return Parser(text, vars, constants).parse();
}

bool PolyVectorField::is_zero() const {
  for (const auto& p : comp)
    if (!p.is_zero()) return false;
  return true;
}

PolyVectorField zero_field(int n) {
  PolyVectorField f;
  f.comp.assign(n, Polynomial(n));
  return f;
}

PolyVectorField operator+(const PolyVectorField& a, const PolyVectorField& b) {
  if (a.n() != b.n()) throw std::invalid_argument("field dimension mismatch");
  PolyVectorField r = a;
  for (int i = 0; i < a.n(); ++i) r.comp[i] += b.comp[i];
  return r;
}

PolyVectorField operator-(const PolyVectorField& a, const PolyVectorField& b) {
  return a + Scalar(-1) * b;
}

PolyVectorField operator*(const Scalar& s, const PolyVectorField& a) {
  PolyVectorField r = a;
  for (auto& p : r.comp) p = s * p;
  return r;
}

Polynomial apply_field(const PolyVectorField& X, const Polynomial& f) {
  Polynomial r(f.nvars());
  for (int i = 0; i < X.n(); ++i)
    if (!X.comp[i].is_zero()) r += X.comp[i] * f.derivative(i);
  return r;
}

std::string to_string(const PolyVectorField& X, const std::vector<std::string>& names) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < X.n(); ++i) {
    if (X.comp[i].is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << X.comp[i].to_string(names) << ")*d/d" << names[i];
    first = false;
  }
  return first ? "0" : os.str();
}

CompiledPolynomial::CompiledPolynomial(const Polynomial& p) : nvars_(p.nvars()) {
  for (const auto& [e, c] : p.terms()) {
    coef_.push_back(c.get_d());
    exps_.insert(exps_.end(), e.begin(), e.end());
  }
}

double CompiledPolynomial::operator()(const double* x) const {
  double total = 0;
  for (std::size_t t = 0; t < coef_.size(); ++t) {
    double v = coef_[t];
    const std::uint16_t* e = &exps_[t * nvars_];
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) v *= x[i];
    total += v;
  }
  return total;
}

}  // namespace modvol
