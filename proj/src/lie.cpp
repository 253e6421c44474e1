#include "modvol/lie.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace modvol {

Vector basis_vector(int m, int i) {
  Vector v = zero_vector(m);
  v.c[i] = 1;
  return v;
}

Covector basis_covector(int m, int i) {
  Covector v = zero_covector(m);
  v.c[i] = 1;
  return v;
}

Vector zero_vector(int m) { return Vector{std::vector<Scalar>(m, Scalar(0))}; }
Covector zero_covector(int m) { return Covector{std::vector<Scalar>(m, Scalar(0))}; }

namespace {

std::vector<Scalar> add(const std::vector<Scalar>& a, const std::vector<Scalar>& b, int sign) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  std::vector<Scalar> out(a);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sign > 0)
      out[i] += b[i];
    else
      out[i] -= b[i];
  }
  return out;
}

std::vector<Scalar> scale(const Scalar& s, const std::vector<Scalar>& a) {
  std::vector<Scalar> out(a);
  for (auto& x : out) x *= s;
  return out;
}

std::string combination(const std::vector<std::string>& labels, const std::vector<Scalar>& c) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (is_zero(c[i])) continue;
    Scalar a = c[i];
    if (!first) os << (sgn(a) < 0 ? " - " : " + ");
    else if (sgn(a) < 0) os << "-";
    if (sgn(a) < 0) a = -a;
    if (a != 1) os << a.get_str() << "*";
    os << labels[i];
    first = false;
  }
  if (first) return "0";
  return os.str();
}

}  // namespace

Vector operator+(const Vector& a, const Vector& b) { return Vector{add(a.c, b.c, 1)}; }
Vector operator-(const Vector& a, const Vector& b) { return Vector{add(a.c, b.c, -1)}; }
Vector operator*(const Scalar& s, const Vector& a) { return Vector{scale(s, a.c)}; }
Covector operator+(const Covector& a, const Covector& b) { return Covector{add(a.c, b.c, 1)}; }
Covector operator-(const Covector& a, const Covector& b) { return Covector{add(a.c, b.c, -1)}; }
Covector operator*(const Scalar& s, const Covector& a) { return Covector{scale(s, a.c)}; }

Scalar pairing(const Covector& xi, const Vector& x) {
  if (xi.c.size() != x.c.size()) throw std::invalid_argument("pairing: dimension mismatch");
  Scalar s = 0;
  for (std::size_t i = 0; i < x.c.size(); ++i) s += xi.c[i] * x.c[i];
  return s;
}

bool is_zero(const Vector& v) { return all_zero(v.c); }
bool is_zero(const Covector& v) { return all_zero(v.c); }

LieAlgebra::LieAlgebra(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::size_t m = labels_.size();
  table_.assign(m * (m - (m ? 1 : 0)) / 2, std::vector<Scalar>(m, Scalar(0)));
}

int LieAlgebra::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  return -1;
}

std::size_t LieAlgebra::slot(int i, int j) const {
  // pairs (i,j), i<j, enumerated row by row
  int m = dim();
  return static_cast<std::size_t>(i * m - i * (i + 1) / 2 + (j - i - 1));
}

void LieAlgebra::set_bracket(int i, int j, const std::vector<Scalar>& v) {
  if (i == j) throw std::invalid_argument("set_bracket: [X,X] is always zero");
  if (static_cast<int>(v.size()) != dim()) throw std::invalid_argument("set_bracket: length");
  if (i < j)
    table_[slot(i, j)] = v;
  else
    table_[slot(j, i)] = scale(Scalar(-1), v);
}

void LieAlgebra::set_bracket(int i, int j, int k, const Scalar& coef) {
  if (i == j) throw std::invalid_argument("set_bracket: [X,X] is always zero");
  if (i < j)
    table_[slot(i, j)][k] += coef;
  else
    table_[slot(j, i)][k] -= coef;
}

std::vector<Scalar> LieAlgebra::basis_bracket(int i, int j) const {
  if (i == j) return std::vector<Scalar>(dim(), Scalar(0));
  if (i < j) return table_[slot(i, j)];
  return scale(Scalar(-1), table_[slot(j, i)]);
}

Scalar LieAlgebra::C(int i, int j, int k) const {
  if (i == j) return 0;
  if (i < j) return table_[slot(i, j)][k];
  return -table_[slot(j, i)][k];
}

bool LieAlgebra::is_abelian() const {
  for (const auto& v : table_)
    if (!all_zero(v)) return false;
  return true;
}

std::string describe(const LieAlgebra& L, const Vector& v) { return combination(L.labels(), v.c); }

std::string describe_dual(const LieAlgebra& L, const Covector& v) {
  std::vector<std::string> up;
  for (const auto& l : L.labels()) up.push_back(dual_label(l));
  return combination(up, v.c);
}

std::string dual_label(const std::string& label) {
  std::size_t k = 0;
  while (k < label.size() && std::isalpha(static_cast<unsigned char>(label[k]))) ++k;
  if (k == 0 || k == label.size()) return label + "^";
  return label.substr(0, k) + "^" + label.substr(k);
}

Vector bracket(const LieAlgebra& L, const Vector& u, const Vector& v) {
  int m = L.dim();
  if (static_cast<int>(u.c.size()) != m || static_cast<int>(v.c.size()) != m)
    throw std::invalid_argument("bracket: dimension mismatch");
  Vector out = zero_vector(m);
  for (int i = 0; i < m; ++i) {
    if (is_zero(u.c[i])) continue;
    for (int j = 0; j < m; ++j) {
      if (i == j || is_zero(v.c[j])) continue;
      Scalar f = u.c[i] * v.c[j];
      auto b = L.basis_bracket(i, j);
      for (int k = 0; k < m; ++k)
        if (!is_zero(b[k])) out.c[k] += f * b[k];
    }
  }
  return out;
}

JacobiVerdict jacobi_check(const LieAlgebra& L) {
  int m = L.dim();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k) {
        Vector a = basis_vector(m, i), b = basis_vector(m, j), c = basis_vector(m, k);
        Vector jac = bracket(L, a, bracket(L, b, c)) + bracket(L, b, bracket(L, c, a)) +
                     bracket(L, c, bracket(L, a, b));
        if (!is_zero(jac)) return JacobiVerdict{false, i, j, k};
      }
  return {};
}

Matrix adjoint_matrix(const LieAlgebra& L, const Vector& x) {
  int m = L.dim();
  Matrix a = zero_matrix(m, m);
  for (int j = 0; j < m; ++j) {
    Vector col = bracket(L, x, basis_vector(m, j));
    for (int i = 0; i < m; ++i) a[i][j] = col.c[i];
  }
  return a;
}

Covector modular_character(const LieAlgebra& L) {
  int m = L.dim();
  Covector chi = zero_covector(m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) chi.c[a] += L.C(a, b, b);
  return chi;
}

namespace {

std::vector<Row> rows_of(const std::vector<Vector>& vs) {
  std::vector<Row> out;
  for (const auto& v : vs) out.push_back(v.c);
  return out;
}

void require_independent(const LieAlgebra& L, const std::vector<Vector>& basis) {
  for (const auto& v : basis)
    if (static_cast<int>(v.c.size()) != L.dim()) throw std::invalid_argument("basis vector dimension mismatch");
  if (rank(rows_of(basis), L.dim()) != basis.size())
    throw std::invalid_argument("basis vectors are linearly dependent");
}

bool in_span(const std::vector<Vector>& basis, const Vector& v, int m) {
  auto rows = rows_of(basis);
  std::size_t r0 = rank(rows, m);
  rows.push_back(v.c);
  return rank(rows, m) == r0;
}

}  // namespace

bool is_subalgebra(const LieAlgebra& L, const std::vector<Vector>& basis) {
  require_independent(L, basis);
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b)
      if (!in_span(basis, bracket(L, basis[a], basis[b]), L.dim())) return false;
  return true;
}

bool is_ideal(const LieAlgebra& L, const std::vector<Vector>& basis) {
  require_independent(L, basis);
  int m = L.dim();
  for (const auto& v : basis)
    for (int i = 0; i < m; ++i)
      if (!in_span(basis, bracket(L, basis_vector(m, i), v), m)) return false;
  return true;
}

Subalgebra make_subalgebra(const LieAlgebra& L, std::vector<Vector> basis) {
  if (!is_subalgebra(L, basis)) throw std::invalid_argument("span is not closed under the bracket");
  return Subalgebra{std::move(basis), true};
}

std::vector<Covector> annihilator(const LieAlgebra& L, const Subalgebra& h) {
  auto ns = nullspace(rows_of(h.basis), L.dim());
  std::vector<Covector> out;
  for (auto& v : ns) out.push_back(Covector{std::move(v)});
  return out;
}

std::vector<Scalar> restrict_covector(const Covector& theta, const Subalgebra& h) {
  std::vector<Scalar> out;
  for (const auto& v : h.basis) out.push_back(pairing(theta, v));
  return out;
}

bool is_closed_one_form(const LieAlgebra& L, const Covector& theta) {
  int m = L.dim();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (!is_zero(pairing(theta, Vector{L.basis_bracket(i, j)}))) return false;
  return true;
}

LieAlgebra induced_algebra(const LieAlgebra& L, const std::vector<Vector>& basis,
                           std::vector<std::string> labels) {
  int n = static_cast<int>(basis.size());
  if (labels.empty())
    for (int i = 0; i < n; ++i) labels.push_back("Y" + std::to_string(i + 1));
  LieAlgebra sub(labels);
  auto span = rows_of(basis);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      auto coords = coordinates_in_span(span, bracket(L, basis[a], basis[b]).c);
      if (!coords) throw std::invalid_argument("induced_algebra: span is not closed");
      sub.set_bracket(a, b, *coords);
    }
  return sub;
}

std::vector<Scalar> subalgebra_modular_character(const LieAlgebra& L, const Subalgebra& h) {
  if (h.basis.empty()) return {};
  return modular_character(induced_algebra(L, h.basis)).c;
}

LieAlgebra change_basis(const LieAlgebra& L, const Matrix& P, std::vector<std::string> labels) {
  int m = L.dim();
  if (labels.empty()) labels = L.labels();
  std::vector<Vector> cols;
  for (int i = 0; i < m; ++i) {
    Vector v = zero_vector(m);
    for (int j = 0; j < m; ++j) v.c[j] = P[j][i];
    cols.push_back(v);
  }
  if (rank(rows_of(cols), m) != static_cast<std::size_t>(m))
    throw std::invalid_argument("change_basis: matrix is singular");
  return induced_algebra(L, cols, labels);
}

}  // namespace modvol
