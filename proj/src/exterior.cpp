#include "modvol/exterior.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace modvol {

std::vector<int> mask_indices(std::uint32_t mask) {
  std::vector<int> out;
  while (mask) {
    int i = std::countr_zero(mask);
    out.push_back(i);
    mask &= mask - 1;
  }
  return out;
}

std::uint32_t indices_mask(const std::vector<int>& sorted) {
  std::uint32_t m = 0;
  for (int i : sorted) m |= (1u << i);
  return m;
}

namespace {

// Sign of moving the factors of b past those of a when merging a∧b into
// increasing order: count pairs (i in a, j in b) with i > j.
int merge_sign(std::uint32_t a, std::uint32_t b) {
  int inversions = 0;
  for (int j : mask_indices(b)) inversions += std::popcount(a >> (j + 1));
  return (inversions & 1) ? -1 : 1;
}

// Sign for removing index i from mask: number of set bits before i.
int removal_sign(std::uint32_t mask, int i) {
  int before = std::popcount(mask & ((1u << i) - 1));
  return (before & 1) ? -1 : 1;
}

}  // namespace

ExteriorElement::ExteriorElement(int dim, Space space, int degree)
    : dim_(dim), space_(space), degree_(degree) {
  if (dim < 0 || dim > 32) throw std::invalid_argument("exterior algebra supports dim <= 32");
  if (degree < 0 || degree > dim) throw std::invalid_argument("degree out of range");
}

ExteriorElement ExteriorElement::scalar(int dim, Space space, const Scalar& s) {
  ExteriorElement e(dim, space, 0);
  e.add_term(0, s);
  return e;
}

ExteriorElement ExteriorElement::from_vector(const Vector& v) {
  int m = static_cast<int>(v.c.size());
  ExteriorElement e(m, Space::primal, 1);
  for (int i = 0; i < m; ++i) e.add_term(1u << i, v.c[i]);
  return e;
}

ExteriorElement ExteriorElement::from_covector(const Covector& v) {
  int m = static_cast<int>(v.c.size());
  ExteriorElement e(m, Space::dual, 1);
  for (int i = 0; i < m; ++i) e.add_term(1u << i, v.c[i]);
  return e;
}

ExteriorElement ExteriorElement::monomial(int dim, Space space, const std::vector<int>& indices,
                                          const Scalar& coef) {
  ExteriorElement e = scalar(dim, space, coef);
  for (int i : indices) {
    if (i < 0 || i >= dim) throw std::invalid_argument("monomial: index out of range");
    ExteriorElement f(dim, space, 1);
    f.add_term(1u << i, Scalar(1));
    e = wedge(e, f);
  }
  return e;
}

Scalar ExteriorElement::coefficient(const std::vector<int>& sorted_indices) const {
  auto it = terms_.find(indices_mask(sorted_indices));
  return it == terms_.end() ? Scalar(0) : it->second;
}

void ExteriorElement::add_term(std::uint32_t mask, const Scalar& coef) {
  if (modvol::is_zero(coef)) return;
  if (std::popcount(mask) != degree_) throw std::invalid_argument("add_term: degree mismatch");
  if (dim_ < 32 && (mask >> dim_)) throw std::invalid_argument("add_term: index out of range");
  auto [it, inserted] = terms_.emplace(mask, coef);
  if (!inserted) {
    it->second += coef;
    if (modvol::is_zero(it->second)) terms_.erase(it);
  }
}

void ExteriorElement::check_compatible(const ExteriorElement& o) const {
  if (dim_ != o.dim_ || space_ != o.space_) throw std::invalid_argument("incompatible exterior elements");
}

ExteriorElement ExteriorElement::operator+(const ExteriorElement& o) const {
  check_compatible(o);
  if (o.is_zero()) return *this;
  if (is_zero() && degree_ != o.degree_) return o;
  if (degree_ != o.degree_) throw std::invalid_argument("sum of different degrees");
  ExteriorElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

ExteriorElement ExteriorElement::operator-() const {
  ExteriorElement r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

ExteriorElement ExteriorElement::operator-(const ExteriorElement& o) const { return *this + (-o); }

bool ExteriorElement::operator==(const ExteriorElement& o) const {
  if (dim_ != o.dim_ || space_ != o.space_) return false;
  if (is_zero() && o.is_zero()) return true;
  return degree_ == o.degree_ && terms_ == o.terms_;
}

std::string ExteriorElement::to_string(const std::vector<std::string>& labels) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Scalar a = c;
    if (!first) os << (sgn(a) < 0 ? " - " : " + ");
    else if (sgn(a) < 0) os << "-";
    if (sgn(a) < 0) a = -a;
    auto idx = mask_indices(m);
    if (a != 1 || idx.empty()) os << a.get_str() << (idx.empty() ? "" : "*");
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (k) os << " ^ ";
      const std::string& l = labels[idx[k]];
      os << (space_ == Space::dual ? dual_label(l) : l);
    }
    first = false;
  }
  return os.str();
}

ExteriorElement operator*(const Scalar& s, const ExteriorElement& a) {
  ExteriorElement r(a.dim(), a.space(), a.degree());
  for (const auto& [m, c] : a.terms()) r.add_term(m, s * c);
  return r;
}

ExteriorElement wedge(const ExteriorElement& a, const ExteriorElement& b) {
  if (a.dim() != b.dim() || a.space() != b.space())
    throw std::invalid_argument("wedge: mixed primal/dual or dimension mismatch");
  int deg = a.degree() + b.degree();
  if (deg > a.dim()) return ExteriorElement(a.dim(), a.space(), a.dim());
  ExteriorElement r(a.dim(), a.space(), deg);
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      if (ma & mb) continue;
      Scalar c = ca * cb;
      if (merge_sign(ma, mb) < 0) c = -c;
      r.add_term(ma | mb, c);
    }
  return r;
}

namespace {

ExteriorElement contract(const std::vector<Scalar>& v, const ExteriorElement& w) {
  if (w.degree() == 0) throw std::invalid_argument("interior: degree-0 target");
  if (static_cast<int>(v.size()) != w.dim()) throw std::invalid_argument("interior: dimension mismatch");
  ExteriorElement r(w.dim(), w.space(), w.degree() - 1);
  for (const auto& [m, c] : w.terms())
    for (int i : mask_indices(m)) {
      if (is_zero(v[i])) continue;
      Scalar t = c * v[i];
      if (removal_sign(m, i) < 0) t = -t;
      r.add_term(m & ~(1u << i), t);
    }
  return r;
}

}  // namespace

ExteriorElement interior(const Covector& xi, const ExteriorElement& w) {
  if (w.space() != Space::primal) throw std::invalid_argument("interior: covector contracts multivectors");
  return contract(xi.c, w);
}

ExteriorElement interior(const Vector& x, const ExteriorElement& w) {
  if (w.space() != Space::dual) throw std::invalid_argument("interior: vector contracts forms");
  return contract(x.c, w);
}

namespace {

Scalar evaluate_rows(const ExteriorElement& w, const std::vector<std::vector<Scalar>>& args) {
  if (static_cast<int>(args.size()) != w.degree()) throw std::invalid_argument("evaluate: wrong arity");
  Scalar total = 0;
  for (const auto& [m, c] : w.terms()) {
    auto idx = mask_indices(m);
    Matrix M = zero_matrix(idx.size(), idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t s = 0; s < args.size(); ++s) M[r][s] = args[s][idx[r]];
    total += c * determinant(M);
  }
  return total;
}

}  // namespace

Scalar evaluate(const ExteriorElement& form, const std::vector<Vector>& args) {
  if (form.space() != Space::dual) throw std::invalid_argument("evaluate: expected a form");
  std::vector<std::vector<Scalar>> rows;
  for (const auto& a : args) rows.push_back(a.c);
  return evaluate_rows(form, rows);
}

Scalar evaluate(const ExteriorElement& multivector, const std::vector<Covector>& args) {
  if (multivector.space() != Space::primal) throw std::invalid_argument("evaluate: expected a multivector");
  std::vector<std::vector<Scalar>> rows;
  for (const auto& a : args) rows.push_back(a.c);
  return evaluate_rows(multivector, rows);
}

ExteriorElement ce_differential(const LieAlgebra& L, const ExteriorElement& form) {
  if (form.space() != Space::dual) throw std::invalid_argument("ce_differential: primal-tagged input");
  int m = L.dim();
  if (form.dim() != m) throw std::invalid_argument("ce_differential: dimension mismatch");
  if (form.degree() == m) return ExteriorElement(m, Space::dual, m);
  // d e^i = -Σ_{j<k} C_jk^i e^j ∧ e^k, extended as a graded derivation.
  std::vector<ExteriorElement> de;
  for (int i = 0; i < m; ++i) {
    ExteriorElement d(m, Space::dual, 2);
    for (int j = 0; j < m; ++j)
      for (int k = j + 1; k < m; ++k) d.add_term((1u << j) | (1u << k), -L.C(j, k, i));
    de.push_back(std::move(d));
  }
  ExteriorElement out(m, Space::dual, form.degree() + 1);
  for (const auto& [mask, c] : form.terms()) {
    auto idx = mask_indices(mask);
    for (std::size_t s = 0; s < idx.size(); ++s) {
      if (de[idx[s]].is_zero()) continue;
      ExteriorElement piece = ExteriorElement::scalar(m, Space::dual, (s % 2) ? -c : c);
      for (std::size_t t = 0; t < idx.size(); ++t) {
        if (t == s)
          piece = wedge(piece, de[idx[t]]);
        else
          piece = wedge(piece, ExteriorElement::monomial(m, Space::dual, {idx[t]}));
      }
      out = out + piece;
    }
  }
  return out;
}

ExteriorElement ad_extension(const LieAlgebra& L, const Vector& x, const ExteriorElement& p) {
  if (p.space() != Space::primal) throw std::invalid_argument("ad_extension: dual-tagged input");
  int m = L.dim();
  std::vector<ExteriorElement> images;
  for (int i = 0; i < m; ++i)
    images.push_back(ExteriorElement::from_vector(bracket(L, x, basis_vector(m, i))));
  ExteriorElement out(m, Space::primal, p.degree());
  for (const auto& [mask, c] : p.terms()) {
    auto idx = mask_indices(mask);
    for (std::size_t s = 0; s < idx.size(); ++s) {
      ExteriorElement piece = ExteriorElement::scalar(m, Space::primal, c);
      for (std::size_t t = 0; t < idx.size(); ++t) {
        if (t == s)
          piece = wedge(piece, images[idx[t]]);
        else
          piece = wedge(piece, ExteriorElement::monomial(m, Space::primal, {idx[t]}));
      }
      out = out + piece;
    }
  }
  return out;
}

ExteriorElement schouten_square(const LieAlgebra& L, const ExteriorElement& r) {
  if (r.space() != Space::primal || r.degree() != 2)
    throw std::invalid_argument("schouten_square: expects an element of Λ²g");
  int m = L.dim();
  auto e = [&](int i) { return ExteriorElement::monomial(m, Space::primal, {i}); };
  auto br = [&](int i, int j) { return ExteriorElement::from_vector(bracket(L, basis_vector(m, i), basis_vector(m, j))); };
  ExteriorElement out(m, Space::primal, std::min(3, m));
  for (const auto& [m1, c1] : r.terms())
    for (const auto& [m2, c2] : r.terms()) {
      auto ab = mask_indices(m1), cd = mask_indices(m2);
      int a = ab[0], b = ab[1], c = cd[0], d = cd[1];
      // [a∧b, c∧d] = [a,c]∧b∧d - [a,d]∧b∧c - [b,c]∧a∧d + [b,d]∧a∧c
      ExteriorElement t = wedge(wedge(br(a, c), e(b)), e(d)) - wedge(wedge(br(a, d), e(b)), e(c)) -
                          wedge(wedge(br(b, c), e(a)), e(d)) + wedge(wedge(br(b, d), e(a)), e(c));
      out = out + (c1 * c2) * t;
    }
  return out;
}

bool is_ad_invariant(const LieAlgebra& L, const ExteriorElement& p) {
  for (int i = 0; i < L.dim(); ++i)
    if (!ad_extension(L, basis_vector(L.dim(), i), p).is_zero()) return false;
  return true;
}

ExteriorElement top_wedge(const std::vector<Covector>& xs, int dim) {
  ExteriorElement w = ExteriorElement::scalar(dim, Space::dual, Scalar(1));
  for (const auto& x : xs) w = wedge(w, ExteriorElement::from_covector(x));
  return w;
}

Covector theta0_from_V0(const LieAlgebra& L, const Subalgebra& h, const ExteriorElement& V0) {
  int m = L.dim();
  if (V0.is_zero()) throw std::invalid_argument("theta0_from_V0: V0 = 0");
  if (V0.space() != Space::dual || V0.degree() != m - h.dim())
    throw std::invalid_argument("theta0_from_V0: V0 must lie in the top degree of h⁰");
  for (const auto& x : h.basis)
    if (V0.degree() > 0 && !interior(x, V0).is_zero())
      throw std::invalid_argument("theta0_from_V0: V0 is not annihilated by h");

  // Basis completion: annihilator ξ_a, vectors Y_b with ξ_a(Y_b) = δ_ab and
  // Y_b complementary to h; then c = V0(Y_1..Y_p).
  auto xi = annihilator(L, h);
  int p = static_cast<int>(xi.size());
  Matrix A = zero_matrix(m, m);
  Row zero_rhs(m, Scalar(0));
  std::vector<Vector> Y;
  for (int b = 0; b < p; ++b) {
    Matrix sys;
    Row rhs;
    for (int a = 0; a < p; ++a) {
      sys.push_back(xi[a].c);
      rhs.push_back(a == b ? Scalar(1) : Scalar(0));
    }
    auto sol = solve_affine(sys, rhs, m);
    Y.push_back(Vector{sol.particular});
  }
  // Full basis {h_1..h_n, Y_1..Y_p} and its dual basis.
  Matrix basis = zero_matrix(m, m);
  for (int j = 0; j < h.dim(); ++j)
    for (int i = 0; i < m; ++i) basis[i][j] = h.basis[j].c[i];
  for (int b = 0; b < p; ++b)
    for (int i = 0; i < m; ++i) basis[i][h.dim() + b] = Y[b].c[i];
  auto inv = inverse(basis);
  if (!inv) throw std::logic_error("theta0_from_V0: basis completion failed");

  Scalar c = evaluate(V0, Y);
  ExteriorElement dV0 = ce_differential(L, V0);
  Covector theta = zero_covector(m);
  if (dV0.is_zero()) return theta;  // includes h = 0, where V0 has top degree
  for (int k = 0; k < m; ++k) {
    Vector Xk = zero_vector(m);
    for (int i = 0; i < m; ++i) Xk.c[i] = basis[i][k];
    std::vector<Vector> args{Xk};
    args.insert(args.end(), Y.begin(), Y.end());
    Scalar val = -evaluate(dV0, args) / c;
    // add val * (dual basis covector k) = row k of inv
    for (int i = 0; i < m; ++i) theta.c[i] += val * (*inv)[k][i];
  }
  ExteriorElement check = dV0 + wedge(ExteriorElement::from_covector(theta), V0);
  if (!check.is_zero()) throw std::logic_error("theta0_from_V0: d V0 != -θ0 ∧ V0");
  return theta;
}

}  // namespace modvol
