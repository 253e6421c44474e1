#include "modvol/bialgebra.hpp"

#include <sstream>
#include <stdexcept>

namespace modvol {

CocommutatorMap zero_cocommutator(int m) {
  CocommutatorMap d;
  for (int i = 0; i < m; ++i) d.images.emplace_back(m, Space::primal, 2 <= m ? 2 : m);
  return d;
}

CocommutatorMap cocommutator_from_rmatrix(const LieAlgebra& g, const ExteriorElement& r) {
  if (r.space() != Space::primal || r.degree() != 2) throw std::invalid_argument("r must lie in Λ²g");
  CocommutatorMap d;
  for (int i = 0; i < g.dim(); ++i) d.images.push_back(ad_extension(g, basis_vector(g.dim(), i), r));
  return d;
}

CocommutatorMap cocommutator_from_dual(const LieAlgebra& dual) {
  int m = dual.dim();
  CocommutatorMap d;
  for (int k = 0; k < m; ++k) {
    ExteriorElement e(m, Space::primal, 2);
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) e.add_term((1u << i) | (1u << j), dual.C(i, j, k));
    d.images.push_back(std::move(e));
  }
  return d;
}

LieAlgebra dual_constants(const LieAlgebra& g, const CocommutatorMap& delta) {
  int m = g.dim();
  if (static_cast<int>(delta.images.size()) != m) throw std::invalid_argument("dual_constants: δ has wrong length");
  std::vector<std::string> labels;
  for (const auto& l : g.labels()) labels.push_back(dual_label(l));
  LieAlgebra dual(labels);
  for (int k = 0; k < m; ++k)
    for (const auto& [mask, c] : delta.images[k].terms()) {
      auto idx = mask_indices(mask);
      dual.set_bracket(idx[0], idx[1], k, c);
    }
  return dual;
}

CocycleVerdict cocycle_check(const LieAlgebra& g, const CocommutatorMap& delta) {
  int m = g.dim();
  auto delta_of = [&](const Vector& v) {
    ExteriorElement out(m, Space::primal, 2);
    for (int k = 0; k < m; ++k)
      if (!is_zero(v.c[k])) out = out + v.c[k] * delta.images[k];
    return out;
  };
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      Vector Xi = basis_vector(m, i), Xj = basis_vector(m, j);
      ExteriorElement lhs = delta_of(bracket(g, Xi, Xj));
      ExteriorElement rhs = ad_extension(g, Xi, delta.images[j]) - ad_extension(g, Xj, delta.images[i]);
      if (!(lhs == rhs)) return CocycleVerdict{false, i, j};
    }
  return {};
}

LieBialgebra make_bialgebra(LieAlgebra g, CocommutatorMap delta) {
  auto jg = jacobi_check(g);
  if (!jg.ok) throw BialgebraError("g fails the Jacobi identity");
  LieAlgebra dual = dual_constants(g, delta);
  auto jd = jacobi_check(dual);
  if (!jd.ok) {
    std::ostringstream os;
    os << "dual constants fail the Jacobi identity at (" << dual.labels()[jd.i] << ", "
       << dual.labels()[jd.j] << ", " << dual.labels()[jd.k] << ")";
    throw BialgebraError(os.str());
  }
  auto cc = cocycle_check(g, delta);
  if (!cc.ok)
    throw BialgebraError("δ is not a 1-cocycle at (" + g.labels()[cc.i] + ", " + g.labels()[cc.j] + ")");
  return LieBialgebra{std::move(g), std::move(delta), std::move(dual)};
}

LieBialgebra make_bialgebra_from_dual(LieAlgebra g, const LieAlgebra& dual) {
  if (dual.dim() != g.dim()) throw std::invalid_argument("dual has the wrong dimension");
  return make_bialgebra(std::move(g), cocommutator_from_dual(dual));
}

LieBialgebra make_bialgebra_unchecked(LieAlgebra g, const LieAlgebra& dual) {
  CocommutatorMap d = cocommutator_from_dual(dual);
  LieAlgebra du = dual_constants(g, d);
  return LieBialgebra{std::move(g), std::move(d), std::move(du)};
}

Vector coad_dual(const LieBialgebra& B, const Covector& xi, const Vector& x) {
  int m = B.g.dim();
  Vector out = zero_vector(m);
  for (int p = 0; p < m; ++p) {
    // component p = (ad^{g*})*_ξ X evaluated on ξ' = X^p
    Vector br = bracket(B.dual, Vector{basis_covector(m, p).c}, Vector{xi.c});
    out.c[p] = pairing(Covector{br.c}, x);
  }
  return out;
}

Covector coad_primal(const LieBialgebra& B, const Vector& x, const Covector& xi) {
  int m = B.g.dim();
  Covector out = zero_covector(m);
  for (int p = 0; p < m; ++p) out.c[p] = -pairing(xi, bracket(B.g, x, basis_vector(m, p)));
  return out;
}

DoubleElement double_bracket(const LieBialgebra& B, const DoubleElement& a, const DoubleElement& b) {
  Vector x = bracket(B.g, a.x, b.x) + coad_dual(B, a.xi, b.x) - coad_dual(B, b.xi, a.x);
  Vector xi_as_vec = bracket(B.dual, Vector{a.xi.c}, Vector{b.xi.c});
  Covector xi = Covector{xi_as_vec.c} + coad_primal(B, a.x, b.xi) - coad_primal(B, b.x, a.xi);
  return DoubleElement{x, xi};
}

namespace {

DoubleElement double_basis(int m, int i) {
  if (i < m) return DoubleElement{basis_vector(m, i), zero_covector(m)};
  return DoubleElement{zero_vector(m), basis_covector(m, i - m)};
}

DoubleElement add(const DoubleElement& a, const DoubleElement& b) { return {a.x + b.x, a.xi + b.xi}; }

}  // namespace

DoubleJacobiVerdict double_jacobi_check(const LieBialgebra& B) {
  int m = B.g.dim();
  for (int i = 0; i < 2 * m; ++i)
    for (int j = i + 1; j < 2 * m; ++j)
      for (int k = j + 1; k < 2 * m; ++k) {
        auto a = double_basis(m, i), b = double_basis(m, j), c = double_basis(m, k);
        auto s = add(add(double_bracket(B, a, double_bracket(B, b, c)), double_bracket(B, b, double_bracket(B, c, a))),
                     double_bracket(B, c, double_bracket(B, a, b)));
        if (!is_zero(s.x) || !is_zero(s.xi)) return DoubleJacobiVerdict{false, i, j, k};
      }
  return {};
}

Vector dual_modular_character(const LieBialgebra& B) { return Vector{modular_character(B.dual).c}; }

namespace {

Matrix mat_bracket(const Matrix& a, const Matrix& b) {
  Matrix ab = multiply(a, b), ba = multiply(b, a);
  for (std::size_t i = 0; i < ab.size(); ++i)
    for (std::size_t j = 0; j < ab.size(); ++j) ab[i][j] -= ba[i][j];
  return ab;
}

Matrix r_map(const Matrix& a) {
  std::size_t n = a.size();
  Matrix out = zero_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i < j) out[i][j] = -a[i][j];
      if (i > j) out[i][j] = a[i][j];
    }
  return out;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
  Matrix c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c[i][j] += b[i][j];
  return c;
}

Scalar trace_pairing(const Matrix& a, const Matrix& b) { return trace(multiply(a, b)); }

}  // namespace

SlnStandard sln_standard(int n) {
  if (n < 2) throw std::invalid_argument("sln_standard: n >= 2");
  SlnStandard out;
  out.n = n;
  std::vector<std::string> labels;
  auto E = [n](int i, int j) {
    Matrix m = zero_matrix(n, n);
    m[i][j] = 1;
    return m;
  };
  for (int i = 0; i + 1 < n; ++i) {
    Matrix d = E(i, i);
    d[i + 1][i + 1] = -1;
    out.basis_matrices.push_back(d);
    labels.push_back("D" + std::to_string(i + 1));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      out.basis_matrices.push_back(mat_add(E(i, j), E(j, i)));
      labels.push_back("S" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Matrix q = E(i, j);
      q[j][i] = -1;
      out.q_indices.push_back(static_cast<int>(out.basis_matrices.size()));
      out.basis_matrices.push_back(q);
      labels.push_back("Q" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  const auto& B = out.basis_matrices;
  int m = static_cast<int>(B.size());

  // Coordinates of a traceless matrix in the basis.
  std::vector<Row> flat;
  for (const auto& b : B) {
    Row r;
    for (const auto& row : b) r.insert(r.end(), row.begin(), row.end());
    flat.push_back(r);
  }
  auto coords = [&](const Matrix& a) {
    Row r;
    for (const auto& row : a) r.insert(r.end(), row.begin(), row.end());
    auto c = coordinates_in_span(flat, r);
    if (!c) throw std::logic_error("sln_standard: matrix outside sl(n)");
    return *c;
  };

  LieAlgebra g(labels);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) g.set_bracket(a, b, coords(mat_bracket(B[a], B[b])));

  // Dual basis covector e^a corresponds, via ξ_A = Tr(A ·), to the matrix
  // A_a = Σ_c Ginv[a][c] B_c where G is the trace Gram matrix.
  Matrix G = zero_matrix(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) G[a][b] = trace_pairing(B[a], B[b]);
  auto Gi = inverse(G);
  if (!Gi) throw std::logic_error("sln_standard: trace form degenerate");
  std::vector<Matrix> A(m, zero_matrix(n, n));
  for (int a = 0; a < m; ++a)
    for (int c = 0; c < m; ++c)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A[a][i][j] += (*Gi)[a][c] * B[c][i][j];

  std::vector<std::string> dual_labels;
  for (const auto& l : labels) dual_labels.push_back(dual_label(l));
  LieAlgebra dual(dual_labels);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      Matrix s = mat_add(mat_bracket(r_map(A[a]), A[b]), mat_bracket(A[a], r_map(A[b])));
      // ξ_s in the dual basis: coefficient on e^k is Tr(s B_k).
      Row v(m);
      for (int k = 0; k < m; ++k) v[k] = trace_pairing(s, B[k]);
      dual.set_bracket(a, b, v);
    }
  out.bialgebra = make_bialgebra_from_dual(std::move(g), dual);
  return out;
}

}  // namespace modvol
