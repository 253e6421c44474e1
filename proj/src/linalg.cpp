#include "modvol/linalg.hpp"

#include <stdexcept>

namespace modvol {

Matrix zero_matrix(std::size_t rows, std::size_t cols) {
  return Matrix(rows, Row(cols, Scalar(0)));
}

Matrix identity_matrix(std::size_t n) {
  Matrix m = zero_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Matrix transpose(const Matrix& a, std::size_t cols) {
  Matrix t = zero_matrix(cols, a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = a[i][j];
  return t;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.empty()) return {};
  std::size_t inner = a[0].size();
  if (b.size() != inner) throw std::invalid_argument("multiply: shape mismatch");
  std::size_t cols = b.empty() ? 0 : b[0].size();
  Matrix c = zero_matrix(a.size(), cols);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (is_zero(a[i][k])) continue;
      for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

Scalar trace(const Matrix& a) {
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i][i];
  return s;
}

namespace {

// Clear denominators row by row so Bareiss can run over Z.
std::vector<std::vector<mpz_class>> integer_rows(const Matrix& a, std::size_t cols) {
  std::vector<std::vector<mpz_class>> out;
  out.reserve(a.size());
  for (const auto& row : a) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < cols; ++j) {
      const mpz_class& d = row[j].get_den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<mpz_class> r(cols);
    for (std::size_t j = 0; j < cols; ++j) {
      mpz_class q = l / row[j].get_den();
      r[j] = row[j].get_num() * q;
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

Echelon row_reduce(const Matrix& a, std::size_t cols) {
  auto m = integer_rows(a, cols);
  std::size_t rows = m.size();
  std::vector<int> pivots;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class v = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    pivots.push_back(static_cast<int>(c));
    ++r;
  }

  Echelon e;
  e.cols = cols;
  e.pivots = pivots;
  e.rref.resize(pivots.size(), Row(cols, Scalar(0)));
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    mpz_class piv = m[i][pivots[i]];
    for (std::size_t j = 0; j < cols; ++j) {
      Scalar v(m[i][j], piv);
      v.canonicalize();
      e.rref[i][j] = v;
    }
  }
  for (std::size_t i = pivots.size(); i-- > 0;) {
    for (std::size_t k = 0; k < i; ++k) {
      Scalar f = e.rref[k][pivots[i]];
      if (is_zero(f)) continue;
      for (std::size_t j = 0; j < cols; ++j) e.rref[k][j] -= f * e.rref[i][j];
    }
  }
  return e;
}

std::size_t rank(const Matrix& a, std::size_t cols) { return row_reduce(a, cols).pivots.size(); }

Scalar determinant(const Matrix& a) {
  std::size_t n = a.size();
  if (n == 0) return 1;
  Matrix m = a;
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(m[p][c])) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m[i][c])) continue;
      Scalar f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& a) {
  std::size_t n = a.size();
  Matrix aug = zero_matrix(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  Echelon e = row_reduce(aug, 2 * n);
  if (e.pivots.size() < n || e.pivots[n - 1] != static_cast<int>(n - 1)) return std::nullopt;
  Matrix inv = zero_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = e.rref[i][n + j];
  return inv;
}

std::vector<Row> nullspace(const Matrix& a, std::size_t cols) {
  Echelon e = row_reduce(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (int p : e.pivots) is_pivot[p] = true;
  std::vector<Row> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Row v(cols, Scalar(0));
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rref[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

AffineSolution solve_affine(const Matrix& a, const Row& b, std::size_t cols) {
  if (b.size() != a.size()) throw std::invalid_argument("solve_affine: rhs length mismatch");
  Matrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  Echelon e = row_reduce(aug, cols + 1);
  AffineSolution out;
  for (int p : e.pivots)
    if (p == static_cast<int>(cols)) return out;
  out.feasible = true;
  out.particular.assign(cols, Scalar(0));
  for (std::size_t i = 0; i < e.pivots.size(); ++i) out.particular[e.pivots[i]] = e.rref[i][cols];
  out.homogeneous = nullspace(a, cols);
  return out;
}

bool satisfies(const Matrix& a, const Row& x, const Row& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    Scalar s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) s += a[i][j] * x[j];
    if (s != b[i]) return false;
  }
  return true;
}

namespace {

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<Row> min_support_solution(const Matrix& a, const Row& b, std::size_t cols) {
  if (!solve_affine(a, b, cols).feasible) return std::nullopt;
  if (all_zero(b)) return Row(cols, Scalar(0));
  for (std::size_t k = 1; k <= cols; ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    do {
      Matrix sub(a.size(), Row(k));
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < k; ++j) sub[i][j] = a[i][idx[j]];
      AffineSolution s = solve_affine(sub, b, k);
      if (!s.feasible) continue;
      // At the first feasible size the columns are independent and the
      // solution has full support; otherwise a smaller support would exist.
      Row x(cols, Scalar(0));
      for (std::size_t j = 0; j < k; ++j) x[idx[j]] = s.particular[j];
      return x;
    } while (next_combination(idx, cols));
  }
  return std::nullopt;
}

std::optional<Row> coordinates_in_span(const std::vector<Row>& span, const Row& v) {
  std::size_t n = span.size();
  Matrix a = zero_matrix(v.size(), n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < v.size(); ++i) a[i][j] = span[j][i];
  AffineSolution s = solve_affine(a, v, n);
  if (!s.feasible) return std::nullopt;
  return s.particular;
}

}  // namespace modvol
