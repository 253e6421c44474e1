#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "modvol/scalar.hpp"

namespace modvol {

using Row = std::vector<Scalar>;
using Matrix = std::vector<Row>;  // row-major; every row has the same length

Matrix zero_matrix(std::size_t rows, std::size_t cols);
Matrix identity_matrix(std::size_t n);
Matrix transpose(const Matrix& a, std::size_t cols);
Matrix multiply(const Matrix& a, const Matrix& b);
Scalar trace(const Matrix& a);
Scalar determinant(const Matrix& a);
std::optional<Matrix> inverse(const Matrix& a);

// Row echelon form computed with Bareiss elimination on integer-scaled rows,
// then normalised to reduced form over Q.
struct Echelon {
  Matrix rref;               // reduced rows, one per pivot
  std::vector<int> pivots;   // pivot column of each row
  std::size_t cols = 0;
};

Echelon row_reduce(const Matrix& a, std::size_t cols);
std::size_t rank(const Matrix& a, std::size_t cols);

// Basis of {x : a x = 0}; each vector has a single free variable set to 1.
std::vector<Row> nullspace(const Matrix& a, std::size_t cols);

struct AffineSolution {
  bool feasible = false;
  Row particular;                 // free variables set to 0
  std::vector<Row> homogeneous;   // nullspace basis
};

AffineSolution solve_affine(const Matrix& a, const Row& b, std::size_t cols);

// Solution of a x = b with the fewest nonzero entries; among supports of equal
// size the lexicographically first one (by index list) wins.
std::optional<Row> min_support_solution(const Matrix& a, const Row& b, std::size_t cols);

bool satisfies(const Matrix& a, const Row& x, const Row& b);

// Coordinates of v in the span of the given vectors, if it lies there.
std::optional<Row> coordinates_in_span(const std::vector<Row>& span, const Row& v);

}  // namespace modvol
