#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace modvol {

// Exact rationals. mpq_class keeps values canonical once canonicalize() has
// run, which every constructor below does.
using Scalar = mpq_class;

// Accepts "p", "-p", "p/q". Throws std::invalid_argument otherwise.
Scalar parse_rational(std::string_view text);
bool is_rational_literal(std::string_view text);

std::string to_string(const Scalar& s);
double to_double(const Scalar& s);

inline Scalar rat(long p, long q = 1) {
  Scalar s(p, q);
  s.canonicalize();
  return s;
}

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

bool all_zero(const std::vector<Scalar>& v);

}  // namespace modvol
