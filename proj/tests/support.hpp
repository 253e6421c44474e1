#pragma once

#include <random>
#include <vector>

#include "modvol/lie.hpp"
#include "modvol/linalg.hpp"
#include "modvol/polynomial.hpp"

namespace testing_support {

inline constexpr std::uint64_t kSeed = 20240611;
inline constexpr int kInstances = 200;

inline modvol::Scalar small_rational(std::mt19937_64& rng, int range = 5, int den = 3) {
  std::uniform_int_distribution<int> num(-range, range), d(1, den);
  return modvol::rat(num(rng), d(rng));
}

inline modvol::Vector random_vector(std::mt19937_64& rng, int m) {
  modvol::Vector v;
  for (int i = 0; i < m; ++i) v.c.push_back(small_rational(rng));
  return v;
}

inline modvol::Covector random_covector(std::mt19937_64& rng, int m) {
  modvol::Covector v;
  for (int i = 0; i < m; ++i) v.c.push_back(small_rational(rng));
  return v;
}

inline modvol::Matrix random_matrix(std::mt19937_64& rng, int rows, int cols, int range = 4) {
  modvol::Matrix a(rows, modvol::Row(cols));
  for (auto& r : a)
    for (auto& x : r) x = small_rational(rng, range, 2);
  return a;
}

// Up to `terms` monomials of total degree <= max_degree.
inline modvol::Polynomial random_polynomial(std::mt19937_64& rng, int nvars, int terms = 4, int max_degree = 3) {
  modvol::Polynomial p(nvars);
  for (int t = 0; t < terms; ++t) {
    modvol::Polynomial::Exponent e(nvars, 0);
    int budget = static_cast<int>(rng() % (max_degree + 1));
    for (int d = 0; d < budget; ++d) ++e[rng() % nvars];
    p.add_term(e, small_rational(rng));
  }
  return p;
}

inline std::vector<modvol::Scalar> random_point(std::mt19937_64& rng, int n) {
  std::vector<modvol::Scalar> x;
  for (int i = 0; i < n; ++i) x.push_back(small_rational(rng));
  return x;
}

}  // namespace testing_support
