#pragma once

#include <gtest/gtest.h>

#include <ostream>
#include <random>
#include <vector>

#include "minuscule/matrix.hpp"
#include "minuscule/poly.hpp"

namespace minuscule {
inline void PrintTo(const Poly& p, std::ostream* os) { *os << to_string(p); }
}  // namespace minuscule

namespace minuscule::testing {

inline Poly P(std::initializer_list<long> coeffs) {
  std::vector<Rat> c;
  for (long v : coeffs) c.emplace_back(v);
  return Poly(std::move(c));
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240917);
  return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Rat random_rat(long span = 20) {
  const long num = uniform(-span, span);
  const long den = uniform(1, span);
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Poly random_poly(long max_degree, long span = 20) {
  std::vector<Rat> c(static_cast<std::size_t>(uniform(0, max_degree) + 1));
  for (auto& x : c) x = random_rat(span);
  return Poly(std::move(c));
}

/// Nonnegative integer matrix, lower triangular when `triangular`.
inline ExactMatrix random_nonneg_matrix(std::size_t n, bool triangular, long span = 4) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!triangular || j <= i) m(i, j) = uniform(0, span);
  return m;
}

inline ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      for (std::size_t k = 0; k < a.cols(); ++k) c(i, j) += a(i, k) * b(k, j);
  return c;
}

}  // namespace minuscule::testing
