#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "minuscule/rational.hpp"

namespace minuscule {

/// Dense row-major matrix of exact rationals.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Rat> entries);
  /// Row lists; all rows must have the same length.
  static ExactMatrix from_rows(const std::vector<std::vector<Rat>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Rat& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  std::span<const Rat> entries() const { return entries_; }

  ExactMatrix transpose() const;
  ExactMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> entries_;
};

/// Exact determinant by fraction-tracking Gaussian elimination; square input only.
Rat determinant(const ExactMatrix& m);

std::vector<std::vector<std::string>> to_strings(const ExactMatrix& m);

}  // namespace minuscule
