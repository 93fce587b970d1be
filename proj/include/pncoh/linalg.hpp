#pragma once

#include <vector>

#include "pncoh/numeric.hpp"

namespace pncoh {

using RationalVector = std::vector<Rational>;

class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void append_row(const RationalVector& row);

  /// Reduced row echelon form in place; returns the pivot columns.
  std::vector<std::size_t> row_reduce();

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

std::size_t matrix_rank(RationalMatrix m);

/// Basis of the right kernel, one vector per free column.
std::vector<RationalVector> kernel_basis(RationalMatrix m);

/// True iff v is a linear combination of `span`.
bool in_span(const RationalVector& v, const std::vector<RationalVector>& span);

}  // namespace pncoh
