#include "pncoh/linalg.hpp"

#include "pncoh/errors.hpp"

namespace pncoh {

void RationalMatrix::append_row(const RationalVector& row) {
  if (row.size() != cols_) throw InputError("row length mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

std::vector<std::size_t> RationalMatrix::row_reduce() {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols_ && lead < rows_; ++c) {
    std::size_t pivot = lead;
    while (pivot < rows_ && at(pivot, c) == 0) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != lead) {
      for (std::size_t k = 0; k < cols_; ++k) std::swap(at(pivot, k), at(lead, k));
    }
    const Rational inv = 1 / at(lead, c);
    for (std::size_t k = c; k < cols_; ++k) at(lead, k) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == lead || at(r, c) == 0) continue;
      const Rational factor = at(r, c);
      for (std::size_t k = c; k < cols_; ++k) {
        if (at(lead, k) != 0) at(r, k) -= factor * at(lead, k);
      }
    }
    pivots.push_back(c);
    ++lead;
  }
  return pivots;
}

std::size_t matrix_rank(RationalMatrix m) { return m.row_reduce().size(); }

std::vector<RationalVector> kernel_basis(RationalMatrix m) {
  const auto pivots = m.row_reduce();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free);
    out.push_back(std::move(v));
  }
  return out;
}

bool in_span(const RationalVector& v, const std::vector<RationalVector>& span) {
  RationalMatrix m(0, v.size());
  for (const auto& s : span) m.append_row(s);
  const std::size_t base = matrix_rank(m);
  m.append_row(v);
  return matrix_rank(std::move(m)) == base;
}

}  // namespace pncoh
