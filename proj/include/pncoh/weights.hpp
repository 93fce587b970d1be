#pragma once

// Dominant weights of GL(N) and the combinatorics used to decompose
// homogeneous bundles: Weyl dimensions, Littlewood-Richardson products and
// the dotted Weyl-group action.

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pncoh/numeric.hpp"

namespace pncoh {

/// A weakly decreasing integer sequence of fixed length N. Entries may be
/// negative.
class Weight {
 public:
  Weight() = default;
  /// Throws InputError unless `entries` is weakly decreasing.
  explicit Weight(std::vector<long> entries);

  static Weight zero(std::size_t length) { return Weight(std::vector<long>(length, 0)); }

  std::span<const long> entries() const { return entries_; }
  std::size_t length() const { return entries_.size(); }
  long operator[](std::size_t i) const { return entries_[i]; }
  /// Entry sum |lambda|.
  long total() const;
  bool is_zero() const;
  /// Number of nonzero entries (partitions only).
  std::size_t depth() const;

  std::string to_string() const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

 private:
  std::vector<long> entries_;
};

/// Dimension of the irreducible GL(N) module of highest weight `mu`.
BigInt weyl_dim(const Weight& mu, std::size_t N);

struct LRTerm {
  Weight weight;
  BigInt multiplicity;

  friend bool operator==(const LRTerm&, const LRTerm&) = default;
};

/// Littlewood-Richardson decomposition, ordered lexicographically descending
/// by weight.
using LRExpansion = std::vector<LRTerm>;

/// Decomposes S_lambda (x) S_mu for GL(N), N = lambda.length(). Both weights
/// must have nonnegative entries and equal length.
LRExpansion lr_product(const Weight& lambda, const Weight& mu);

struct WeylReduction {
  unsigned inversions;
  Weight sorted;  // sort(w + rho) - rho

  friend bool operator==(const WeylReduction&, const WeylReduction&) = default;
};

/// Dotted action bookkeeping: sorts w + rho into strictly decreasing order.
/// Returns nullopt (degenerate) when w + rho has a repeated entry.
std::optional<WeylReduction> dotted_weyl_reduce(std::span<const long> w,
                                                std::span<const long> rho);

/// rho = (N-1, ..., 1, 0).
std::vector<long> standard_rho(std::size_t N);

}  // namespace pncoh
