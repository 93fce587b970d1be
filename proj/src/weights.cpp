#include "pncoh/weights.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "pncoh/errors.hpp"

namespace pncoh {

Weight::Weight(std::vector<long> entries) : entries_(std::move(entries)) {
  if (!std::is_sorted(entries_.begin(), entries_.end(), std::greater<>())) {
    throw InputError("weight " + to_string() + " is not weakly decreasing");
  }
}

long Weight::total() const { return std::accumulate(entries_.begin(), entries_.end(), 0L); }

bool Weight::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](long v) { return v == 0; });
}

std::size_t Weight::depth() const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [](long v) { return v != 0; }));
}

std::string Weight::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(entries_[i]);
  }
  return out + ")";
}

BigInt weyl_dim(const Weight& mu, std::size_t N) {
  if (mu.length() != N) {
    throw InputError("weyl_dim: weight " + mu.to_string() + " does not have length " +
                     std::to_string(N));
  }
  BigInt num = 1;
  BigInt den = 1;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = i + 1; j < N; ++j) {
      num *= mu[i] - mu[j] + static_cast<long>(j - i);
      den *= static_cast<long>(j - i);
    }
  }
  return num / den;
}

namespace {

// Enumerates LR tableaux of shape nu/lambda with content mu by choosing, row
// by row, how many cells of each label the row receives. counts[r][k] is the
// number of label k+1 in row r.
class LRFiller {
 public:
  LRFiller(const Weight& lambda, const Weight& mu)
      : lambda_(lambda.entries().begin(), lambda.entries().end()),
        mu_(mu.entries().begin(), mu.entries().end()),
        rows_(lambda.length()) {
    while (!mu_.empty() && mu_.back() == 0) mu_.pop_back();
    labels_ = mu_.size();
    counts_.assign(rows_, std::vector<long>(labels_, 0));
    used_.assign(labels_, 0);
  }

  std::map<std::vector<long>, BigInt> run() {
    if (labels_ == 0) {
      result_[lambda_] = 1;
      return result_;
    }
    if (labels_ > rows_) return result_;
    fill_row(0, 0);
    return result_;
  }

 private:
  // Column occupied by the rightmost cell with label <= k in row r
  // (label index k is zero-based; k = -1 means the original shape).
  long edge(std::size_t r, long k) const {
    long c = lambda_[r];
    for (long j = 0; j <= k; ++j) c += counts_[r][j];
    return c;
  }

  void fill_row(std::size_t r, std::size_t k) {
    if (r == rows_) {
      for (std::size_t j = 0; j < labels_; ++j) {
        if (used_[j] != mu_[j]) return;
      }
      std::vector<long> nu(rows_);
      for (std::size_t i = 0; i < rows_; ++i) nu[i] = edge(i, static_cast<long>(labels_) - 1);
      result_[nu] += 1;
      return;
    }
    if (k == labels_) {
      fill_row(r + 1, 0);
      return;
    }
    // Label k+1 cannot appear above row k+1.
    long max_count = (k > r) ? 0 : mu_[k] - used_[k];
    if (k > 0) {
      // Lattice: #(k+1 in rows <= r) <= #(k in rows < r).
      long prev_label_above = used_[k - 1] - counts_[r][k - 1];
      max_count = std::min(max_count, prev_label_above - used_[k]);
    }
    if (r > 0) {
      // Column strictness: the new cells must sit under cells of the original
      // shape or under smaller labels.
      long limit = edge(r - 1, static_cast<long>(k) - 1) - edge(r, static_cast<long>(k) - 1);
      max_count = std::min(max_count, limit);
    }
    for (long c = max_count; c >= 0; --c) {
      counts_[r][k] = c;
      used_[k] += c;
      fill_row(r, k + 1);
      used_[k] -= c;
      counts_[r][k] = 0;
    }
  }

  std::vector<long> lambda_;
  std::vector<long> mu_;
  std::size_t rows_;
  std::size_t labels_ = 0;
  std::vector<std::vector<long>> counts_;
  std::vector<long> used_;
  std::map<std::vector<long>, BigInt> result_;
};

}  // namespace

LRExpansion lr_product(const Weight& lambda, const Weight& mu) {
  if (lambda.length() != mu.length()) {
    throw InputError("lr_product: weights " + lambda.to_string() + " and " + mu.to_string() +
                     " have different lengths");
  }
  auto negative = [](const Weight& w) {
    return std::any_of(w.entries().begin(), w.entries().end(), [](long v) { return v < 0; });
  };
  if (negative(lambda) || negative(mu)) {
    throw InputError("lr_product: weights must be nonnegative (shift by the determinant first)");
  }
  // Fill the smaller shape into the larger one.
  const bool swap = lambda.total() < mu.total();
  LRFiller filler(swap ? mu : lambda, swap ? lambda : mu);
  auto raw = filler.run();
  LRExpansion out;
  out.reserve(raw.size());
  for (auto it = raw.rbegin(); it != raw.rend(); ++it) {
    out.push_back({Weight(it->first), it->second});
  }
  return out;
}

std::optional<WeylReduction> dotted_weyl_reduce(std::span<const long> w,
                                                std::span<const long> rho) {
  if (w.size() != rho.size()) {
    throw InputError("dotted_weyl_reduce: length mismatch");
  }
  std::vector<long> shifted(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) shifted[i] = w[i] + rho[i];

  unsigned inversions = 0;
  for (std::size_t i = 0; i < shifted.size(); ++i) {
    for (std::size_t j = i + 1; j < shifted.size(); ++j) {
      if (shifted[i] == shifted[j]) return std::nullopt;
      if (shifted[i] < shifted[j]) ++inversions;
    }
  }
  std::sort(shifted.begin(), shifted.end(), std::greater<>());
  for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] -= rho[i];
  return WeylReduction{inversions, Weight(std::move(shifted))};
}

std::vector<long> standard_rho(std::size_t N) {
  std::vector<long> rho(N);
  for (std::size_t i = 0; i < N; ++i) rho[i] = static_cast<long>(N - 1 - i);
  return rho;
}

}  // namespace pncoh
