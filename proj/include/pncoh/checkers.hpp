#pragma once

// Hypothesis checkers for the uniqueness criteria on P^n. A report says
// whether the sufficient conditions hold; it never claims non-uniqueness.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pncoh/complexes.hpp"

namespace pncoh {

enum class TheoremId {
  DegeneracyMap,      // maps E -> G determined by their degeneracy scheme
  SplitDistribution,  // rank-k distributions with the ampleness conditions
  Codim1Generic,      // codimension-one distributions, zero-dimensional Sing
  SplitVanishing,     // the vanishing behind SplitDistribution
  Endomorphism,       // End(Omega^k) is one-dimensional
};

/// Stable identifiers used by the CLI and JSON reports.
std::string_view theorem_key(TheoremId id);
std::optional<TheoremId> parse_theorem_key(std::string_view key);

struct ConditionCheck {
  std::string name;
  bool ok;
};

struct GroupDim {
  long i;
  long p;
  BigInt dim;
};

struct ReportInputs {
  int n = 0;
  std::optional<int> k;
  std::optional<long> r;
  std::optional<std::vector<long>> degrees;
  std::optional<std::string> E;
  std::optional<std::string> G;
  std::optional<std::string> F;
};

struct TheoremReport {
  TheoremId theorem;
  ReportInputs inputs;
  std::vector<ConditionCheck> conditions;
  std::vector<GroupDim> groups;
  std::optional<ENCertificate> certificate;
  std::vector<std::string> notes;

  /// True iff every condition check passes.
  bool hypotheses_hold() const;
};

/// Rank-k distribution F = sum O(d_j) on P^n, 1 <= k <= n. Checks the two
/// ampleness alternatives and computes H^p(Lambda^k T (x) Omega^i (x)
/// S_{i-k} F) for k+1 <= i <= n, 1 <= p <= i-k.
TheoremReport check_split_distribution(int n, int k, const std::vector<long>& degrees);

/// Same group computation reported as a vanishing statement.
TheoremReport check_split_vanishing(int n, int k, const std::vector<long>& degrees);

/// Locally free, possibly non-split F given as an expression. Ampleness of
/// F*(k-n) cannot be decided here; `assert_ample` records the caller's claim.
TheoremReport check_locally_free_distribution(const BundleExpr& F, bool assert_ample);

/// Codimension-one distribution with Sing of dimension zero, whose 1-form
/// is a section of Omega^1(r). Requires n >= 2.
TheoremReport check_codim1_generic(int n, long r);

/// Vanishing certificate for phi: E -> G.
TheoremReport check_degeneracy_map(const BundleExpr& E, const BundleExpr& G);

TheoremReport check_endomorphism(int k, int n);

/// h^0(Lambda^k T (x) Omega^k) = dim End(Omega^k).
BigInt endomorphism_space_dim(int k, int n);

/// Split bundle sum O(a_j) is ample iff every a_j >= 1.
bool split_ample(const std::vector<long>& degrees);

}  // namespace pncoh
