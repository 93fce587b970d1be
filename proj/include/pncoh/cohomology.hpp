#pragma once

// Sheaf cohomology of homogeneous bundles on P^n by Borel-Weil-Bott.

#include <optional>
#include <vector>

#include "pncoh/bundle.hpp"

namespace pncoh {

/// Nonvanishing cohomology of one irreducible summand: H^degree has
/// dimension `dim` and is the GL(n+1) module of highest weight `weight`.
struct SummandCohomology {
  unsigned degree;
  Weight weight;
  BigInt dim;
};

/// nullopt when every cohomology group vanishes.
std::optional<SummandCohomology> bwb_cohomology(const IrreducibleBundle& b);

struct SummandContribution {
  IrreducibleBundle summand;
  BigInt multiplicity;
  std::optional<SummandCohomology> cohomology;
};

struct CohomologyTable {
  int n = 0;
  std::vector<BigInt> dims;  // h^0 .. h^n
  std::optional<BundleExpr> expr;
  std::vector<SummandContribution> contributions;

  BigInt euler_characteristic() const;
  bool all_zero() const;
  const BigInt& h(std::size_t p) const { return dims.at(p); }
};

/// Dimensions h^p(P^n, Omega^k(s)) from Bott's closed formulas; an oracle
/// independent of the weight machinery. Requires 0 <= k <= n.
std::vector<BigInt> bott_closed_form(int k, long s, int n);

CohomologyTable cohomology_table(const Decomposition& d);
CohomologyTable cohomology_table(const BundleExpr& e);

/// h^i(E) == h^{n-i}(E* (x) O(-n-1)) for all i.
bool serre_dual_check(const BundleExpr& e);

}  // namespace pncoh
