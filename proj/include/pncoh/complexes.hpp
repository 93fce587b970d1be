#pragma once

// Eagon-Northcott resolutions of degeneracy loci of phi: E -> G and the
// cohomological vanishing certificate that lets a section vanishing on the
// locus be recovered from phi.

#include <optional>
#include <string>
#include <vector>

#include "pncoh/bundle.hpp"
#include "pncoh/cohomology.hpp"

namespace pncoh {

struct ENResolutionReport {
  BundleExpr E;
  BundleExpr G;
  long e;
  long g;
  bool twisted;
  /// Terms for i = g..e. Untwisted: Lambda^i E (x) S_{i-g}(G*) (x) det(G*).
  /// Twisted: Lambda^g(E*) (x) Lambda^i E (x) S_{i-g}(G*).
  std::vector<BundleExpr> terms;
  std::vector<BigInt> ranks;
};

/// Requires rank(E) >= rank(G) >= 1.
ENResolutionReport en_resolution(const BundleExpr& E, const BundleExpr& G, bool twisted = false);

struct CertificateEntry {
  long i;
  BundleExpr expr;  // Lambda^g(E*) (x) Lambda^{g+i} E (x) S_i(G*)
  CohomologyTable table;
  bool ok;          // h^i(expr) == 0
};

struct ENCertificate {
  BundleExpr E;
  BundleExpr G;
  long e;
  long g;
  std::vector<CertificateEntry> required;  // i = 1..e-g
  bool verdict;
  /// Replay of the descending induction through the kernel sheaves F_j.
  std::vector<std::string> chain_trace;
  /// Hypotheses the certificate cannot check symbolically.
  std::vector<std::string> assumptions;
  /// h^0(Lambda^g(E*) (x) Lambda^g E), when computable.
  std::optional<BigInt> endomorphism_dim;

  int ambient() const { return E.ambient(); }
};

/// Requires rank(E) >= rank(G) >= 1; e == g gives a vacuous certificate.
ENCertificate vanishing_certificate(const BundleExpr& E, const BundleExpr& G);

struct EulerChaseStep {
  unsigned degree;  // i, for H^i(Lambda^{k-i} T (x) Omega^k)
  BigInt dim;
};

struct EulerChase {
  int k;
  int n;
  std::vector<EulerChaseStep> chain;  // i = 0..k
  /// middle_vanishes[i]: h^p(Omega^k(k-i)) = 0 for every p, i = 0..k-1.
  std::vector<bool> middle_vanishes;

  /// Every middle term vanishes and the chain dimension is constant.
  bool consistent() const;
};

/// Chases H^0(Lambda^k T (x) Omega^k) ~ H^1(...) ~ ... ~ H^k(Omega^k) through
/// exterior powers of the Euler sequence. Requires 0 <= k <= n.
EulerChase euler_les_chase(int k, int n);

/// Omega^k on P^n, with Omega^0 = O.
BundleExpr omega(int n, int k);

}  // namespace pncoh
