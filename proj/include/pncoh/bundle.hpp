#pragma once

// Homogeneous bundles on P^n and their normal form as sums of
// S_lambda(Q) (x) O(d), Q the rank-n tautological quotient bundle.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "pncoh/numeric.hpp"
#include "pncoh/weights.hpp"

namespace pncoh {

/// Immutable expression tree. Copies share structure.
class BundleExpr {
 public:
  enum class Kind { Line, Tangent, Cotangent, Dual, Tensor, Sum, Wedge, Sym };

  struct Summand;

  static BundleExpr line(int n, long degree);
  static BundleExpr tangent(int n);
  /// Omega^p, 1 <= p <= n.
  static BundleExpr cotangent(int n, int p);
  static BundleExpr dual(const BundleExpr& child);
  static BundleExpr tensor(const BundleExpr& left, const BundleExpr& right);
  /// Direct sum with positive multiplicities; a single summand of
  /// multiplicity m is how "m*E" is represented.
  static BundleExpr sum(std::vector<Summand> summands);
  static BundleExpr wedge(int k, const BundleExpr& child);
  static BundleExpr sym(int k, const BundleExpr& child);

  /// Convenience: left (+) right with unit multiplicities.
  static BundleExpr direct_sum(const BundleExpr& left, const BundleExpr& right);
  /// Convenience: e (x) O(d).
  static BundleExpr twist(const BundleExpr& e, long d);
  /// Convenience: m*e.
  static BundleExpr multiple(long m, const BundleExpr& e);

  Kind kind() const;
  int ambient() const;
  /// Line: degree. Cotangent: p. Wedge/Sym: k.
  long parameter() const;
  /// Dual/Wedge/Sym: [child]. Tensor: [left, right].
  const std::vector<BundleExpr>& children() const;
  /// Sum only.
  const std::vector<Summand>& summands() const;

  /// Renders in the CLI grammar; parse(render(e)) == e.
  std::string render() const;

  friend bool operator==(const BundleExpr& a, const BundleExpr& b);

 private:
  struct Node;
  explicit BundleExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct BundleExpr::Summand {
  BundleExpr expr;
  long multiplicity;
};

/// S_lambda(Q) (x) O(twist) with lambda_n = 0.
class IrreducibleBundle {
 public:
  /// Normalizes lambda so that its last entry is zero, absorbing the shift
  /// into the twist (det Q = O(1)).
  IrreducibleBundle(int n, const Weight& lambda, long twist);

  static IrreducibleBundle line(int n, long degree) {
    return IrreducibleBundle(n, Weight::zero(static_cast<std::size_t>(n)), degree);
  }

  int ambient() const { return n_; }
  const Weight& lambda() const { return lambda_; }
  long twist() const { return twist_; }
  bool is_line() const { return lambda_.is_zero(); }
  BigInt rank() const;

  IrreducibleBundle dual() const;
  IrreducibleBundle twisted(long d) const { return IrreducibleBundle(n_, lambda_, twist_ + d); }

  /// e.g. "S(2,1,0)Q(3)" or "O(-2)".
  std::string to_string() const;

  friend bool operator==(const IrreducibleBundle&, const IrreducibleBundle&) = default;
  friend auto operator<=>(const IrreducibleBundle&, const IrreducibleBundle&) = default;

 private:
  int n_;
  Weight lambda_;
  long twist_;
};

/// Multiset of irreducible summands. Empty means the zero bundle.
class Decomposition {
 public:
  using Terms = std::map<IrreducibleBundle, BigInt>;

  explicit Decomposition(int n) : n_(n) {}
  Decomposition(int n, const IrreducibleBundle& b, BigInt multiplicity = 1);

  int ambient() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add(const IrreducibleBundle& b, const BigInt& multiplicity);
  Decomposition& operator+=(const Decomposition& other);
  Decomposition scaled(const BigInt& factor) const;
  Decomposition dual() const;
  Decomposition twisted(long d) const;

  BigInt rank() const;
  std::string to_string() const;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;

 private:
  int n_;
  Terms terms_;
};

Decomposition tensor(const Decomposition& a, const Decomposition& b);

/// Exterior and symmetric powers of one irreducible summand. Supported for
/// line bundles, Q and Lambda^{n-1}Q (any twist) and for the extreme powers
/// 0, 1 and rank; anything else throws UnsupportedPlethysm.
Decomposition wedge_power(const IrreducibleBundle& b, long k);
Decomposition sym_power(const IrreducibleBundle& b, long k);
Decomposition wedge_power(const Decomposition& d, long k);
Decomposition sym_power(const Decomposition& d, long k);

Decomposition normalize(const BundleExpr& e);
BigInt rank(const BundleExpr& e);
/// Top exterior power, as O(d).
IrreducibleBundle det_bundle(const BundleExpr& e);
IrreducibleBundle det_bundle(const Decomposition& d);

}  // namespace pncoh
