#pragma once

// The Chow ring A(P^n) = Q[h]/(h^{n+1}) and the characteristic classes built
// on it: Chern characters, Chern and Todd classes, Riemann-Roch and
// Thom-Porteous degeneracy classes.

#include <vector>

#include "pncoh/bundle.hpp"

namespace pncoh {

class ChowClass {
 public:
  explicit ChowClass(int n);
  ChowClass(int n, std::vector<Rational> coefficients);

  static ChowClass one(int n);
  /// exp(a*h), truncated.
  static ChowClass exponential(int n, const Rational& a);

  int ambient() const { return n_; }
  const std::vector<Rational>& coefficients() const { return c_; }
  const Rational& operator[](std::size_t degree) const { return c_.at(degree); }
  Rational& operator[](std::size_t degree) { return c_.at(degree); }

  ChowClass& operator+=(const ChowClass& o);
  ChowClass& operator-=(const ChowClass& o);
  ChowClass& operator*=(const ChowClass& o);
  ChowClass& operator*=(const Rational& s);
  /// Power-series inverse; requires a nonzero constant term.
  ChowClass inverse() const;
  ChowClass pow(unsigned e) const;

  bool is_integral() const;
  std::string to_string() const;

  friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
  friend ChowClass operator-(ChowClass a, const ChowClass& b) { return a -= b; }
  friend ChowClass operator*(ChowClass a, const ChowClass& b) { return a *= b; }
  friend ChowClass operator*(ChowClass a, const Rational& s) { return a *= s; }
  friend bool operator==(const ChowClass&, const ChowClass&) = default;

 private:
  int n_;
  std::vector<Rational> c_;
};

ChowClass chern_character(const IrreducibleBundle& b);
ChowClass chern_character(const Decomposition& d);
ChowClass chern_character(const BundleExpr& e);

/// Total Chern class from a Chern character via Newton's identities. Throws
/// InternalError if a Chern class is not an integer.
ChowClass chern_class_from_character(const ChowClass& ch);
ChowClass total_chern_class(const BundleExpr& e);

/// td(P^n) = (h / (1 - exp(-h)))^{n+1}.
ChowClass todd_class(int n);

/// Degree-n part of ch(e) td(P^n); throws InternalError if not an integer.
BigInt hrr_chi(const BundleExpr& e);
BigInt hrr_chi(const Decomposition& d);

struct PorteousResult {
  int codim;            // e - g + 1
  ChowClass cls;        // class of the expected-codimension degeneracy locus
  BigInt degree;        // coefficient of h^codim
  bool exceeds_ambient; // codim > n; cls is zero
};

/// Class of the locus where phi: E -> G drops rank, as the determinant
/// det[c_{1+j-i}(G - E)] of size e - g + 1.
PorteousResult porteous_class(const BundleExpr& E, const BundleExpr& G);

}  // namespace pncoh
