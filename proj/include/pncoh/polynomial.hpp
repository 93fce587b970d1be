#pragma once

// Multivariate polynomials with exact rational coefficients, terms kept in
// degree-reverse-lexicographic order (x0 > x1 > ...).

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pncoh/numeric.hpp"

namespace pncoh {

using Exponent = std::vector<int>;

/// Strict "a > b" in degrevlex.
struct DegRevLexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

bool divides(const Exponent& a, const Exponent& b);
Exponent lcm(const Exponent& a, const Exponent& b);
int exponent_degree(const Exponent& e);

class Polynomial {
 public:
  using Terms = std::map<Exponent, Rational, DegRevLexGreater>;

  explicit Polynomial(int nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial monomial(int nvars, Exponent e, const Rational& c = 1);
  static Polynomial variable(int nvars, int i);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// Leading term; the polynomial must be nonzero.
  const Exponent& leading_monomial() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }

  /// Maximum total degree; -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  bool is_constant() const;
  Rational coefficient(const Exponent& e) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);
  Polynomial operator-() const;

  /// this += c * x^e * g
  void add_scaled_shifted(const Polynomial& g, const Exponent& e, const Rational& c);

  Polynomial derivative(int var) const;
  /// Substitutes x_var = 1, dropping that variable.
  Polynomial dehomogenize(int var) const;
  /// Scaled to leading coefficient 1.
  Polynomial monic() const;
  /// Integer coefficients with unit content and positive leading coefficient.
  Polynomial primitive() const;

  /// Names default to x0, x1, ...
  std::string to_string(const std::vector<std::string>& names = {}) const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void add_term(const Exponent& e, const Rational& c);

  int nvars_;
  Terms terms_;
};

/// Parses sums of terms c*x0^a0*...*xk^ak with rational c written p/q.
/// Throws InputError on malformed input or variable indices >= nvars.
Polynomial parse_polynomial(std::string_view text, int nvars);

/// All exponents of the given total degree, in descending degrevlex order.
std::vector<Exponent> monomials_of_degree(int nvars, int degree);

}  // namespace pncoh
