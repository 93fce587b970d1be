#pragma once

// Buchberger's algorithm over the rationals and chart-wise membership for
// homogeneous ideals on P^n.

#include <span>
#include <vector>

#include "pncoh/polynomial.hpp"

namespace pncoh {

inline constexpr int kMaxChartVariables = 4;
inline constexpr int kMaxGeneratorDegree = 8;

/// Throws ScaleExceeded when the ring or a generator is above desk scale.
void check_scale(int nvars, std::span<const Polynomial> gens);

/// Full multivariate division remainder. No rescaling, so the map is linear.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Reduced Groebner basis (monic, sorted by increasing leading monomial).
/// The zero ideal gives an empty basis.
std::vector<Polynomial> buchberger(std::vector<Polynomial> gens);

/// True iff every S-polynomial of `basis` reduces to zero against it.
bool satisfies_s_pair_criterion(std::span<const Polynomial> basis);

/// Krull dimension of the affine quotient from the leading monomials of a
/// Groebner basis; -1 for the unit ideal.
int staircase_dimension(std::span<const Polynomial> basis, int nvars);

struct IdealPresentation {
  int n = 0;  // ambient P^n, generators live in n+1 variables
  std::vector<Polynomial> generators;
  std::vector<std::vector<Polynomial>> charts;  // basis at x_i = 1

  /// Computes every chart basis. Generators must be homogeneous.
  static IdealPresentation from_generators(int n, std::vector<Polynomial> gens);

  int chart_dimension(int i) const;
  /// Largest chart dimension; -1 when the projective scheme is empty.
  int dimension() const;
};

/// True iff f dehomogenized at x_i lies in chart ideal i for every i.
bool membership_on_charts(const Polynomial& f, const IdealPresentation& ideal);

}  // namespace pncoh
