#pragma once

// Twisted projective 1-forms A_0 dx_0 + ... + A_n dx_n, their singular
// schemes, and the linear space of forms vanishing on a given scheme.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "pncoh/checkers.hpp"
#include "pncoh/errors.hpp"
#include "pncoh/groebner.hpp"

namespace pncoh {

/// The contraction sum x_i A_i is not identically zero.
class EulerViolation : public InputError {
 public:
  explicit EulerViolation(Polynomial residual)
      : InputError("Euler relation fails, residual " + residual.to_string()),
        residual_(std::move(residual)) {}
  const Polynomial& residual() const { return residual_; }

 private:
  Polynomial residual_;
};

/// Section of Omega^1(r) on P^n: coefficients of degree r-1 in x_0..x_n with
/// sum x_i A_i = 0, not all zero.
class TwistedOneForm {
 public:
  /// Validates degrees, homogeneity, nonvanishing and the Euler relation.
  static TwistedOneForm make(int n, long r, std::vector<Polynomial> coefficients);

  int n() const { return n_; }
  long r() const { return r_; }
  const std::vector<Polynomial>& coefficients() const { return coefficients_; }

  /// Coordinates in the monomial basis of (degree r-1)^(n+1).
  std::vector<Rational> coordinates() const;
  std::string to_string() const;

 private:
  TwistedOneForm(int n, long r, std::vector<Polynomial> c)
      : n_(n), r_(r), coefficients_(std::move(c)) {}

  int n_;
  long r_;
  std::vector<Polynomial> coefficients_;
};

/// sum x_i A_i for arbitrary coefficient lists.
Polynomial euler_contraction(const std::vector<Polynomial>& coefficients);

/// sum_i lambda_i F_0 ... F_i^ ... F_m dF_i. Throws EulerViolation when
/// sum lambda_i deg F_i != 0.
TwistedOneForm log_form(int n, const std::vector<Polynomial>& F, const std::vector<Rational>& lambda);

/// P dQ - Q dP, twist 2 deg P.
TwistedOneForm pencil_form(const Polynomial& P, const Polynomial& Q);

struct SingularScheme {
  IdealPresentation ideal;
  std::vector<int> chart_dimensions;
  int dimension;  // -1 when empty
};

SingularScheme singular_scheme(const TwistedOneForm& w);

struct SectionSpace {
  long dim;
  std::vector<TwistedOneForm> basis;
};

/// Forms of twist r whose coefficients lie in the chart ideals of Z.
SectionSpace vanishing_section_space(int n, long r, const IdealPresentation& Z);

struct AnnihilatorDegree {
  int degree;
  long dim;
  std::vector<std::vector<Polynomial>> generators;  // vector fields v with sum A_i v_i = 0
};

/// Kernel of v -> sum A_i v_i on fields of degree 0..max_degree.
std::vector<AnnihilatorDegree> annihilator_distribution(const TwistedOneForm& w, int max_degree);

struct UniquenessReport {
  TwistedOneForm form;
  SingularScheme sing;
  long section_space_dim;
  std::vector<TwistedOneForm> basis;
  std::optional<TheoremReport> cross_ref;
  std::vector<std::string> notes;

  bool unique() const { return section_space_dim == 1; }
  std::string verdict() const { return unique() ? "unique-up-to-scalar" : "non-unique"; }
};

UniquenessReport uniqueness_report(const TwistedOneForm& w);

bool in_span(const TwistedOneForm& w, const std::vector<TwistedOneForm>& basis);

/// Line 1 "P^n twist r", then "A_i: <polynomial>" for i = 0..n.
TwistedOneForm parse_form(std::string_view text);
std::string render_form_file(const TwistedOneForm& w);

/// Homogeneous polynomial with coefficients uniform in [-5, 5], nonzero.
Polynomial random_homogeneous(int n, int degree, std::mt19937_64& rng);

/// Pencil of two random degree-d forms; resamples until the form is nonzero.
TwistedOneForm random_pencil(int n, int d, std::uint64_t seed);

/// `count` random linear forms on P^n.
std::vector<Polynomial> random_linear_forms(int n, int count, std::uint64_t seed);

/// sum B_ij x_j dx_i with B antisymmetric and random, twist 2.
TwistedOneForm random_linear_form(int n, std::uint64_t seed);

}  // namespace pncoh
