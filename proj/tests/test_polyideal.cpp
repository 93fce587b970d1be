#include <doctest.h>

#include <random>

#include "pncoh/errors.hpp"
#include "pncoh/groebner.hpp"

using namespace pncoh;

namespace {

Polynomial p(const char* text, int nvars) { return parse_polynomial(text, nvars); }

Polynomial random_poly(int nvars, int max_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-5, 5);
  Polynomial out(nvars);
  for (int d = 0; d <= max_degree; ++d) {
    for (const auto& m : monomials_of_degree(nvars, d)) {
      if (rng() % 3 == 0) out += Polynomial::monomial(nvars, m, coef(rng));
    }
  }
  return out;
}

Polynomial random_homog(int nvars, int degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-3, 3);
  Polynomial out(nvars);
  for (const auto& m : monomials_of_degree(nvars, degree)) out += Polynomial::monomial(nvars, m, coef(rng));
  return out;
}

}  // namespace

TEST_SUITE("polyideal") {
  TEST_CASE("degrevlex order") {
    DegRevLexGreater gt;
    CHECK(gt({2, 0, 0}, {1, 1, 0}));
    CHECK(gt({1, 1, 0}, {0, 2, 0}));
    CHECK(gt({0, 2, 0}, {1, 0, 1}));  // x1^2 > x0 x2
    CHECK(gt({0, 0, 2}, {1, 0, 0}));  // degree first
    const auto monos = monomials_of_degree(3, 2);
    CHECK(monos.size() == 6);
    CHECK(monos.front() == Exponent{2, 0, 0});
    CHECK(monos.back() == Exponent{0, 0, 2});
  }

  TEST_CASE("parsing and printing") {
    const auto f = p("3/2*x0^2*x1 - x2 + 4 - 1/2*x0^2*x1", 3);
    CHECK(f.to_string() == "x0^2*x1 - x2 + 4");
    CHECK(p(f.to_string().c_str(), 3) == f);
    CHECK_THROWS_AS(p("x3", 3), InputError);
    CHECK_THROWS_AS(p("2*", 3), InputError);
    CHECK_THROWS_AS(p("1/0", 3), InputError);
    CHECK_THROWS_AS(p("x0 x1", 3), InputError);
    CHECK(p("0", 2).is_zero());
  }

  TEST_CASE("arithmetic and calculus") {
    const auto f = p("x0 + x1", 2);
    CHECK(f * f == p("x0^2 + 2*x0*x1 + x1^2", 2));
    CHECK((f * f).derivative(0) == p("2*x0 + 2*x1", 2));
    CHECK(p("x0^2*x1 + x1^3", 2).dehomogenize(1) == p("x0^2 + 1", 1));
    CHECK(p("6*x0 + 4/3*x1", 2).primitive() == p("9*x0 + 2*x1", 2));
    CHECK(p("-2*x0 + 4*x1", 2).monic() == p("x0 - 2*x1", 2));
    CHECK(p("x0^2 + x1^2", 2).is_homogeneous());
    CHECK(!p("x0^2 + x1", 2).is_homogeneous());
  }

  TEST_CASE("buchberger trivial cases") {
    CHECK(buchberger({p("x0", 2), p("x1", 2)}) == std::vector<Polynomial>{p("x1", 2), p("x0", 2)});
    CHECK(buchberger({p("3*x0^2 - 6*x1", 2)}) == std::vector<Polynomial>{p("x0^2 - 2*x1", 2)});
    CHECK(buchberger({Polynomial(2)}).empty());
    CHECK(buchberger({p("x0", 2), p("x0 + 1", 2)}) == std::vector<Polynomial>{p("1", 2)});
  }

  TEST_CASE("hand-traced basis for x^2 - y, xy - 1") {
    // S(f1, f2) = y f1 - x f2 = x - y^2, giving y^2 - x; every further S-pair reduces to 0
    const auto basis = buchberger({p("x0^2 - x1", 2), p("x0*x1 - 1", 2)});
    const std::vector<Polynomial> want = {p("x1^2 - x0", 2), p("x0*x1 - 1", 2), p("x0^2 - x1", 2)};
    CHECK(basis == want);
    CHECK(normal_form(p("x1^3", 2), basis) == p("1", 2));
    CHECK(normal_form(p("x1^3 - 1", 2), basis).is_zero());
    CHECK(staircase_dimension(basis, 2) == 0);
  }

  TEST_CASE("normal form basics") {
    const std::vector<Polynomial> xy = {p("x0", 2), p("x1", 2)};
    CHECK(normal_form(p("1", 2), xy) == p("1", 2));
    for (const auto& g : xy) CHECK(normal_form(g, xy).is_zero());
  }

  TEST_CASE("basis properties on random ideals (seed 1301)") {
    std::mt19937_64 rng(1301);
    for (int trial = 0; trial < 25; ++trial) {
      const int nvars = 2 + trial % 2;
      std::vector<Polynomial> gens;
      for (int k = 0; k < 2 + trial % 2; ++k) gens.push_back(random_poly(nvars, 2, rng));
      const auto basis = buchberger(gens);
      CHECK(satisfies_s_pair_criterion(basis));
      for (const auto& g : gens) CHECK(normal_form(g, basis).is_zero());
      CHECK(buchberger(basis) == basis);  // idempotent
      for (std::size_t i = 0; i < basis.size(); ++i) {
        CHECK(basis[i].leading_coefficient() == 1);
        for (std::size_t j = 0; j < basis.size(); ++j) {
          if (i == j) continue;
          for (const auto& [e, c] : basis[i].terms()) CHECK(!divides(basis[j].leading_monomial(), e));
        }
      }
      // linearity of the normal form
      const auto f = random_poly(nvars, 3, rng);
      const auto g = random_poly(nvars, 3, rng);
      const Rational a(2, 3);
      CHECK(normal_form(f + g * a, basis) == normal_form(f, basis) + normal_form(g, basis) * a);
    }
  }

  TEST_CASE("chart membership") {
    const int n = 2;
    auto I = IdealPresentation::from_generators(n, {p("x0*x1", 3), p("x1*x2", 3), p("x0*x2", 3)});
    for (const auto& g : I.generators) CHECK(membership_on_charts(g, I));
    CHECK(!membership_on_charts(p("1", 3), I));
    CHECK(membership_on_charts(p("x0^2*x1", 3), I));
    CHECK(!membership_on_charts(p("x0^2", 3), I));
    CHECK(I.dimension() == 0);
    for (int i = 0; i <= n; ++i) {
      for (const auto& g : I.generators) CHECK(normal_form(g.dehomogenize(i), I.charts[static_cast<std::size_t>(i)]).is_zero());
    }
  }

  TEST_CASE("charts see the saturation") {
    // on P^2 the embedded point [0:0:1] survives; on P^1 the ideal saturates to (x0)
    auto I = IdealPresentation::from_generators(2, {p("x0^2", 3), p("x0*x1", 3)});
    CHECK(!membership_on_charts(p("x0", 3), I));
    CHECK(I.dimension() == 1);
    auto J = IdealPresentation::from_generators(1, {p("x0^2", 2), p("x0*x1", 2)});
    CHECK(membership_on_charts(p("x0", 2), J));
  }

  TEST_CASE("random combinations stay in the ideal (seed 1402)") {
    std::mt19937_64 rng(1402);
    auto I = IdealPresentation::from_generators(
        3, {random_homog(4, 2, rng), random_homog(4, 2, rng), random_homog(4, 3, rng)});
    for (int t = 0; t < 20; ++t) {
      Polynomial f(4);
      for (const auto& g : I.generators) f += random_homog(4, 4 - g.total_degree(), rng) * g;
      if (f.is_zero()) continue;
      CHECK(membership_on_charts(f, I));
    }
    for (const auto& chart : I.charts) CHECK(satisfies_s_pair_criterion(chart));
  }

  TEST_CASE("scale guard") {
    CHECK_THROWS_AS(IdealPresentation::from_generators(5, {Polynomial::variable(6, 0)}), ScaleExceeded);
    CHECK_THROWS_AS(IdealPresentation::from_generators(2, {p("x0^9", 3)}), ScaleExceeded);
    CHECK_THROWS_AS(IdealPresentation::from_generators(2, {p("x0^2 + x1", 3)}), InputError);
  }
}
