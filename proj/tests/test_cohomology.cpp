#include <doctest.h>

#include <random>

#include "pncoh/cohomology.hpp"
#include "pncoh/complexes.hpp"
#include "pncoh/expression_parser.hpp"
#include "support/oracles.hpp"
#include "support/random_expr.hpp"

using namespace pncoh;

namespace {

std::vector<BigInt> h(const char* text) { return cohomology_table(parse_expression(text)).dims; }

std::vector<BigInt> v(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST_SUITE("cohomology") {
  TEST_CASE("line bundles match the binomial formulas") {
    for (int n = 1; n <= 6; ++n) {
      for (long d = -15; d <= 15; ++d) {
        CHECK(cohomology_table(BundleExpr::line(n, d)).dims == oracle::line_bundle_h(n, d));
      }
    }
  }

  TEST_CASE("hand-computed tables") {
    CHECK(h("Omega^1 (x) O(2) on P^2") == v({3, 0, 0}));
    CHECK(h("Omega^1 on P^2") == v({0, 1, 0}));
    CHECK(h("T on P^2") == v({8, 0, 0}));
    CHECK(h("T (x) O(-3) on P^2") == v({0, 1, 0}));
    CHECK(h("T (x) O(-4) on P^2") == v({0, 0, 0}));
    CHECK(h("T (x) O(-5) on P^2") == v({0, 0, 3}));
    CHECK(h("wedge(2,T) (x) Omega^2 on P^4") == v({1, 0, 0, 0, 0}));
    CHECK(h("wedge(4,T) on P^3") == v({0, 0, 0, 0}));
  }

  TEST_CASE("bott closed form agrees with the engine on a small grid") {
    for (int n = 1; n <= 4; ++n) {
      for (int k = 0; k <= n; ++k) {
        for (long s = -6; s <= 6; ++s) {
          CHECK(cohomology_table(BundleExpr::twist(omega(n, k), s)).dims == bott_closed_form(k, s, n));
        }
      }
    }
  }

  TEST_CASE("euler sequence: chi(T) = (n+1) chi(O(1)) - chi(O)") {
    for (int n = 1; n <= 6; ++n) {
      for (long s = -8; s <= 8; ++s) {
        const auto t = cohomology_table(BundleExpr::twist(BundleExpr::tangent(n), s)).euler_characteristic();
        const BigInt want = (n + 1) * cohomology_table(BundleExpr::line(n, s + 1)).euler_characteristic() -
                            cohomology_table(BundleExpr::line(n, s)).euler_characteristic();
        CHECK(t == want);
      }
    }
  }

  TEST_CASE("contributions are listed per summand") {
    const auto t = cohomology_table(parse_expression("T (x) Omega^1 on P^3"));
    BigInt total = 0;
    for (const auto& c : t.contributions) {
      if (c.cohomology) total += c.multiplicity * c.cohomology->dim;
    }
    CHECK(total == t.h(0) + t.h(1) + t.h(2) + t.h(3));
    CHECK(t.h(0) == 1);
  }

  TEST_CASE("serre duality on random expressions (seed 606)") {
    std::mt19937_64 rng(606);
    for (int trial = 0; trial < 90; ++trial) {
      const int n = 2 + trial % 3;
      const auto e = testgen::random_expr(n, rng);
      const auto a = cohomology_table(e);
      const auto b = cohomology_table(BundleExpr::twist(BundleExpr::dual(e), -(n + 1)));
      for (int p = 0; p <= n; ++p) CHECK(a.h(static_cast<std::size_t>(p)) == b.h(static_cast<std::size_t>(n - p)));
      CHECK(serre_dual_check(e));
    }
  }

  TEST_CASE("chi is additive over direct sums (seed 707)") {
    std::mt19937_64 rng(707);
    for (int trial = 0; trial < 60; ++trial) {
      const int n = 2 + trial % 3;
      const auto a = testgen::random_expr(n, rng, 1);
      const auto b = testgen::random_expr(n, rng, 1);
      const auto s = cohomology_table(BundleExpr::direct_sum(a, b));
      const auto ta = cohomology_table(a);
      const auto tb = cohomology_table(b);
      for (int p = 0; p <= n; ++p) {
        const auto i = static_cast<std::size_t>(p);
        CHECK(s.h(i) == ta.h(i) + tb.h(i));
      }
    }
  }
}
