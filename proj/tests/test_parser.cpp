#include <doctest.h>

#include "pncoh/expression_parser.hpp"

using namespace pncoh;

TEST_SUITE("expression_parser") {
  TEST_CASE("grammar examples") {
    const auto e = parse_expression("wedge(2,T) (x) Omega^3 on P^3");
    CHECK(e.ambient() == 3);
    CHECK(e == BundleExpr::tensor(BundleExpr::wedge(2, BundleExpr::tangent(3)), BundleExpr::cotangent(3, 3)));

    const auto f = parse_expression("dual(O(3)) (+) 2*O(-1) on P^2");
    CHECK(f == BundleExpr::sum({{BundleExpr::dual(BundleExpr::line(2, 3)), 1},
                                {BundleExpr::line(2, -1), 2}}));

    CHECK(parse_expression("O(1) + T * O(2)", 2) ==
          BundleExpr::direct_sum(BundleExpr::line(2, 1),
                                 BundleExpr::tensor(BundleExpr::tangent(2), BundleExpr::line(2, 2))));
  }

  TEST_CASE("zero bundle warning") {
    const auto e = parse_expression("wedge(4,T) on P^3");
    CHECK(rank(e) == 0);
    CHECK(expression_warnings(e).size() == 1);
    CHECK(expression_warnings(parse_expression("wedge(3,T) on P^3")).empty());
  }

  TEST_CASE("ambient handling") {
    CHECK_THROWS_AS(parse_expression("T"), ParseError);
    CHECK_THROWS_AS(parse_expression("T on P^3", 2), ParseError);
    CHECK(parse_expression("T on P^3", 3).ambient() == 3);
    CHECK_THROWS_AS(parse_expression("Omega^4 on P^3"), InputError);
  }

  TEST_CASE("errors carry position and expected tokens") {
    try {
      parse_expression("O(1) (+ T on P^2");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.position() == 5);
      CHECK(e.expected().count("(+)") == 1);
    }
    try {
      parse_expression("wedge(2 T) on P^2");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.expected().count(",") == 1);
    }
    CHECK_THROWS_AS(parse_expression("O(x) on P^2"), ParseError);
    CHECK_THROWS_AS(parse_expression("", 2), ParseError);
  }

  TEST_CASE("rendering is reparseable") {
    for (const char* text : {"wedge(2,T) (x) Omega^3 on P^3", "dual(O(3)) (+) 2*O(-1) on P^2",
                             "sym(2,T (+) O(1)) (x) (O(1) (+) O(2)) on P^2", "3*(T (x) O(-1)) on P^4"}) {
      const auto e = parse_expression(text);
      CHECK(parse_expression(e.render(), e.ambient()) == e);
    }
  }
}
