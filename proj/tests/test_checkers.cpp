#include <doctest.h>

#include "pncoh/checkers.hpp"
#include "pncoh/errors.hpp"
#include "pncoh/expression_parser.hpp"

using namespace pncoh;

namespace {

bool all_vanish(const TheoremReport& r) {
  for (const auto& g : r.groups) {
    if (g.dim != 0) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("checkers") {
  TEST_CASE("theorem keys round trip") {
    for (auto id : {TheoremId::DegeneracyMap, TheoremId::SplitDistribution, TheoremId::Codim1Generic,
                    TheoremId::SplitVanishing, TheoremId::Endomorphism}) {
      CHECK(parse_theorem_key(theorem_key(id)) == id);
    }
    CHECK(!parse_theorem_key("thm-9-9"));
  }

  TEST_CASE("split distribution fixtures") {
    const auto a = check_split_distribution(3, 2, {-1, -1});
    CHECK(a.hypotheses_hold());
    CHECK(all_vanish(a));
    REQUIRE(a.certificate);
    CHECK(a.certificate->verdict);

    const auto b = check_split_distribution(3, 2, {0, 1});
    CHECK(!b.hypotheses_hold());
    CHECK(!b.conditions.front().ok);

    const auto c = check_split_distribution(5, 3, {-2, -2, -2});
    CHECK(c.hypotheses_hold());
  }

  TEST_CASE("group index set") {
    const auto r = check_split_distribution(5, 2, {-3, -3});
    std::vector<std::pair<long, long>> idx;
    for (const auto& g : r.groups) idx.push_back({g.i, g.p});
    std::vector<std::pair<long, long>> want;
    for (long i = 3; i <= 5; ++i) {
      for (long p = 1; p < i - 2 + 1; ++p) want.push_back({i, p});
    }
    CHECK(idx == want);
    CHECK(check_split_distribution(3, 3, {-1, -1, -1}).groups.empty());
  }

  TEST_CASE("ampleness is the degree criterion") {
    CHECK(split_ample({1, 2, 5}));
    CHECK(!split_ample({1, 0}));
    // condition (1): every -d_j + k - n >= 1
    const auto r = check_split_distribution(4, 2, {-4, -3});
    CHECK(r.conditions.front().ok);
  }

  TEST_CASE("argument validation") {
    CHECK_THROWS_AS(check_split_distribution(3, 0, {}), InputError);
    CHECK_THROWS_AS(check_split_distribution(3, 2, {1}), InputError);
  }

  TEST_CASE("codimension one") {
    CHECK(check_codim1_generic(3, 5).hypotheses_hold());
    CHECK(all_vanish(check_codim1_generic(3, 5)));
    CHECK(check_codim1_generic(2, 4).hypotheses_hold());
    const auto low = check_codim1_generic(3, 3);
    CHECK(!low.hypotheses_hold());
    CHECK(low.groups.size() == 2);
  }

  TEST_CASE("codimension one vanishing is monotone in r") {
    for (int n = 2; n <= 5; ++n) {
      for (long r = n + 2; r < n + 6; ++r) {
        if (all_vanish(check_codim1_generic(n, r))) CHECK(all_vanish(check_codim1_generic(n, r + 1)));
      }
    }
  }

  TEST_CASE("endomorphisms of Omega^k") {
    for (int n = 0; n <= 6; ++n) {
      for (int k = 0; k <= n; ++k) {
        CHECK(endomorphism_space_dim(k, n) == 1);
      }
    }
    CHECK(check_endomorphism(2, 4).hypotheses_hold());
  }

  TEST_CASE("locally free distribution records the ampleness claim") {
    const auto F = parse_expression("Omega^1 (x) O(1) on P^3");
    const auto yes = check_locally_free_distribution(F, true);
    const auto no = check_locally_free_distribution(F, false);
    CHECK(yes.conditions.front().ok);
    CHECK(!no.conditions.front().ok);
    CHECK(!no.hypotheses_hold());
    bool recorded = false;
    for (const auto& n : yes.notes) recorded = recorded || n.find("assumed") != std::string::npos;
    CHECK(recorded);
  }

  TEST_CASE("degeneracy map report wraps the certificate") {
    const auto r = check_degeneracy_map(parse_expression("Omega^1 on P^3"), parse_expression("2*O(1) on P^3"));
    CHECK(r.hypotheses_hold());
    REQUIRE(r.certificate);
    CHECK(r.certificate->verdict);
  }
}
