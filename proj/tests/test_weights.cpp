#include <doctest.h>

#include <map>
#include <random>

#include "pncoh/errors.hpp"
#include "pncoh/weights.hpp"
#include "support/oracles.hpp"

using namespace pncoh;

namespace {

std::vector<long> random_weight(std::mt19937_64& rng, std::size_t len, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  std::vector<long> w(len);
  for (auto& x : w) x = d(rng);
  std::sort(w.rbegin(), w.rend());
  return w;
}

BigInt expansion_dim(const LRExpansion& e, std::size_t N) {
  BigInt total = 0;
  for (const auto& t : e) total += t.multiplicity * weyl_dim(t.weight, N);
  return total;
}

}  // namespace

TEST_SUITE("weights") {
  TEST_CASE("weight validation") {
    CHECK_THROWS_AS(Weight({1, 2}), InputError);
    CHECK(Weight({3, 3, -1}).total() == 5);
    CHECK(Weight({2, 1, 0, 0}).depth() == 2);
    CHECK(Weight::zero(3).is_zero());
  }

  TEST_CASE("weyl dimension small cases") {
    CHECK(weyl_dim(Weight({1, 0, 0}), 3) == 3);
    CHECK(weyl_dim(Weight({1, 1, 0}), 3) == 3);
    CHECK(weyl_dim(Weight({2, 0, 0}), 3) == 6);
    CHECK(weyl_dim(Weight({2, 1, 0}), 3) == 8);
    CHECK(weyl_dim(Weight({0, 0, 0}), 3) == 1);
    CHECK(weyl_dim(Weight({1, 1, 1}), 3) == 1);
  }

  TEST_CASE("weyl dimension agrees with hook-content formula (seed 101)") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t N = 1 + rng() % 6;
      auto w = random_weight(rng, N, -4, 5);
      CHECK(weyl_dim(Weight(w), N) == oracle::hook_content_dim(w, static_cast<long>(N)));
    }
  }

  TEST_CASE("littlewood-richardson fixtures") {
    auto e = lr_product(Weight({1, 0, 0}), Weight({1, 0, 0}));
    REQUIRE(e.size() == 2);
    CHECK(e[0] == LRTerm{Weight({2, 0, 0}), 1});
    CHECK(e[1] == LRTerm{Weight({1, 1, 0}), 1});

    // s21 * s21 in at least 6 variables
    auto f = lr_product(Weight({2, 1, 0, 0, 0, 0}), Weight({2, 1, 0, 0, 0, 0}));
    std::map<std::vector<long>, BigInt> got;
    for (const auto& t : f) got[{t.weight.entries().begin(), t.weight.entries().end()}] = t.multiplicity;
    const std::map<std::vector<long>, BigInt> expected = {
        {{4, 2, 0, 0, 0, 0}, 1}, {{4, 1, 1, 0, 0, 0}, 1}, {{3, 3, 0, 0, 0, 0}, 1},
        {{3, 2, 1, 0, 0, 0}, 2}, {{3, 1, 1, 1, 0, 0}, 1}, {{2, 2, 2, 0, 0, 0}, 1},
        {{2, 2, 1, 1, 0, 0}, 1}};
    CHECK(got == expected);

    // truncation to 2 variables drops every shape with 3 rows
    auto g = lr_product(Weight({2, 1}), Weight({2, 1}));
    CHECK(g.size() == 2);
  }

  TEST_CASE("littlewood-richardson preserves dimension (seed 202)") {
    std::mt19937_64 rng(202);
    for (int trial = 0; trial < 120; ++trial) {
      const std::size_t N = 2 + rng() % 4;
      auto a = random_weight(rng, N, 0, 3);
      auto b = random_weight(rng, N, 0, 3);
      const auto e = lr_product(Weight(a), Weight(b));
      CHECK(expansion_dim(e, N) == weyl_dim(Weight(a), N) * weyl_dim(Weight(b), N));
      // commutativity
      CHECK(e == lr_product(Weight(b), Weight(a)));
      // descending order
      for (std::size_t i = 1; i < e.size(); ++i) CHECK(e[i - 1].weight > e[i].weight);
    }
  }

  TEST_CASE("littlewood-richardson rejects bad input") {
    CHECK_THROWS_AS(lr_product(Weight({1, -1}), Weight({1, 0})), InputError);
    CHECK_THROWS_AS(lr_product(Weight({1, 0}), Weight({1, 0, 0})), InputError);
  }

  TEST_CASE("dotted weyl reduction matches permutation search (seed 303)") {
    std::mt19937_64 rng(303);
    std::uniform_int_distribution<long> d(-6, 6);
    for (int trial = 0; trial < 400; ++trial) {
      const std::size_t N = 1 + rng() % 5;
      std::vector<long> w(N);
      for (auto& x : w) x = d(rng);
      const auto rho = standard_rho(N);
      const auto got = dotted_weyl_reduce(w, rho);
      const auto want = oracle::brute_force_reduce(w, rho);
      REQUIRE(got.has_value() == want.has_value());
      if (got) {
        CHECK(got->inversions == want->inversions);
        CHECK(std::vector<long>(got->sorted.entries().begin(), got->sorted.entries().end()) == want->weight);
      }
    }
  }

  TEST_CASE("standard rho") { CHECK(standard_rho(4) == std::vector<long>{3, 2, 1, 0}); }
}
