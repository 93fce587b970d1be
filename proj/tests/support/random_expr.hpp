#pragma once

// Seeded random bundle expressions that stay inside the supported
// plethysm range.

#include <random>

#include "pncoh/bundle.hpp"

namespace testgen {

using pncoh::BundleExpr;

inline int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline BundleExpr random_leaf(int n, std::mt19937_64& rng) {
  switch (uniform(rng, 0, 3)) {
    case 0: return BundleExpr::line(n, uniform(rng, -4, 4));
    case 1: return BundleExpr::tangent(n);
    case 2: return BundleExpr::cotangent(n, uniform(rng, 1, n));
    default: return BundleExpr::twist(BundleExpr::tangent(n), uniform(rng, -3, 2));
  }
}

/// Argument of wedge/sym that the normal form can expand for every power.
inline BundleExpr power_base(int n, std::mt19937_64& rng) {
  switch (uniform(rng, 0, 4)) {
    case 0: return BundleExpr::tangent(n);
    case 1: return BundleExpr::cotangent(n, 1);
    case 2: return BundleExpr::cotangent(n, n - 1);
    case 3: return BundleExpr::direct_sum(BundleExpr::line(n, uniform(rng, -2, 2)),
                                          BundleExpr::line(n, uniform(rng, -2, 2)));
    default: return BundleExpr::twist(BundleExpr::tangent(n), uniform(rng, -2, 1));
  }
}

inline BundleExpr random_expr(int n, std::mt19937_64& rng, int depth = 2) {
  if (depth == 0) return random_leaf(n, rng);
  switch (uniform(rng, 0, 6)) {
    case 0: return BundleExpr::direct_sum(random_expr(n, rng, depth - 1), random_expr(n, rng, depth - 1));
    case 1: return BundleExpr::tensor(random_expr(n, rng, depth - 1), random_leaf(n, rng));
    case 2: return BundleExpr::dual(random_expr(n, rng, depth - 1));
    case 3: return BundleExpr::wedge(uniform(rng, 0, n + 1), power_base(n, rng));
    case 4: return BundleExpr::sym(uniform(rng, 0, 3), power_base(n, rng));
    case 5: return BundleExpr::multiple(uniform(rng, 2, 3), random_leaf(n, rng));
    default: return BundleExpr::twist(random_expr(n, rng, depth - 1), uniform(rng, -3, 3));
  }
}

}  // namespace testgen
