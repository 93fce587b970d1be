#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pncoh/report.hpp"

namespace pncoh::cli {

struct SweepParams {
  std::string kind;  // bott | lemma | codim1 | split | twist
  int n_min = 1;
  int n_max = 6;
  int n_limit = 8;  // refuse larger grids unless raised
  long s_min = -12;
  long s_max = 12;
  std::optional<long> r_min;
  std::optional<long> r_max;
  int count = 20;
  std::uint64_t seed = 0;
  std::string expr;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct SweepResult {
  Json rows;
  bool all_ok;
};

/// Runs `tasks` on a worker pool; results are stored by task index.
std::vector<Json> run_pool(const std::vector<std::function<Json()>>& tasks, unsigned threads);

SweepResult run_sweep(const SweepParams& p);

}  // namespace pncoh::cli
