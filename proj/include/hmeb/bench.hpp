#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hmeb {

struct BenchConfig {
  std::vector<int> n_values{100, 1000, 10000};
  std::vector<int> m_values{8};
  int trials = 5;
  std::uint64_t seed = 0;
};

/// Parses {"n": [...], "m": [...], "trials": t, "seed": s}; missing keys
/// keep their defaults. Throws DocumentError.
BenchConfig parse_bench_config(std::string_view text);

struct BenchRow {
  int n = 0;
  int m = 0;
  int trials = 0;
  double mean_violation_tests = 0;
  double mean_basis_computations = 0;
  double mean_wall_ms = 0;
};

/// Runs the LP-type solver on random Hilbert instances, one row per (n, m).
std::vector<BenchRow> run_bench(const BenchConfig& config);

std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace hmeb
