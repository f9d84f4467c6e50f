#include "hmeb/bench.hpp"

#include <chrono>
#include <cstdio>

#include "hmeb/documents.hpp"
#include "hmeb/sampling.hpp"
#include "json.hpp"

namespace hmeb {

BenchConfig parse_bench_config(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DocumentError("config", std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw DocumentError("config", "config: expected an object");

  BenchConfig cfg;
  auto int_list = [&](const char* key, std::vector<int>& out) {
    if (!j.contains(key)) return;
    const auto& arr = j[key];
    if (!arr.is_array() || arr.empty())
      throw DocumentError(key, std::string(key) + ": expected a non-empty list of integers");
    out.clear();
    for (const auto& v : arr) {
      if (!v.is_number_integer() || v.get<long long>() < 1)
        throw DocumentError(key, std::string(key) + ": entries must be positive integers");
      out.push_back(v.get<int>());
    }
  };
  int_list("n", cfg.n_values);
  int_list("m", cfg.m_values);
  for (int m : cfg.m_values)
    if (m < 3) throw DocumentError("m", "m: polygons need at least 3 sides");
  if (j.contains("trials")) {
    if (!j["trials"].is_number_integer() || j["trials"].get<long long>() < 1)
      throw DocumentError("trials", "trials: expected a positive integer");
    cfg.trials = j["trials"].get<int>();
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned())
      throw DocumentError("seed", "seed: expected a non-negative integer");
    cfg.seed = j["seed"].get<std::uint64_t>();
  }
  return cfg;
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  std::vector<BenchRow> rows;
  for (int n : config.n_values) {
    for (int m : config.m_values) {
      BenchRow row{n, m, config.trials, 0, 0, 0};
      for (int t = 0; t < config.trials; ++t) {
        Sampler sampler(config.seed ^ (std::uint64_t(n) << 32) ^ (std::uint64_t(m) << 16) ^
                        std::uint64_t(t));
        const Polygon omega = sampler.convex_polygon(m);
        const auto pts = sampler.interior_points(omega, n);
        const MebInstance instance(omega, pts, MetricKind::Hilbert, sampler.next());
        const auto start = std::chrono::steady_clock::now();
        const MebResult result = lp_type_solve(instance);
        const auto stop = std::chrono::steady_clock::now();
        row.mean_violation_tests += double(result.stats.violation_tests);
        row.mean_basis_computations += double(result.stats.basis_computations);
        row.mean_wall_ms += std::chrono::duration<double, std::milli>(stop - start).count();
      }
      row.mean_violation_tests /= config.trials;
      row.mean_basis_computations /= config.trials;
      row.mean_wall_ms /= config.trials;
      rows.push_back(row);
    }
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::string out = "n,m,trials,mean_violation_tests,mean_basis_computations,mean_wall_ms\n";
  char buf[256];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%d,%d,%d,%.2f,%.2f,%.3f\n", r.n, r.m, r.trials,
                  r.mean_violation_tests, r.mean_basis_computations, r.mean_wall_ms);
    out += buf;
  }
  return out;
}

}  // namespace hmeb
