#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace hyperpath::cli {

enum class BenchFamily { path, cycle };

/// A fixed planted family: one directed r-uniform graph on n vertices with a
/// planted tight path or cycle of `plant_length` vertices and `noise_edges`
/// random edges. Every k in the range is solved on that same graph. On a
/// planted cycle every edge extends a walk at every length, so the circuit
/// grows linearly in k and the 2^k factor dominates the timings.
struct BenchOptions {
  BenchFamily family = BenchFamily::cycle;
  std::size_t r = 3;
  std::size_t n = 24;
  std::size_t plant_length = 24;
  std::size_t noise_edges = 12;
  std::size_t k_min = 14;
  std::size_t k_max = 18;
  std::size_t samples = 5;  // timed runs per k, taken in interleaved rounds
  std::size_t trials = 8;   // detection trials per run, all executed
  unsigned field_degree = 16;
  std::uint64_t seed = 1;
  bool force = false;
};

struct BenchRow {
  std::size_t k = 0;
  double best_s = 0.0;  // fastest sample; delays on a shared machine only add time
  double median_s = 0.0;
  std::optional<double> ratio;  // best(k) / best(k - 1)
  std::size_t memory_bytes = 0;  // 2^k * (l / 8) * m * 2
  std::size_t circuit_gates = 0;
  bool yes = false;
};

/// Throws std::invalid_argument when k_max is over the guard of 24 (unless
/// force), printing the memory formula in the message.
std::vector<BenchRow> run_bench(const BenchOptions& opts);

nlohmann::json bench_to_json(const BenchOptions& opts, const std::vector<BenchRow>& rows);
std::string bench_to_table(const std::vector<BenchRow>& rows);

}  // namespace hyperpath::cli
