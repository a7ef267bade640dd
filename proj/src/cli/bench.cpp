#include "hyperpath/cli/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <stdexcept>

#include "hyperpath/generators.hpp"
#include "hyperpath/solver.hpp"

namespace hyperpath::cli {

namespace {

constexpr std::size_t kBenchGuard = 24;

std::size_t memory_estimate(std::size_t k, unsigned l, std::size_t m) {
  return (std::size_t{1} << k) * (l / 8) * m * 2;
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchOptions& opts) {
  if (opts.k_min > opts.k_max) throw std::invalid_argument("k range is empty");
  if (opts.samples == 0 || opts.trials == 0) throw std::invalid_argument("samples and trials must be positive");
  if (opts.k_max > kBenchGuard && !opts.force) {
    throw std::invalid_argument(
        "k = " + std::to_string(opts.k_max) + " exceeds the guard k <= " + std::to_string(kBenchGuard) +
        "; memory estimate 2^k * (l/8) * m * 2 bytes = 2^" + std::to_string(opts.k_max) + " * " +
        std::to_string(opts.field_degree / 8) + " * m * 2 (use --force to override)");
  }
  const auto inst = opts.family == BenchFamily::cycle
                        ? planted_cycle(opts.r, opts.n, opts.plant_length, opts.noise_edges, true, opts.seed)
                        : planted_path(opts.r, opts.n, opts.plant_length, opts.noise_edges, true, opts.seed);
  const std::size_t m = inst.graph.num_edges();

  DetectionParams params;
  params.field_degree = opts.field_degree;
  params.repetitions = opts.trials;
  params.seed = opts.seed;
  params.stop_at_first_yes = false;
  params.force = opts.force;

  const std::size_t count = opts.k_max - opts.k_min + 1;
  std::vector<BenchRow> rows(count);
  std::vector<std::vector<double>> times(count);
  // Rounds visit every k once, so a slow stretch of the machine is spread
  // over all rows instead of landing on one of them.
  for (std::size_t s = 0; s < opts.samples; ++s) {
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t k = opts.k_min + i;
      const auto t0 = std::chrono::steady_clock::now();
      const Decision d = solve_k_hyperpath(inst.graph, k, params);
      const auto t1 = std::chrono::steady_clock::now();
      times[i].push_back(std::chrono::duration<double>(t1 - t0).count());
      rows[i].k = k;
      rows[i].yes = d.yes;
      rows[i].circuit_gates = d.circuit_gates;
      rows[i].memory_bytes = memory_estimate(k, opts.field_degree, m);
    }
  }
  for (std::size_t i = 0; i < count; ++i) {
    auto& t = times[i];
    std::nth_element(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(t.size() / 2), t.end());
    rows[i].median_s = t[t.size() / 2];
    rows[i].best_s = *std::min_element(t.begin(), t.end());
    if (i > 0 && rows[i - 1].best_s > 0) rows[i].ratio = rows[i].best_s / rows[i - 1].best_s;
  }
  return rows;
}

nlohmann::json bench_to_json(const BenchOptions& opts, const std::vector<BenchRow>& rows) {
  nlohmann::json out = {{"schema", "hyperpath.bench/1"},
                        {"family",
                         {{"kind", opts.family == BenchFamily::cycle ? "planted-cycle" : "planted-path"},
                          {"r", opts.r},
                          {"n", opts.n},
                          {"plant_length", opts.plant_length},
                          {"noise_edges", opts.noise_edges},
                          {"seed", opts.seed}}},
                        {"samples", opts.samples},
                        {"trials", opts.trials},
                        {"field_degree", opts.field_degree}};
  nlohmann::json table = nlohmann::json::array();
  for (const auto& r : rows) {
    table.push_back({{"k", r.k},
                     {"best_s", r.best_s},
                     {"median_s", r.median_s},
                     {"ratio", r.ratio ? nlohmann::json(*r.ratio) : nlohmann::json(nullptr)},
                     {"memory_bytes", r.memory_bytes},
                     {"circuit_gates", r.circuit_gates},
                     {"answer", r.yes ? "yes" : "no"}});
  }
  out["rows"] = std::move(table);
  return out;
}

std::string bench_to_table(const std::vector<BenchRow>& rows) {
  std::string out = "    k      best_s    median_s     ratio   memory_bytes   gates  answer\n";
  char line[160];
  for (const auto& r : rows) {
    const std::string ratio = r.ratio ? std::to_string(*r.ratio).substr(0, 6) : "-";
    std::snprintf(line, sizeof line, "%5zu  %10.4f  %10.4f  %8s  %13zu  %6zu  %s\n", r.k, r.best_s, r.median_s,
                  ratio.c_str(),
                  r.memory_bytes, r.circuit_gates, r.yes ? "yes" : "no");
    out += line;
  }
  return out;
}

}  // namespace hyperpath::cli
