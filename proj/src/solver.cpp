#include "hyperpath/solver.hpp"

#include <algorithm>

#include "hyperpath/circuit.hpp"
#include "hyperpath/oracle.hpp"
#include "hyperpath/reductions.hpp"

namespace hyperpath {

namespace {

Decision solve(const Hypergraph& h, std::size_t k, const DetectionParams& params, bool cycle) {
  const std::size_t r = h.uniformity();
  if (k < r) throw std::invalid_argument("k = " + std::to_string(k) + " < r = " + std::to_string(r));
  Decision d;
  d.k = k;
  d.params = params;
  if (k > h.num_vertices()) {
    d.exact = true;
    return d;
  }
  Hypergraph directed;
  const Hypergraph* g = &h;
  if (!h.directed()) {
    if (r > 5) {
      d.warnings.push_back("undirected input with r = " + std::to_string(r) + ": expanding to " +
                           std::to_string(h.num_edges()) + " * r! directed edges");
    }
    directed = expand_orientations(h, ExpandOptions{7, params.force});
    g = &directed;
  }
  const Circuit c = cycle ? build_cycle_circuit(*g, k) : build_path_circuit(*g, k);
  d.circuit_gates = c.size();
  const DetectionResult res = detect_multilinear(c, k, params);
  d.yes = res.multilinear;
  d.trials_used = res.trials_run;
  d.false_negative_bound = d.yes ? 0.0 : false_negative_bound(k, params.field_degree, res.trials_run);
  return d;
}

}  // namespace

Decision solve_k_hyperpath(const Hypergraph& h, std::size_t k, const DetectionParams& params) {
  return solve(h, k, params, false);
}

Decision solve_k_hypercycle(const Hypergraph& h, std::size_t k, const DetectionParams& params) {
  return solve(h, k, params, true);
}

std::optional<std::vector<VertexId>> extract_witness(const Hypergraph& h, std::size_t k,
                                                     const DetectionParams& params, const WitnessOptions& opts) {
  if (!solve_k_hyperpath(h, k, params).yes) return std::nullopt;

  const std::size_t n = h.num_vertices();
  std::vector<bool> removed(n, false);
  // Vertices without an incident edge can never be on a path.
  std::vector<bool> touched(n, false);
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    for (VertexId v : h.edge(e)) touched[v] = true;
  }
  for (VertexId v = 0; v < n; ++v) removed[v] = !touched[v];

  DetectionParams amplified = params;
  amplified.repetitions = params.repetitions * opts.amplification;
  auto survivors = [&] { return static_cast<std::size_t>(std::count(removed.begin(), removed.end(), false)); };

  std::uint64_t round = 0;
  for (std::size_t pass = 0; pass < opts.max_passes && survivors() > k; ++pass) {
    for (VertexId v = 0; v < n && survivors() > k; ++v) {
      if (removed[v]) continue;
      removed[v] = true;
      amplified.seed = params.seed + 0x9e3779b97f4a7c15ULL * (++round);
      if (!solve_k_hyperpath(h.without_vertices(removed), k, amplified).yes) removed[v] = false;
    }
  }

  PathSearchOptions search;
  search.force = true;
  auto path = exists_tight_path_bruteforce(h.without_vertices(removed), k, search);
  if (!path || !is_tight_path(h, *path)) return std::nullopt;  // unreachable: the kept graph has a path
  return path;
}

}  // namespace hyperpath
