#pragma once

// Seeded instance generators. Identical arguments give identical output.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hyperpath/exact_cover.hpp"
#include "hyperpath/hypergraph.hpp"

namespace hyperpath {

/// m distinct uniformly random edges (fewer if the graph saturates).
Hypergraph random_hypergraph(std::size_t r, std::size_t n, std::size_t m, bool directed, std::uint64_t seed);

struct PlantedInstance {
  Hypergraph graph;
  std::vector<VertexId> plant;
};

/// A random tight k-path on distinct vertices plus `noise_edges` random edges.
PlantedInstance planted_path(std::size_t r, std::size_t n, std::size_t k, std::size_t noise_edges, bool directed,
                             std::uint64_t seed);

/// A random tight k-cycle (all k cyclic windows) plus noise edges.
PlantedInstance planted_cycle(std::size_t r, std::size_t n, std::size_t k, std::size_t noise_edges, bool directed,
                              std::uint64_t seed);

/// m sets, each element included with probability `density`; sets that come
/// out empty are dropped.
ExactCoverInstance random_exc(std::size_t n, std::size_t m, double density, std::uint64_t seed);

/// A random partition of {0..n-1} into `parts` sets of size >= min_size
/// (none when parts = 0) plus `noise_sets` random sets with sizes in
/// [min_size, max(min_size, n/2)], shuffled together.
ExactCoverInstance planted_exc(std::size_t n, std::size_t parts, std::size_t noise_sets, std::size_t min_size,
                               std::uint64_t seed);

}  // namespace hyperpath
