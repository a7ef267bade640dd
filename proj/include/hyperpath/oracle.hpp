#pragma once

// Exhaustive reference solvers. Exponential by construction; every randomized
// or reduced computation in the library is checked against these.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "hyperpath/exact_cover.hpp"
#include "hyperpath/hypergraph.hpp"

namespace hyperpath {

/// Raised when an exponential oracle is asked to run above its size guard.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Restricts which vertex may sit at a 0-based position of the sequence.
using PositionFilter = std::function<bool(std::size_t position, VertexId v)>;

struct PathSearchOptions {
  std::size_t max_vertices = 20;
  bool force = false;
  PositionFilter position_filter;
};

/// Depth-first search over tight walks that never revisit a vertex. Returns a
/// witness passing is_tight_path, or nullopt. k < r throws; k > n is "no".
std::optional<std::vector<VertexId>> exists_tight_path_bruteforce(const Hypergraph& h, std::size_t k,
                                                                  const PathSearchOptions& opts = {});

/// Same search with is_tight_cycle as the acceptance test.
std::optional<std::vector<VertexId>> exists_tight_cycle_bruteforce(const Hypergraph& h, std::size_t k,
                                                                   const PathSearchOptions& opts = {});

/// Number of length-k tight walks (vertices may repeat). Throws on k < r and
/// on 64-bit overflow.
std::uint64_t count_tight_walks(const Hypergraph& h, std::size_t k);

struct CoverLimits {
  std::size_t max_elements = 24;
  bool force = false;
  /// Upper bound on the number of chosen sets; unlimited by default.
  std::size_t max_sets = std::numeric_limits<std::size_t>::max();
};

/// Backtracking on the lowest uncovered element. Witness indices ascending.
std::optional<std::vector<SetIndex>> solve_exact_cover_bruteforce(const ExactCoverInstance& inst,
                                                                  const CoverLimits& limits = {});

/// Every exact cover (as ascending index lists), up to `max_results`.
std::vector<std::vector<SetIndex>> enumerate_exact_covers(
    const ExactCoverInstance& inst, const CoverLimits& limits = {},
    std::size_t max_results = std::numeric_limits<std::size_t>::max());

/// True iff an exact cover with at most t sets exists.
bool solve_set_partitioning_bruteforce(const SetPartitioningInstance& inst, const CoverLimits& limits = {});

/// A set cover with at most t sets (overlaps allowed), or nullopt.
std::optional<std::vector<SetIndex>> solve_set_cover_bruteforce(const ExactCoverInstance& inst, std::size_t t,
                                                                 const CoverLimits& limits = {});

}  // namespace hyperpath
