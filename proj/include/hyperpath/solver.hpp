#pragma once

// Decision procedures for tight k-paths and k-cycles: build the walk circuit,
// run multilinear detection and report the one-sided error bound.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperpath/detect.hpp"
#include "hyperpath/hypergraph.hpp"

namespace hyperpath {

struct Decision {
  bool yes = false;
  std::size_t k = 0;
  std::size_t trials_used = 0;
  DetectionParams params;
  /// Probability bound that a "no" is wrong; 0 for a "yes" and for answers
  /// decided without randomness.
  double false_negative_bound = 0.0;
  /// True when the answer did not need the randomized detector (k > n).
  bool exact = false;
  std::size_t circuit_gates = 0;
  std::vector<std::string> warnings;
};

/// Throws std::invalid_argument when k < r. Undirected graphs are expanded to
/// all edge orientations first, with a warning when r > 5.
Decision solve_k_hyperpath(const Hypergraph& h, std::size_t k, const DetectionParams& params = {});
Decision solve_k_hypercycle(const Hypergraph& h, std::size_t k, const DetectionParams& params = {});

struct WitnessOptions {
  /// Deletion passes with fresh seeds before falling back to brute force on
  /// whatever survived.
  std::size_t max_passes = 4;
  /// Repetitions are multiplied by this factor during deletion.
  std::size_t amplification = 3;
};

/// Self-reduction by vertex deletion. Returns a sequence passing is_tight_path,
/// or nullopt when the solver answers no. Every deletion is committed only on
/// a "yes", which is never wrong, so the surviving graph always holds a path.
std::optional<std::vector<VertexId>> extract_witness(const Hypergraph& h, std::size_t k,
                                                     const DetectionParams& params = {},
                                                     const WitnessOptions& opts = {});

}  // namespace hyperpath
