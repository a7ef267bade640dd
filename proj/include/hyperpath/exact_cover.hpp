#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hyperpath {

using Element = std::uint32_t;
using SetIndex = std::uint32_t;

/// Ground set {0..n-1} plus a family of nonempty subsets. Each set keeps the
/// element order it was given in; that order defines "the j-th element of S_i"
/// for the gadget construction.
struct ExactCoverInstance {
  std::size_t n = 0;
  std::vector<std::vector<Element>> sets;

  std::size_t num_sets() const { return sets.size(); }
};

struct SetPartitioningInstance {
  ExactCoverInstance base;
  std::size_t threshold = 1;
};

/// Throws std::invalid_argument on an empty set, an element >= n or a
/// repeated element inside one set.
void check_instance(const ExactCoverInstance& inst);

/// True iff the chosen sets are pairwise disjoint and their union is {0..n-1}.
bool is_exact_cover(const ExactCoverInstance& inst, std::span<const SetIndex> chosen);

/// True iff the union of the chosen sets is {0..n-1}.
bool is_set_cover(const ExactCoverInstance& inst, std::span<const SetIndex> chosen);

/// File format: `n m [t]` then m lines of element ids. The optional t marks a
/// Set Partitioning decision instance.
struct CoverFile {
  ExactCoverInstance instance;
  std::optional<std::size_t> threshold;
};

CoverFile parse_cover_file(std::istream& in);
CoverFile parse_cover_file(const std::string& text);
CoverFile load_cover_file(const std::string& path);
void write_cover_file(std::ostream& out, const ExactCoverInstance& inst,
                      std::optional<std::size_t> threshold = std::nullopt);

}  // namespace hyperpath
