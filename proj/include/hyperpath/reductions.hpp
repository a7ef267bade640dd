#pragma once

// Constructive reductions: undirected to directed expansion, the Exact Cover
// to k-HyperPath gadget with certificate translation in both directions,
// padding that establishes the gadget's preconditions, color coding from Set
// Partitioning to Exact Cover, and a subset closure from Set Cover to Set
// Partitioning.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperpath/exact_cover.hpp"
#include "hyperpath/hypergraph.hpp"

namespace hyperpath {

/// A named precondition of a reduction does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A reduction would generate more objects than its configured budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExpandOptions {
  std::size_t max_r = 7;
  bool force = false;
};

/// Directed hypergraph with all r! orderings of every undirected edge.
Hypergraph expand_orientations(const Hypergraph& h, const ExpandOptions& opts = {});

enum class NodeKind : std::uint8_t { element, set_node, x_start, x_end, u_start, u_end };

/// `set` is the 0-based set index i of u_i^j and `index` its 1-based position
/// j. For element nodes `index` is the element id. The four specials carry
/// the set that owns them, or kSharedSpecial when every set uses the same one.
inline constexpr std::uint32_t kSharedSpecial = static_cast<std::uint32_t>(-1);

struct NodeLabel {
  NodeKind kind = NodeKind::element;
  std::uint32_t set = 0;
  std::uint32_t index = 0;

  friend bool operator==(const NodeLabel&, const NodeLabel&) = default;
};

std::string describe(const NodeLabel& label);

/// `corrected` ends every set with the set-node that precedes the final block
/// of r-2 element-nodes, admits transitions whose set boundary coincides with
/// a block boundary, and gives every set its own four specials so that they
/// can only sit at the ends of a path. `literal` follows the printed edge
/// formulas with one shared copy of each special.
enum class GadgetVariant { corrected, literal };

struct GadgetMap {
  std::size_t r = 0;
  std::size_t n = 0;
  GadgetVariant variant = GadgetVariant::corrected;
  std::vector<NodeLabel> labels;                // vertex id -> label
  std::vector<std::vector<VertexId>> set_nodes;  // set_nodes[i][j - 1] = u_i^j
  // Specials indexed by set: x_start[i] is the x_start used when S_i opens
  // the cover, x_end[i] when S_i closes it. All entries coincide for `literal`.
  std::vector<VertexId> x_start;
  std::vector<VertexId> x_end;
  std::vector<VertexId> u_start;
  std::vector<VertexId> u_end;

  /// Element x is vertex x.
  VertexId element_vertex(Element x) const { return x; }
  /// u_i^j, or throws std::out_of_range.
  VertexId set_node(std::size_t i, std::size_t j) const;
  std::size_t element_node_count() const;
  std::size_t set_node_count() const;
};

struct GadgetInstance {
  Hypergraph graph;
  std::size_t k = 0;
  GadgetMap map;
};

/// (n + 2)(r - 1)/(r - 2) + 1
std::size_t gadget_path_length(std::size_t n, std::size_t r);

/// Throws PreconditionError naming the first violated clause of: r >= 3,
/// n >= 4r, (r - 2) | (n + 2), every |S_i| >= 2r.
void check_gadget_preconditions(const ExactCoverInstance& inst, std::size_t r);

/// Undirected r-uniform gadget whose tight k-paths correspond to exact covers.
GadgetInstance exc_to_khp(const ExactCoverInstance& inst, std::size_t r,
                          GadgetVariant variant = GadgetVariant::corrected);

/// Ascending indices of the sets with a set-node strictly between the path's
/// x_start and x_end (the whole path if either is missing). Throws
/// std::invalid_argument unless `path` is a tight path of length k in `graph`.
std::vector<SetIndex> path_to_cover(const Hypergraph& graph, const GadgetMap& map, std::size_t k,
                                    std::span<const VertexId> path);
std::vector<SetIndex> path_to_cover(const GadgetInstance& g, std::span<const VertexId> path);

/// u_start, x_start of the first cover set, the cover's elements set by set in
/// index order, x_end, u_end of the last cover set, with u_i^j placed before every block of r - 2 element-nodes that
/// begins with x_i^j. The final block begins with x_i^{|S_i| - (r - 4)} and
/// is preceded by that set-node. Throws std::invalid_argument on an invalid
/// cover.
std::vector<VertexId> cover_to_path(const ExactCoverInstance& inst, std::span<const SetIndex> cover,
                                    const GadgetMap& map);

/// Set-nodes sit at 0-based positions divisible by r - 1 on every gadget path.
bool gadget_position_rule(const GadgetMap& map, std::size_t position, VertexId v);

struct PaddedInstance {
  std::size_t ell = 0;
  ExactCoverInstance instance;
};

struct PaddedFamily {
  std::size_t kappa = 0;
  std::vector<PaddedInstance> instances;  // ell = 1..2r
};

/// Smallest kappa in [4r, 5r] with (r - 2) | (n + kappa + 2).
std::size_t padding_size(std::size_t n, std::size_t r);

/// For each ell in [1, 2r]: the sets plus singletons {n}, ..., {n + ell - 1}
/// and the block {n + ell, ..., n + kappa - 1}, then the family of unions of
/// every 2r pairwise-disjoint members. Throws BudgetError when more than
/// `budget` unions would be generated.
PaddedFamily pad_exc_instance(const ExactCoverInstance& inst, std::size_t r, std::size_t budget = 1'000'000);

/// max(1, n) * 4^t.
std::size_t color_coding_instance_count(std::size_t n, std::size_t t);

/// Each instance colors the sets uniformly with t colors, adds element n + c
/// to every set of color c and adds the singleton {n + c} for every color.
/// Instance j draws its coloring from (seed, j). Throws BudgetError above
/// `budget` instances.
std::vector<ExactCoverInstance> sp_to_exc_color_coding(const SetPartitioningInstance& inst, std::uint64_t seed,
                                                       std::size_t budget = 1u << 16);

struct SubsetClosure {
  ExactCoverInstance family;
  std::size_t generated = 0;  // subsets counted with multiplicity, before deduplication
};

/// Every nonempty subset of every set, deduplicated. Throws PreconditionError
/// when a set has more than `max_set_size` elements and BudgetError when more
/// than `budget` subsets would be generated.
SubsetClosure sc_to_sp_subset_closure(const ExactCoverInstance& inst, std::size_t max_set_size,
                                      std::size_t budget = 1'000'000);

}  // namespace hyperpath
