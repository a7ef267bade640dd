#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace hyperpath {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Raised for malformed input files. Carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Raised when hypergraph data breaks a structural invariant.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

/// Unchecked hypergraph contents, as read from a file or produced by a
/// generator. `Hypergraph` is the validated form.
struct HypergraphData {
  std::size_t r = 0;
  std::size_t n = 0;
  bool directed = true;
  std::vector<std::vector<VertexId>> edges;
};

/// Every invariant violation of `data`, in edge order. Empty means valid.
std::vector<std::string> validate(const HypergraphData& data);

/// Immutable r-uniform hypergraph with O(r) window lookup.
///
/// Directed edges are vertex sequences and windows match exactly. Undirected
/// edges are stored sorted ascending and a window matches an edge when the two
/// have the same vertex set.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Throws ValidationError listing every violation.
  explicit Hypergraph(HypergraphData data);

  std::size_t uniformity() const { return r_; }
  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return r_ == 0 ? 0 : flat_.size() / r_; }
  bool directed() const { return directed_; }

  std::span<const VertexId> edge(EdgeId e) const {
    return {flat_.data() + static_cast<std::size_t>(e) * r_, r_};
  }

  /// Edge whose window equals `window` under this graph's matching rule, or
  /// -1. `window` must have exactly r entries.
  std::int64_t find_edge(std::span<const VertexId> window) const;
  bool has_window(std::span<const VertexId> window) const { return find_edge(window) >= 0; }

  HypergraphData data() const;

  /// Subgraph on the same vertex ids keeping only edges that avoid every
  /// vertex with `removed[v] == true`.
  Hypergraph without_vertices(const std::vector<bool>& removed) const;

 private:
  std::uint64_t window_hash(std::span<const VertexId> window) const;
  std::int64_t find_exact(std::span<const VertexId> key) const;

  std::size_t r_ = 0;
  std::size_t n_ = 0;
  bool directed_ = true;
  std::vector<VertexId> flat_;
  std::unordered_multimap<std::uint64_t, EdgeId> index_;
};

enum class SequenceRole { walk, path, cycle };

struct VertexSequence {
  std::vector<VertexId> vertices;
  SequenceRole role = SequenceRole::walk;
};

/// True iff `seq` has at least r distinct valid vertices and every window of r
/// consecutive vertices is an edge.
bool is_tight_path(const Hypergraph& h, std::span<const VertexId> seq);

/// As is_tight_path, with the k cyclic windows (indices mod k) checked.
bool is_tight_cycle(const Hypergraph& h, std::span<const VertexId> seq);

/// True iff every window of r consecutive vertices is an edge (repeats allowed).
bool is_tight_walk(const Hypergraph& h, std::span<const VertexId> seq);

HypergraphData parse_hypergraph_data(std::istream& in);
Hypergraph parse_hypergraph(std::istream& in);
Hypergraph parse_hypergraph(const std::string& text);
Hypergraph load_hypergraph(const std::string& path);

/// Canonical text form: header then one edge per line, edge order preserved.
void write_hypergraph(std::ostream& out, const Hypergraph& h);
std::string to_string(const Hypergraph& h);

/// Whitespace separated vertex ids; `#` starts a comment line.
std::vector<VertexId> parse_sequence(std::istream& in);

}  // namespace hyperpath
