#include "hyperpath/hypergraph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>

namespace hyperpath {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += "; ";
    out += s;
  }
  return out;
}

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

// Strips comments and returns false for blank lines.
bool content_line(std::string& line) {
  if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
  return line.find_first_not_of(" \t\r") != std::string::npos;
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> violations)
    : std::runtime_error("invalid hypergraph: " + join(violations)),
      violations_(std::move(violations)) {}

std::vector<std::string> validate(const HypergraphData& data) {
  std::vector<std::string> out;
  if (data.r < 2) out.push_back("uniformity r = " + std::to_string(data.r) + " < 2");
  std::set<std::vector<VertexId>> seen;
  for (std::size_t j = 0; j < data.edges.size(); ++j) {
    const auto& e = data.edges[j];
    const std::string where = " at index " + std::to_string(j);
    bool ok = true;
    if (e.size() != data.r) {
      out.push_back("arity " + std::to_string(e.size()) + " != r" + where);
      ok = false;
    }
    for (VertexId v : e) {
      if (v >= data.n) {
        out.push_back("vertex " + std::to_string(v) + " out of range" + where);
        ok = false;
      }
    }
    std::vector<VertexId> sorted(e);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      out.push_back("duplicate vertex in edge" + where);
      ok = false;
    }
    if (!ok) continue;
    if (!seen.insert(data.directed ? e : sorted).second) {
      out.push_back("duplicate edge" + where);
    }
  }
  return out;
}

Hypergraph::Hypergraph(HypergraphData data)
    : r_(data.r), n_(data.n), directed_(data.directed) {
  if (auto violations = validate(data); !violations.empty()) {
    throw ValidationError(std::move(violations));
  }
  flat_.reserve(data.edges.size() * r_);
  index_.reserve(data.edges.size());
  for (auto& e : data.edges) {
    if (!directed_) std::sort(e.begin(), e.end());
    const auto id = static_cast<EdgeId>(flat_.size() / r_);
    flat_.insert(flat_.end(), e.begin(), e.end());
    index_.emplace(window_hash(e), id);
  }
}

std::uint64_t Hypergraph::window_hash(std::span<const VertexId> key) const {
  std::uint64_t h = 0;
  for (VertexId v : key) h = mix(h, v);
  return h;
}

std::int64_t Hypergraph::find_exact(std::span<const VertexId> key) const {
  auto [lo, hi] = index_.equal_range(window_hash(key));
  for (auto it = lo; it != hi; ++it) {
    auto e = edge(it->second);
    if (std::equal(e.begin(), e.end(), key.begin(), key.end())) return it->second;
  }
  return -1;
}

std::int64_t Hypergraph::find_edge(std::span<const VertexId> window) const {
  if (window.size() != r_ || r_ == 0) return -1;
  if (directed_) return find_exact(window);
  constexpr std::size_t kInline = 16;
  if (r_ <= kInline) {
    VertexId buf[kInline];
    std::copy(window.begin(), window.end(), buf);
    std::sort(buf, buf + r_);
    return find_exact({buf, r_});
  }
  std::vector<VertexId> sorted(window.begin(), window.end());
  std::sort(sorted.begin(), sorted.end());
  return find_exact(sorted);
}

HypergraphData Hypergraph::data() const {
  HypergraphData d{r_, n_, directed_, {}};
  d.edges.reserve(num_edges());
  for (EdgeId e = 0; e < num_edges(); ++e) {
    auto s = edge(e);
    d.edges.emplace_back(s.begin(), s.end());
  }
  return d;
}

Hypergraph Hypergraph::without_vertices(const std::vector<bool>& removed) const {
  HypergraphData d{r_, n_, directed_, {}};
  for (EdgeId e = 0; e < num_edges(); ++e) {
    auto s = edge(e);
    if (std::none_of(s.begin(), s.end(), [&](VertexId v) { return v < removed.size() && removed[v]; })) {
      d.edges.emplace_back(s.begin(), s.end());
    }
  }
  return Hypergraph(std::move(d));
}

bool is_tight_walk(const Hypergraph& h, std::span<const VertexId> seq) {
  const std::size_t r = h.uniformity();
  if (r == 0 || seq.size() < r) return false;
  for (VertexId v : seq) {
    if (v >= h.num_vertices()) return false;
  }
  for (std::size_t i = 0; i + r <= seq.size(); ++i) {
    if (!h.has_window(seq.subspan(i, r))) return false;
  }
  return true;
}

namespace {

bool all_distinct(std::span<const VertexId> seq, std::size_t n) {
  std::vector<bool> seen(n, false);
  for (VertexId v : seq) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

}  // namespace

bool is_tight_path(const Hypergraph& h, std::span<const VertexId> seq) {
  return all_distinct(seq, h.num_vertices()) && is_tight_walk(h, seq);
}

bool is_tight_cycle(const Hypergraph& h, std::span<const VertexId> seq) {
  const std::size_t r = h.uniformity();
  const std::size_t k = seq.size();
  if (r == 0 || k < r || !all_distinct(seq, h.num_vertices())) return false;
  std::vector<VertexId> window(r);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < r; ++j) window[j] = seq[(i + j) % k];
    if (!h.has_window(window)) return false;
  }
  return true;
}

HypergraphData parse_hypergraph_data(std::istream& in) {
  HypergraphData d;
  std::string line;
  std::size_t lineno = 0;
  std::size_t m = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!content_line(line)) continue;
    std::istringstream ls(line);
    if (!header) {
      long long r = -1, n = -1, mm = -1;
      std::string kind, extra;
      if (!(ls >> r >> n >> mm >> kind) || (ls >> extra)) {
        throw ParseError(lineno, "malformed header, expected 'r n m directed|undirected'");
      }
      if (r < 2 || n < 0 || mm < 0) throw ParseError(lineno, "malformed header, bad r/n/m");
      if (kind == "directed") {
        d.directed = true;
      } else if (kind == "undirected") {
        d.directed = false;
      } else {
        throw ParseError(lineno, "malformed header, unknown kind '" + kind + "'");
      }
      d.r = static_cast<std::size_t>(r);
      d.n = static_cast<std::size_t>(n);
      m = static_cast<std::size_t>(mm);
      d.edges.reserve(m);
      header = true;
      continue;
    }
    if (d.edges.size() == m) throw ParseError(lineno, "more edge lines than m = " + std::to_string(m));
    std::vector<VertexId> edge;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      long long v = -1;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw ParseError(lineno, "not a vertex id: '" + tok + "'");
      if (v < 0 || static_cast<std::size_t>(v) >= d.n) {
        throw ParseError(lineno, "vertex id " + tok + " out of range [0, " + std::to_string(d.n) + ")");
      }
      edge.push_back(static_cast<VertexId>(v));
    }
    if (edge.size() != d.r) {
      throw ParseError(lineno, "wrong arity: " + std::to_string(edge.size()) + " ids, expected r = " +
                                   std::to_string(d.r));
    }
    auto sorted = edge;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ParseError(lineno, "duplicate vertex in edge");
    }
    d.edges.push_back(std::move(edge));
  }
  if (!header) throw ParseError(lineno, "missing header");
  if (d.edges.size() != m) {
    throw ParseError(lineno, "expected " + std::to_string(m) + " edges, found " + std::to_string(d.edges.size()));
  }
  return d;
}

Hypergraph parse_hypergraph(std::istream& in) { return Hypergraph(parse_hypergraph_data(in)); }

Hypergraph parse_hypergraph(const std::string& text) {
  std::istringstream in(text);
  return parse_hypergraph(in);
}

Hypergraph load_hypergraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_hypergraph(in);
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  out << h.uniformity() << ' ' << h.num_vertices() << ' ' << h.num_edges() << ' '
      << (h.directed() ? "directed" : "undirected") << '\n';
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    const auto s = h.edge(e);
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
    out << '\n';
  }
}

std::string to_string(const Hypergraph& h) {
  std::ostringstream out;
  write_hypergraph(out, h);
  return out.str();
}

std::vector<VertexId> parse_sequence(std::istream& in) {
  std::vector<VertexId> seq;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!content_line(line)) continue;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      long long v = -1;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || v < 0) throw ParseError(lineno, "not a non-negative integer: '" + tok + "'");
      seq.push_back(static_cast<VertexId>(v));
    }
  }
  return seq;
}

}  // namespace hyperpath
