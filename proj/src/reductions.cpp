#include "hyperpath/reductions.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>

namespace hyperpath {

Hypergraph expand_orientations(const Hypergraph& h, const ExpandOptions& opts) {
  if (h.directed()) throw std::invalid_argument("expand_orientations needs an undirected hypergraph");
  const std::size_t r = h.uniformity();
  if (r > opts.max_r && !opts.force) {
    throw std::invalid_argument("r = " + std::to_string(r) + " exceeds the orientation guard r <= " +
                                std::to_string(opts.max_r) + " (r! orderings per edge)");
  }
  HypergraphData d{r, h.num_vertices(), true, {}};
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    std::vector<VertexId> s(h.edge(e).begin(), h.edge(e).end());  // stored ascending
    do {
      d.edges.push_back(s);
    } while (std::next_permutation(s.begin(), s.end()));
  }
  return Hypergraph(std::move(d));
}

std::string describe(const NodeLabel& label) {
  const auto special = [&](const char* name) {
    return label.set == kSharedSpecial ? std::string(name) : name + ("[" + std::to_string(label.set) + "]");
  };
  switch (label.kind) {
    case NodeKind::element:
      return "x" + std::to_string(label.index);
    case NodeKind::set_node:
      return "u" + std::to_string(label.set) + "^" + std::to_string(label.index);
    case NodeKind::x_start:
      return special("x_start");
    case NodeKind::x_end:
      return special("x_end");
    case NodeKind::u_start:
      return special("u_start");
    case NodeKind::u_end:
      return special("u_end");
  }
  return "?";
}

VertexId GadgetMap::set_node(std::size_t i, std::size_t j) const {
  if (i >= set_nodes.size() || j == 0 || j > set_nodes[i].size()) {
    throw std::out_of_range("gadget has no set-node u_" + std::to_string(i) + "^" + std::to_string(j));
  }
  return set_nodes[i][j - 1];
}

std::size_t GadgetMap::element_node_count() const {
  return static_cast<std::size_t>(std::count_if(labels.begin(), labels.end(), [](const NodeLabel& l) {
    return l.kind == NodeKind::element || l.kind == NodeKind::x_start || l.kind == NodeKind::x_end;
  }));
}

std::size_t GadgetMap::set_node_count() const { return labels.size() - element_node_count(); }

std::size_t gadget_path_length(std::size_t n, std::size_t r) { return (n + 2) * (r - 1) / (r - 2) + 1; }

void check_gadget_preconditions(const ExactCoverInstance& inst, std::size_t r) {
  check_instance(inst);
  const std::size_t n = inst.n;
  if (r < 3) throw PreconditionError("gadget needs r >= 3, got r = " + std::to_string(r));
  if (n < 4 * r) {
    throw PreconditionError("Assumption 1: n = " + std::to_string(n) + " < 4r = " + std::to_string(4 * r));
  }
  if ((n + 2) % (r - 2) != 0) {
    throw PreconditionError("Assumption 1: r - 2 = " + std::to_string(r - 2) + " does not divide n + 2 = " +
                            std::to_string(n + 2));
  }
  for (std::size_t i = 0; i < inst.sets.size(); ++i) {
    if (inst.sets[i].size() < 2 * r) {
      throw PreconditionError("Assumption 1: |S_" + std::to_string(i + 1) + "| = " +
                              std::to_string(inst.sets[i].size()) + " < 2r");
    }
  }
}

namespace {

// Collects undirected edges given as vertex lists, deduplicated by vertex set.
class EdgeSet {
 public:
  void add(std::vector<VertexId> e) {
    std::sort(e.begin(), e.end());
    if (seen_.insert(e).second) edges_.push_back(std::move(e));
  }
  std::vector<std::vector<VertexId>> take() { return std::move(edges_); }

 private:
  std::set<std::vector<VertexId>> seen_;
  std::vector<std::vector<VertexId>> edges_;
};

}  // namespace

GadgetInstance exc_to_khp(const ExactCoverInstance& inst, std::size_t r, GadgetVariant variant) {
  check_gadget_preconditions(inst, r);
  const std::size_t n = inst.n;
  const std::size_t m = inst.sets.size();
  const bool corrected = variant == GadgetVariant::corrected;
  // With r = 3 the final block is x_end alone, so the set-node before it is
  // u_i^{|S_i|+1}, one past the set's own positions.
  const bool terminal_node = corrected && r == 3;

  GadgetMap map;
  map.r = r;
  map.n = n;
  map.variant = variant;
  for (std::size_t x = 0; x < n; ++x) map.labels.push_back({NodeKind::element, 0, static_cast<std::uint32_t>(x)});
  // Shared specials let a path run through u_start between two starting
  // edges of different sets; private ones lie in one or two edges only.
  const std::size_t copies = corrected ? m : 1;
  const auto add_specials = [&](NodeKind kind, std::vector<VertexId>& ids) {
    for (std::size_t c = 0; c < copies; ++c) {
      ids.push_back(static_cast<VertexId>(map.labels.size()));
      map.labels.push_back({kind, corrected ? static_cast<std::uint32_t>(c) : kSharedSpecial, 0});
    }
    if (!ids.empty()) ids.resize(m, ids.front());
  };
  add_specials(NodeKind::x_start, map.x_start);
  add_specials(NodeKind::x_end, map.x_end);
  map.set_nodes.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t count = inst.sets[i].size() + (terminal_node ? 1 : 0);
    for (std::size_t j = 1; j <= count; ++j) {
      map.set_nodes[i].push_back(static_cast<VertexId>(map.labels.size()));
      map.labels.push_back({NodeKind::set_node, static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
    }
  }
  add_specials(NodeKind::u_start, map.u_start);
  add_specials(NodeKind::u_end, map.u_end);

  // 1-based accessors matching the construction's notation.
  auto x = [&](std::size_t i, std::size_t j) -> VertexId { return inst.sets[i].at(j - 1); };
  auto u = [&](std::size_t i, std::size_t j) -> VertexId { return map.set_node(i, j); };
  auto xs = [&](std::vector<VertexId>& e, std::size_t i, std::size_t from, std::size_t to) {
    for (std::size_t l = from; l <= to; ++l) e.push_back(x(i, l));
  };

  EdgeSet edges;
  const std::size_t R = r;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t s = inst.sets[i].size();
    // internal, heavy and light
    for (std::size_t j = 1; j <= s - (R - 2); ++j) {
      std::vector<VertexId> e{u(i, j)};
      xs(e, i, j, j + R - 3);
      e.push_back(u(i, j + R - 2));
      edges.add(std::move(e));
      for (std::size_t h = 0; h <= R - 3; ++h) {
        std::vector<VertexId> f;
        xs(f, i, j, j + h);
        f.push_back(u(i, j + h + 1));
        xs(f, i, j + h + 1, j + R - 2);
        edges.add(std::move(f));
      }
    }
    if (terminal_node) edges.add({u(i, s), x(i, s), u(i, s + 1)});

    // starting
    {
      std::vector<VertexId> e{map.u_start[i], map.x_start[i]};
      xs(e, i, 1, R - 3);
      e.push_back(u(i, R - 2));
      edges.add(std::move(e));
      std::vector<VertexId> f{map.x_start[i]};
      xs(f, i, 1, R - 2);
      f.push_back(u(i, R - 2));
      edges.add(std::move(f));
    }
    // ending
    {
      const std::size_t last = corrected ? s + 4 - R : s + 3 - R;
      std::vector<VertexId> e{u(i, last)};
      xs(e, i, s + 4 - R, s);
      e.push_back(map.u_end[i]);
      e.push_back(map.x_end[i]);
      edges.add(std::move(e));
      std::vector<VertexId> f{u(i, last)};
      xs(f, i, s + 3 - R, s);
      f.push_back(map.x_end[i]);
      edges.add(std::move(f));
    }
  }

  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t s = inst.sets[i].size();
    for (std::size_t ip = i + 1; ip < m; ++ip) {
      std::vector<Element> a(inst.sets[i]), b(inst.sets[ip]);
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      std::vector<Element> common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
      if (!common.empty()) continue;

      for (std::size_t j = 0; j <= R - 3; ++j) {
        std::vector<VertexId> e{u(i, s - j)};
        xs(e, i, s - j, s);
        xs(e, ip, 1, R - 3 - j);
        e.push_back(u(ip, R - 2 - j));
        edges.add(std::move(e));
      }
      for (std::size_t j = 1; j <= R - 3; ++j) {
        for (std::size_t h = 0; h <= j - 1; ++h) {
          std::vector<VertexId> e;
          xs(e, i, s - j, s - j + h);
          e.push_back(u(i, s - j + h + 1));
          xs(e, i, s - j + h + 1, s);
          xs(e, ip, 1, R - j - 2);
          edges.add(std::move(e));
        }
      }
      const std::size_t j_max = corrected ? R - 2 : R - 3;
      for (std::size_t j = 1; j <= j_max; ++j) {
        const std::size_t h_min = corrected ? 0 : 1;
        for (std::size_t h = h_min; h + j + 2 <= R; ++h) {
          std::vector<VertexId> e;
          xs(e, i, s - j + 1, s);
          xs(e, ip, 1, h);
          e.push_back(u(ip, h + 1));
          xs(e, ip, h + 1, R - j - 1);
          edges.add(std::move(e));
        }
      }
    }
  }

  HypergraphData d{r, map.labels.size(), false, edges.take()};
  return GadgetInstance{Hypergraph(std::move(d)), gadget_path_length(n, r), std::move(map)};
}

std::vector<SetIndex> path_to_cover(const Hypergraph& graph, const GadgetMap& map, std::size_t k,
                                    std::span<const VertexId> path) {
  if (path.size() != k) {
    throw std::invalid_argument("sequence has " + std::to_string(path.size()) + " vertices, expected k = " +
                                std::to_string(k));
  }
  if (!is_tight_path(graph, path)) throw std::invalid_argument("sequence is not a tight path of the gadget");
  // With shared specials a path may open with a stray u_i^1 before u_start
  // (the starting edges {u_i^1, u_start, x_start} allow it). Only set-nodes
  // between x_start and x_end name cover sets.
  std::size_t lo = 0, hi = path.size();
  const auto is = [&](NodeKind kind) {
    return [&map, kind](VertexId v) { return v < map.labels.size() && map.labels[v].kind == kind; };
  };
  const auto xs = std::find_if(path.begin(), path.end(), is(NodeKind::x_start));
  const auto xe = std::find_if(path.begin(), path.end(), is(NodeKind::x_end));
  if (xs != path.end() && xe != path.end()) {
    lo = static_cast<std::size_t>(std::min(xs, xe) - path.begin());
    hi = static_cast<std::size_t>(std::max(xs, xe) - path.begin());
  }
  std::vector<SetIndex> out;
  for (std::size_t i = lo; i < hi; ++i) {
    const VertexId v = path[i];
    if (v < map.labels.size() && map.labels[v].kind == NodeKind::set_node) out.push_back(map.labels[v].set);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<SetIndex> path_to_cover(const GadgetInstance& g, std::span<const VertexId> path) {
  return path_to_cover(g.graph, g.map, g.k, path);
}

std::vector<VertexId> cover_to_path(const ExactCoverInstance& inst, std::span<const SetIndex> cover,
                                    const GadgetMap& map) {
  if (!is_exact_cover(inst, cover)) throw std::invalid_argument("not an exact cover");
  if (inst.n != map.n || inst.sets.size() != map.set_nodes.size()) {
    throw std::invalid_argument("gadget map does not belong to this instance");
  }
  const std::size_t r = map.r;
  std::vector<SetIndex> order(cover.begin(), cover.end());
  std::sort(order.begin(), order.end());

  // Element-node sequence with the set-node that would precede each entry.
  struct Slot {
    VertexId element;
    std::size_t set;
    std::size_t pos;  // 1-based position in the set; 0 for x_start / x_end
  };
  if (order.empty()) throw std::invalid_argument("empty cover");
  std::vector<Slot> seq{{map.x_start.at(order.front()), 0, 0}};
  for (SetIndex i : order) {
    for (std::size_t j = 1; j <= inst.sets[i].size(); ++j) seq.push_back({inst.sets[i][j - 1], i, j});
  }
  seq.push_back({map.x_end.at(order.back()), 0, 0});

  const std::size_t block = r - 2;
  std::vector<VertexId> path{map.u_start.at(order.front())};
  for (std::size_t b = 0; b * block < seq.size(); ++b) {
    if (b > 0) {
      const Slot& first = seq[b * block];
      if (first.pos != 0) {
        path.push_back(map.set_node(first.set, first.pos));
      } else {
        // final block starts with x_end (r = 3); its set-node follows the last set
        const std::size_t last = order.back();
        path.push_back(map.set_node(last, inst.sets[last].size() + 4 - r));
      }
    }
    for (std::size_t t = b * block; t < (b + 1) * block && t < seq.size(); ++t) path.push_back(seq[t].element);
  }
  path.push_back(map.u_end.at(order.back()));
  return path;
}

bool gadget_position_rule(const GadgetMap& map, std::size_t position, VertexId v) {
  if (v >= map.labels.size()) return false;
  const NodeKind kind = map.labels[v].kind;
  const bool set_like = kind == NodeKind::set_node || kind == NodeKind::u_start || kind == NodeKind::u_end;
  return set_like == (position % (map.r - 1) == 0);
}

std::size_t padding_size(std::size_t n, std::size_t r) {
  if (r < 3) throw PreconditionError("padding needs r >= 3, got r = " + std::to_string(r));
  for (std::size_t kappa = 4 * r; kappa <= 5 * r; ++kappa) {
    if ((n + kappa + 2) % (r - 2) == 0) return kappa;
  }
  throw PreconditionError("no padding size in [4r, 5r]");  // unreachable: r - 2 <= r + 1 consecutive values
}

namespace {

// Unions of every `count` pairwise-disjoint sets, deduplicated.
class DisjointUnions {
 public:
  DisjointUnions(const std::vector<std::vector<Element>>& sets, std::size_t n, std::size_t count, std::size_t budget)
      : sets_(sets), count_(count), budget_(budget), used_(n, 0) {}

  std::vector<std::vector<Element>> run() {
    recurse(0, 0);
    return std::vector<std::vector<Element>>(out_.begin(), out_.end());
  }

 private:
  void recurse(std::size_t from, std::size_t depth) {
    if (depth == count_) {
      if (++generated_ > budget_) {
        throw BudgetError("padding would generate more than " + std::to_string(budget_) + " unions");
      }
      std::vector<Element> u;
      for (Element x = 0; x < used_.size(); ++x) {
        if (used_[x]) u.push_back(x);
      }
      out_.insert(std::move(u));
      return;
    }
    for (std::size_t i = from; i + (count_ - depth) <= sets_.size(); ++i) {
      const auto& s = sets_[i];
      if (std::any_of(s.begin(), s.end(), [&](Element x) { return used_[x] != 0; })) continue;
      for (Element x : s) used_[x] = 1;
      recurse(i + 1, depth + 1);
      for (Element x : s) used_[x] = 0;
    }
  }

  const std::vector<std::vector<Element>>& sets_;
  std::size_t count_;
  std::size_t budget_;
  std::size_t generated_ = 0;
  std::vector<char> used_;
  std::set<std::vector<Element>> out_;
};

}  // namespace

PaddedFamily pad_exc_instance(const ExactCoverInstance& inst, std::size_t r, std::size_t budget) {
  check_instance(inst);
  PaddedFamily fam;
  fam.kappa = padding_size(inst.n, r);
  const std::size_t n2 = inst.n + fam.kappa;
  for (std::size_t ell = 1; ell <= 2 * r; ++ell) {
    std::vector<std::vector<Element>> sets = inst.sets;
    for (std::size_t a = 0; a < ell; ++a) sets.push_back({static_cast<Element>(inst.n + a)});
    std::vector<Element> block;
    for (std::size_t a = inst.n + ell; a < n2; ++a) block.push_back(static_cast<Element>(a));
    sets.push_back(std::move(block));
    ExactCoverInstance out{n2, DisjointUnions(sets, n2, 2 * r, budget).run()};
    fam.instances.push_back({ell, std::move(out)});
  }
  return fam;
}

std::size_t color_coding_instance_count(std::size_t n, std::size_t t) {
  if (2 * t >= 60) return std::numeric_limits<std::size_t>::max();
  return std::max<std::size_t>(1, n) << (2 * t);
}

std::vector<ExactCoverInstance> sp_to_exc_color_coding(const SetPartitioningInstance& inst, std::uint64_t seed,
                                                       std::size_t budget) {
  check_instance(inst.base);
  const std::size_t t = inst.threshold;
  if (t < 1) throw PreconditionError("color coding needs t >= 1");
  const std::size_t count = color_coding_instance_count(inst.base.n, t);
  if (count > budget) {
    throw BudgetError("color coding would produce " + (count == std::numeric_limits<std::size_t>::max()
                                                          ? std::string("more than 2^60")
                                                          : std::to_string(count)) +
                      " instances, budget is " + std::to_string(budget));
  }
  const std::size_t n = inst.base.n;
  const std::size_t m = inst.base.sets.size();
  std::vector<ExactCoverInstance> out(count);
#pragma omp parallel for schedule(static)
  for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(count); ++idx) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(idx), static_cast<std::uint32_t>(static_cast<std::uint64_t>(idx) >> 32)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<std::size_t> color(0, t - 1);
    ExactCoverInstance e{n + t, inst.base.sets};
    for (std::size_t i = 0; i < m; ++i) e.sets[i].push_back(static_cast<Element>(n + color(rng)));
    for (std::size_t c = 0; c < t; ++c) e.sets.push_back({static_cast<Element>(n + c)});
    out[static_cast<std::size_t>(idx)] = std::move(e);
  }
  return out;
}

SubsetClosure sc_to_sp_subset_closure(const ExactCoverInstance& inst, std::size_t max_set_size, std::size_t budget) {
  check_instance(inst);
  std::size_t total = 0;
  for (std::size_t i = 0; i < inst.sets.size(); ++i) {
    const std::size_t s = inst.sets[i].size();
    if (s > max_set_size) {
      throw PreconditionError("|S_" + std::to_string(i + 1) + "| = " + std::to_string(s) + " exceeds the bound b = " +
                              std::to_string(max_set_size));
    }
    if (s >= 40) throw BudgetError("subset closure of a set with " + std::to_string(s) + " elements");
    total += (std::size_t{1} << s) - 1;
    if (total > budget) {
      throw BudgetError("subset closure would generate more than " + std::to_string(budget) + " sets");
    }
  }
  SubsetClosure out;
  out.family.n = inst.n;
  out.generated = total;
  std::set<std::vector<Element>> seen;
  for (const auto& s : inst.sets) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << s.size()); ++mask) {
      std::vector<Element> sub;
      for (std::size_t b = 0; b < s.size(); ++b) {
        if (mask >> b & 1) sub.push_back(s[b]);
      }
      std::sort(sub.begin(), sub.end());
      if (seen.insert(sub).second) out.family.sets.push_back(std::move(sub));
    }
  }
  return out;
}

}  // namespace hyperpath
