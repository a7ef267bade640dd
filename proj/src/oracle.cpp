#include "hyperpath/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hyperpath {

namespace {

// Every ordering of an edge that is a legal traversal direction: the stored
// sequence when directed, all r! permutations when undirected.
template <typename Fn>
void for_each_orientation(const Hypergraph& h, EdgeId e, Fn&& fn) {
  auto s = h.edge(e);
  std::vector<VertexId> seq(s.begin(), s.end());
  if (h.directed()) {
    fn(seq);
    return;
  }
  std::sort(seq.begin(), seq.end());
  do {
    fn(seq);
  } while (std::next_permutation(seq.begin(), seq.end()));
}

// (r-1)-prefix of an oriented window -> vertices that may follow it.
using SuccessorTable = std::map<std::vector<VertexId>, std::vector<VertexId>>;

SuccessorTable successor_table(const Hypergraph& h) {
  SuccessorTable table;
  const std::size_t r = h.uniformity();
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    for_each_orientation(h, e, [&](const std::vector<VertexId>& seq) {
      table[std::vector<VertexId>(seq.begin(), seq.begin() + (r - 1))].push_back(seq[r - 1]);
    });
  }
  return table;
}

class PathSearch {
 public:
  PathSearch(const Hypergraph& h, std::size_t k, const PathSearchOptions& opts, bool cycle)
      : h_(h), k_(k), opts_(opts), cycle_(cycle), table_(successor_table(h)),
        visited_(h.num_vertices(), false) {}

  std::optional<std::vector<VertexId>> run() {
    for (EdgeId e = 0; e < h_.num_edges(); ++e) {
      bool found = false;
      for_each_orientation(h_, e, [&](const std::vector<VertexId>& seq) {
        if (found || !admissible(seq)) return;
        seq_ = seq;
        for (VertexId v : seq_) visited_[v] = true;
        found = extend();
        if (!found) {
          for (VertexId v : seq_) visited_[v] = false;
        }
      });
      if (found) return seq_;
    }
    return std::nullopt;
  }

 private:
  bool admissible(const std::vector<VertexId>& start) const {
    if (!opts_.position_filter) return true;
    for (std::size_t i = 0; i < start.size(); ++i) {
      if (!opts_.position_filter(i, start[i])) return false;
    }
    return true;
  }

  bool extend() {
    if (seq_.size() == k_) return !cycle_ || is_tight_cycle(h_, seq_);
    const std::size_t r = h_.uniformity();
    key_.assign(seq_.end() - static_cast<std::ptrdiff_t>(r - 1), seq_.end());
    auto it = table_.find(key_);
    if (it == table_.end()) return false;
    const std::size_t pos = seq_.size();
    for (VertexId v : it->second) {
      if (visited_[v]) continue;
      if (opts_.position_filter && !opts_.position_filter(pos, v)) continue;
      visited_[v] = true;
      seq_.push_back(v);
      if (extend()) return true;
      seq_.pop_back();
      visited_[v] = false;
    }
    return false;
  }

  const Hypergraph& h_;
  std::size_t k_;
  const PathSearchOptions& opts_;
  bool cycle_;
  SuccessorTable table_;
  std::vector<bool> visited_;
  std::vector<VertexId> seq_;
  std::vector<VertexId> key_;
};

std::optional<std::vector<VertexId>> search(const Hypergraph& h, std::size_t k, const PathSearchOptions& opts,
                                            bool cycle) {
  if (k < h.uniformity()) {
    throw std::invalid_argument("k = " + std::to_string(k) + " < r = " + std::to_string(h.uniformity()));
  }
  if (!opts.force && h.num_vertices() > opts.max_vertices) {
    throw GuardError("path oracle refuses n = " + std::to_string(h.num_vertices()) + " > " +
                     std::to_string(opts.max_vertices) + " (use force)");
  }
  if (k > h.num_vertices()) return std::nullopt;
  return PathSearch(h, k, opts, cycle).run();
}

}  // namespace

std::optional<std::vector<VertexId>> exists_tight_path_bruteforce(const Hypergraph& h, std::size_t k,
                                                                  const PathSearchOptions& opts) {
  return search(h, k, opts, false);
}

std::optional<std::vector<VertexId>> exists_tight_cycle_bruteforce(const Hypergraph& h, std::size_t k,
                                                                   const PathSearchOptions& opts) {
  return search(h, k, opts, true);
}

std::uint64_t count_tight_walks(const Hypergraph& h, std::size_t k) {
  const std::size_t r = h.uniformity();
  if (k < r) throw std::invalid_argument("k = " + std::to_string(k) + " < r = " + std::to_string(r));

  // States are oriented windows; a walk of length t is a chain of t-r+1 of them.
  std::vector<std::vector<VertexId>> states;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    for_each_orientation(h, e, [&](const std::vector<VertexId>& seq) { states.push_back(seq); });
  }
  std::map<std::vector<VertexId>, std::vector<std::size_t>> by_suffix;
  for (std::size_t s = 0; s < states.size(); ++s) {
    by_suffix[std::vector<VertexId>(states[s].begin() + 1, states[s].end())].push_back(s);
  }
  std::vector<std::vector<std::size_t>> preds(states.size());
  for (std::size_t s = 0; s < states.size(); ++s) {
    auto it = by_suffix.find(std::vector<VertexId>(states[s].begin(), states[s].end() - 1));
    if (it != by_suffix.end()) preds[s] = it->second;
  }

  std::vector<std::uint64_t> count(states.size(), 1), next(states.size());
  for (std::size_t t = r; t < k; ++t) {
    for (std::size_t s = 0; s < states.size(); ++s) {
      std::uint64_t sum = 0;
      for (std::size_t p : preds[s]) {
        if (__builtin_add_overflow(sum, count[p], &sum)) throw std::overflow_error("walk count overflows 64 bits");
      }
      next[s] = sum;
    }
    count.swap(next);
  }
  std::uint64_t total = 0;
  for (auto c : count) {
    if (__builtin_add_overflow(total, c, &total)) throw std::overflow_error("walk count overflows 64 bits");
  }
  return total;
}

namespace {

void check_cover_guard(const ExactCoverInstance& inst, const CoverLimits& limits) {
  if (!limits.force && inst.n > limits.max_elements) {
    throw GuardError("cover oracle refuses n = " + std::to_string(inst.n) + " > " +
                     std::to_string(limits.max_elements) + " (use force)");
  }
}

class CoverSearch {
 public:
  CoverSearch(const ExactCoverInstance& inst, bool exact, std::size_t max_sets)
      : inst_(inst), exact_(exact), max_sets_(max_sets), hits_(inst.n, 0), containing_(inst.n) {
    for (SetIndex i = 0; i < inst.sets.size(); ++i) {
      for (Element x : inst.sets[i]) containing_[x].push_back(i);
    }
  }

  // Calls `on_cover` for every cover found; stops when it returns false.
  template <typename Fn>
  void run(Fn&& on_cover) {
    stop_ = false;
    recurse(on_cover);
  }

 private:
  template <typename Fn>
  void recurse(Fn& on_cover) {
    const auto first = std::find(hits_.begin(), hits_.end(), 0u);
    if (first == hits_.end()) {
      std::vector<SetIndex> sorted(chosen_);
      std::sort(sorted.begin(), sorted.end());
      if (!on_cover(sorted)) stop_ = true;
      return;
    }
    if (chosen_.size() >= max_sets_) return;
    const auto x = static_cast<Element>(first - hits_.begin());
    for (SetIndex i : containing_[x]) {
      if (exact_ && !disjoint(i)) continue;
      for (Element y : inst_.sets[i]) ++hits_[y];
      chosen_.push_back(i);
      recurse(on_cover);
      chosen_.pop_back();
      for (Element y : inst_.sets[i]) --hits_[y];
      if (stop_) return;
    }
  }

  bool disjoint(SetIndex i) const {
    return std::all_of(inst_.sets[i].begin(), inst_.sets[i].end(), [&](Element y) { return hits_[y] == 0; });
  }

  const ExactCoverInstance& inst_;
  bool exact_;
  std::size_t max_sets_;
  std::vector<unsigned> hits_;
  std::vector<std::vector<SetIndex>> containing_;
  std::vector<SetIndex> chosen_;
  bool stop_ = false;
};

}  // namespace

std::optional<std::vector<SetIndex>> solve_exact_cover_bruteforce(const ExactCoverInstance& inst,
                                                                  const CoverLimits& limits) {
  check_cover_guard(inst, limits);
  check_instance(inst);
  std::optional<std::vector<SetIndex>> found;
  CoverSearch(inst, true, limits.max_sets).run([&](const std::vector<SetIndex>& c) {
    found = c;
    return false;
  });
  return found;
}

std::vector<std::vector<SetIndex>> enumerate_exact_covers(const ExactCoverInstance& inst, const CoverLimits& limits,
                                                          std::size_t max_results) {
  check_cover_guard(inst, limits);
  check_instance(inst);
  std::vector<std::vector<SetIndex>> all;
  if (max_results == 0) return all;
  CoverSearch(inst, true, limits.max_sets).run([&](const std::vector<SetIndex>& c) {
    all.push_back(c);
    return all.size() < max_results;
  });
  return all;
}

bool solve_set_partitioning_bruteforce(const SetPartitioningInstance& inst, const CoverLimits& limits) {
  CoverLimits bounded = limits;
  bounded.max_sets = std::min(limits.max_sets, inst.threshold);
  return solve_exact_cover_bruteforce(inst.base, bounded).has_value();
}

std::optional<std::vector<SetIndex>> solve_set_cover_bruteforce(const ExactCoverInstance& inst, std::size_t t,
                                                                 const CoverLimits& limits) {
  check_cover_guard(inst, limits);
  check_instance(inst);
  std::optional<std::vector<SetIndex>> found;
  CoverSearch(inst, false, std::min(t, limits.max_sets)).run([&](const std::vector<SetIndex>& c) {
    found = c;
    return false;
  });
  return found;
}

}  // namespace hyperpath
