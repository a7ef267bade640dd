#include <doctest.h>

#include <algorithm>
#include <functional>

#include "hyperpath/generators.hpp"
#include "hyperpath/oracle.hpp"

using namespace hyperpath;

namespace {

Hypergraph two_edges() { return parse_hypergraph("3 4 2 directed\n0 1 2\n1 2 3\n"); }
Hypergraph cyclic_four() { return parse_hypergraph("3 4 4 directed\n0 1 2\n1 2 3\n2 3 0\n3 0 1\n"); }

// Number of length-k tight walks by enumerating every vertex sequence.
std::uint64_t walks_by_enumeration(const Hypergraph& h, std::size_t k) {
  std::vector<VertexId> seq(k, 0);
  std::uint64_t count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == k) {
      count += is_tight_walk(h, seq);
      return;
    }
    for (VertexId v = 0; v < h.num_vertices(); ++v) {
      seq[pos] = v;
      rec(pos + 1);
    }
  };
  rec(0);
  return count;
}

// Path or cycle existence by trying every injective sequence.
bool exists_by_enumeration(const Hypergraph& h, std::size_t k, bool cycle) {
  std::vector<VertexId> seq;
  std::vector<bool> used(h.num_vertices(), false);
  std::function<bool()> rec = [&]() -> bool {
    if (seq.size() == k) return cycle ? is_tight_cycle(h, seq) : is_tight_path(h, seq);
    for (VertexId v = 0; v < h.num_vertices(); ++v) {
      if (used[v]) continue;
      used[v] = true;
      seq.push_back(v);
      const bool found = rec();
      seq.pop_back();
      used[v] = false;
      if (found) return true;
    }
    return false;
  };
  return rec();
}

}  // namespace

TEST_CASE("path oracle examples") {
  auto w = exists_tight_path_bruteforce(two_edges(), 4);
  REQUIRE(w);
  CHECK(*w == std::vector<VertexId>{0, 1, 2, 3});
  CHECK_FALSE(exists_tight_path_bruteforce(two_edges(), 5));
  CHECK_FALSE(exists_tight_path_bruteforce(parse_hypergraph("3 5 0 directed\n"), 3));
  CHECK_THROWS_AS(exists_tight_path_bruteforce(two_edges(), 2), std::invalid_argument);
}

TEST_CASE("cycle oracle examples") {
  CHECK(exists_tight_cycle_bruteforce(cyclic_four(), 4));
  CHECK_FALSE(exists_tight_cycle_bruteforce(two_edges(), 4));
  CHECK_FALSE(exists_tight_cycle_bruteforce(parse_hypergraph("3 3 1 directed\n0 1 2\n"), 3));
}

TEST_CASE("oracle size guard") {
  const Hypergraph big = random_hypergraph(3, 25, 30, true, 1);
  CHECK_THROWS_AS(exists_tight_path_bruteforce(big, 5), GuardError);
  PathSearchOptions opts;
  opts.force = true;
  CHECK_NOTHROW(exists_tight_path_bruteforce(big, 5, opts));
}

TEST_CASE("walk count examples") {
  CHECK(count_tight_walks(two_edges(), 3) == 2);
  CHECK(count_tight_walks(two_edges(), 4) == 1);
  const Hypergraph rot = parse_hypergraph("3 3 3 directed\n0 1 2\n1 2 0\n2 0 1\n");
  CHECK(count_tight_walks(rot, 6) == walks_by_enumeration(rot, 6));
  CHECK(count_tight_walks(rot, 6) == 3);
  CHECK_THROWS_AS(count_tight_walks(two_edges(), 2), std::invalid_argument);
}

TEST_CASE("property: walk counts match enumeration") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const bool directed = seed % 3 != 0;
    const Hypergraph h = random_hypergraph(3, 6, 14 + seed % 10, directed, seed);
    for (std::size_t k = 3; k <= 6; ++k) CHECK(count_tight_walks(h, k) == walks_by_enumeration(h, k));
  }
}

TEST_CASE("property: path and cycle oracles match enumeration, witnesses validate") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t r = 3 + seed % 2;
    const bool directed = seed % 4 != 0;
    const Hypergraph h = random_hypergraph(r, 7, 10 + seed % 25, directed, seed);
    for (std::size_t k = r; k <= 7; ++k) {
      const auto p = exists_tight_path_bruteforce(h, k);
      CHECK(p.has_value() == exists_by_enumeration(h, k, false));
      if (p) {
        CHECK(p->size() == k);
        CHECK(is_tight_path(h, *p));
        CHECK(count_tight_walks(h, k) >= 1);
      }
      const auto c = exists_tight_cycle_bruteforce(h, k);
      CHECK(c.has_value() == exists_by_enumeration(h, k, true));
      if (c) CHECK(is_tight_cycle(h, *c));
    }
  }
}

TEST_CASE("position filter restricts the search") {
  PathSearchOptions opts;
  opts.position_filter = [](std::size_t pos, VertexId v) { return pos != 0 || v != 0; };
  CHECK_FALSE(exists_tight_path_bruteforce(two_edges(), 4, opts));
}

TEST_CASE("exact cover examples") {
  const ExactCoverInstance a{4, {{0, 1}, {2, 3}, {1, 2}}};
  auto w = solve_exact_cover_bruteforce(a);
  REQUIRE(w);
  CHECK(*w == std::vector<SetIndex>{0, 1});
  CHECK_FALSE(solve_exact_cover_bruteforce({3, {{0, 1}, {1, 2}}}));
  auto empty = solve_exact_cover_bruteforce({0, {}});
  REQUIRE(empty);
  CHECK(empty->empty());
  CHECK_THROWS_AS(solve_exact_cover_bruteforce({30, {{0}}}), GuardError);
}

TEST_CASE("set partitioning examples") {
  const ExactCoverInstance a{4, {{0, 1}, {2, 3}, {1, 2}}};
  CHECK(solve_set_partitioning_bruteforce({a, 2}));
  CHECK_FALSE(solve_set_partitioning_bruteforce({a, 1}));
  CHECK(solve_set_partitioning_bruteforce({a, 3}));
}

TEST_CASE("property: exact cover witnesses are partitions and enumeration agrees") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const auto inst = random_exc(8, 9, 0.3, seed);
    const auto w = solve_exact_cover_bruteforce(inst);
    const auto all = enumerate_exact_covers(inst);
    CHECK(w.has_value() == !all.empty());
    if (w) CHECK(is_exact_cover(inst, *w));
    for (const auto& c : all) CHECK(is_exact_cover(inst, c));
    // brute force over all subsets of sets
    std::size_t covers = 0;
    for (std::uint32_t mask = 0; mask < (1u << inst.sets.size()); ++mask) {
      std::vector<SetIndex> pick;
      for (SetIndex i = 0; i < inst.sets.size(); ++i) {
        if (mask >> i & 1) pick.push_back(i);
      }
      covers += is_exact_cover(inst, pick);
    }
    CHECK(covers == all.size());
  }
}

TEST_CASE("set cover oracle") {
  const ExactCoverInstance a{3, {{0, 1}, {1, 2}}};
  CHECK(solve_set_cover_bruteforce(a, 2));
  CHECK_FALSE(solve_set_cover_bruteforce(a, 1));
}
