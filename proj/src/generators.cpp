#include "hyperpath/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace hyperpath {

namespace {

std::mt19937_64 stream(std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), 0x68797065u};
  return std::mt19937_64(seq);
}

std::vector<VertexId> random_edge(std::size_t r, std::size_t n, std::mt19937_64& rng) {
  std::vector<VertexId> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::vector<VertexId> e;
  std::sample(all.begin(), all.end(), std::back_inserter(e), r, rng);
  std::shuffle(e.begin(), e.end(), rng);
  return e;
}

// Adds edges to `d` until it has `target` edges or too many draws collide.
void add_noise(HypergraphData& d, std::set<std::vector<VertexId>>& seen, std::size_t target, std::mt19937_64& rng) {
  std::size_t misses = 0;
  while (d.edges.size() < target && misses < 64 * (target + 1)) {
    auto e = random_edge(d.r, d.n, rng);
    auto key = e;
    if (!d.directed) std::sort(key.begin(), key.end());
    if (seen.insert(key).second) {
      d.edges.push_back(std::move(e));
    } else {
      ++misses;
    }
  }
}

void check_sizes(std::size_t r, std::size_t n, std::size_t k) {
  if (r < 2) throw std::invalid_argument("r must be at least 2");
  if (k < r || k > n) throw std::invalid_argument("need r <= k <= n");
}

PlantedInstance planted(std::size_t r, std::size_t n, std::size_t k, std::size_t noise, bool directed,
                        std::uint64_t seed, bool cycle) {
  check_sizes(r, n, k);
  auto rng = stream(seed);
  std::vector<VertexId> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  std::vector<VertexId> plant(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k));

  HypergraphData d{r, n, directed, {}};
  std::set<std::vector<VertexId>> seen;
  const std::size_t windows = cycle ? k : k - r + 1;
  for (std::size_t i = 0; i < windows; ++i) {
    std::vector<VertexId> e(r);
    for (std::size_t j = 0; j < r; ++j) e[j] = plant[(i + j) % k];
    auto key = e;
    if (!directed) std::sort(key.begin(), key.end());
    if (seen.insert(key).second) d.edges.push_back(std::move(e));
  }
  add_noise(d, seen, d.edges.size() + noise, rng);
  return {Hypergraph(std::move(d)), std::move(plant)};
}

}  // namespace

Hypergraph random_hypergraph(std::size_t r, std::size_t n, std::size_t m, bool directed, std::uint64_t seed) {
  if (r < 2 || r > n) throw std::invalid_argument("need 2 <= r <= n");
  auto rng = stream(seed);
  HypergraphData d{r, n, directed, {}};
  std::set<std::vector<VertexId>> seen;
  add_noise(d, seen, m, rng);
  return Hypergraph(std::move(d));
}

PlantedInstance planted_path(std::size_t r, std::size_t n, std::size_t k, std::size_t noise_edges, bool directed,
                             std::uint64_t seed) {
  return planted(r, n, k, noise_edges, directed, seed, false);
}

PlantedInstance planted_cycle(std::size_t r, std::size_t n, std::size_t k, std::size_t noise_edges, bool directed,
                              std::uint64_t seed) {
  return planted(r, n, k, noise_edges, directed, seed, true);
}

ExactCoverInstance random_exc(std::size_t n, std::size_t m, double density, std::uint64_t seed) {
  auto rng = stream(seed);
  std::bernoulli_distribution pick(std::clamp(density, 0.0, 1.0));
  ExactCoverInstance inst{n, {}};
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Element> s;
    for (std::size_t x = 0; x < n; ++x) {
      if (pick(rng)) s.push_back(static_cast<Element>(x));
    }
    if (!s.empty()) inst.sets.push_back(std::move(s));
  }
  return inst;
}

ExactCoverInstance planted_exc(std::size_t n, std::size_t parts, std::size_t noise_sets, std::size_t min_size,
                               std::uint64_t seed) {
  if (min_size == 0 || min_size > n) throw std::invalid_argument("need 1 <= min_size <= n");
  if (parts * min_size > n) throw std::invalid_argument("cannot split n elements into parts of size >= min_size");
  auto rng = stream(seed);
  std::vector<Element> all(n);
  std::iota(all.begin(), all.end(), 0);
  ExactCoverInstance inst{n, {}};
  if (parts > 0) {
    std::shuffle(all.begin(), all.end(), rng);
    // sizes: min_size each, the remainder spread at random
    std::vector<std::size_t> size(parts, min_size);
    std::uniform_int_distribution<std::size_t> which(0, parts - 1);
    for (std::size_t extra = n - parts * min_size; extra > 0; --extra) ++size[which(rng)];
    std::size_t at = 0;
    for (std::size_t p = 0; p < parts; ++p) {
      inst.sets.emplace_back(all.begin() + static_cast<std::ptrdiff_t>(at),
                             all.begin() + static_cast<std::ptrdiff_t>(at + size[p]));
      at += size[p];
    }
  }
  const std::size_t max_size = std::max(min_size, n / 2);
  std::uniform_int_distribution<std::size_t> len(min_size, max_size);
  for (std::size_t i = 0; i < noise_sets; ++i) {
    std::shuffle(all.begin(), all.end(), rng);
    inst.sets.emplace_back(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(len(rng)));
  }
  std::shuffle(inst.sets.begin(), inst.sets.end(), rng);
  return inst;
}

}  // namespace hyperpath
