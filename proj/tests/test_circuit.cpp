#include <doctest.h>

#include <sstream>

#include "hyperpath/circuit.hpp"
#include "hyperpath/generators.hpp"
#include "hyperpath/oracle.hpp"
#include "poly_ring.hpp"

using namespace hyperpath;
using namespace hyperpath::testing;

namespace {

Hypergraph two_edges() { return parse_hypergraph("3 4 2 directed\n0 1 2\n1 2 3\n"); }
Hypergraph cyclic_four() { return parse_hypergraph("3 4 4 directed\n0 1 2\n1 2 3\n2 3 0\n3 0 1\n"); }

Polynomial expand(const Circuit& c) {
  PolyRing ring{c.num_vars()};
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < c.num_vars(); ++i) vars.push_back(ring.var(i));
  return evaluate_circuit(c, std::span<const Polynomial>(vars), ring);
}

std::int64_t at_value(const Circuit& c, std::int64_t x) {
  std::vector<std::int64_t> a(c.num_vars(), x);
  return evaluate_circuit(c, std::span<const std::int64_t>(a), NumericRing<std::int64_t>{});
}

Monomial monomial(std::size_t n, std::initializer_list<std::size_t> vars) {
  Monomial m(n, 0);
  for (auto v : vars) ++m[v];
  return m;
}

}  // namespace

TEST_CASE("path circuit of the two-edge example") {
  const Circuit c = build_path_circuit(two_edges(), 4);
  const Polynomial p = expand(c);
  CHECK(p == Polynomial{{monomial(4, {0, 1, 2, 3}), 1}});
  CHECK(at_value(c, 1) == 1);
  // input x0, two chained products, the step product, the output sum
  CHECK(c.size() == 5);
  CHECK(c.size() <= 2 * 2 * 4 + 1);
  std::ostringstream dump;
  write_circuit(dump, c);
  CHECK(dump.str() == "0 input x0\n1 mul 0 x1\n2 mul 1 x2\n3 mul 2 x3\n4 add 3\noutput 4\n");
}

TEST_CASE("k = r sums the base products once") {
  const Circuit c = build_path_circuit(two_edges(), 3);
  CHECK(c.count(GateKind::add) == 1);
  CHECK(c.count(GateKind::input) == 2);
  CHECK(at_value(c, 1) == 2);
  CHECK(expand(c) == Polynomial{{monomial(4, {0, 1, 2}), 1}, {monomial(4, {1, 2, 3}), 1}});
}

TEST_CASE("circuits with no walks compute zero") {
  const Circuit c = build_path_circuit(parse_hypergraph("3 4 1 directed\n0 1 2\n"), 4);
  CHECK(expand(c).empty());
  CHECK(c.count(GateKind::zero) == 1);
}

TEST_CASE("circuit construction preconditions") {
  CHECK_THROWS_AS(build_path_circuit(two_edges(), 2), std::invalid_argument);
  CHECK_THROWS_AS(build_path_circuit(parse_hypergraph("3 3 1 undirected\n0 1 2\n"), 3), std::invalid_argument);
  CHECK_THROWS_AS(build_cycle_circuit(two_edges(), 2), std::invalid_argument);
}

TEST_CASE("cycle circuit counts each cycle once per rotation") {
  const Circuit c = build_cycle_circuit(cyclic_four(), 4);
  const Polynomial p = expand(c);
  REQUIRE(p.size() == 1);
  CHECK(p.begin()->first == monomial(4, {0, 1, 2, 3}));
  CHECK(p.begin()->second == 4);
  CHECK(expand(build_cycle_circuit(two_edges(), 4)).empty());
}

TEST_CASE("cycle circuit at k = r") {
  const Hypergraph rot = parse_hypergraph("3 3 3 directed\n0 1 2\n1 2 0\n2 0 1\n");
  const Polynomial p = expand(build_cycle_circuit(rot, 3));
  CHECK(p == Polynomial{{monomial(3, {0, 1, 2}), 3}});
  CHECK(expand(build_cycle_circuit(parse_hypergraph("3 3 1 directed\n0 1 2\n"), 3)).empty());
}

TEST_CASE("evaluation errors and zero inputs") {
  const Circuit c = build_path_circuit(two_edges(), 4);
  std::vector<std::int64_t> short_assignment(2, 1);
  CHECK_THROWS_AS(evaluate_circuit(c, std::span<const std::int64_t>(short_assignment), NumericRing<std::int64_t>{}),
                  std::out_of_range);
  CHECK(at_value(c, 0) == 0);
}

TEST_CASE("builder rejects forward references") {
  Circuit::Builder b;
  const GateId x = b.input(0);
  CHECK_THROWS_AS(b.mul_by_input(x + 5, 1), std::invalid_argument);
  CHECK_THROWS_AS(b.add({}), std::invalid_argument);
}

TEST_CASE("property: walk count identity, homogeneity and gate bounds") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t r = 3 + seed % 3;
    const std::size_t n = 6 + seed % 5;
    const Hypergraph h = random_hypergraph(r, n, 8 + seed % 30, true, seed);
    for (std::size_t k = r; k <= 8; ++k) {
      const Circuit c = build_path_circuit(h, k);
      const auto ones = at_value(c, 1);
      CHECK(static_cast<std::uint64_t>(ones) == count_tight_walks(h, k));
      CHECK(at_value(c, 2) == (std::int64_t{1} << k) * ones);
      CHECK(c.size() <= 2 * h.num_edges() * k + 1);
      const Circuit cc = build_cycle_circuit(h, k);
      CHECK(cc.size() <= 2 * h.num_edges() * h.num_edges() * k + 1);
    }
  }
}

TEST_CASE("property: symbolic expansion has a multilinear term iff the oracle finds a path or cycle") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t r = 3 + seed % 2;
    const Hypergraph h = random_hypergraph(r, 7 + seed % 2, 10 + seed % 20, true, seed);
    for (std::size_t k = r; k <= 6; ++k) {
      const Polynomial p = expand(build_path_circuit(h, k));
      for (const auto& [m, coeff] : p) {
        CHECK(degree(m) == k);
        CHECK(coeff > 0);
      }
      CHECK(has_multilinear_term(p) == exists_tight_path_bruteforce(h, k).has_value());
      const Polynomial q = expand(build_cycle_circuit(h, k));
      CHECK(has_multilinear_term(q) == exists_tight_cycle_bruteforce(h, k).has_value());
    }
  }
}
