#include <doctest.h>

#include "hyperpath/circuit.hpp"
#include "hyperpath/detect.hpp"
#include "hyperpath/generators.hpp"
#include "hyperpath/oracle.hpp"
#include "hyperpath/reductions.hpp"

using namespace hyperpath;

namespace {

Hypergraph two_edges() { return parse_hypergraph("3 4 2 directed\n0 1 2\n1 2 3\n"); }

DetectionParams params_with(std::uint64_t seed, std::size_t reps = 20) {
  DetectionParams p;
  p.seed = seed;
  p.repetitions = reps;
  return p;
}

}  // namespace

TEST_CASE("detects the single walk of the two-edge example") {
  const Circuit c = build_path_circuit(two_edges(), 4);
  CHECK(detect_multilinear(c, 4, params_with(1)).multilinear);
}

TEST_CASE("identically zero polynomial is never detected") {
  const Circuit c = build_path_circuit(parse_hypergraph("3 4 1 directed\n0 1 2\n"), 4);
  for (std::uint64_t seed = 0; seed < 50; ++seed) CHECK_FALSE(detect_multilinear(c, 4, params_with(seed)).multilinear);
}

TEST_CASE("squares vanish: x0^2 x1 is never detected") {
  Circuit::Builder b;
  const GateId g = b.mul_by_input(b.mul_by_input(b.input(0), 0), 1);
  const Circuit c = std::move(b).build(g, 3, 2);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    CHECK_FALSE(detect_multilinear(c, 3, params_with(seed)).multilinear);
  }
}

TEST_CASE("x0 x1 x2 built by hand is detected") {
  Circuit::Builder b;
  const GateId g = b.mul_by_input(b.mul_by_input(b.input(0), 1), 2);
  const Circuit c = std::move(b).build(g, 3, 3);
  CHECK(detect_multilinear(c, 3, params_with(3)).multilinear);
}

TEST_CASE("even multiplicities survive thanks to wire scalars") {
  // six orientations of one edge: x0 x1 x2 has coefficient 6
  const Hypergraph d = expand_orientations(parse_hypergraph("3 3 1 undirected\n0 1 2\n"));
  const Circuit c = build_path_circuit(d, 3);
  CHECK(detect_multilinear(c, 3, params_with(5)).multilinear);
  // rotations of a 4-cycle: coefficient 4
  const Hypergraph cyc = parse_hypergraph("3 4 4 directed\n0 1 2\n1 2 3\n2 3 0\n3 0 1\n");
  CHECK(detect_multilinear(build_cycle_circuit(cyc, 4), 4, params_with(5)).multilinear);
}

TEST_CASE("parameter validation") {
  const Circuit c = build_path_circuit(two_edges(), 4);
  auto p = params_with(0);
  p.field_degree = 12;
  CHECK_THROWS_AS(detect_multilinear(c, 4, p), std::invalid_argument);
  p = params_with(0, 0);
  CHECK_THROWS_AS(detect_multilinear(c, 4, p), std::invalid_argument);
  CHECK_THROWS_AS(detect_multilinear(c, 5, params_with(0)), std::invalid_argument);
  p = params_with(0);
  p.field_degree = 8;
  Circuit::Builder b;
  GateId g = b.input(0);
  for (VertexId v = 1; v < 65; ++v) g = b.mul_by_input(g, v);
  const Circuit wide = std::move(b).build(g, 65, 65);
  CHECK_THROWS_AS(detect_multilinear(wide, 65, p), std::invalid_argument);  // 2^8 < 4k
}

TEST_CASE("memory guard") {
  const auto inst = planted_path(3, 30, 26, 5, true, 1);
  const Circuit c = build_path_circuit(inst.graph, 26);
  CHECK_THROWS_AS(detect_multilinear(c, 26, params_with(0)), MemoryGuardError);
  auto p = params_with(0);
  p.max_k = 30;
  p.max_memory_bytes = 1 << 20;
  CHECK_THROWS_AS(detect_multilinear(c, 26, p), MemoryGuardError);
  CHECK(detection_memory_bytes(c, 26, 16) == peak_live_values(c) * (std::size_t{1} << 26) * 2);
}

TEST_CASE("peak live values stays near one recurrence layer") {
  const auto inst = planted_path(3, 20, 12, 30, true, 4);
  const Circuit c = build_path_circuit(inst.graph, 12);
  CHECK(peak_live_values(c) <= 2 * inst.graph.num_edges() + 2);
  CHECK(peak_live_values(c) >= 1);
}

TEST_CASE("per-trial floor") {
  CHECK(per_trial_floor(10, 16) > 0.288);
  CHECK(per_trial_floor(10, 16) < 0.29);
  CHECK(per_trial_floor(1, 16) > 0.49);
  CHECK(false_negative_bound(10, 16, 20) < 0.0011);
  CHECK(per_trial_floor(200, 8) == 0.0);
}

TEST_CASE("results are a deterministic function of seed, independent of kernel mode") {
  const auto inst = planted_path(3, 14, 9, 25, true, 7);
  const Circuit c = build_path_circuit(inst.graph, 9);
  for (std::uint64_t trial = 0; trial < 40; ++trial) {
    auto serial = params_with(11);
    serial.mode = kernels::Mode::serial;
    auto parallel = params_with(11);
    parallel.mode = kernels::Mode::parallel;
    const bool a = detection_trial(c, 9, serial, trial);
    CHECK(a == detection_trial(c, 9, parallel, trial));
    CHECK(a == detection_trial(c, 9, serial, trial));
  }
  auto all = params_with(11, 40);
  all.stop_at_first_yes = false;
  const auto r1 = detect_multilinear(c, 9, all);
  const auto r2 = detect_multilinear(c, 9, all);
  CHECK(r1.yes_trials == r2.yes_trials);
  CHECK(r1.trials_run == 40);
}

TEST_CASE("per-trial yes rate on a small yes-instance is at least 1/4") {
  const Circuit c = build_path_circuit(two_edges(), 4);
  auto p = params_with(2024, 1000);
  p.stop_at_first_yes = false;
  const auto res = detect_multilinear(c, 4, p);
  const double rate = static_cast<double>(res.yes_trials) / 1000.0;
  MESSAGE("measured per-trial rate " << rate);
  CHECK(rate >= 0.25);
}

TEST_CASE("no false positives on oracle-certified no-instances") {
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; checked < 150 && seed < 2000; ++seed) {
    const std::size_t r = 3 + seed % 2;
    const Hypergraph h = random_hypergraph(r, 8, 6 + seed % 12, true, seed);
    const std::size_t k = r + 1 + seed % 3;
    if (exists_tight_path_bruteforce(h, k)) continue;
    ++checked;
    CHECK_FALSE(detect_multilinear(build_path_circuit(h, k), k, params_with(seed)).multilinear);
  }
  CHECK(checked == 150);
}

TEST_CASE("field degrees 8 and 32 also detect") {
  const Circuit c = build_path_circuit(two_edges(), 4);
  for (unsigned l : {8u, 32u}) {
    auto p = params_with(9);
    p.field_degree = l;
    CHECK(detect_multilinear(c, 4, p).multilinear);
  }
}
