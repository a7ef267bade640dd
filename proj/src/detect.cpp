#include "hyperpath/detect.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>
#include <string>
#include <vector>

#include "hyperpath/binary_field.hpp"

namespace hyperpath {

namespace {

constexpr std::uint32_t kNoReuse = static_cast<std::uint32_t>(-1);

// Evaluation schedule shared by the evaluator and the memory estimate. Gates
// the output does not depend on are skipped. A gate may take over the buffer
// of an operand it is the last user of, provided the operand occurs once.
struct Plan {
  std::vector<char> needed;
  std::vector<std::uint32_t> reuse;           // operand position whose buffer is taken over
  std::vector<std::vector<GateId>> releases;  // operands freed after the gate
  std::size_t peak = 0;
};

Plan make_plan(const Circuit& c) {
  const std::size_t n = c.size();
  Plan p{std::vector<char>(n, 0), std::vector<std::uint32_t>(n, kNoReuse), std::vector<std::vector<GateId>>(n), 0};
  if (n == 0) return p;
  p.needed[c.output()] = 1;
  for (GateId g = static_cast<GateId>(n); g-- > 0;) {
    if (!p.needed[g]) continue;
    for (GateId o : c.operands(g)) p.needed[o] = 1;
  }
  std::vector<GateId> last_use(n, 0);
  for (GateId g = 0; g < n; ++g) {
    if (!p.needed[g]) continue;
    for (GateId o : c.operands(g)) last_use[o] = g;
  }

  std::size_t live = 0;
  std::vector<GateId> ops;
  for (GateId g = 0; g < n; ++g) {
    if (!p.needed[g]) continue;
    ops.assign(c.operands(g).begin(), c.operands(g).end());
    for (std::uint32_t i = 0; i < ops.size() && p.reuse[g] == kNoReuse; ++i) {
      if (last_use[ops[i]] == g && std::count(ops.begin(), ops.end(), ops[i]) == 1) p.reuse[g] = i;
    }
    if (p.reuse[g] == kNoReuse) ++live;
    p.peak = std::max(p.peak, live);
    std::sort(ops.begin(), ops.end());
    ops.erase(std::unique(ops.begin(), ops.end()), ops.end());
    for (GateId o : ops) {
      if (last_use[o] != g) continue;
      if (p.reuse[g] != kNoReuse && c.operands(g)[p.reuse[g]] == o) continue;
      p.releases[g].push_back(o);
      --live;
    }
  }
  return p;
}

std::mt19937_64 trial_stream(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

template <typename Field>
class Evaluator {
 public:
  using E = typename Field::Element;
  using Multiplier = ScalarMultiplier<Field>;

  Evaluator(const Circuit& c, const Plan& plan, std::size_t k, kernels::Mode mode)
      : c_(c), plan_(plan), size_(std::size_t{1} << k), mode_(mode) {}

  bool run(std::mt19937_64& rng) {
    const std::size_t nv = c_.num_vars();
    std::uniform_int_distribution<std::uint64_t> vec(0, size_ - 1);
    std::uniform_int_distribution<std::uint64_t> nonzero(1, Field::order - 1);
    std::vector<std::uint64_t> v(nv);
    for (auto& x : v) x = vec(rng);
    std::vector<E> y(nv);
    for (auto& x : y) x = static_cast<E>(nonzero(rng));
    std::vector<Multiplier> mul;
    mul.reserve(nv);
    for (std::size_t i = 0; i < nv; ++i) mul.emplace_back(y[i]);

    std::vector<std::vector<E>*> slot(c_.size(), nullptr);
    for (GateId g = 0; g < c_.size(); ++g) {
      if (!plan_.needed[g]) continue;
      const Gate& gate = c_.gate(g);
      const auto ops = c_.operands(g);
      std::vector<E>* out = nullptr;
      if (plan_.reuse[g] != kNoReuse) {
        out = slot[ops[plan_.reuse[g]]];
        slot[ops[plan_.reuse[g]]] = nullptr;
      } else {
        out = acquire();
      }
      std::span<E> a(*out);
      switch (gate.kind) {
        case GateKind::zero:
          std::fill(a.begin(), a.end(), E{0});
          break;
        case GateKind::one:
          std::fill(a.begin(), a.end(), E{0});
          a[0] = Field::one();
          break;
        case GateKind::input:
          std::fill(a.begin(), a.end(), E{0});
          a[0] ^= y[gate.var];
          a[v[gate.var]] ^= y[gate.var];
          break;
        case GateKind::mul_by_input:
          if (plan_.reuse[g] == kNoReuse) std::copy(slot[ops[0]]->begin(), slot[ops[0]]->end(), a.begin());
          shift_mul(a, v[gate.var], mul[gate.var]);
          break;
        case GateKind::add:
          eval_add(a, ops, plan_.reuse[g], slot, rng, nonzero);
          break;
      }
      for (GateId o : plan_.releases[g]) {
        pool_.push_back(slot[o]);
        slot[o] = nullptr;
      }
      slot[g] = out;
    }
    const auto& result = *slot[c_.output()];
    const bool yes = mode_ == kernels::Mode::parallel ? !kernels::parallel::is_zero<Field>(result)
                                                      : !kernels::serial::is_zero<Field>(result);
    return yes;
  }

 private:
  std::vector<E>* acquire() {
    if (!pool_.empty()) {
      auto* b = pool_.back();
      pool_.pop_back();
      return b;
    }
    storage_.emplace_back(size_);
    return &storage_.back();
  }

  void shift_mul(std::span<E> a, std::uint64_t v, const Multiplier& m) const {
    if (mode_ == kernels::Mode::parallel) {
      kernels::parallel::shift_mul<Field>(a, v, m);
    } else {
      kernels::serial::shift_mul<Field>(a, v, m);
    }
  }

  void eval_add(std::span<E> a, std::span<const GateId> ops, std::uint32_t reused,
                const std::vector<std::vector<E>*>& slot, std::mt19937_64& rng,
                std::uniform_int_distribution<std::uint64_t>& nonzero) const {
    if (ops.size() == 1) {
      if (reused == kNoReuse) std::copy(slot[ops[0]]->begin(), slot[ops[0]]->end(), a.begin());
      return;
    }
    // Wire scalars are drawn in operand order, so the stream does not depend
    // on which operand's buffer was reused.
    std::vector<E> s(ops.size());
    for (auto& x : s) x = static_cast<E>(nonzero(rng));
    const bool par = mode_ == kernels::Mode::parallel;
    if (reused != kNoReuse) {
      const Multiplier m(s[reused]);
      par ? kernels::parallel::scale<Field>(a, m) : kernels::serial::scale<Field>(a, m);
    } else {
      std::fill(a.begin(), a.end(), E{0});
    }
    for (std::size_t i = 0; i < ops.size(); ++i) {
      if (i == reused) continue;
      const Multiplier m(s[i]);
      std::span<const E> in(*slot[ops[i]]);
      par ? kernels::parallel::axpy<Field>(a, in, m) : kernels::serial::axpy<Field>(a, in, m);
    }
  }

  const Circuit& c_;
  const Plan& plan_;
  std::size_t size_;
  kernels::Mode mode_;
  std::vector<std::vector<E>*> pool_;
  std::deque<std::vector<E>> storage_;
};

bool run_trial(const Circuit& c, const Plan& plan, std::size_t k, const DetectionParams& params,
               std::uint64_t trial) {
  auto rng = trial_stream(params.seed, trial);
  switch (params.field_degree) {
    case 8:
      return Evaluator<GF256>(c, plan, k, params.mode).run(rng);
    case 16:
      return Evaluator<GF65536>(c, plan, k, params.mode).run(rng);
    default:
      return Evaluator<GF2_32>(c, plan, k, params.mode).run(rng);
  }
}

}  // namespace

void check_detection_params(const Circuit& c, std::size_t k, const DetectionParams& params) {
  const unsigned l = params.field_degree;
  if (l != 8 && l != 16 && l != 32) {
    throw std::invalid_argument("field degree must be 8, 16 or 32, got " + std::to_string(l));
  }
  if (params.repetitions == 0) throw std::invalid_argument("repetitions must be at least 1");
  if ((std::uint64_t{1} << l) < 4 * static_cast<std::uint64_t>(k)) {
    throw std::invalid_argument("field too small: 2^" + std::to_string(l) + " < 4k = " + std::to_string(4 * k));
  }
  if (c.degree() != k) {
    throw std::invalid_argument("circuit degree " + std::to_string(c.degree()) + " != k = " + std::to_string(k));
  }
  if (k >= 40) throw MemoryGuardError("k = " + std::to_string(k) + " is beyond any addressable 2^k array");
  if (params.force) return;
  if (k > params.max_k) {
    throw MemoryGuardError("k = " + std::to_string(k) + " exceeds the guard k <= " + std::to_string(params.max_k) +
                           " (memory per value is 2^k * l / 8 bytes)");
  }
  const std::size_t bytes = detection_memory_bytes(c, k, l);
  if (bytes > params.max_memory_bytes) {
    throw MemoryGuardError("estimated " + std::to_string(bytes) + " bytes exceed the memory guard of " +
                           std::to_string(params.max_memory_bytes));
  }
}

DetectionResult detect_multilinear(const Circuit& c, std::size_t k, const DetectionParams& params) {
  check_detection_params(c, k, params);
  const Plan plan = make_plan(c);
  DetectionResult res;
  for (std::size_t t = 0; t < params.repetitions; ++t) {
    ++res.trials_run;
    if (run_trial(c, plan, k, params, t)) {
      ++res.yes_trials;
      res.multilinear = true;
      if (params.stop_at_first_yes) break;
    }
  }
  return res;
}

bool detection_trial(const Circuit& c, std::size_t k, const DetectionParams& params, std::uint64_t trial_index) {
  check_detection_params(c, k, params);
  return run_trial(c, make_plan(c), k, params, trial_index);
}

double per_trial_floor(std::size_t k, unsigned field_degree) {
  double independent = 1.0;
  for (std::size_t j = 1; j <= k; ++j) independent *= 1.0 - std::ldexp(1.0, -static_cast<int>(j));
  const double nonzero = std::ldexp(1.0, static_cast<int>(field_degree)) - 1.0;
  const double schwartz_zippel = 1.0 - 2.0 * static_cast<double>(k) / nonzero;
  return std::max(0.0, independent * schwartz_zippel);
}

double false_negative_bound(std::size_t k, unsigned field_degree, std::size_t repetitions) {
  return std::pow(1.0 - per_trial_floor(k, field_degree), static_cast<double>(repetitions));
}

std::size_t peak_live_values(const Circuit& c) { return make_plan(c).peak; }

std::size_t detection_memory_bytes(const Circuit& c, std::size_t k, unsigned field_degree) {
  const std::size_t per_value = (std::size_t{1} << k) * (field_degree / 8);
  return peak_live_values(c) * per_value;
}

}  // namespace hyperpath
