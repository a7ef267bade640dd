#pragma once

// Randomized detection of a degree-k multilinear monomial in the polynomial
// computed by a skew circuit.
//
// Each trial draws, per variable i, a uniform k-bit vector v_i and a uniform
// nonzero scalar y_i, substitutes x_i -> y_i (e + z_{v_i}) and evaluates the
// circuit over GF(2^l)[Z_2^k]. Every operand of an add gate with two or more
// operands is also multiplied by a fresh nonzero scalar. Squares vanish since
// (e + z_v)^2 = 0, so a nonzero result proves a multilinear monomial exists.

#include <cstddef>
#include <cstdint>
#include <stdexcept>

#include "hyperpath/circuit.hpp"
#include "hyperpath/kernels.hpp"

namespace hyperpath {

/// Raised when a detection run would exceed the configured memory or k bound.
class MemoryGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DetectionParams {
  unsigned field_degree = 16;
  std::size_t repetitions = 20;
  std::uint64_t seed = 0;
  std::size_t max_k = 24;
  std::size_t max_memory_bytes = std::size_t{2} << 30;
  bool force = false;
  /// Stop after the first trial that answers yes.
  bool stop_at_first_yes = true;
  kernels::Mode mode = kernels::Mode::parallel;
};

struct DetectionResult {
  bool multilinear = false;
  std::size_t trials_run = 0;
  std::size_t yes_trials = 0;
};

/// Throws std::invalid_argument for an unsupported field degree, 2^l < 4k,
/// zero repetitions or a circuit whose degree is not k, and MemoryGuardError
/// when k or the memory estimate is over its bound (unless params.force).
void check_detection_params(const Circuit& c, std::size_t k, const DetectionParams& params);

/// Runs up to params.repetitions independent trials.
DetectionResult detect_multilinear(const Circuit& c, std::size_t k, const DetectionParams& params);

/// One trial with the random stream of (params.seed, trial_index).
bool detection_trial(const Circuit& c, std::size_t k, const DetectionParams& params, std::uint64_t trial_index);

/// Lower bound on the probability that one trial answers yes when a
/// multilinear monomial exists: prod_{j=1..k} (1 - 2^-j) * (1 - 2k / (2^l - 1)),
/// clamped at zero.
double per_trial_floor(std::size_t k, unsigned field_degree);

/// (1 - per_trial_floor)^repetitions.
double false_negative_bound(std::size_t k, unsigned field_degree, std::size_t repetitions);

/// Largest number of group-algebra values alive at once during evaluation.
std::size_t peak_live_values(const Circuit& c);

/// Bytes of coefficient storage a trial needs.
std::size_t detection_memory_bytes(const Circuit& c, std::size_t k, unsigned field_degree);

}  // namespace hyperpath
