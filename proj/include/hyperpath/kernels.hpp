#pragma once

// Coefficient-wise loops over group-algebra elements of GF(2^l)[Z_2^k].
//
// Every kernel exists twice: `serial` is the reference implementation kept for
// testing, `parallel` splits the index range across OpenMP threads. Each output
// coefficient is written by exactly one iteration, so both produce identical
// results under any schedule.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>

#include <omp.h>

#include "hyperpath/binary_field.hpp"

namespace hyperpath::kernels {

/// Below this many coefficients the parallel kernels run on one thread.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 12;

namespace serial {

/// a[w] <- y * (a[w] ^ a[w ^ v]) for every w.
template <typename Field>
void shift_mul(std::span<typename Field::Element> a, std::uint64_t v, const ScalarMultiplier<Field>& y) {
  if (v == 0) {
    std::fill(a.begin(), a.end(), typename Field::Element{0});
    return;
  }
  const std::uint64_t high = std::uint64_t{1} << (63 - __builtin_clzll(v));
  const std::uint64_t half = a.size() / 2;
  for (std::uint64_t i = 0; i < half; ++i) {
    // i with a zero bit inserted at the position of v's highest set bit
    const std::uint64_t w = ((i & ~(high - 1)) << 1) | (i & (high - 1));
    const auto s = y(static_cast<typename Field::Element>(a[w] ^ a[w ^ v]));
    a[w] = s;
    a[w ^ v] = s;
  }
}

/// out[w] ^= s * a[w]
template <typename Field>
void axpy(std::span<typename Field::Element> out, std::span<const typename Field::Element> a,
          const ScalarMultiplier<Field>& s) {
  for (std::size_t w = 0; w < out.size(); ++w) out[w] ^= s(a[w]);
}

/// a[w] <- s * a[w]
template <typename Field>
void scale(std::span<typename Field::Element> a, const ScalarMultiplier<Field>& s) {
  for (auto& x : a) x = s(x);
}

/// out[w] ^= a[w]
template <typename Field>
void add(std::span<typename Field::Element> out, std::span<const typename Field::Element> a) {
  for (std::size_t w = 0; w < out.size(); ++w) out[w] ^= a[w];
}

template <typename Field>
bool is_zero(std::span<const typename Field::Element> a) {
  for (auto x : a) {
    if (x != 0) return false;
  }
  return true;
}

}  // namespace serial

namespace parallel {

/// True when a loop over `size` coefficients is worth an OpenMP team. With one
/// thread the outlined loop body is slower than the plain loop.
inline bool use_team(std::size_t size) { return size >= kParallelThreshold && omp_get_max_threads() > 1; }

template <typename Field>
void shift_mul(std::span<typename Field::Element> a, std::uint64_t v, const ScalarMultiplier<Field>& y) {
  if (v == 0) {
    std::fill(a.begin(), a.end(), typename Field::Element{0});
    return;
  }
  if (!use_team(a.size())) return serial::shift_mul<Field>(a, v, y);
  const std::uint64_t high = std::uint64_t{1} << (63 - __builtin_clzll(v));
  const auto half = static_cast<std::int64_t>(a.size() / 2);
  auto* data = a.data();
#pragma omp parallel for schedule(static)
  for (std::int64_t j = 0; j < half; ++j) {
    const auto i = static_cast<std::uint64_t>(j);
    const std::uint64_t w = ((i & ~(high - 1)) << 1) | (i & (high - 1));
    const auto s = y(static_cast<typename Field::Element>(data[w] ^ data[w ^ v]));
    data[w] = s;
    data[w ^ v] = s;
  }
}

template <typename Field>
void axpy(std::span<typename Field::Element> out, std::span<const typename Field::Element> a,
          const ScalarMultiplier<Field>& s) {
  if (!use_team(out.size())) return serial::axpy<Field>(out, a, s);
  const auto n = static_cast<std::int64_t>(out.size());
  auto* o = out.data();
  const auto* in = a.data();
#pragma omp parallel for schedule(static)
  for (std::int64_t w = 0; w < n; ++w) o[w] ^= s(in[w]);
}

template <typename Field>
void scale(std::span<typename Field::Element> a, const ScalarMultiplier<Field>& s) {
  if (!use_team(a.size())) return serial::scale<Field>(a, s);
  const auto n = static_cast<std::int64_t>(a.size());
  auto* d = a.data();
#pragma omp parallel for schedule(static)
  for (std::int64_t w = 0; w < n; ++w) d[w] = s(d[w]);
}

template <typename Field>
void add(std::span<typename Field::Element> out, std::span<const typename Field::Element> a) {
  if (!use_team(out.size())) return serial::add<Field>(out, a);
  const auto n = static_cast<std::int64_t>(out.size());
  auto* o = out.data();
  const auto* in = a.data();
#pragma omp parallel for schedule(static)
  for (std::int64_t w = 0; w < n; ++w) o[w] ^= in[w];
}

template <typename Field>
bool is_zero(std::span<const typename Field::Element> a) {
  if (!use_team(a.size())) return serial::is_zero<Field>(a);
  const auto n = static_cast<std::int64_t>(a.size());
  const auto* d = a.data();
  bool nonzero = false;
#pragma omp parallel for schedule(static) reduction(|| : nonzero)
  for (std::int64_t w = 0; w < n; ++w) nonzero = nonzero || d[w] != 0;
  return !nonzero;
}

}  // namespace parallel

enum class Mode { serial, parallel };

}  // namespace hyperpath::kernels
