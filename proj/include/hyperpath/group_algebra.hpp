#pragma once

// The group algebra GF(2^l)[Z_2^k]: formal sums of k-bit group elements w with
// field coefficients. The product of basis elements z_a * z_b is z_(a xor b).
// Coefficients are stored flat, indexed by the integer value of w.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "hyperpath/binary_field.hpp"
#include "hyperpath/kernels.hpp"

namespace hyperpath {

template <typename Field>
class GroupAlgebraElement {
 public:
  using Element = typename Field::Element;

  /// The zero element of dimension k.
  explicit GroupAlgebraElement(std::size_t k) : k_(k), coeffs_(std::size_t{1} << k, Element{0}) {
    if (k >= 40) throw std::invalid_argument("group algebra dimension too large");
  }

  static GroupAlgebraElement identity(std::size_t k) {
    GroupAlgebraElement a(k);
    a.coeffs_[0] = Field::one();
    return a;
  }

  /// c * z_w
  static GroupAlgebraElement basis(std::size_t k, std::uint64_t w, Element c = Field::one()) {
    GroupAlgebraElement a(k);
    a.coeffs_.at(w) = c;
    return a;
  }

  std::size_t dimension() const { return k_; }
  std::size_t size() const { return coeffs_.size(); }
  Element operator[](std::uint64_t w) const { return coeffs_[w]; }
  Element& operator[](std::uint64_t w) { return coeffs_[w]; }
  std::span<Element> coefficients() { return coeffs_; }
  std::span<const Element> coefficients() const { return coeffs_; }

  bool is_zero() const { return kernels::serial::is_zero<Field>(coeffs_); }

  friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;

 private:
  std::size_t k_;
  std::vector<Element> coeffs_;
};

template <typename Field>
GroupAlgebraElement<Field> ga_add(const GroupAlgebraElement<Field>& a, const GroupAlgebraElement<Field>& b) {
  if (a.dimension() != b.dimension()) throw std::invalid_argument("group algebra dimension mismatch");
  GroupAlgebraElement<Field> out = a;
  kernels::serial::add<Field>(out.coefficients(), b.coefficients());
  return out;
}

/// A * y(e + z_v): out[w] = y * (A[w] + A[w ^ v]).
template <typename Field>
GroupAlgebraElement<Field> ga_shift_mul(const GroupAlgebraElement<Field>& a, std::uint64_t v,
                                        typename Field::Element y,
                                        kernels::Mode mode = kernels::Mode::serial) {
  if (v >= a.size()) throw std::invalid_argument("shift vector has more than k bits");
  GroupAlgebraElement<Field> out = a;
  const ScalarMultiplier<Field> mul(y);
  if (mode == kernels::Mode::parallel) {
    kernels::parallel::shift_mul<Field>(out.coefficients(), v, mul);
  } else {
    kernels::serial::shift_mul<Field>(out.coefficients(), v, mul);
  }
  return out;
}

/// General product by XOR convolution, Theta(4^k) field operations. Only for
/// small k; the detector never needs it because its circuits are skew.
template <typename Field>
GroupAlgebraElement<Field> ga_mul_naive(const GroupAlgebraElement<Field>& a, const GroupAlgebraElement<Field>& b) {
  if (a.dimension() != b.dimension()) throw std::invalid_argument("group algebra dimension mismatch");
  if (a.dimension() > 10) throw std::invalid_argument("naive group algebra product limited to k <= 10");
  GroupAlgebraElement<Field> out(a.dimension());
  for (std::uint64_t x = 0; x < a.size(); ++x) {
    if (a[x] == 0) continue;
    for (std::uint64_t y = 0; y < b.size(); ++y) {
      out[x ^ y] = Field::add(out[x ^ y], Field::mul(a[x], b[y]));
    }
  }
  return out;
}

}  // namespace hyperpath
