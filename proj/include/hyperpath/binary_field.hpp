#pragma once

// GF(2^l) arithmetic for l in {8, 16, 32}. Elements are bit vectors holding
// polynomial coefficients over GF(2), reduced modulo a fixed irreducible
// polynomial of degree l.

#include <array>
#include <cstddef>
#include <cstdint>

namespace hyperpath {

/// Carry-less product of two polynomials of degree < 32.
std::uint64_t carryless_mul(std::uint32_t a, std::uint32_t b);

/// Remainder of `value` modulo `modulus` over GF(2).
std::uint64_t poly_mod(std::uint64_t value, std::uint64_t modulus);

/// Degree of a nonzero GF(2) polynomial.
int poly_degree(std::uint64_t p);

/// Trial division by every polynomial of degree 1..deg(p)/2.
bool is_irreducible(std::uint64_t p);

template <unsigned Bits>
struct FieldTraits;

template <>
struct FieldTraits<8> {
  using storage = std::uint8_t;
  static constexpr std::uint64_t modulus = 0x11B;  // x^8 + x^4 + x^3 + x + 1
};

template <>
struct FieldTraits<16> {
  using storage = std::uint16_t;
  static constexpr std::uint64_t modulus = 0x1002D;  // x^16 + x^5 + x^3 + x^2 + 1
};

template <>
struct FieldTraits<32> {
  using storage = std::uint32_t;
  static constexpr std::uint64_t modulus = 0x10000008DULL;  // x^32 + x^7 + x^3 + x^2 + 1
};

template <unsigned Bits>
struct BinaryField {
  using Element = typename FieldTraits<Bits>::storage;
  static constexpr unsigned degree = Bits;
  static constexpr std::uint64_t modulus = FieldTraits<Bits>::modulus;
  static constexpr std::uint64_t order = std::uint64_t{1} << Bits;

  static constexpr Element zero() { return 0; }
  static constexpr Element one() { return 1; }
  static constexpr Element add(Element a, Element b) { return static_cast<Element>(a ^ b); }

  static Element mul(Element a, Element b) { return static_cast<Element>(poly_mod(carryless_mul(a, b), modulus)); }

  static Element pow(Element a, std::uint64_t e) {
    Element result = one();
    while (e) {
      if (e & 1) result = mul(result, a);
      a = mul(a, a);
      e >>= 1;
    }
    return result;
  }

  /// a^(2^l - 2); zero maps to zero.
  static Element inverse(Element a) { return pow(a, order - 2); }

  /// x * a, one shift and a conditional reduction.
  static Element times_x(Element a) {
    const std::uint64_t shifted = std::uint64_t{a} << 1;
    return static_cast<Element>((shifted & order) ? shifted ^ modulus : shifted);
  }
};

/// Multiplication by a fixed scalar through per-byte lookup tables. Since
/// a -> y*a is GF(2)-linear, y*a is the XOR of the table entries of a's bytes.
template <typename Field>
class ScalarMultiplier {
 public:
  using Element = typename Field::Element;
  static constexpr std::size_t kBytes = sizeof(Element);

  explicit ScalarMultiplier(Element y) : scalar_(y) {
    // basis[i] = y * x^i
    std::array<Element, Field::degree> basis{};
    basis[0] = y;
    for (unsigned i = 1; i < Field::degree; ++i) basis[i] = Field::times_x(basis[i - 1]);
    for (std::size_t byte = 0; byte < kBytes; ++byte) {
      auto& t = tables_[byte];
      t[0] = 0;
      for (unsigned b = 1; b < 256; ++b) {
        const unsigned low = static_cast<unsigned>(__builtin_ctz(b));
        t[b] = static_cast<Element>(t[b & (b - 1)] ^ basis[byte * 8 + low]);
      }
    }
  }

  Element scalar() const { return scalar_; }

  Element operator()(Element a) const {
    Element out = tables_[0][a & 0xFF];
    if constexpr (kBytes > 1) out ^= tables_[1][(a >> 8) & 0xFF];
    if constexpr (kBytes > 2) {
      out ^= tables_[2][(a >> 16) & 0xFF];
      out ^= tables_[3][(a >> 24) & 0xFF];
    }
    return out;
  }

 private:
  Element scalar_;
  std::array<std::array<Element, 256>, kBytes> tables_;
};

using GF256 = BinaryField<8>;
using GF65536 = BinaryField<16>;
using GF2_32 = BinaryField<32>;

}  // namespace hyperpath
