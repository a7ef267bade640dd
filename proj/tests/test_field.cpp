#include <doctest.h>

#include <random>

#include "hyperpath/binary_field.hpp"

using namespace hyperpath;

namespace {

// Schoolbook GF(2)[x] product followed by long division, written
// independently of the library's helpers.
std::uint64_t reference_mul(std::uint64_t a, std::uint64_t b, std::uint64_t modulus, unsigned degree) {
  std::uint64_t prod = 0;
  for (unsigned i = 0; i < 32; ++i) {
    if (b >> i & 1) prod ^= a << i;
  }
  for (int bit = 63; bit >= static_cast<int>(degree); --bit) {
    if (prod >> bit & 1) prod ^= modulus << (bit - static_cast<int>(degree));
  }
  return prod;
}

template <typename Field>
void check_against_reference(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 5000; ++i) {
    const auto a = static_cast<typename Field::Element>(rng());
    const auto b = static_cast<typename Field::Element>(rng());
    CHECK(Field::mul(a, b) == reference_mul(a, b, Field::modulus, Field::degree));
    CHECK(Field::mul(a, b) == Field::mul(b, a));
    CHECK(Field::add(a, b) == Field::add(b, a));
    CHECK(Field::add(a, a) == 0);
    CHECK(Field::add(a, 0) == a);
    CHECK(Field::mul(a, 1) == a);
    CHECK(Field::mul(a, 0) == 0);
    const ScalarMultiplier<Field> m(a);
    CHECK(m(b) == Field::mul(a, b));
    if (a != 0) CHECK(Field::mul(a, Field::inverse(a)) == 1);
  }
}

}  // namespace

TEST_CASE("moduli are irreducible") {
  CHECK(is_irreducible(GF256::modulus));
  CHECK(is_irreducible(GF65536::modulus));
  CHECK(is_irreducible(GF2_32::modulus));
  CHECK(poly_degree(GF256::modulus) == 8);
  CHECK(poly_degree(GF65536::modulus) == 16);
  CHECK(poly_degree(GF2_32::modulus) == 32);
}

TEST_CASE("irreducibility test on known polynomials") {
  CHECK(is_irreducible(0b111));         // x^2 + x + 1
  CHECK(is_irreducible(0b1011));        // x^3 + x + 1
  CHECK_FALSE(is_irreducible(0b101));   // (x + 1)^2
  CHECK_FALSE(is_irreducible(0b1111));  // (x + 1)(x^2 + x + 1)
  CHECK_FALSE(is_irreducible(0x100));   // x^8
}

TEST_CASE("every nonzero element of GF(2^8) satisfies a^255 = 1") {
  for (unsigned a = 1; a < 256; ++a) CHECK(GF256::pow(static_cast<std::uint8_t>(a), 255) == 1);
}

TEST_CASE("GF(2^8) multiplicative group is cyclic of order 255 and x^8 reduces") {
  // 0x03 = x + 1 generates the group for the AES modulus
  std::uint8_t g = 1;
  for (int i = 1; i < 255; ++i) {
    g = GF256::mul(g, 3);
    CHECK(g != 1);
  }
  CHECK(GF256::mul(g, 3) == 1);
  CHECK(GF256::mul(0x80, 2) == 0x1B);
}

TEST_CASE("field operations agree with an independent reference") {
  check_against_reference<GF256>(1);
  check_against_reference<GF65536>(2);
  check_against_reference<GF2_32>(3);
}

TEST_CASE("multiplication distributes over addition") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 2000; ++i) {
    const auto a = static_cast<std::uint16_t>(rng());
    const auto b = static_cast<std::uint16_t>(rng());
    const auto c = static_cast<std::uint16_t>(rng());
    CHECK(GF65536::mul(a, GF65536::add(b, c)) == GF65536::add(GF65536::mul(a, b), GF65536::mul(a, c)));
    CHECK(GF65536::mul(a, GF65536::mul(b, c)) == GF65536::mul(GF65536::mul(a, b), c));
  }
}
