#include "hyperpath/binary_field.hpp"

namespace hyperpath {

std::uint64_t carryless_mul(std::uint32_t a, std::uint32_t b) {
  std::uint64_t acc = 0;
  std::uint64_t wide = a;
  while (b) {
    if (b & 1) acc ^= wide;
    wide <<= 1;
    b >>= 1;
  }
  return acc;
}

int poly_degree(std::uint64_t p) { return p == 0 ? -1 : 63 - __builtin_clzll(p); }

std::uint64_t poly_mod(std::uint64_t value, std::uint64_t modulus) {
  const int dm = poly_degree(modulus);
  for (int d = poly_degree(value); d >= dm; d = poly_degree(value)) value ^= modulus << (d - dm);
  return value;
}

bool is_irreducible(std::uint64_t p) {
  const int d = poly_degree(p);
  if (d < 1) return false;
  for (std::uint64_t q = 2; poly_degree(q) <= d / 2; ++q) {
    if (poly_mod(p, q) == 0) return false;
  }
  return true;
}

}  // namespace hyperpath
