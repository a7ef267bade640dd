#pragma once

// Sparse multivariate polynomials with integer coefficients, used to expand
// circuits symbolically in tests.

#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

namespace hyperpath::testing {

using Monomial = std::vector<std::uint8_t>;  // exponent per variable
using Polynomial = std::map<Monomial, std::int64_t>;

struct PolyRing {
  using value_type = Polynomial;
  std::size_t num_vars = 0;

  Polynomial zero() const { return {}; }
  Polynomial one() const { return {{Monomial(num_vars, 0), 1}}; }
  Polynomial var(std::size_t i) const {
    Monomial m(num_vars, 0);
    m[i] = 1;
    return {{m, 1}};
  }
  Polynomial add(const Polynomial& a, const Polynomial& b) const {
    Polynomial out = a;
    for (const auto& [m, c] : b) {
      if ((out[m] += c) == 0) out.erase(m);
    }
    return out;
  }
  Polynomial mul(const Polynomial& a, const Polynomial& b) const {
    Polynomial out;
    for (const auto& [ma, ca] : a) {
      for (const auto& [mb, cb] : b) {
        Monomial m(num_vars);
        for (std::size_t i = 0; i < num_vars; ++i) m[i] = static_cast<std::uint8_t>(ma[i] + mb[i]);
        if ((out[m] += ca * cb) == 0) out.erase(m);
      }
    }
    return out;
  }
};

inline std::size_t degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), std::size_t{0}); }

inline bool is_multilinear(const Monomial& m) {
  for (auto e : m) {
    if (e > 1) return false;
  }
  return true;
}

inline bool has_multilinear_term(const Polynomial& p) {
  for (const auto& [m, c] : p) {
    if (c != 0 && is_multilinear(m)) return true;
  }
  return false;
}

}  // namespace hyperpath::testing
