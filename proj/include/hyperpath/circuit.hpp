#pragma once

// Skew arithmetic circuits for the tight-walk polynomial.
//
// A label (e, t) stands for f(e, t): the sum over tight walks of length t whose
// last r vertices are the edge e, each walk contributing the product of its
// vertex variables. f(e, r) is the product of e's variables; f(e, t+1) is
// x_last(e) times the sum of f(e0, t) over edges e0 whose (r-1)-suffix equals
// e's (r-1)-prefix. The output sums f(e, k) over all edges.

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

#include "hyperpath/hypergraph.hpp"

namespace hyperpath {

using GateId = std::uint32_t;

enum class GateKind : std::uint8_t { zero, one, input, add, mul_by_input };

struct Gate {
  GateKind kind = GateKind::zero;
  VertexId var = 0;  // input and mul_by_input only
  std::uint32_t first_operand = 0;
  std::uint32_t num_operands = 0;
};

/// Immutable gate list in topological order. The only product form is
/// mul_by_input (operand times an input variable), so every circuit is skew.
class Circuit {
 public:
  class Builder {
   public:
    GateId zero();
    GateId one();
    GateId input(VertexId v);
    GateId mul_by_input(GateId operand, VertexId v);
    GateId add(std::span<const GateId> operands);
    GateId add(std::initializer_list<GateId> operands) { return add(std::span<const GateId>(operands)); }

    std::size_t size() const { return gates_.size(); }

    /// `degree` is the declared total degree of every output monomial.
    Circuit build(GateId output, std::size_t degree, std::size_t num_vars) &&;

   private:
    GateId push(Gate g);
    void check_operand(GateId g) const;

    std::vector<Gate> gates_;
    std::vector<GateId> operands_;
    std::size_t max_var_plus_one_ = 0;
  };

  std::size_t size() const { return gates_.size(); }
  const Gate& gate(GateId g) const { return gates_[g]; }
  std::span<const GateId> operands(GateId g) const {
    const Gate& x = gates_[g];
    return {operands_.data() + x.first_operand, x.num_operands};
  }
  GateId output() const { return output_; }
  std::size_t degree() const { return degree_; }
  std::size_t num_vars() const { return num_vars_; }

  /// Number of gates of the given kind.
  std::size_t count(GateKind kind) const;

 private:
  std::vector<Gate> gates_;
  std::vector<GateId> operands_;
  GateId output_ = 0;
  std::size_t degree_ = 0;
  std::size_t num_vars_ = 0;
};

/// Gate count is at most 2*m*k + 1 (m = number of directed edges).
Circuit build_path_circuit(const Hypergraph& h, std::size_t k);

/// Labels carry the start edge. The output sums f(e0, e, k) over pairs whose
/// r-1 wrap-around windows (last r-1 vertices of e, then the first r-1 of e0)
/// are all edges, so each tight k-cycle is counted once per rotation. Gate
/// count is at most 2*m^2*k + 1.
Circuit build_cycle_circuit(const Hypergraph& h, std::size_t k);

/// One gate per line, `id kind operands`, topological order.
void write_circuit(std::ostream& out, const Circuit& c);

template <typename R>
concept CommutativeRing = requires(const R& ring, const typename R::value_type& a) {
  { ring.zero() } -> std::convertible_to<typename R::value_type>;
  { ring.one() } -> std::convertible_to<typename R::value_type>;
  { ring.add(a, a) } -> std::convertible_to<typename R::value_type>;
  { ring.mul(a, a) } -> std::convertible_to<typename R::value_type>;
};

/// Ordinary arithmetic on a built-in numeric type.
template <typename T>
struct NumericRing {
  using value_type = T;
  T zero() const { return T(0); }
  T one() const { return T(1); }
  T add(const T& a, const T& b) const { return a + b; }
  T mul(const T& a, const T& b) const { return a * b; }
};

/// Value of the output gate with variable v set to assignment[v]. Single pass
/// in topological order. Throws std::out_of_range on a missing variable.
template <CommutativeRing Ring>
typename Ring::value_type evaluate_circuit(const Circuit& c, std::span<const typename Ring::value_type> assignment,
                                           const Ring& ring = {}) {
  using T = typename Ring::value_type;
  std::vector<T> value(c.size(), ring.zero());
  auto var = [&](VertexId v) -> const T& {
    if (v >= assignment.size()) throw std::out_of_range("no assignment for variable x" + std::to_string(v));
    return assignment[v];
  };
  for (GateId g = 0; g < c.size(); ++g) {
    const Gate& gate = c.gate(g);
    switch (gate.kind) {
      case GateKind::zero:
        value[g] = ring.zero();
        break;
      case GateKind::one:
        value[g] = ring.one();
        break;
      case GateKind::input:
        value[g] = var(gate.var);
        break;
      case GateKind::mul_by_input:
        value[g] = ring.mul(value[c.operands(g)[0]], var(gate.var));
        break;
      case GateKind::add: {
        T sum = ring.zero();
        for (GateId o : c.operands(g)) sum = ring.add(sum, value[o]);
        value[g] = std::move(sum);
        break;
      }
    }
  }
  return value[c.output()];
}

}  // namespace hyperpath
