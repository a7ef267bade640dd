#include "hyperpath/circuit.hpp"

#include <algorithm>
#include <ostream>
#include <unordered_map>

namespace hyperpath {

GateId Circuit::Builder::push(Gate g) {
  gates_.push_back(g);
  return static_cast<GateId>(gates_.size() - 1);
}

void Circuit::Builder::check_operand(GateId g) const {
  if (g >= gates_.size()) throw std::invalid_argument("operand " + std::to_string(g) + " is not an earlier gate");
}

GateId Circuit::Builder::zero() { return push({GateKind::zero, 0, 0, 0}); }

GateId Circuit::Builder::one() { return push({GateKind::one, 0, 0, 0}); }

GateId Circuit::Builder::input(VertexId v) {
  max_var_plus_one_ = std::max<std::size_t>(max_var_plus_one_, v + 1);
  return push({GateKind::input, v, 0, 0});
}

GateId Circuit::Builder::mul_by_input(GateId operand, VertexId v) {
  check_operand(operand);
  max_var_plus_one_ = std::max<std::size_t>(max_var_plus_one_, v + 1);
  const auto first = static_cast<std::uint32_t>(operands_.size());
  operands_.push_back(operand);
  return push({GateKind::mul_by_input, v, first, 1});
}

GateId Circuit::Builder::add(std::span<const GateId> operands) {
  if (operands.empty()) throw std::invalid_argument("add gate needs at least one operand");
  for (GateId o : operands) check_operand(o);
  const auto first = static_cast<std::uint32_t>(operands_.size());
  operands_.insert(operands_.end(), operands.begin(), operands.end());
  return push({GateKind::add, 0, first, static_cast<std::uint32_t>(operands.size())});
}

Circuit Circuit::Builder::build(GateId output, std::size_t degree, std::size_t num_vars) && {
  check_operand(output);
  if (num_vars < max_var_plus_one_) throw std::invalid_argument("num_vars smaller than largest variable used");
  Circuit c;
  c.gates_ = std::move(gates_);
  c.operands_ = std::move(operands_);
  c.output_ = output;
  c.degree_ = degree;
  c.num_vars_ = num_vars;
  return c;
}

std::size_t Circuit::count(GateKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(gates_.begin(), gates_.end(), [kind](const Gate& g) { return g.kind == kind; }));
}

namespace {

struct SeqHash {
  std::size_t operator()(const std::vector<VertexId>& s) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (VertexId v : s) h = (h ^ v) * 1099511628211ULL;
    return static_cast<std::size_t>(h);
  }
};

// Predecessor/successor lists between edges that chain into a tight walk:
// e0 -> e when the (r-1)-suffix of e0 equals the (r-1)-prefix of e.
struct ChainIndex {
  std::vector<std::vector<EdgeId>> preds;
  std::vector<std::vector<EdgeId>> succs;
};

ChainIndex chain_index(const Hypergraph& h) {
  const std::size_t m = h.num_edges();
  std::unordered_map<std::vector<VertexId>, std::vector<EdgeId>, SeqHash> by_suffix;
  for (EdgeId e = 0; e < m; ++e) {
    auto s = h.edge(e);
    by_suffix[std::vector<VertexId>(s.begin() + 1, s.end())].push_back(e);
  }
  ChainIndex idx{std::vector<std::vector<EdgeId>>(m), std::vector<std::vector<EdgeId>>(m)};
  for (EdgeId e = 0; e < m; ++e) {
    auto s = h.edge(e);
    auto it = by_suffix.find(std::vector<VertexId>(s.begin(), s.end() - 1));
    if (it == by_suffix.end()) continue;
    idx.preds[e] = it->second;
    for (EdgeId p : it->second) idx.succs[p].push_back(e);
  }
  return idx;
}

void check_inputs(const Hypergraph& h, std::size_t k) {
  if (!h.directed()) throw std::invalid_argument("circuit construction needs a directed hypergraph");
  if (k < h.uniformity()) {
    throw std::invalid_argument("k = " + std::to_string(k) + " < r = " + std::to_string(h.uniformity()));
  }
}

// Labels (e, t) for t in [r, k] that are both reachable from a base label and
// able to reach a terminal label. layer[t - r][e] != 0 means the label is kept.
using LabelMask = std::vector<std::vector<char>>;

LabelMask useful_labels(const ChainIndex& idx, std::size_t m, std::size_t layers, const std::vector<char>& start,
                        const std::vector<char>& terminal) {
  LabelMask live(layers, std::vector<char>(m, 0));
  live[0] = start;
  for (std::size_t t = 1; t < layers; ++t) {
    for (EdgeId e = 0; e < m; ++e) {
      live[t][e] = std::any_of(idx.preds[e].begin(), idx.preds[e].end(), [&](EdgeId p) { return live[t - 1][p]; });
    }
  }
  LabelMask keep(layers, std::vector<char>(m, 0));
  for (EdgeId e = 0; e < m; ++e) keep[layers - 1][e] = live[layers - 1][e] && terminal[e];
  for (std::size_t t = layers - 1; t-- > 0;) {
    for (EdgeId e = 0; e < m; ++e) {
      keep[t][e] = live[t][e] &&
                   std::any_of(idx.succs[e].begin(), idx.succs[e].end(), [&](EdgeId s) { return keep[t + 1][s]; });
    }
  }
  return keep;
}

GateId base_product(Circuit::Builder& b, std::span<const VertexId> edge) {
  GateId g = b.input(edge[0]);
  for (std::size_t i = 1; i < edge.size(); ++i) g = b.mul_by_input(g, edge[i]);
  return g;
}

// Emits the kept labels layer by layer and returns the gates of the terminal
// layer (kNone where the label was pruned).
constexpr GateId kNone = static_cast<GateId>(-1);

std::vector<GateId> emit_layers(Circuit::Builder& b, const Hypergraph& h, const ChainIndex& idx,
                                const LabelMask& keep) {
  const std::size_t m = h.num_edges();
  const std::size_t r = h.uniformity();
  std::vector<GateId> cur(m, kNone), next(m, kNone);
  for (EdgeId e = 0; e < m; ++e) {
    if (keep[0][e]) cur[e] = base_product(b, h.edge(e));
  }
  std::vector<GateId> ops;
  for (std::size_t t = 1; t < keep.size(); ++t) {
    std::fill(next.begin(), next.end(), kNone);
    for (EdgeId e = 0; e < m; ++e) {
      if (!keep[t][e]) continue;
      ops.clear();
      for (EdgeId p : idx.preds[e]) {
        if (cur[p] != kNone) ops.push_back(cur[p]);
      }
      const GateId sum = ops.size() == 1 ? ops[0] : b.add(ops);
      next[e] = b.mul_by_input(sum, h.edge(e)[r - 1]);
    }
    cur.swap(next);
  }
  return cur;
}

}  // namespace

Circuit build_path_circuit(const Hypergraph& h, std::size_t k) {
  check_inputs(h, k);
  const std::size_t m = h.num_edges();
  const std::size_t layers = k - h.uniformity() + 1;
  const ChainIndex idx = chain_index(h);
  const std::vector<char> all(m, 1);
  const LabelMask keep = useful_labels(idx, m, layers, all, all);

  Circuit::Builder b;
  const auto last = emit_layers(b, h, idx, keep);
  std::vector<GateId> terms;
  for (GateId g : last) {
    if (g != kNone) terms.push_back(g);
  }
  const GateId out = terms.empty() ? b.zero() : b.add(terms);
  return std::move(b).build(out, k, h.num_vertices());
}

Circuit build_cycle_circuit(const Hypergraph& h, std::size_t k) {
  check_inputs(h, k);
  const std::size_t m = h.num_edges();
  const std::size_t r = h.uniformity();
  const std::size_t layers = k - r + 1;
  const ChainIndex idx = chain_index(h);

  Circuit::Builder b;
  GateId acc = kNone;
  std::vector<VertexId> wrap(2 * (r - 1));
  std::vector<GateId> terms;
  for (EdgeId e0 = 0; e0 < m; ++e0) {
    std::vector<char> start(m, 0), terminal(m, 0);
    start[e0] = 1;
    const auto first = h.edge(e0);
    for (EdgeId e = 0; e < m; ++e) {
      const auto tail = h.edge(e);
      std::copy(tail.begin() + 1, tail.end(), wrap.begin());
      std::copy(first.begin(), first.end() - 1, wrap.begin() + (r - 1));
      bool ok = true;
      for (std::size_t i = 0; ok && i + 1 < r; ++i) ok = h.has_window(std::span(wrap).subspan(i, r));
      terminal[e] = ok;
    }
    const LabelMask keep = useful_labels(idx, m, layers, start, terminal);
    if (std::none_of(keep[0].begin(), keep[0].end(), [](char c) { return c != 0; })) continue;

    const auto last = emit_layers(b, h, idx, keep);
    terms.clear();
    if (acc != kNone) terms.push_back(acc);
    for (GateId g : last) {
      if (g != kNone) terms.push_back(g);
    }
    acc = b.add(terms);
  }
  const GateId out = acc == kNone ? b.zero() : acc;
  return std::move(b).build(out, k, h.num_vertices());
}

void write_circuit(std::ostream& out, const Circuit& c) {
  for (GateId g = 0; g < c.size(); ++g) {
    const Gate& gate = c.gate(g);
    out << g << ' ';
    switch (gate.kind) {
      case GateKind::zero:
        out << "zero";
        break;
      case GateKind::one:
        out << "one";
        break;
      case GateKind::input:
        out << "input x" << gate.var;
        break;
      case GateKind::mul_by_input:
        out << "mul " << c.operands(g)[0] << " x" << gate.var;
        break;
      case GateKind::add:
        out << "add";
        for (GateId o : c.operands(g)) out << ' ' << o;
        break;
    }
    out << '\n';
  }
  out << "output " << c.output() << '\n';
}

}  // namespace hyperpath
