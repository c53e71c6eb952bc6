#include "ccgate/oracle.hpp"

#include <string>

namespace ccgate::oracle {

namespace {

constexpr std::pair<bool, bool> kAcquire{true, true};
constexpr std::pair<bool, bool> kExtinguish{false, true};

// Index of node (layer, pos) when the tree is flattened layer by layer.
std::size_t flat_index(int m, int layer, int pos) {
  std::size_t idx = 0;
  for (int i = 1; i < layer; ++i) idx += std::size_t{1} << (m - i);
  return idx + static_cast<std::size_t>(pos - 1);
}

bool eval_node(const StateVector& x, int m, int layer, int pos, std::uint64_t input) {
  bool v = false;
  bool w = false;
  if (layer == 1) {
    v = (input >> (2 * (pos - 1))) & 1U;
    w = (input >> (2 * (pos - 1) + 1)) & 1U;
  } else {
    v = eval_node(x, m, layer - 1, 2 * pos - 1, input);
    w = eval_node(x, m, layer - 1, 2 * pos, input);
  }
  if (x[flat_index(m, layer, pos)] == GateState::Or) return v || w;
  return v;
}

void check_table_size(int m) {
  if (m < 1 || m > kMaxTableLayers) {
    throw SizeError("truth tables are limited to 1..4 layers, got " + std::to_string(m));
  }
}

}  // namespace

WindowedGate make_windowed(GateState initial) {
  WindowedGate g;
  g.state = initial;
  return g;
}

WindowedStepResult windowed_gate_step(const WindowedGate& gate, bool v, bool w, unsigned s) {
  if (s == 0) throw std::invalid_argument("unit training time must be >= 1");
  WindowedStepResult r{gate.state == GateState::Or ? (v || w) : v, gate};
  WindowedGate& g = r.next;

  g.inputs.emplace_back(v, w);
  g.states.push_back(gate.state);
  while (g.inputs.size() > s) g.inputs.pop_front();
  while (g.states.size() > s) g.states.pop_front();

  if (g.inputs.size() == s) {
    const GateState oldest = g.states.front();
    bool all_acquire = true;
    bool all_extinguish = true;
    for (const auto& pair : g.inputs) {
      all_acquire = all_acquire && pair == kAcquire;
      all_extinguish = all_extinguish && pair == kExtinguish;
    }
    if (oldest == GateState::Yes && all_acquire) {
      g.state = GateState::Or;
    } else if (oldest == GateState::Or && all_extinguish) {
      g.state = GateState::Yes;
    }
  }
  return r;
}

TruthTable truth_table(const Network& net) { return truth_table(net.state(), net.layers()); }

TruthTable truth_table(const StateVector& x, int m) {
  check_table_size(m);
  if (x.size() != (std::size_t{1} << m) - 1) throw DimensionError("state size mismatch");
  TruthTable t;
  t.m = m;
  const std::uint64_t rows = std::uint64_t{1} << (std::uint64_t{1} << m);
  t.outputs.resize(rows);
  for (std::uint64_t u = 0; u < rows; ++u) t.outputs[u] = eval_node(x, m, m, 1, u) ? 1 : 0;
  return t;
}

bool is_monotone(const TruthTable& table) {
  const std::size_t width = std::size_t{1} << table.m;
  for (std::uint64_t u = 0; u < table.outputs.size(); ++u) {
    for (std::size_t k = 0; k < width; ++k) {
      if (table.outputs[u] > table.outputs[u | (std::uint64_t{1} << k)]) return false;
    }
  }
  return true;
}

std::optional<TargetFunction> table_support(const TruthTable& table) {
  const std::size_t width = std::size_t{1} << table.m;
  std::uint64_t mask = 0;
  std::vector<int> j1;
  std::vector<int> j2;
  for (std::size_t k = 0; k < width; ++k) {
    if (!table[std::uint64_t{1} << k]) continue;
    mask |= std::uint64_t{1} << k;
    (k % 2 == 0 ? j1 : j2).push_back(static_cast<int>(k / 2) + 1);
  }
  for (std::uint64_t u = 0; u < table.outputs.size(); ++u) {
    if (table[u] != ((u & mask) != 0)) return std::nullopt;
  }
  return TargetFunction(std::move(j1), std::move(j2));
}

TruthTable disjunction_table(const TargetFunction& f, int m) {
  check_table_size(m);
  std::uint64_t mask = 0;
  for (int j : f.j1) mask |= std::uint64_t{1} << (2 * (j - 1));
  for (int j : f.j2) mask |= std::uint64_t{1} << (2 * (j - 1) + 1);
  TruthTable t;
  t.m = m;
  t.outputs.resize(std::uint64_t{1} << (std::uint64_t{1} << m));
  for (std::uint64_t u = 0; u < t.outputs.size(); ++u) t.outputs[u] = (u & mask) != 0;
  return t;
}

std::uint64_t state_count(int m) { return std::uint64_t{1} << ((std::uint64_t{1} << m) - 1); }

StateVector state_from_code(std::uint64_t code, int m) {
  StateVector x((std::size_t{1} << m) - 1);
  for (std::size_t k = 0; k < x.size(); ++k) {
    x[k] = ((code >> k) & 1U) ? GateState::Or : GateState::Yes;
  }
  return x;
}

FeasibilityAtlas enumerate_feasible(int m, bool allow_m4) {
  if (m < 1 || m > 4 || (m == 4 && !allow_m4)) {
    throw SizeError("feasibility enumeration is limited to 1..3 layers (4 with opt-in), got " +
                    std::to_string(m));
  }
  FeasibilityAtlas atlas;
  for (std::uint64_t code = 0; code < state_count(m); ++code) {
    StateVector x = state_from_code(code, m);
    auto f = table_support(truth_table(x, m));
    if (!f) throw std::logic_error("state realizes a function that is not a disjunction");
    atlas[*f].push_back(std::move(x));
  }
  return atlas;
}

}  // namespace ccgate::oracle
