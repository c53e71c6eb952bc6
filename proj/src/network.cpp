#include "ccgate/network.hpp"

#include <sstream>

namespace ccgate {

namespace {

constexpr int kMaxLayers = 24;

void check_layers(int m) {
  if (m < 1 || m > kMaxLayers) {
    throw std::invalid_argument("layer count must be in [1, " + std::to_string(kMaxLayers) +
                                "], got " + std::to_string(m));
  }
}

std::size_t layer_offset(int m, int layer) {
  return (std::size_t{1} << m) - (std::size_t{1} << (m - layer + 1));
}

}  // namespace

std::string to_string(const NodeId& node) {
  return "(" + std::to_string(node.layer) + "," + std::to_string(node.position) + ")";
}

std::size_t layer_width(int m, int layer) { return std::size_t{1} << (m - layer); }
std::size_t node_count(int m) { return (std::size_t{1} << m) - 1; }
std::size_t input_width(int m) { return std::size_t{1} << m; }

bool is_valid_node(int m, const NodeId& node) noexcept {
  if (node.layer < 1 || node.layer > m) return false;
  return node.position >= 1 && static_cast<std::size_t>(node.position) <= layer_width(m, node.layer);
}

std::size_t node_index(int m, const NodeId& node) {
  if (!is_valid_node(m, node)) {
    throw std::out_of_range("node " + to_string(node) + " does not exist in a network with " +
                            std::to_string(m) + " layers");
  }
  return layer_offset(m, node.layer) + static_cast<std::size_t>(node.position - 1);
}

NodeId node_at(int m, std::size_t index) {
  if (index >= node_count(m)) throw std::out_of_range("node index out of range");
  int layer = 1;
  while (index >= layer_offset(m, layer + 1)) ++layer;
  return {layer, static_cast<int>(index - layer_offset(m, layer)) + 1};
}

std::vector<NodeId> all_nodes(int m) {
  std::vector<NodeId> out;
  out.reserve(node_count(m));
  for (int i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= layer_width(m, i); ++j) out.push_back({i, static_cast<int>(j)});
  }
  return out;
}

InputVector::InputVector(std::initializer_list<int> bits) {
  bits_.reserve(bits.size());
  for (int b : bits) bits_.push_back(b != 0 ? 1 : 0);
}

InputVector::InputVector(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto& b : bits_) b = b != 0 ? 1 : 0;
}

InputVector InputVector::from_index(std::uint64_t value, std::size_t width) {
  InputVector u(width);
  for (std::size_t k = 0; k < width; ++k) u.bits_[k] = (value >> k) & 1U;
  return u;
}

InputBlocks input_blocks(int m, const NodeId& node) {
  node_index(m, node);
  const std::size_t size = std::size_t{1} << (node.layer - 1);
  const std::size_t first = 2 * static_cast<std::size_t>(node.position - 1) * size;
  return {{first, first + size}, {first + size, first + 2 * size}};
}

Network::Network(int m, unsigned s, GateState initial) : m_(m), s_(s) {
  check_layers(m);
  if (s == 0) throw std::invalid_argument("unit training time must be >= 1");
  gates_.assign(node_count(m), Gate{initial, 0, 0});
}

Network::Network(int m, unsigned s, const StateVector& initial) : Network(m, s) {
  if (initial.size() != gates_.size()) {
    throw DimensionError("state vector has " + std::to_string(initial.size()) +
                         " entries, expected " + std::to_string(gates_.size()));
  }
  for (std::size_t k = 0; k < gates_.size(); ++k) gates_[k].state = initial[k];
}

StateVector Network::state() const {
  StateVector x;
  x.reserve(gates_.size());
  for (const auto& g : gates_) x.push_back(g.state);
  return x;
}

void Network::check_input(const InputVector& u) const {
  if (u.size() != input_width(m_)) {
    throw DimensionError("input has " + std::to_string(u.size()) + " bits, expected " +
                         std::to_string(input_width(m_)));
  }
}

Signals Network::evaluate(const InputVector& u) const {
  check_input(u);
  Signals out;
  out.nodes.resize(gates_.size());

  for (std::size_t j = 0; j < layer_width(m_, 1); ++j) {
    auto& sig = out.nodes[j];
    sig.v = u[2 * j];
    sig.w = u[2 * j + 1];
    sig.y = gate_output(gates_[j].state, sig.v, sig.w);
  }
  for (int i = 2; i <= m_; ++i) {
    const std::size_t below = layer_offset(m_, i - 1);
    const std::size_t here = layer_offset(m_, i);
    for (std::size_t j = 0; j < layer_width(m_, i); ++j) {
      auto& sig = out.nodes[here + j];
      sig.v = out.nodes[below + 2 * j].y;
      sig.w = out.nodes[below + 2 * j + 1].y;
      sig.y = gate_output(gates_[here + j].state, sig.v, sig.w);
    }
  }
  out.y_m = out.nodes.back().y;
  return out;
}

StepTrace Network::step(const InputVector& u) {
  Signals sig = evaluate(u);

  StepTrace trace;
  trace.t = t_;
  trace.input = u;
  trace.y_m = sig.y_m;
  trace.nodes.reserve(gates_.size());
  for (std::size_t k = 0; k < gates_.size(); ++k) {
    const auto& n = sig.nodes[k];
    trace.nodes.push_back({n.v, n.w, n.y, gates_[k]});
  }
  for (std::size_t k = 0; k < gates_.size(); ++k) {
    gates_[k] = gate_step(gates_[k], sig.nodes[k].v, sig.nodes[k].w, s_).next;
  }
  ++t_;
  return trace;
}

std::vector<StepTrace> run(Network& net, const std::vector<InputVector>& inputs) {
  const std::size_t width = input_width(net.layers());
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    if (inputs[k].size() != width) {
      std::ostringstream msg;
      msg << "input " << k << " has " << inputs[k].size() << " bits, expected " << width;
      throw DimensionError(msg.str());
    }
  }
  std::vector<StepTrace> traces;
  traces.reserve(inputs.size());
  for (const auto& u : inputs) traces.push_back(net.step(u));
  return traces;
}

}  // namespace ccgate
