#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccgate/gate.hpp"

namespace ccgate {

/// Raised when an input vector or state vector has the wrong length.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Node (layer, position), both 1-based. Layer 1 reads the external input,
/// layer m holds the root. Ordering is lexicographic (layer-major).
struct NodeId {
  int layer = 1;
  int position = 1;

  friend auto operator<=>(const NodeId&, const NodeId&) = default;
};

std::string to_string(const NodeId& node);

/// Number of gates in layer `layer` of a network with m layers: 2^(m-layer).
std::size_t layer_width(int m, int layer);
/// Total gate count 2^m - 1.
std::size_t node_count(int m);
/// Length of the external input vector, 2^m.
std::size_t input_width(int m);

bool is_valid_node(int m, const NodeId& node) noexcept;
/// Position of `node` in lexicographic order. Throws std::out_of_range.
std::size_t node_index(int m, const NodeId& node);
NodeId node_at(int m, std::size_t index);
/// All nodes of a network with m layers, in lexicographic order.
std::vector<NodeId> all_nodes(int m);

/// One external stimulus, laid out (v11, w11, v12, w12, ...).
class InputVector {
 public:
  InputVector() = default;
  explicit InputVector(std::size_t width) : bits_(width, 0) {}
  InputVector(std::initializer_list<int> bits);
  explicit InputVector(std::vector<std::uint8_t> bits);

  /// Bit k of `value` becomes position k (0-based).
  static InputVector from_index(std::uint64_t value, std::size_t width);

  std::size_t size() const noexcept { return bits_.size(); }
  bool operator[](std::size_t k) const { return bits_[k] != 0; }
  void set(std::size_t k, bool b) { bits_.at(k) = b ? 1 : 0; }
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

  friend bool operator==(const InputVector&, const InputVector&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Full network state in lexicographic node order.
using StateVector = std::vector<GateState>;

struct NodeSignal {
  bool v = false;
  bool w = false;
  bool y = false;
};

struct Signals {
  std::vector<NodeSignal> nodes;  // lexicographic order
  bool y_m = false;
};

struct NodeRecord {
  bool v = false;
  bool w = false;
  bool y = false;
  Gate gate;  // pre-step gate
};

/// What happened during one global step.
struct StepTrace {
  std::uint64_t t = 0;
  InputVector input;
  std::vector<NodeRecord> nodes;  // lexicographic order
  bool y_m = false;
};

/// Half-open range of 0-based input positions.
struct IndexRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const noexcept { return end - begin; }
  bool contains(std::size_t k) const noexcept { return k >= begin && k < end; }
  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

struct InputBlocks {
  IndexRange v_block;
  IndexRange w_block;
};

/// Input positions that can influence v and w of `node`.
InputBlocks input_blocks(int m, const NodeId& node);

/// Binary tree of conditioning gates with synchronous update.
class Network {
 public:
  /// All gates start in `initial` with fresh counters.
  Network(int m, unsigned s, GateState initial = GateState::Yes);
  Network(int m, unsigned s, const StateVector& initial);

  int layers() const noexcept { return m_; }
  unsigned unit_time() const noexcept { return s_; }
  std::uint64_t time() const noexcept { return t_; }
  std::size_t size() const noexcept { return gates_.size(); }

  const Gate& gate(const NodeId& node) const { return gates_[node_index(m_, node)]; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  StateVector state() const;
  GateState state_of(const NodeId& node) const { return gate(node).state; }

  /// Combinational settle of every node for input `u`. No state change.
  Signals evaluate(const InputVector& u) const;
  bool output(const InputVector& u) const { return evaluate(u).y_m; }

  /// One synchronous step: settle from the pre-step state, then advance
  /// every gate simultaneously.
  StepTrace step(const InputVector& u);

  friend bool operator==(const Network&, const Network&) = default;

 private:
  void check_input(const InputVector& u) const;

  int m_;
  unsigned s_;
  std::uint64_t t_ = 0;
  std::vector<Gate> gates_;
};

/// Folds step over `inputs`. On a bad input, throws DimensionError naming
/// the offending index; `net` is left untouched in that case.
std::vector<StepTrace> run(Network& net, const std::vector<InputVector>& inputs);

}  // namespace ccgate
