#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ccgate/network.hpp"

namespace ccgate {

/// Hold `input` for `hold` steps to flip `node` out of state `from`.
struct FlipDirective {
  NodeId node;
  GateState from = GateState::Yes;
  InputVector input;
  unsigned hold = 1;

  friend bool operator==(const FlipDirective&, const FlipDirective&) = default;
};

/// Ordered flips that steer a network to a target state.
struct TrainingPlan {
  int m = 1;
  unsigned s = 1;
  std::vector<FlipDirective> directives;  // lexicographic node order

  std::size_t k_star() const noexcept { return directives.size(); }
  std::size_t total_steps() const noexcept { return directives.size() * s; }
  /// The concatenated input sequence, one entry per time step.
  std::vector<InputVector> input_sequence() const;

  friend bool operator==(const TrainingPlan&, const TrainingPlan&) = default;
};

/// Input that flips `node` (currently in `from`) while keeping every other
/// node of its layer and all upstream layers fixed.
///
/// The input is cut into 2^(m+1-p) equal blocks for a node in layer p. The
/// node's first-input block is all zeros when flipping out of OR and
/// (1,0,...,0) when flipping out of YES; its second-input block is
/// (1,0,...,0). Every other block is zero. Each block then drives a
/// subtree with one of the two state-preserving inputs, so the node sees
/// (0,1) or (1,1) and everything else in layer p sees (0,0).
InputVector flip_input(const NodeId& node, GateState from, int m);

/// Visits nodes in lexicographic order against a simulated copy of `net`
/// and records a flip for every node that still differs from `x_star`.
TrainingPlan plan(const Network& net, const StateVector& x_star);

/// Raised when replaying a plan does not flip a directive's node.
class TrainingDivergence : public std::runtime_error {
 public:
  TrainingDivergence(const std::string& what, std::size_t directive, std::vector<StepTrace> traces)
      : std::runtime_error(what), directive_(directive), traces_(std::move(traces)) {}

  std::size_t directive() const noexcept { return directive_; }
  const std::vector<StepTrace>& traces() const noexcept { return traces_; }

 private:
  std::size_t directive_;
  std::vector<StepTrace> traces_;
};

struct ExecutionResult {
  std::vector<StepTrace> traces;
  Network final;
};

/// Replays `p` on a copy of `net`. Each directive's node must be in `from`
/// when its block starts and in the opposite state when it ends, having
/// changed exactly once in between.
ExecutionResult execute(const Network& net, const TrainingPlan& p);

}  // namespace ccgate
