#include "ccgate/analysis.hpp"

#include <algorithm>
#include <sstream>

namespace ccgate {

namespace {

void normalize(std::vector<int>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  os << ']';
  return os.str();
}

// Input positions (0-based over the 2^m bits) on which a subtree's output
// depends. Ranges are contiguous so a sorted vector is enough.
std::vector<std::size_t> node_support(const StateVector& x, int m, const NodeId& node) {
  const GateState state = x[node_index(m, node)];
  if (node.layer == 1) {
    const std::size_t v = 2 * static_cast<std::size_t>(node.position - 1);
    if (state == GateState::Yes) return {v};
    return {v, v + 1};
  }
  auto left = node_support(x, m, {node.layer - 1, 2 * node.position - 1});
  if (state == GateState::Yes) return left;
  auto right = node_support(x, m, {node.layer - 1, 2 * node.position});
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

class Synthesizer {
 public:
  Synthesizer(int m, std::vector<bool> demanded)
      : m_(m), demanded_(std::move(demanded)), target_(node_count(m), TargetValue::DontCare) {}

  SynthesisResult run() {
    if (!assign({m_, 1})) return failure_;
    return std::move(target_);
  }

 private:
  bool any_demanded(const IndexRange& r) const {
    for (std::size_t k = r.begin; k < r.end; ++k) {
      if (demanded_[k]) return true;
    }
    return false;
  }

  bool assign(const NodeId& node) {
    const auto blocks = input_blocks(m_, node);
    // Every active subtree passes its leftmost first input to the output.
    if (!demanded_[blocks.v_block.begin]) {
      failure_.witness = node;
      failure_.reason = "subtree " + to_string(node) + " always depends on input v" +
                        std::to_string(blocks.v_block.begin / 2 + 1) +
                        ", which the target does not contain";
      return false;
    }
    const std::size_t idx = node_index(m_, node);
    const bool right_needed = any_demanded(blocks.w_block);
    target_[idx] = right_needed ? TargetValue::Or : TargetValue::Yes;
    if (node.layer == 1) return true;

    if (!assign({node.layer - 1, 2 * node.position - 1})) return false;
    return !right_needed || assign({node.layer - 1, 2 * node.position});
  }

  int m_;
  std::vector<bool> demanded_;
  TargetState target_;
  Infeasible failure_;
};

}  // namespace

TargetFunction::TargetFunction(std::vector<int> v_indices, std::vector<int> w_indices)
    : j1(std::move(v_indices)), j2(std::move(w_indices)) {
  normalize(j1);
  normalize(j2);
}

std::string to_string(const TargetFunction& f) { return "J1=" + join(f.j1) + " J2=" + join(f.j2); }

void check_target(const TargetFunction& f, int m) {
  const int leaves = static_cast<int>(layer_width(m, 1));
  for (const auto* set : {&f.j1, &f.j2}) {
    for (int j : *set) {
      if (j < 1 || j > leaves) {
        throw std::out_of_range("leaf index " + std::to_string(j) + " outside [1, " +
                                std::to_string(leaves) + "]");
      }
    }
  }
}

TargetFunction support(const StateVector& x, int m) {
  if (x.size() != node_count(m)) {
    throw DimensionError("state vector has " + std::to_string(x.size()) + " entries, expected " +
                         std::to_string(node_count(m)));
  }
  TargetFunction f;
  for (std::size_t pos : node_support(x, m, {m, 1})) {
    const int leaf = static_cast<int>(pos / 2) + 1;
    (pos % 2 == 0 ? f.j1 : f.j2).push_back(leaf);
  }
  return f;
}

SynthesisResult synthesize_target(const TargetFunction& f, int m) {
  check_target(f, m);
  std::vector<bool> demanded(input_width(m), false);
  for (int j : f.j1) demanded[2 * static_cast<std::size_t>(j - 1)] = true;
  for (int j : f.j2) demanded[2 * static_cast<std::size_t>(j - 1) + 1] = true;
  return Synthesizer(m, std::move(demanded)).run();
}

StateVector resolve(const TargetState& target, const StateVector& current) {
  if (target.size() != current.size()) {
    throw DimensionError("target has " + std::to_string(target.size()) + " entries, state has " +
                         std::to_string(current.size()));
  }
  StateVector out = current;
  for (std::size_t k = 0; k < target.size(); ++k) {
    if (target[k] == TargetValue::Yes) out[k] = GateState::Yes;
    if (target[k] == TargetValue::Or) out[k] = GateState::Or;
  }
  return out;
}

}  // namespace ccgate
