#include "ccgate/training.hpp"

namespace ccgate {

std::vector<InputVector> TrainingPlan::input_sequence() const {
  std::vector<InputVector> seq;
  seq.reserve(total_steps());
  for (const auto& d : directives) {
    for (unsigned k = 0; k < d.hold; ++k) seq.push_back(d.input);
  }
  return seq;
}

InputVector flip_input(const NodeId& node, GateState from, int m) {
  const auto blocks = input_blocks(m, node);
  InputVector u(input_width(m));
  if (from == GateState::Yes) u.set(blocks.v_block.begin, true);
  u.set(blocks.w_block.begin, true);
  return u;
}

TrainingPlan plan(const Network& net, const StateVector& x_star) {
  if (x_star.size() != net.size()) {
    throw DimensionError("target state has " + std::to_string(x_star.size()) +
                         " entries, network has " + std::to_string(net.size()));
  }
  TrainingPlan p{net.layers(), net.unit_time(), {}};
  Network sim = net;
  for (const NodeId& node : all_nodes(net.layers())) {
    const GateState current = sim.state_of(node);
    if (current == x_star[node_index(net.layers(), node)]) continue;
    FlipDirective d{node, current, flip_input(node, current, net.layers()), net.unit_time()};
    for (unsigned k = 0; k < d.hold; ++k) sim.step(d.input);
    p.directives.push_back(std::move(d));
  }
  return p;
}

ExecutionResult execute(const Network& net, const TrainingPlan& p) {
  if (p.m != net.layers() || p.s != net.unit_time()) {
    throw std::invalid_argument("plan was built for a different network shape");
  }
  ExecutionResult r{{}, net};
  r.traces.reserve(p.total_steps());

  for (std::size_t k = 0; k < p.directives.size(); ++k) {
    const auto& d = p.directives[k];
    const std::size_t idx = node_index(p.m, d.node);
    if (r.final.gates()[idx].state != d.from) {
      throw TrainingDivergence("node " + to_string(d.node) + " is not in state " +
                                   std::string(to_string(d.from)) + " at the start of block " +
                                   std::to_string(k),
                               k, std::move(r.traces));
    }
    int changes = 0;
    for (unsigned step = 0; step < d.hold; ++step) {
      const GateState before = r.final.gates()[idx].state;
      r.traces.push_back(r.final.step(d.input));
      if (r.final.gates()[idx].state != before) ++changes;
    }
    if (changes != 1 || r.final.gates()[idx].state != flipped(d.from)) {
      throw TrainingDivergence("node " + to_string(d.node) + " did not flip during block " +
                                   std::to_string(k),
                               k, std::move(r.traces));
    }
  }
  return r;
}

}  // namespace ccgate
