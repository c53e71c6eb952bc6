#include "ccgate/gate.hpp"

#include <stdexcept>

namespace ccgate {

std::string_view to_string(GateState s) noexcept {
  return s == GateState::Yes ? "YES" : "OR";
}

std::optional<GateState> parse_gate_state(std::string_view text) noexcept {
  if (text == "YES") return GateState::Yes;
  if (text == "OR") return GateState::Or;
  return std::nullopt;
}

GateStepResult gate_step(const Gate& gate, bool v, bool w, unsigned s) {
  if (s == 0) throw std::invalid_argument("unit training time must be >= 1");

  GateStepResult r{gate_output(gate.state, v, w), gate};
  Gate& g = r.next;

  const bool acquiring = g.state == GateState::Yes && v && w;
  const bool extinguishing = g.state == GateState::Or && !v && w;

  if (acquiring) {
    g.ext_streak = 0;
    if (++g.acq_streak == s) {
      g.state = GateState::Or;
      g.acq_streak = 0;
    }
  } else if (extinguishing) {
    g.acq_streak = 0;
    if (++g.ext_streak == s) {
      g.state = GateState::Yes;
      g.ext_streak = 0;
    }
  } else {
    g.acq_streak = 0;
    g.ext_streak = 0;
  }
  return r;
}

}  // namespace ccgate
