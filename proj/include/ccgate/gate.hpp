#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace ccgate {

/// Operating mode of a conditioning gate.
enum class GateState : std::uint8_t { Yes, Or };

constexpr GateState flipped(GateState s) noexcept {
  return s == GateState::Yes ? GateState::Or : GateState::Yes;
}

std::string_view to_string(GateState s) noexcept;
std::optional<GateState> parse_gate_state(std::string_view text) noexcept;

/// A single classical-conditioning gate.
///
/// The gate remembers how many consecutive training pairs it has seen for
/// its current state. (1,1) while YES counts toward acquisition (YES -> OR),
/// (0,1) while OR counts toward extinction (OR -> YES). Any other input
/// resets both counters. When a counter reaches the unit training time the
/// state flips and both counters restart from zero.
struct Gate {
  GateState state = GateState::Yes;
  unsigned acq_streak = 0;
  unsigned ext_streak = 0;

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Combinational output: v for YES, v|w for OR.
constexpr bool gate_output(GateState state, bool v, bool w) noexcept {
  return state == GateState::Yes ? v : (v || w);
}

struct GateStepResult {
  bool y;
  Gate next;
};

/// Advances one time step. `y` is computed from the pre-step state.
/// Throws std::invalid_argument if s == 0.
GateStepResult gate_step(const Gate& gate, bool v, bool w, unsigned s);

}  // namespace ccgate
