#pragma once

// Brute-force reference implementations. Nothing here calls into the
// network's evaluation, support extraction or synthesis code, so agreement
// between the two sides is evidence rather than a tautology.

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ccgate/analysis.hpp"
#include "ccgate/gate.hpp"
#include "ccgate/network.hpp"

namespace ccgate::oracle {

/// Refusal to enumerate beyond the supported size.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Gate with an explicit history window: the last s input pairs and the
/// last s states x(t-s+1), ..., x(t).
struct WindowedGate {
  GateState state = GateState::Yes;
  std::deque<std::pair<bool, bool>> inputs;
  std::deque<GateState> states;
};

WindowedGate make_windowed(GateState initial);

struct WindowedStepResult {
  bool y;
  WindowedGate next;
};

/// Literal transcription of the conditioning rule: the state flips at t+1
/// iff the s most recent pairs (t-s+1..t) are all the qualifying pair and
/// x(t-s+1) is the matching state. No flip is possible before s inputs
/// have been seen.
WindowedStepResult windowed_gate_step(const WindowedGate& gate, bool v, bool w, unsigned s);

struct TruthTable {
  int m = 1;
  std::vector<std::uint8_t> outputs;  // indexed by input value, bit k = position k

  bool operator[](std::uint64_t index) const { return outputs[index] != 0; }
};

constexpr int kMaxTableLayers = 4;

/// Output of the frozen state for every input. Throws SizeError for m > 4.
TruthTable truth_table(const Network& net);
TruthTable truth_table(const StateVector& x, int m);

bool is_monotone(const TruthTable& table);

/// Reads the support off a table: position k is in it iff the unit input
/// e_k yields 1. Returns nullopt if the table is not the OR over that set.
std::optional<TargetFunction> table_support(const TruthTable& table);

/// Table of OR over the positions named by `f`.
TruthTable disjunction_table(const TargetFunction& f, int m);

/// State number `code` of a network with m layers: bit k set means node k
/// (lexicographic) is OR.
StateVector state_from_code(std::uint64_t code, int m);
std::uint64_t state_count(int m);

using FeasibilityAtlas = std::map<TargetFunction, std::vector<StateVector>>;

/// Groups every state by the support of its truth table. m <= 3 always;
/// m == 4 only with `allow_m4` (2^15 states x 2^16 inputs).
FeasibilityAtlas enumerate_feasible(int m, bool allow_m4 = false);

}  // namespace ccgate::oracle
