#pragma once

#include <compare>
#include <string>
#include <variant>
#include <vector>

#include "ccgate/network.hpp"

namespace ccgate {

/// The disjunction realized at the root: OR of v_{1j} for j in j1 and
/// w_{1j} for j in j2. Indices are 1-based leaf positions, kept sorted
/// and duplicate-free.
struct TargetFunction {
  std::vector<int> j1;
  std::vector<int> j2;

  TargetFunction() = default;
  TargetFunction(std::vector<int> v_indices, std::vector<int> w_indices);

  friend auto operator<=>(const TargetFunction&, const TargetFunction&) = default;
};

std::string to_string(const TargetFunction& f);

/// Throws std::out_of_range unless every index lies in [1, 2^(m-1)].
void check_target(const TargetFunction& f, int m);

/// Structural support of state `x` (recursion over the tree).
TargetFunction support(const StateVector& x, int m);

enum class TargetValue : std::uint8_t { Yes, Or, DontCare };

/// Partial state: nodes whose state cannot reach the output are DontCare.
using TargetState = std::vector<TargetValue>;

struct Infeasible {
  NodeId witness;      // root of the first subtree that cannot be realized
  std::string reason;
};

using SynthesisResult = std::variant<TargetState, Infeasible>;

/// Builds a partial state whose completions all realize `f`, or explains
/// why no state does.
SynthesisResult synthesize_target(const TargetFunction& f, int m);

/// Fills DontCare positions from `current`.
StateVector resolve(const TargetState& target, const StateVector& current);

}  // namespace ccgate
