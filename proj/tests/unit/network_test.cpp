#include <gtest/gtest.h>

#include <random>

#include "ccgate/analysis.hpp"
#include "ccgate/network.hpp"
#include "ccgate/oracle.hpp"
#include "ccgate/training.hpp"

using namespace ccgate;

namespace {

constexpr auto Y = GateState::Yes;
constexpr auto O = GateState::Or;

const StateVector kFig3{Y, Y, O, Y, O, O, Y};

std::uint64_t support_mask(const TargetFunction& f) {
  std::uint64_t mask = 0;
  for (int j : f.j1) mask |= std::uint64_t{1} << (2 * (j - 1));
  for (int j : f.j2) mask |= std::uint64_t{1} << (2 * (j - 1) + 1);
  return mask;
}

}  // namespace

TEST(NodeIndexing, LexicographicLayout) {
  EXPECT_EQ(node_count(3), 7u);
  EXPECT_EQ(input_width(3), 8u);
  EXPECT_EQ(node_index(3, {1, 1}), 0u);
  EXPECT_EQ(node_index(3, {1, 4}), 3u);
  EXPECT_EQ(node_index(3, {2, 1}), 4u);
  EXPECT_EQ(node_index(3, {3, 1}), 6u);
  for (int m = 1; m <= 5; ++m) {
    const auto nodes = all_nodes(m);
    ASSERT_EQ(nodes.size(), node_count(m));
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      EXPECT_EQ(node_index(m, nodes[k]), k);
      EXPECT_EQ(node_at(m, k), nodes[k]);
      if (k) EXPECT_LT(nodes[k - 1], nodes[k]);
    }
  }
  EXPECT_THROW(node_index(3, {2, 3}), std::out_of_range);
  EXPECT_THROW(node_index(3, {4, 1}), std::out_of_range);
  EXPECT_THROW(node_index(3, {0, 1}), std::out_of_range);
}

TEST(Network, RejectsBadShapes) {
  EXPECT_THROW(Network(0, 1), std::invalid_argument);
  EXPECT_THROW(Network(3, 0), std::invalid_argument);
  EXPECT_THROW(Network(3, 1, StateVector(6, Y)), DimensionError);
  Network net(3, 1);
  EXPECT_THROW(net.evaluate(InputVector(7)), DimensionError);
  EXPECT_THROW(net.step(InputVector(9)), DimensionError);
}

TEST(Evaluate, Fig3StateComputesV11OrV12) {
  const Network net(3, 1, kFig3);
  for (std::uint64_t u = 0; u < 256; ++u) {
    const auto in = InputVector::from_index(u, 8);
    EXPECT_EQ(net.output(in), in[0] || in[2]) << u;
  }
}

TEST(Evaluate, AllYesPassesV11) {
  for (int m = 1; m <= 5; ++m) {
    const Network net(m, 1);
    EXPECT_FALSE(net.output(InputVector(input_width(m))));
    InputVector u(input_width(m));
    u.set(0, true);
    EXPECT_TRUE(net.output(u));
  }
}

TEST(Evaluate, SignalsFollowTheWiring) {
  const Network net(3, 1, kFig3);
  const auto sig = net.evaluate(InputVector{0, 0, 1, 0, 0, 1, 1, 0});
  // (1,2) YES passes 1, (1,3) OR passes 1, (1,4) YES passes 1.
  EXPECT_EQ(sig.nodes[node_index(3, {1, 2})].y, true);
  EXPECT_EQ(sig.nodes[node_index(3, {2, 1})].v, false);
  EXPECT_EQ(sig.nodes[node_index(3, {2, 1})].w, true);
  EXPECT_EQ(sig.nodes[node_index(3, {2, 2})].v, true);
  EXPECT_EQ(sig.nodes[node_index(3, {2, 2})].w, true);
  EXPECT_EQ(sig.nodes[node_index(3, {3, 1})].v, true);
  EXPECT_TRUE(sig.y_m);
  for (std::size_t k = 0; k < sig.nodes.size(); ++k) {
    const auto& n = sig.nodes[k];
    EXPECT_EQ(n.y, gate_output(kFig3[k], n.v, n.w));
  }
}

TEST(Evaluate, V11ForcesOutputForEveryState) {
  for (int m = 1; m <= 3; ++m) {
    for (std::uint64_t code = 0; code < oracle::state_count(m); ++code) {
      const Network net(m, 1, oracle::state_from_code(code, m));
      for (std::uint64_t u = 0; u < (std::uint64_t{1} << input_width(m)); ++u) {
        if (u & 1U) ASSERT_TRUE(net.output(InputVector::from_index(u, input_width(m))));
      }
    }
  }
}

TEST(Evaluate, OutputIsDisjunctionOverSupportExhaustive) {
  for (int m = 1; m <= 3; ++m) {
    for (std::uint64_t code = 0; code < oracle::state_count(m); ++code) {
      const auto x = oracle::state_from_code(code, m);
      const Network net(m, 1, x);
      const auto mask = support_mask(support(x, m));
      ASSERT_TRUE(mask & 1U);
      for (std::uint64_t u = 0; u < (std::uint64_t{1} << input_width(m)); ++u) {
        ASSERT_EQ(net.output(InputVector::from_index(u, input_width(m))), (u & mask) != 0);
      }
    }
  }
}

TEST(Evaluate, OutputIsDisjunctionOverSupportSampledM4) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::uint64_t> states(0, oracle::state_count(4) - 1);
  std::uniform_int_distribution<std::uint64_t> inputs(0, (1u << 16) - 1);
  for (int trial = 0; trial < 200; ++trial) {
    const auto x = oracle::state_from_code(states(rng), 4);
    const Network net(4, 1, x);
    const auto mask = support_mask(support(x, 4));
    for (int k = 0; k < 200; ++k) {
      const auto u = inputs(rng);
      ASSERT_EQ(net.output(InputVector::from_index(u, 16)), (u & mask) != 0);
    }
  }
}

TEST(InputBlocks, Examples) {
  auto b = input_blocks(3, {2, 1});
  EXPECT_EQ(b.v_block, (IndexRange{0, 2}));
  EXPECT_EQ(b.w_block, (IndexRange{2, 4}));
  b = input_blocks(3, {3, 1});
  EXPECT_EQ(b.v_block, (IndexRange{0, 4}));
  EXPECT_EQ(b.w_block, (IndexRange{4, 8}));
  b = input_blocks(3, {1, 4});
  EXPECT_EQ(b.v_block, (IndexRange{6, 7}));
  EXPECT_EQ(b.w_block, (IndexRange{7, 8}));
  EXPECT_THROW(input_blocks(3, {2, 3}), std::out_of_range);
}

// Brute-force dependency sets: bit k influences v (w) of a node if toggling
// it changes that signal for some state and input. With every gate OR the
// dependency set must fill the whole block; no state may reach outside it.
TEST(InputBlocks, MatchToggleDependencies) {
  const int m = 3;
  for (const auto& node : all_nodes(m)) {
    const std::size_t idx = node_index(m, node);
    std::vector<bool> v_dep(8, false);
    std::vector<bool> w_dep(8, false);
    std::vector<bool> v_dep_or(8, false);
    std::vector<bool> w_dep_or(8, false);
    for (std::uint64_t code = 0; code < oracle::state_count(m); ++code) {
      const Network net(m, 1, oracle::state_from_code(code, m));
      const bool all_or = code == oracle::state_count(m) - 1;
      for (std::uint64_t u = 0; u < 256; ++u) {
        const auto a = net.evaluate(InputVector::from_index(u, 8)).nodes[idx];
        for (std::size_t k = 0; k < 8; ++k) {
          const auto b = net.evaluate(InputVector::from_index(u ^ (1u << k), 8)).nodes[idx];
          if (a.v != b.v) {
            v_dep[k] = true;
            if (all_or) v_dep_or[k] = true;
          }
          if (a.w != b.w) {
            w_dep[k] = true;
            if (all_or) w_dep_or[k] = true;
          }
        }
      }
    }
    const auto blocks = input_blocks(m, node);
    for (std::size_t k = 0; k < 8; ++k) {
      EXPECT_EQ(v_dep[k], blocks.v_block.contains(k)) << to_string(node) << " bit " << k;
      EXPECT_EQ(w_dep[k], blocks.w_block.contains(k)) << to_string(node) << " bit " << k;
      EXPECT_EQ(v_dep_or[k], blocks.v_block.contains(k));
      EXPECT_EQ(w_dep_or[k], blocks.w_block.contains(k));
    }
  }
}

TEST(Step, ZeroInputPreservesStateAndClearsStreaks) {
  Network net(3, 3, kFig3);
  net.step(flip_input({1, 1}, Y, 3));
  ASSERT_EQ(net.gate({1, 1}).acq_streak, 1u);
  const auto before = net.state();
  const auto trace = net.step(InputVector(8));
  EXPECT_FALSE(trace.y_m);
  EXPECT_EQ(net.state(), before);
  for (const auto& g : net.gates()) {
    EXPECT_EQ(g.acq_streak, 0u);
    EXPECT_EQ(g.ext_streak, 0u);
  }
  EXPECT_EQ(net.time(), 2u);
  EXPECT_EQ(trace.t, 1u);
}

TEST(Step, UnitInputPreservesStateAndOutputsOne) {
  Network net(3, 2, kFig3);
  const auto trace = net.step(InputVector{1, 0, 0, 0, 0, 0, 0, 0});
  EXPECT_TRUE(trace.y_m);
  EXPECT_EQ(net.state(), kFig3);
}

TEST(Step, FlipInputFlipsNode21OfFig3) {
  for (unsigned s = 1; s <= 4; ++s) {
    Network net(3, s, kFig3);
    const auto u = flip_input({2, 1}, O, 3);
    for (unsigned k = 0; k < s; ++k) net.step(u);
    const auto x = net.state();
    EXPECT_EQ(x[node_index(3, {2, 1})], Y);
    for (int j = 1; j <= 4; ++j) EXPECT_EQ(x[node_index(3, {1, j})], kFig3[j - 1]);
    EXPECT_EQ(x[node_index(3, {2, 2})], O);
  }
}

TEST(Step, TraceRecordsPreStepGatesAndSignals) {
  Network net(2, 1, StateVector{Y, Y, Y});
  const auto trace = net.step(InputVector{1, 1, 0, 0});
  // (1,1) is YES with input (1,1) and s=1: it flips, but the record shows YES.
  EXPECT_EQ(trace.nodes[0].gate.state, Y);
  EXPECT_TRUE(trace.nodes[0].v && trace.nodes[0].w && trace.nodes[0].y);
  EXPECT_EQ(net.state_of({1, 1}), O);
  EXPECT_EQ(trace.input, (InputVector{1, 1, 0, 0}));
}

TEST(Run, EmptySequenceIsNoOp) {
  Network net(3, 2, kFig3);
  const Network before = net;
  EXPECT_TRUE(run(net, {}).empty());
  EXPECT_EQ(net, before);
}

TEST(Run, FlipsRootOfSection5Network) {
  const StateVector x0{Y, Y, O, Y, O, O, O};
  Network net(3, 3, x0);
  const auto u = flip_input({3, 1}, O, 3);
  const auto traces = run(net, std::vector<InputVector>(3, u));
  ASSERT_EQ(traces.size(), 3u);
  EXPECT_EQ(net.state_of({3, 1}), Y);
  for (std::size_t k = 0; k < traces.size(); ++k) EXPECT_EQ(traces[k].t, k);
}

TEST(Run, StatePreservingInputsNeverChangeStateExhaustive) {
  std::mt19937 rng(7);
  for (std::uint64_t code = 0; code < oracle::state_count(3); ++code) {
    const auto x0 = oracle::state_from_code(code, 3);
    for (unsigned s = 1; s <= 3; ++s) {
      Network net(3, s, x0);
      std::vector<InputVector> seq;
      for (unsigned k = 0; k < 2 * s; ++k) {
        InputVector u(8);
        u.set(0, rng() & 1U);
        seq.push_back(u);
      }
      const auto traces = run(net, seq);
      EXPECT_EQ(net.state(), x0);
      for (std::size_t k = 0; k < seq.size(); ++k) EXPECT_EQ(traces[k].y_m, seq[k][0]);
    }
  }
}

TEST(Run, ReportsOffendingIndexAndLeavesNetworkUntouched) {
  Network net(2, 1);
  const Network before = net;
  try {
    run(net, {InputVector(4), InputVector(4), InputVector(3)});
    FAIL() << "expected DimensionError";
  } catch (const DimensionError& e) {
    EXPECT_NE(std::string(e.what()).find("input 2"), std::string::npos);
  }
  EXPECT_EQ(net, before);
}

TEST(Run, Deterministic) {
  std::mt19937_64 rng(99);
  std::vector<InputVector> seq;
  for (int k = 0; k < 500; ++k) seq.push_back(InputVector::from_index(rng() & 0xFF, 8));
  Network a(3, 2, kFig3);
  Network b(3, 2, kFig3);
  const auto ta = run(a, seq);
  const auto tb = run(b, seq);
  ASSERT_EQ(ta.size(), tb.size());
  for (std::size_t k = 0; k < ta.size(); ++k) {
    EXPECT_EQ(ta[k].y_m, tb[k].y_m);
    for (std::size_t n = 0; n < ta[k].nodes.size(); ++n) {
      EXPECT_EQ(ta[k].nodes[n].gate, tb[k].nodes[n].gate);
    }
  }
  EXPECT_EQ(a, b);
}

TEST(Network, SingleGateDegenerateCase) {
  Network net(1, 2);
  EXPECT_EQ(net.size(), 1u);
  net.step(InputVector{1, 1});
  net.step(InputVector{1, 1});
  EXPECT_EQ(net.state_of({1, 1}), O);
  EXPECT_TRUE(net.output(InputVector{0, 1}));
}
