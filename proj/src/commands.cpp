#include "ccgate/commands.hpp"

#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include "ccgate/analysis.hpp"
#include "ccgate/io.hpp"
#include "ccgate/oracle.hpp"
#include "ccgate/training.hpp"

namespace ccgate::cli {

namespace {

std::string trace_text(const std::vector<StepTrace>& traces, int m) {
  std::ostringstream os;
  io::write_trace(os, traces, m);
  return os.str();
}

std::string format_directive(const FlipDirective& d) {
  return to_string(d.node) + " " + std::string(to_string(d.from)) + "->" +
         std::string(to_string(flipped(d.from))) + " input=" + io::format_bits(d.input) +
         " hold=" + std::to_string(d.hold);
}

void render_node(const Network& net, const NodeId& node, const std::string& prefix, bool last,
                 bool root, std::ostream& out) {
  const GateState st = net.state_of(node);
  out << prefix << (root ? "" : (last ? "`-- " : "|-- ")) << to_string(node) << ' '
      << to_string(st);
  if (node.layer == 1) {
    out << "  [v" << node.position;
    if (st == GateState::Or) out << " w" << node.position;
    out << ']';
  }
  out << '\n';
  if (node.layer == 1) return;
  const std::string child_prefix = prefix + (root ? "" : (last ? "    " : "|   "));
  render_node(net, {node.layer - 1, 2 * node.position - 1}, child_prefix, false, false, out);
  render_node(net, {node.layer - 1, 2 * node.position}, child_prefix, true, false, out);
}

// Runs `body`, mapping library exceptions onto exit codes.
template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kError;
}

struct Mismatch {
  std::string message;
};

std::optional<Mismatch> compare_step(const StepTrace& stored, const StepTrace& replayed, int m) {
  const std::string at = "step " + std::to_string(stored.t);
  for (std::size_t k = 0; k < stored.nodes.size(); ++k) {
    const auto& a = stored.nodes[k];
    const auto& b = replayed.nodes[k];
    const char* field = nullptr;
    if (a.v != b.v) field = "v";
    else if (a.w != b.w) field = "w";
    else if (a.y != b.y) field = "y";
    else if (a.gate.state != b.gate.state) field = "x";
    else if (a.gate.acq_streak != b.gate.acq_streak) field = "acq";
    else if (a.gate.ext_streak != b.gate.ext_streak) field = "ext";
    if (field) {
      return Mismatch{at + ", node " + to_string(node_at(m, k)) + ": field '" + field +
                      "' does not match the replay"};
    }
  }
  if (stored.y_m != replayed.y_m) return Mismatch{at + ": y_m does not match the replay"};
  return std::nullopt;
}

std::optional<Mismatch> check_plan(const TrainingPlan& plan, const std::vector<StepTrace>& traces,
                                   const Network& final_net, const io::NetworkConfig& cfg) {
  if (plan.m != cfg.m || plan.s != cfg.s) {
    return Mismatch{"plan shape does not match the config"};
  }
  if (traces.size() != plan.total_steps()) {
    return Mismatch{"trace has " + std::to_string(traces.size()) + " steps, plan needs T=" +
                    std::to_string(plan.total_steps())};
  }
  std::size_t t = 0;
  for (std::size_t k = 0; k < plan.directives.size(); ++k) {
    const auto& d = plan.directives[k];
    if (d.hold != plan.s) return Mismatch{"directive " + std::to_string(k) + " hold != s"};
    if (d.input != flip_input(d.node, d.from, plan.m)) {
      return Mismatch{"directive " + std::to_string(k) + " input is not the flip input for " +
                      to_string(d.node)};
    }
    const std::size_t idx = node_index(plan.m, d.node);
    const std::size_t begin = t;
    for (; t < begin + d.hold; ++t) {
      if (traces[t].input != d.input) {
        return Mismatch{"step " + std::to_string(t) + ": input differs from directive " +
                        std::to_string(k)};
      }
    }
    const GateState start = traces[begin].nodes[idx].gate.state;
    const GateState end = t < traces.size() ? traces[t].nodes[idx].gate.state
                                            : final_net.gates()[idx].state;
    if (start != d.from || end != flipped(d.from)) {
      return Mismatch{"directive " + std::to_string(k) + ": node " + to_string(d.node) +
                      " did not flip during steps " + std::to_string(begin) + ".." +
                      std::to_string(t - 1)};
    }
  }
  return std::nullopt;
}

}  // namespace

int cmd_simulate(const SimulateOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto cfg = io::load_config(opt.config);
    const auto inputs = io::load_inputs(opt.inputs, cfg.m);
    Network net = cfg.build();
    const auto traces = run(net, inputs);
    io::write_text_file(opt.trace, trace_text(traces, cfg.m));
    out << "steps=" << traces.size() << " final=" << io::format_state(net.state()) << '\n';
    return kOk;
  });
}

int cmd_train(const TrainOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    if (opt.target.has_value() == opt.state.has_value()) {
      err << "error: give exactly one of --target or --state\n";
      return kError;
    }
    const auto cfg = io::load_config(opt.config);
    const Network net = cfg.build();

    std::optional<TargetFunction> target;
    StateVector x_star;
    if (opt.target) {
      target = io::load_target(*opt.target);
      check_target(*target, cfg.m);
      auto synth = synthesize_target(*target, cfg.m);
      if (auto* bad = std::get_if<Infeasible>(&synth)) {
        err << "infeasible: " << to_string(*target) << " cannot be realized; " << bad->reason
            << '\n';
        return kInfeasible;
      }
      x_star = resolve(std::get<TargetState>(synth), cfg.initial_state);
    } else {
      x_star = io::parse_state_list(*opt.state);
      if (x_star.size() != net.size()) {
        err << "error: --state has " << x_star.size() << " entries, expected " << net.size()
            << '\n';
        return kError;
      }
    }

    const TrainingPlan p = plan(net, x_star);
    ExecutionResult result = [&] {
      try {
        return execute(net, p);
      } catch (const TrainingDivergence& e) {
        throw std::runtime_error(std::string("training diverged: ") + e.what());
      }
    }();

    if (result.final.state() != x_star) {
      err << "verification failed: final state " << io::format_state(result.final.state())
          << " differs from target " << io::format_state(x_star) << '\n';
      return kMismatch;
    }
    if (target && cfg.m <= oracle::kMaxTableLayers) {
      const auto realized = oracle::table_support(oracle::truth_table(result.final));
      if (!realized || *realized != *target) {
        err << "verification failed: trained truth table does not equal " << to_string(*target)
            << '\n';
        return kMismatch;
      }
    }

    if (opt.plan) io::write_text_file(*opt.plan, io::to_json(p).dump(2) + "\n");
    if (opt.trace) io::write_text_file(*opt.trace, trace_text(result.traces, cfg.m));

    out << "x_star=" << io::format_state(x_star) << '\n';
    for (const auto& d : p.directives) out << "flip " << format_directive(d) << '\n';
    out << "k*=" << p.k_star() << " T=" << p.total_steps() << '\n';
    out << "final=" << io::format_state(result.final.state()) << '\n';
    out << "function=" << to_string(support(result.final.state(), cfg.m)) << '\n';
    return kOk;
  });
}

int cmd_support(const Path& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto cfg = io::load_config(config);
    out << to_string(support(cfg.initial_state, cfg.m)) << '\n';
    return kOk;
  });
}

int cmd_synth(const SynthOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    std::optional<io::NetworkConfig> cfg;
    if (opt.config) cfg = io::load_config(*opt.config);
    const int m = cfg ? cfg->m : opt.m.value_or(0);
    if (m < 1) {
      err << "error: give --config or --m\n";
      return kError;
    }
    const auto target = io::load_target(opt.target);
    check_target(target, m);
    auto synth = synthesize_target(target, m);
    if (auto* bad = std::get_if<Infeasible>(&synth)) {
      out << "infeasible " << to_string(target) << '\n';
      out << "witness " << to_string(bad->witness) << ": " << bad->reason << '\n';
      return kInfeasible;
    }
    const auto& ts = std::get<TargetState>(synth);
    std::string pattern;
    for (std::size_t k = 0; k < ts.size(); ++k) {
      if (k) pattern += ',';
      pattern += ts[k] == TargetValue::Yes ? "YES" : ts[k] == TargetValue::Or ? "OR" : "*";
    }
    out << "pattern=" << pattern << '\n';
    if (cfg) out << "x_star=" << io::format_state(resolve(ts, cfg->initial_state)) << '\n';
    return kOk;
  });
}

int cmd_feasible(const FeasibleOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto atlas = oracle::enumerate_feasible(opt.m, opt.allow_m4);
    if (opt.json) {
      out << io::to_json(atlas, opt.m).dump(2) << '\n';
      return kOk;
    }
    for (const auto& [f, states] : atlas) {
      out << to_string(f) << " states=" << states.size() << '\n';
    }
    out << "functions=" << atlas.size() << " states=" << oracle::state_count(opt.m) << '\n';
    return kOk;
  });
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    const auto cfg = io::load_config(opt.config);
    std::ifstream in(opt.trace);
    if (!in) throw std::runtime_error("cannot open " + opt.trace.string());
    const auto stored = io::read_trace(in, cfg.m);

    Network net = cfg.build();
    for (std::size_t k = 0; k < stored.size(); ++k) {
      if (stored[k].t != k) {
        err << "mismatch: record " << k << " has t=" << stored[k].t << '\n';
        return kMismatch;
      }
      const StepTrace replayed = net.step(stored[k].input);
      if (auto bad = compare_step(stored[k], replayed, cfg.m)) {
        err << "mismatch: " << bad->message << '\n';
        return kMismatch;
      }
    }

    const StateVector final_state = net.state();
    if (cfg.m <= oracle::kMaxTableLayers) {
      const auto table = oracle::truth_table(net);
      const auto realized = oracle::table_support(table);
      if (!realized || *realized != support(final_state, cfg.m)) {
        err << "mismatch: final truth table disagrees with the structural support\n";
        return kMismatch;
      }
      if (opt.target) {
        const auto target = io::load_target(*opt.target);
        if (*realized != target) {
          err << "mismatch: final function " << to_string(*realized) << " is not "
              << to_string(target) << '\n';
          return kMismatch;
        }
      }
    }
    if (opt.state && io::parse_state_list(*opt.state) != final_state) {
      err << "mismatch: final state " << io::format_state(final_state)
          << " differs from the expected state\n";
      return kMismatch;
    }
    if (opt.plan) {
      const auto p = io::plan_from_json(io::read_json_file(*opt.plan));
      if (auto bad = check_plan(p, stored, net, cfg)) {
        err << "mismatch: " << bad->message << '\n';
        return kMismatch;
      }
    }
    out << "ok steps=" << stored.size() << " final=" << io::format_state(final_state) << '\n';
    return kOk;
  });
}

int cmd_render(const Path& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto cfg = io::load_config(config);
    const Network net = cfg.build();
    render_node(net, {cfg.m, 1}, "", true, true, out);
    out << to_string(support(cfg.initial_state, cfg.m)) << '\n';
    return kOk;
  });
}

int cmd_flipcheck(const FlipCheckOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    if (opt.m < 1 || opt.m > 6) {
      err << "error: --m must be in [1, 6]\n";
      return kError;
    }
    const std::uint64_t total = std::uint64_t{1} << node_count(opt.m);
    const bool exhaustive = opt.samples == 0;
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, total - 1);
    const auto nodes = all_nodes(opt.m);

    std::uint64_t checks = 0;
    std::uint64_t violations = 0;
    const std::uint64_t rounds = exhaustive ? total : opt.samples;
    for (std::uint64_t r = 0; r < rounds; ++r) {
      const std::uint64_t code = exhaustive ? r : pick(rng);
      StateVector x0(node_count(opt.m));
      for (std::size_t k = 0; k < x0.size(); ++k) {
        x0[k] = ((code >> k) & 1U) ? GateState::Or : GateState::Yes;
      }
      for (const auto& node : nodes) {
        Network net(opt.m, opt.s, x0);
        const GateState from = net.state_of(node);
        const auto u = flip_input(node, from, opt.m);
        for (unsigned k = 0; k < opt.s; ++k) net.step(u);
        bool ok = net.state_of(node) == flipped(from);
        for (const auto& other : nodes) {
          if (other.layer > node.layer || other == node) continue;
          ok = ok && net.state_of(other) == x0[node_index(opt.m, other)];
        }
        ++checks;
        if (!ok) {
          ++violations;
          err << "violation: node " << to_string(node) << " from " << io::format_state(x0) << '\n';
        }
      }
    }
    out << "checks=" << checks << " violations=" << violations << '\n';
    return violations == 0 ? kOk : kMismatch;
  });
}

}  // namespace ccgate::cli
