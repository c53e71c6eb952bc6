#include <iostream>

#include <CLI11.hpp>

#include "ccgate/commands.hpp"

int main(int argc, char** argv) {
  using namespace ccgate::cli;

  CLI::App app{"ccgate: simulate and train networks of classical conditioning gates"};
  app.require_subcommand(1);

  SimulateOptions sim;
  auto* simulate = app.add_subcommand("simulate", "run an input sequence and write a trace");
  simulate->add_option("--config", sim.config, "network config (JSON)")->required();
  simulate->add_option("--inputs", sim.inputs, "input vectors, one per line")->required();
  simulate->add_option("--trace", sim.trace, "trace output (JSON lines)")->required();

  TrainOptions train;
  std::string train_target, train_state, train_plan, train_trace;
  auto* tr = app.add_subcommand("train", "steer the network to a target function or state");
  tr->add_option("--config", train.config, "network config (JSON)")->required();
  auto* t_target = tr->add_option("--target", train_target, "target function J1/J2 (JSON)");
  auto* t_state = tr->add_option("--state", train_state, "explicit target state, YES/OR list");
  t_target->excludes(t_state);
  tr->add_option("--plan", train_plan, "plan output (JSON)");
  tr->add_option("--trace", train_trace, "trace output (JSON lines)");

  Path support_config;
  auto* sup = app.add_subcommand("support", "print the function realized by the config state");
  sup->add_option("--config", support_config, "network config (JSON)")->required();

  SynthOptions synth;
  std::string synth_config;
  int synth_m = 0;
  auto* syn = app.add_subcommand("synth", "build a target state for a function");
  syn->add_option("--target", synth.target, "target function J1/J2 (JSON)")->required();
  syn->add_option("--config", synth_config, "config used to resolve don't-cares");
  syn->add_option("--m", synth_m, "layer count when no config is given");

  FeasibleOptions feas;
  auto* fea = app.add_subcommand("feasible", "enumerate every realizable function");
  fea->add_option("--m", feas.m, "layer count (1..3, 4 with --allow-m4)")->required();
  fea->add_flag("--allow-m4", feas.allow_m4, "permit the 4-layer enumeration");
  fea->add_flag("--json", feas.json, "emit the full atlas report as JSON");

  VerifyOptions ver;
  std::string verify_plan, verify_target, verify_state;
  auto* vf = app.add_subcommand("verify", "replay a trace and check plan postconditions");
  vf->add_option("--config", ver.config, "network config (JSON)")->required();
  vf->add_option("--trace", ver.trace, "trace to replay (JSON lines)")->required();
  vf->add_option("--plan", verify_plan, "plan the trace should follow");
  vf->add_option("--target", verify_target, "function the final state should realize");
  vf->add_option("--state", verify_state, "state the trace should end in");

  Path render_config;
  auto* ren = app.add_subcommand("render", "draw the network as an ASCII tree");
  ren->add_option("--config", render_config, "network config (JSON)")->required();

  FlipCheckOptions flip;
  auto* fc = app.add_subcommand("flipcheck", "check the flipping input on every node");
  fc->add_option("--m", flip.m, "layer count")->required();
  fc->add_option("--s", flip.s, "unit training time")->check(CLI::PositiveNumber);
  fc->add_option("--samples", flip.samples, "random initial states (0 = all)");
  fc->add_option("--seed", flip.seed, "seed for sampled sweeps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kError;
  }

  auto& out = std::cout;
  auto& err = std::cerr;
  if (*simulate) return cmd_simulate(sim, out, err);
  if (*tr) {
    if (!train_target.empty()) train.target = train_target;
    if (!train_state.empty()) train.state = train_state;
    if (!train_plan.empty()) train.plan = train_plan;
    if (!train_trace.empty()) train.trace = train_trace;
    return cmd_train(train, out, err);
  }
  if (*sup) return cmd_support(support_config, out, err);
  if (*syn) {
    if (!synth_config.empty()) synth.config = synth_config;
    if (synth_m > 0) synth.m = synth_m;
    return cmd_synth(synth, out, err);
  }
  if (*fea) return cmd_feasible(feas, out, err);
  if (*vf) {
    if (!verify_plan.empty()) ver.plan = verify_plan;
    if (!verify_target.empty()) ver.target = verify_target;
    if (!verify_state.empty()) ver.state = verify_state;
    return cmd_verify(ver, out, err);
  }
  if (*ren) return cmd_render(render_config, out, err);
  if (*fc) return cmd_flipcheck(flip, out, err);
  return kError;
}
