#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace ccgate::cli {

/// Process exit codes. Part of the public interface.
enum ExitCode : int {
  kOk = 0,
  kError = 1,
  kInfeasible = 2,
  kMismatch = 3,
};

using Path = std::filesystem::path;

struct SimulateOptions {
  Path config;
  Path inputs;
  Path trace;
};

struct TrainOptions {
  Path config;
  std::optional<Path> target;        // JSON with J1/J2
  std::optional<std::string> state;  // explicit X*, "YES,OR,..."
  std::optional<Path> plan;
  std::optional<Path> trace;
};

struct SynthOptions {
  Path target;
  std::optional<Path> config;  // resolves don't-cares when given
  std::optional<int> m;
};

struct FeasibleOptions {
  int m = 1;
  bool allow_m4 = false;
  bool json = false;
};

struct VerifyOptions {
  Path config;
  Path trace;
  std::optional<Path> plan;
  std::optional<Path> target;
  std::optional<std::string> state;
};

struct FlipCheckOptions {
  int m = 3;
  unsigned s = 1;
  std::uint64_t samples = 0;  // 0 = every initial state
  std::uint64_t seed = 1;
};

int cmd_simulate(const SimulateOptions& opt, std::ostream& out, std::ostream& err);
int cmd_train(const TrainOptions& opt, std::ostream& out, std::ostream& err);
int cmd_support(const Path& config, std::ostream& out, std::ostream& err);
int cmd_synth(const SynthOptions& opt, std::ostream& out, std::ostream& err);
int cmd_feasible(const FeasibleOptions& opt, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err);
int cmd_render(const Path& config, std::ostream& out, std::ostream& err);
int cmd_flipcheck(const FlipCheckOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace ccgate::cli
