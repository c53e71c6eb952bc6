#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ccgate/analysis.hpp"
#include "ccgate/network.hpp"
#include "ccgate/oracle.hpp"
#include "ccgate/training.hpp"

namespace ccgate::io {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

/// Malformed file or field. The message names the location.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NetworkConfig {
  int m = 1;
  unsigned s = 1;
  StateVector initial_state;

  Network build() const { return Network(m, s, initial_state); }
};

NetworkConfig config_from_json(const Json& j);
Json to_json(const NetworkConfig& c);
NetworkConfig load_config(const std::filesystem::path& path);

/// "YES,OR,..." (commas and/or whitespace).
StateVector parse_state_list(std::string_view text);
std::string format_state(const StateVector& x);
Json state_to_json(const StateVector& x);
StateVector state_from_json(const Json& j, std::string_view field);

TargetFunction target_from_json(const Json& j);
Json to_json(const TargetFunction& f);
TargetFunction load_target(const std::filesystem::path& path);

/// One vector per line, bits as 0/1 optionally separated by whitespace or
/// commas. Blank lines and lines starting with '#' are skipped.
std::vector<InputVector> parse_inputs(std::istream& in, int m);
std::vector<InputVector> load_inputs(const std::filesystem::path& path, int m);
std::string format_bits(const InputVector& u);

Json to_json(const StepTrace& trace, int m);
StepTrace trace_from_json(const Json& j, int m);
/// One compact JSON object per line.
void write_trace(std::ostream& out, const std::vector<StepTrace>& traces, int m);
std::vector<StepTrace> read_trace(std::istream& in, int m);

Json to_json(const TrainingPlan& p);
TrainingPlan plan_from_json(const Json& j);

Json to_json(const oracle::FeasibilityAtlas& atlas, int m);

Json read_json_file(const std::filesystem::path& path);
/// Writes through a temporary file and renames, so readers never observe
/// a half-written file.
void write_text_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace ccgate::io
