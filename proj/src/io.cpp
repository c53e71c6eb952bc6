#include "ccgate/io.hpp"

#include <fstream>
#include <sstream>

namespace ccgate::io {

namespace {

const Json& require(const Json& j, std::string_view field) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(field);
  if (it == j.end()) throw ParseError("missing field '" + std::string(field) + "'");
  return *it;
}

template <typename T>
T require_as(const Json& j, std::string_view field) {
  const Json& v = require(j, field);
  try {
    return v.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError("field '" + std::string(field) + "' has the wrong type");
  }
}

void check_version(const Json& j, std::string_view what) {
  const int version = require_as<int>(j, "format_version");
  if (version != kFormatVersion) {
    throw ParseError(std::string(what) + ": unsupported format_version " + std::to_string(version));
  }
}

bool bit_from_json(const Json& j, std::string_view field) {
  const int b = require_as<int>(j, field);
  if (b != 0 && b != 1) throw ParseError("field '" + std::string(field) + "' must be 0 or 1");
  return b == 1;
}

Json bits_to_json(const InputVector& u) {
  Json arr = Json::array();
  for (auto b : u.bits()) arr.push_back(static_cast<int>(b));
  return arr;
}

InputVector bits_from_json(const Json& j, std::string_view field, std::size_t width) {
  const Json& arr = require(j, field);
  if (!arr.is_array() || arr.size() != width) {
    throw ParseError("field '" + std::string(field) + "' must be an array of " +
                     std::to_string(width) + " bits");
  }
  std::vector<std::uint8_t> bits;
  for (const auto& b : arr) {
    if (!b.is_number_integer() || (b.get<int>() != 0 && b.get<int>() != 1)) {
      throw ParseError("field '" + std::string(field) + "' contains a non-bit value");
    }
    bits.push_back(static_cast<std::uint8_t>(b.get<int>()));
  }
  return InputVector(std::move(bits));
}

GateState gate_state_from_json(const Json& j, std::string_view field) {
  const auto text = require_as<std::string>(j, field);
  auto s = parse_gate_state(text);
  if (!s) throw ParseError("field '" + std::string(field) + "' must be \"YES\" or \"OR\"");
  return *s;
}

std::vector<int> index_list(const Json& j, std::string_view field) {
  const Json& arr = require(j, field);
  if (!arr.is_array()) throw ParseError("field '" + std::string(field) + "' must be an array");
  std::vector<int> out;
  for (const auto& v : arr) {
    if (!v.is_number_integer()) {
      throw ParseError("field '" + std::string(field) + "' must contain integers");
    }
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

NetworkConfig config_from_json(const Json& j) {
  check_version(j, "config");
  NetworkConfig c;
  c.m = require_as<int>(j, "m");
  const int s = require_as<int>(j, "s");
  if (c.m < 1 || c.m > 24) throw ParseError("field 'm' must be in [1, 24]");
  if (s < 1) throw ParseError("field 's' must be >= 1");
  c.s = static_cast<unsigned>(s);
  c.initial_state = state_from_json(j, "initial_state");
  if (c.initial_state.size() != node_count(c.m)) {
    throw ParseError("field 'initial_state' has " + std::to_string(c.initial_state.size()) +
                     " entries, expected " + std::to_string(node_count(c.m)));
  }
  return c;
}

Json to_json(const NetworkConfig& c) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["m"] = c.m;
  j["s"] = c.s;
  j["initial_state"] = state_to_json(c.initial_state);
  return j;
}

NetworkConfig load_config(const std::filesystem::path& path) {
  try {
    return config_from_json(read_json_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

StateVector parse_state_list(std::string_view text) {
  StateVector x;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    auto s = parse_gate_state(token);
    if (!s) throw ParseError("state entry '" + token + "' must be YES or OR");
    x.push_back(*s);
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t' || c == '\n') {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  return x;
}

std::string format_state(const StateVector& x) {
  std::string out;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (k) out += ',';
    out += to_string(x[k]);
  }
  return out;
}

Json state_to_json(const StateVector& x) {
  Json arr = Json::array();
  for (auto s : x) arr.push_back(std::string(to_string(s)));
  return arr;
}

StateVector state_from_json(const Json& j, std::string_view field) {
  const Json& arr = require(j, field);
  if (!arr.is_array()) throw ParseError("field '" + std::string(field) + "' must be an array");
  StateVector x;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const auto* text = arr[k].get_ptr<const std::string*>();
    auto s = text ? parse_gate_state(*text) : std::nullopt;
    if (!s) {
      throw ParseError("field '" + std::string(field) + "' entry " + std::to_string(k) +
                       " must be \"YES\" or \"OR\"");
    }
    x.push_back(*s);
  }
  return x;
}

TargetFunction target_from_json(const Json& j) {
  check_version(j, "target");
  return TargetFunction(index_list(j, "J1"), index_list(j, "J2"));
}

Json to_json(const TargetFunction& f) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["J1"] = f.j1;
  j["J2"] = f.j2;
  return j;
}

TargetFunction load_target(const std::filesystem::path& path) {
  try {
    return target_from_json(read_json_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::vector<InputVector> parse_inputs(std::istream& in, int m) {
  const std::size_t width = input_width(m);
  std::vector<InputVector> out;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    std::vector<std::uint8_t> bits;
    bool comment = false;
    for (char c : line) {
      if (bits.empty() && c == '#') {
        comment = true;
        break;
      }
      if (c == '0' || c == '1') {
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
      } else if (c != ' ' && c != '\t' && c != ',' && c != '\r') {
        throw ParseError("line " + std::to_string(lineno) + ": unexpected character '" +
                         std::string(1, c) + "'");
      }
    }
    if (comment || bits.empty()) continue;
    if (bits.size() != width) {
      throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(width) +
                       " bits, got " + std::to_string(bits.size()));
    }
    out.emplace_back(std::move(bits));
  }
  return out;
}

std::vector<InputVector> load_inputs(const std::filesystem::path& path, int m) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return parse_inputs(in, m);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string format_bits(const InputVector& u) {
  std::string out;
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (k) out += ' ';
    out += u[k] ? '1' : '0';
  }
  return out;
}

Json to_json(const StepTrace& trace, int m) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["t"] = trace.t;
  j["input"] = bits_to_json(trace.input);
  Json nodes = Json::array();
  for (std::size_t k = 0; k < trace.nodes.size(); ++k) {
    const auto& r = trace.nodes[k];
    const NodeId id = node_at(m, k);
    Json n;
    n["i"] = id.layer;
    n["j"] = id.position;
    n["v"] = static_cast<int>(r.v);
    n["w"] = static_cast<int>(r.w);
    n["y"] = static_cast<int>(r.y);
    n["x"] = std::string(to_string(r.gate.state));
    n["acq"] = r.gate.acq_streak;
    n["ext"] = r.gate.ext_streak;
    nodes.push_back(std::move(n));
  }
  j["nodes"] = std::move(nodes);
  j["y_m"] = static_cast<int>(trace.y_m);
  return j;
}

StepTrace trace_from_json(const Json& j, int m) {
  check_version(j, "trace");
  StepTrace trace;
  trace.t = require_as<std::uint64_t>(j, "t");
  trace.input = bits_from_json(j, "input", input_width(m));
  const Json& nodes = require(j, "nodes");
  if (!nodes.is_array() || nodes.size() != node_count(m)) {
    throw ParseError("field 'nodes' must list " + std::to_string(node_count(m)) + " nodes");
  }
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const Json& n = nodes[k];
    const NodeId expected = node_at(m, k);
    if (require_as<int>(n, "i") != expected.layer || require_as<int>(n, "j") != expected.position) {
      throw ParseError("node entry " + std::to_string(k) + " should be " + to_string(expected));
    }
    NodeRecord r;
    r.v = bit_from_json(n, "v");
    r.w = bit_from_json(n, "w");
    r.y = bit_from_json(n, "y");
    r.gate.state = gate_state_from_json(n, "x");
    r.gate.acq_streak = require_as<unsigned>(n, "acq");
    r.gate.ext_streak = require_as<unsigned>(n, "ext");
    trace.nodes.push_back(r);
  }
  trace.y_m = bit_from_json(j, "y_m");
  return trace;
}

void write_trace(std::ostream& out, const std::vector<StepTrace>& traces, int m) {
  for (const auto& t : traces) out << to_json(t, m).dump() << '\n';
}

std::vector<StepTrace> read_trace(std::istream& in, int m) {
  std::vector<StepTrace> out;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (line.empty()) continue;
    try {
      out.push_back(trace_from_json(Json::parse(line), m));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("trace line " + std::to_string(lineno) + ": " + e.what());
    } catch (const ParseError& e) {
      throw ParseError("trace line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

Json to_json(const TrainingPlan& p) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["m"] = p.m;
  j["s"] = p.s;
  j["k_star"] = p.k_star();
  j["T"] = p.total_steps();
  Json dirs = Json::array();
  for (const auto& d : p.directives) {
    Json r;
    r["node"] = {d.node.layer, d.node.position};
    r["from_state"] = std::string(to_string(d.from));
    r["input_bits"] = bits_to_json(d.input);
    r["hold"] = d.hold;
    dirs.push_back(std::move(r));
  }
  j["directives"] = std::move(dirs);
  return j;
}

TrainingPlan plan_from_json(const Json& j) {
  check_version(j, "plan");
  TrainingPlan p;
  p.m = require_as<int>(j, "m");
  const int s = require_as<int>(j, "s");
  if (p.m < 1 || p.m > 24 || s < 1) throw ParseError("plan has an invalid shape");
  p.s = static_cast<unsigned>(s);
  const Json& dirs = require(j, "directives");
  if (!dirs.is_array()) throw ParseError("field 'directives' must be an array");
  for (std::size_t k = 0; k < dirs.size(); ++k) {
    const Json& r = dirs[k];
    const auto node = require_as<std::vector<int>>(r, "node");
    if (node.size() != 2) throw ParseError("directive " + std::to_string(k) + ": bad node");
    FlipDirective d;
    d.node = {node[0], node[1]};
    if (!is_valid_node(p.m, d.node)) {
      throw ParseError("directive " + std::to_string(k) + ": node out of range");
    }
    d.from = gate_state_from_json(r, "from_state");
    d.input = bits_from_json(r, "input_bits", input_width(p.m));
    d.hold = require_as<unsigned>(r, "hold");
    p.directives.push_back(std::move(d));
  }
  if (require_as<std::size_t>(j, "k_star") != p.k_star() ||
      require_as<std::size_t>(j, "T") != p.total_steps()) {
    throw ParseError("plan header disagrees with its directives");
  }
  return p;
}

Json to_json(const oracle::FeasibilityAtlas& atlas, int m) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["m"] = m;
  j["function_count"] = atlas.size();
  j["state_count"] = oracle::state_count(m);
  Json fns = Json::array();
  for (const auto& [f, states] : atlas) {
    Json e;
    e["J1"] = f.j1;
    e["J2"] = f.j2;
    Json xs = Json::array();
    for (const auto& x : states) xs.push_back(format_state(x));
    e["states"] = std::move(xs);
    fns.push_back(std::move(e));
  }
  j["functions"] = std::move(fns);
  return j;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& contents) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << contents;
    if (!out.flush()) throw std::runtime_error("cannot write " + path.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace ccgate::io
