#include <fstream>
#include <sstream>

#include <json.hpp>

#include "linf/cli.hpp"

namespace linf::cli {

namespace {

using nlohmann::json;

Scalar parse_literal(const json& value, const std::string& where) {
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) return parse_scalar(std::to_string(value.get<std::uint64_t>()));
    return parse_scalar(std::to_string(value.get<std::int64_t>()));
  }
  if (value.is_string()) {
    try {
      return parse_scalar(value.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ConfigError(where + ": " + e.what());
    }
  }
  if (value.is_number_float()) throw ConfigError(where + ": floating-point values are not accepted, use \"p/q\"");
  throw ConfigError(where + ": expected an integer or a \"p/q\" string");
}

std::vector<Scalar> parse_sequence(const json& root, const char* key) {
  std::vector<Scalar> out;
  if (!root.contains(key)) return out;
  const json& seq = root.at(key);
  if (!seq.is_array()) throw ConfigError(std::string(key) + ": expected an array");
  for (std::size_t i = 0; i < seq.size(); ++i) {
    out.push_back(parse_literal(seq[i], std::string(key) + "[" + std::to_string(i + 1) + "]"));
  }
  return out;
}

int parse_int(const json& value, const char* key) {
  if (!value.is_number_integer()) throw ConfigError(std::string(key) + ": expected an integer");
  const auto v = value.get<std::int64_t>();
  if (v < -1000000 || v > 1000000) throw ConfigError(std::string(key) + ": out of range");
  return static_cast<int>(v);
}

}  // namespace

RunConfig parse_config(std::string_view json_text, std::optional<int> max_arity_override) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& [key, _] : root.items()) {
    if (key != "case" && key != "m" && key != "a" && key != "b" && key != "c" && key != "max_arity") {
      throw ConfigError("unknown config key: " + key);
    }
  }

  RunConfig config;
  if (!root.contains("case") || !root.at("case").is_string()) throw ConfigError("case: expected a string");
  const auto tag = root.at("case").get<std::string>();
  std::optional<int> m;
  if (root.contains("m")) m = parse_int(root.at("m"), "m");
  if (tag == "caseA") {
    config.bottom_degree = 0;
  } else if (tag == "caseB") {
    config.bottom_degree = -1;
  } else if (tag == "caseC") {
    config.bottom_degree = 1;
  } else if (tag == "generic") {
    if (!m) throw ConfigError("generic case requires the key m");
    config.bottom_degree = *m;
  } else {
    throw ConfigError("unknown case tag: " + tag);
  }
  if (m && *m != config.bottom_degree) throw ConfigError("m contradicts case " + tag);

  if (root.contains("max_arity")) config.max_arity = parse_int(root.at("max_arity"), "max_arity");
  if (max_arity_override) config.max_arity = *max_arity_override;
  if (config.max_arity < 1) throw ConfigError("max_arity must be at least 1");

  auto a = parse_sequence(root, "a");
  auto b = parse_sequence(root, "b");
  auto c = parse_sequence(root, "c");
  for (const auto& [name, seq] : {std::pair{"a", &a}, std::pair{"b", &b}, std::pair{"c", &c}}) {
    if (seq->size() > static_cast<std::size_t>(config.max_arity)) {
      throw ConfigError(std::string(name) + " has " + std::to_string(seq->size()) + " entries, more than max_arity " +
                        std::to_string(config.max_arity));
    }
  }
  config.constants = StructureConstants(config.max_arity, std::move(a), std::move(b), std::move(c));
  try {
    SkewOperatorSet(config.space(), config.constants);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return config;
}

RunConfig load_config(const std::string& path, std::optional<int> max_arity_override) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file: " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), max_arity_override);
}

}  // namespace linf::cli
