#include "wblab/cli/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace wblab::cli {

namespace {

std::vector<std::string> split(const std::string& path) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : path) {
    if (c == '.') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  for (const auto& p : parts) {
    if (p.empty()) throw ConfigKeyError(path, "malformed key");
  }
  return parts;
}

void collect_leaves(const nlohmann::json& node, const std::string& prefix, std::vector<std::string>& out) {
  if (node.is_object() && !node.empty()) {
    for (auto it = node.begin(); it != node.end(); ++it) {
      collect_leaves(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    }
    return;
  }
  out.push_back(prefix);
}

}  // namespace

RunConfig::RunConfig(nlohmann::json root) : root_(std::move(root)) {
  if (!root_.is_object()) throw ConfigKeyError("<root>", "configuration must be a JSON object");
}

RunConfig RunConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigKeyError("--config", "cannot open " + path.string());
  try {
    return RunConfig(nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigKeyError("--config", std::string("invalid JSON: ") + e.what());
  }
}

void RunConfig::apply_override(const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) throw ConfigKeyError(assignment, "override must look like key=value");
  const std::string key = assignment.substr(0, eq);
  const std::string text = assignment.substr(eq + 1);
  nlohmann::json value;
  try {
    value = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error&) {
    value = text;
  }
  nlohmann::json* node = &root_;
  const auto parts = split(key);
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    nlohmann::json& next = (*node)[parts[i]];
    if (next.is_null()) next = nlohmann::json::object();
    if (!next.is_object()) throw ConfigKeyError(key, "cannot descend into a non-object");
    node = &next;
  }
  (*node)[parts.back()] = value;
}

const nlohmann::json* RunConfig::find(const std::string& path) const {
  const nlohmann::json* node = &root_;
  for (const auto& part : split(path)) {
    if (!node->is_object()) return nullptr;
    auto it = node->find(part);
    if (it == node->end()) return nullptr;
    node = &*it;
  }
  used_.insert(path);
  return node;
}

const nlohmann::json& RunConfig::require(const std::string& path) const {
  const nlohmann::json* node = find(path);
  if (node == nullptr) throw ConfigKeyError(path, "required key is missing");
  return *node;
}

bool RunConfig::has(const std::string& path) const { return find(path) != nullptr; }

double RunConfig::number(const std::string& path) const {
  const auto& node = require(path);
  if (!node.is_number()) throw ConfigKeyError(path, "expected a number");
  return node.get<double>();
}

double RunConfig::number(const std::string& path, double fallback) const {
  return find(path) ? number(path) : fallback;
}

int RunConfig::integer(const std::string& path) const {
  const auto& node = require(path);
  if (!node.is_number()) throw ConfigKeyError(path, "expected an integer");
  const double v = node.get<double>();
  if (v != std::floor(v) || std::abs(v) > 2e9) throw ConfigKeyError(path, "expected an integer");
  return static_cast<int>(v);
}

int RunConfig::integer(const std::string& path, int fallback) const {
  return find(path) ? integer(path) : fallback;
}

bool RunConfig::boolean(const std::string& path, bool fallback) const {
  const nlohmann::json* node = find(path);
  if (node == nullptr) return fallback;
  if (!node->is_boolean()) throw ConfigKeyError(path, "expected true or false");
  return node->get<bool>();
}

std::string RunConfig::string(const std::string& path, const std::string& fallback) const {
  const nlohmann::json* node = find(path);
  if (node == nullptr) return fallback;
  if (!node->is_string()) throw ConfigKeyError(path, "expected a string");
  return node->get<std::string>();
}

std::vector<double> RunConfig::parse_numbers(const std::string& path, const nlohmann::json& node) const {
  std::vector<double> out;
  if (node.is_number()) return {node.get<double>()};
  if (node.is_array()) {
    for (const auto& v : node) {
      if (!v.is_number()) throw ConfigKeyError(path, "list entries must be numbers");
      out.push_back(v.get<double>());
    }
  } else if (node.is_object() && node.size() == 1 && node.contains("dyadic")) {
    const auto& r = node["dyadic"];
    if (!r.is_array() || r.size() != 2 || !r[0].is_number_integer() || !r[1].is_number_integer() ||
        r[0].get<int>() > r[1].get<int>()) {
      throw ConfigKeyError(path + ".dyadic", "expected [j0, j1] with integers j0 <= j1");
    }
    for (int j = r[0].get<int>(); j <= r[1].get<int>(); ++j) out.push_back(std::ldexp(1.0, j));
  } else if (node.is_object() && node.size() == 1 && node.contains("log")) {
    const auto& r = node["log"];
    if (!r.is_array() || r.size() != 3 || !r[0].is_number() || !r[1].is_number() || !r[2].is_number_integer() ||
        !(r[0].get<double>() > 0.0) || !(r[1].get<double>() >= r[0].get<double>()) || r[2].get<int>() < 1) {
      throw ConfigKeyError(path + ".log", "expected [a, b, count] with 0 < a <= b, count >= 1");
    }
    const double a = r[0].get<double>();
    const double b = r[1].get<double>();
    const int count = r[2].get<int>();
    for (int k = 0; k < count; ++k) {
      out.push_back(count == 1 ? a : a * std::pow(b / a, static_cast<double>(k) / (count - 1)));
    }
  } else {
    throw ConfigKeyError(path, "expected a number list, {\"dyadic\": [j0, j1]} or {\"log\": [a, b, n]}");
  }
  if (out.empty()) throw ConfigKeyError(path, "sweep axis is empty");
  return out;
}

std::vector<double> RunConfig::numbers(const std::string& path) const { return parse_numbers(path, require(path)); }

std::vector<double> RunConfig::numbers(const std::string& path, const std::vector<double>& fallback) const {
  const nlohmann::json* node = find(path);
  return node ? parse_numbers(path, *node) : fallback;
}

void RunConfig::reject_unknown() const {
  std::vector<std::string> leaves;
  collect_leaves(root_, "", leaves);
  for (const auto& leaf : leaves) {
    if (leaf.empty()) continue;
    bool known = false;
    std::string prefix = leaf;
    while (true) {
      if (used_.count(prefix)) {
        known = true;
        break;
      }
      const auto dot = prefix.rfind('.');
      if (dot == std::string::npos) break;
      prefix.resize(dot);
    }
    if (!known) throw ConfigKeyError(leaf, "unknown key");
  }
}

}  // namespace wblab::cli
