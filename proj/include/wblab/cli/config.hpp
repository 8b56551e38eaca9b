#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "wblab/error.hpp"

namespace wblab::cli {

/// Process exit code for configuration problems.
inline constexpr int kConfigExit = 2;

/// Configuration problem tied to one dotted key.
class ConfigKeyError : public ConfigError {
 public:
  ConfigKeyError(std::string key, const std::string& message)
      : ConfigError(key + ": " + message), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

/// JSON run configuration addressed by dotted paths ("grid.n").
/// Every lookup is recorded; reject_unknown() then flags keys nobody read.
class RunConfig {
 public:
  RunConfig() : root_(nlohmann::json::object()) {}
  explicit RunConfig(nlohmann::json root);
  static RunConfig load(const std::filesystem::path& path);

  /// "a.b=value"; value is parsed as JSON, falling back to a plain string.
  void apply_override(const std::string& assignment);

  bool has(const std::string& path) const;
  double number(const std::string& path) const;
  double number(const std::string& path, double fallback) const;
  int integer(const std::string& path) const;
  int integer(const std::string& path, int fallback) const;
  bool boolean(const std::string& path, bool fallback) const;
  std::string string(const std::string& path, const std::string& fallback) const;
  /// A list of numbers, or {"dyadic": [j0, j1]} for 2^j0 … 2^j1, or
  /// {"log": [a, b, count]} for log-spaced points.
  std::vector<double> numbers(const std::string& path) const;
  std::vector<double> numbers(const std::string& path, const std::vector<double>& fallback) const;

  /// Throws ConfigKeyError naming the first key that was never read.
  void reject_unknown() const;

  const nlohmann::json& root() const { return root_; }

 private:
  const nlohmann::json* find(const std::string& path) const;
  const nlohmann::json& require(const std::string& path) const;
  std::vector<double> parse_numbers(const std::string& path, const nlohmann::json& node) const;

  nlohmann::json root_;
  mutable std::set<std::string> used_;
};

}  // namespace wblab::cli
