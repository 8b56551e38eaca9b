#pragma once

#include <cstddef>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace wblab::cli {

/// Shortest round-trip text for a double; "inf", "-inf", "nan" for the specials.
std::string format_number(double x);

/// JSON value for a double: non-finite values become strings, since JSON has no inf.
nlohmann::json json_number(double x);

/// CSV with a fixed header; each row must have one cell per column.
class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, std::vector<std::string> header);
  void row(const std::vector<std::string>& cells);
  const std::vector<std::string>& header() const { return header_; }

 private:
  std::ofstream out_;
  std::vector<std::string> header_;
};

/// Quote a CSV cell when it contains a delimiter, quote or newline.
std::string csv_escape(const std::string& cell);

void write_json(const std::filesystem::path& path, const nlohmann::json& value);

/// Runs task(i) for i in [0, count) on `jobs` threads. Exceptions are caught
/// per index and reported through `errors[i]` (empty string on success), so
/// one failing point never stops the others.
void run_indexed(std::size_t count, int jobs, const std::function<void(std::size_t)>& task,
                 std::vector<std::string>& errors);

}  // namespace wblab::cli
