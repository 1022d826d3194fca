#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lieck {

/// Malformed or missing data file content. The message carries source:line.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One `key=value; key=value` line. Keys may repeat; order is preserved.
struct Record {
  std::string source;
  int line = 0;
  std::vector<std::pair<std::string, std::string>> fields;

  bool has(std::string_view key) const;
  /// Throws DataError when absent or repeated.
  const std::string& get(std::string_view key) const;
  std::string get_or(std::string_view key, std::string fallback) const;
  std::vector<std::string> all(std::string_view key) const;
  std::string where() const { return source + ":" + std::to_string(line); }
  [[noreturn]] void fail(const std::string& msg) const;
};

std::vector<Record> parse_records(std::string_view text, const std::string& source_name);
std::vector<Record> load_records(const std::filesystem::path& path);

/// Directory holding the shipped data files: explicit override, then
/// $LIECK_DATA_DIR, then the compiled-in default.
std::filesystem::path resolve_data_dir(const std::string& override_dir = "");

}  // namespace lieck
