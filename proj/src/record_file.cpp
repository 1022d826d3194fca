#include "lieck/record_file.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "lieck/constraint.hpp"

#ifndef LIECK_DEFAULT_DATA_DIR
#define LIECK_DEFAULT_DATA_DIR "data"
#endif

namespace lieck {

bool Record::has(std::string_view key) const {
  for (const auto& [k, v] : fields)
    if (k == key) return true;
  return false;
}

const std::string& Record::get(std::string_view key) const {
  const std::string* found = nullptr;
  for (const auto& [k, v] : fields) {
    if (k != key) continue;
    if (found) fail("field '" + std::string(key) + "' repeated");
    found = &v;
  }
  if (!found) fail("missing field '" + std::string(key) + "'");
  return *found;
}

std::string Record::get_or(std::string_view key, std::string fallback) const {
  return has(key) ? get(key) : fallback;
}

std::vector<std::string> Record::all(std::string_view key) const {
  std::vector<std::string> out;
  for (const auto& [k, v] : fields)
    if (k == key) out.push_back(v);
  return out;
}

void Record::fail(const std::string& msg) const { throw DataError(where() + ": " + msg); }

std::vector<Record> parse_records(std::string_view text, const std::string& source_name) {
  std::vector<Record> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    Record rec;
    rec.source = source_name;
    rec.line = no;
    for (const auto& field : split_top_level(line, ';')) {
      if (field.empty()) continue;
      auto eq = field.find('=');
      if (eq == std::string::npos || eq == 0)
        throw DataError(source_name + ":" + std::to_string(no) + ": field without key: '" + field + "'");
      rec.fields.emplace_back(trim(field.substr(0, eq)), trim(field.substr(eq + 1)));
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<Record> load_records(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open data file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_records(ss.str(), path.filename().string());
}

std::filesystem::path resolve_data_dir(const std::string& override_dir) {
  if (!override_dir.empty()) return override_dir;
  if (const char* env = std::getenv("LIECK_DATA_DIR"); env && *env) return env;
  return LIECK_DEFAULT_DATA_DIR;
}

}  // namespace lieck
