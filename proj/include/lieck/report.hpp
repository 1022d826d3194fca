#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace lieck {

using Json = nlohmann::json;

inline constexpr int kReportSchema = 1;

struct RunConfig {
  int n_max = 60;
  int rank_bound = 8;
  /// The covering search is exponential; lemma4 runs to this rank.
  int lemma_rank = 4;
  std::filesystem::path data_dir;
  int jobs = 1;
};

/// One verify target. `pass` covers gated assertions only.
struct Section {
  std::string name;
  bool pass = true;
  Json data = Json::object();
  std::vector<std::string> text;
  int warnings = 0;
};

Section verify_table1_section(const RunConfig& cfg);
Section verify_inequalities_section(const RunConfig& cfg);
Section verify_lemma4_section(const RunConfig& cfg);
Section verify_tables_section(const RunConfig& cfg);
Section verify_maximal_rank_section(const RunConfig& cfg);

/// "all" or one of table1, inequalities, lemma4, tables, maximal-rank.
std::vector<Section> run_verify(const std::string& target, const RunConfig& cfg);
const std::vector<std::string>& verify_targets();

/// {"schema": 1, "config": ..., "pass": ..., "sections": {...}}; keys sorted.
Json report_json(const std::vector<Section>& sections, const RunConfig& cfg);
std::string render_text(const std::vector<Section>& sections);
/// One line per JSON leaf: section,pointer,value.
std::string render_csv(const Json& report);

}  // namespace lieck
