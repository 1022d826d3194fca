#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lieck/catalog.hpp"

namespace lieck {

/// A standard triple (g, h, l) under one parameter binding.
struct Triple {
  ReductiveForm g;
  ReductiveForm h;
  ReductiveForm l;
  Env env;
};

/// Resolves the three specs; g must have exactly one non-compact factor.
Triple make_triple(const Catalog& cat, const std::string& g, const std::string& h,
                   const std::string& l, const Env& env = {});

/// d(g) = d(h) + d(l).
bool kobayashi_cocompact(const Triple& tr);
/// r(g) = r(h) + r(l) with both summands at least 1.
bool rank_additive(const Triple& tr);
/// Absolutely simple with real rank equal to complex rank.
bool is_split(const FormInstance& f);

struct Table1Row {
  int row = 0;
  std::string g, h, l;
  std::optional<int> duplicate_of;
  std::optional<int> special_case_of;  // equals that row at n = 1
};

struct Table1Status {
  Table1Row row;
  int checked = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  bool pass() const { return failures.empty() && checked > 0; }
};

std::vector<Table1Row> load_table1(const std::filesystem::path& path);
std::vector<Table1Status> verify_table1(const Catalog& cat, const std::vector<Table1Row>& rows,
                                        int n_max);

/// Signature (p, q) with p <= q of an so/su/sp instance.
std::pair<std::int64_t, std::int64_t> signature(const FormInstance& f);

struct ObstructionWitness {
  FormInstance g_prime;
  std::int64_t q = 0;
  std::int64_t s_prime = 0;
};

/// Theorem (kob-d) search along so(q,s) in so(q,s') in so(m,s''): s < s' <= s'',
/// s' = s mod 2, q <= m, first witness by increasing s'. Non-so inputs throw.
std::optional<ObstructionWitness> obstruction_search(const Catalog& cat, const FormInstance& g,
                                                     const FormInstance& h);

struct G2Candidate {
  std::string h;  // template id, g2_2 or g2_C
  std::string g;  // form spec
  std::string section;
};

struct LowRankMatch {
  std::string l_label;
  std::string l_id;
  std::int64_t d = 0, r = 0;
  std::string status;  // infeasible-*, feasible-signature, manual review
  bool survives() const { return status == "feasible-signature" || status == "manual review"; }
};

struct LowRankEntry {
  G2Candidate candidate;
  std::string g_label;
  std::int64_t need_r = 0, need_d = 0;
  std::string outcome;  // searched, rejected (b=0), duplicate of ...
  bool ambient_split = false;
  std::vector<LowRankMatch> matches;
};

struct LowRankReport {
  std::vector<LowRankEntry> entries;
  /// (g, l, h) label triples that survive every feasibility filter.
  std::vector<std::string> survivors;
};

std::vector<G2Candidate> load_g2_candidates(const std::filesystem::path& path);
LowRankReport lowrank_elimination_search(const Catalog& cat, const std::vector<G2Candidate>& cands);

}  // namespace lieck
