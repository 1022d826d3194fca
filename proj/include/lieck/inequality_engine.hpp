#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lieck/catalog.hpp"
#include "lieck/constraint.hpp"
#include "lieck/expr.hpp"

namespace lieck {

enum class ExceptionStatus { Zero, PositiveSpecial, ExcludedSplit, ExcludedSymmetric };
std::string to_string(ExceptionStatus s);

struct CaseException {
  std::string region_text;
  ConstraintSet region;
  ExceptionStatus status = ExceptionStatus::Zero;
  Expr expected;  // D on the region
  std::string citation;
};

/// One reading of an archetype d-formula with its own admissibility.
struct Variant {
  std::string label;
  std::string text;
  Expr d;
  ConstraintSet where;
};

struct CaseRecord {
  std::string family;
  std::string pair;
  std::string where;
  Expr dg;
  std::vector<Variant> dh;
  std::vector<Variant> dl;
  std::optional<Expr> printed_D;
  std::string constraints_text;
  ConstraintSet constraints;
  std::string ambient;
  std::string claimed_text;
  std::string dh_catalog, dl_catalog;
  std::vector<CaseException> exceptions;
  /// Load-time transcription findings (printed D versus dg - dh - dl).
  std::vector<std::string> warnings;

  std::string id() const { return family + " (" + pair + ")"; }
  /// dg - dh - dl for a variant combination.
  Expr effective_D(const Variant& h, const Variant& l) const;
};

std::vector<CaseRecord> parse_cases(std::string_view text, const std::string& source = "cases.txt");
/// Throws DataError unless exactly 36 records load.
std::vector<CaseRecord> load_cases(const std::filesystem::path& path);

struct CasePoint {
  std::int64_t a = 0, b = 0, n = 0;
  BigInt D;
  std::string variant;
};

struct CaseReport {
  std::string id;
  std::int64_t points = 0;
  std::int64_t positive = 0;
  std::vector<CasePoint> nonpositive;  // all, including declared ones
  std::vector<std::int64_t> exception_hits;  // per declared exception
  std::vector<std::string> failures;
  std::vector<std::string> warnings;
  bool pass() const { return failures.empty(); }
};

/// Evaluates D on every lattice point of the region with n <= n_max
/// (a, b in [1, n+1]) and checks non-positive points against the exceptions.
CaseReport verify_case(const CaseRecord& c, int n_max);

struct BoundReport {
  std::string id;
  bool parsed = false;
  std::string relation;  // ">=" or "="
  std::int64_t checked = 0;
  std::int64_t mismatches = 0;
  std::vector<std::string> warnings;
};

/// Pointwise check of the printed simplification against D; never gating.
BoundReport verify_claimed_bound(const CaseRecord& c, int n_max);

struct AmbientCheck {
  bool ok = false;
  std::string detail;
  std::vector<std::string> warnings;  // archetype versus catalog differences
};

/// dg against the catalog d-formula of the ambient with composite parameters.
AmbientCheck cross_check_ambient(const CaseRecord& c, const Catalog& cat);

struct InequalityRun {
  CaseRecord record;
  CaseReport cases;
  BoundReport bound;
  AmbientCheck ambient;
};

/// All records, fanned out over `jobs` workers; output order follows input.
std::vector<InequalityRun> verify_all_cases(const std::vector<CaseRecord>& records, const Catalog& cat,
                                            int n_max, int jobs = 1);

}  // namespace lieck
