#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lieck/cartan_type.hpp"
#include "lieck/expr.hpp"
#include "lieck/regular_subalgebras.hpp"

namespace lieck {

/// A family letter with a rank expression in n, e.g. "A:2*n-1".
struct TypeTemplate {
  Family family = Family::A;
  Expr rank;
  std::string text;
  /// Plain data; may be an invalid type at small n.
  CartanType at(std::int64_t n) const;
};

/// One row of the irreducible-triple or non-maximal dimension tables.
struct DimFormulaRow {
  int table = 2;
  int row = 0;
  std::string inclusion_text;
  std::string second_text;
  std::string dim_text;
  Expr dim;
  std::string indicator;  // as printed, never evaluated
  std::string note;
  std::string declared_discrepancy;
  TypeTemplate h;
  std::optional<TypeTemplate> mid;
  int n_lo = 1, n_hi = 8;
  std::optional<std::pair<int, int>> k_range;
  std::optional<int> target_at_k;
  std::optional<TypeTemplate> oracle;
  std::vector<std::pair<Expr, Expr>> oracle_weight;  // (coefficient, node)
};

std::vector<DimFormulaRow> load_dim_rows(const std::filesystem::path& path, int table);

/// Printed dimension at (n, k); k is ignored by rows without a k column.
Rational evaluate_row(const DimFormulaRow& row, std::int64_t n, std::int64_t k = 1);
/// Weyl dimension of the oracle weight, when the row has one.
std::optional<BigInt> oracle_dim(const DimFormulaRow& row, std::int64_t n, std::int64_t k = 1);

struct DimRowReport {
  int table = 2;
  int row = 0;
  std::string inclusion_text;
  int points = 0;
  std::vector<std::string> failures;  // gating
  std::vector<std::string> flags;     // non-positive, non-integral, non-monotone, declared mismatches
  bool pass() const { return failures.empty(); }
};

/// Positivity, integrality, monotonicity in k, the k = 1 target size and the
/// Weyl oracle on the grid n <= n_hi, k <= 6 where the named ranks fit the bound.
std::vector<DimRowReport> table_consistency_report(const std::vector<DimFormulaRow>& rows, int rank_bound);

struct FundamentalRow {
  Family family = Family::A;
  int l_lo = 1, l_hi = 8;
  Expr r_lo, r_hi;
  std::string dim_text;
  Expr dim;
  std::string indicator;
};

std::vector<FundamentalRow> load_table4(const std::filesystem::path& path);

struct FundamentalCheck {
  CartanType type;
  int checked = 0;
  std::vector<std::string> failures;
  bool pass() const { return failures.empty() && checked == type.rank; }
};

/// Printed dim of every fundamental module of t against weyl_dim.
FundamentalCheck fundamental_dim_check(const std::vector<FundamentalRow>& rows, const CartanType& t);

struct RankAuditEntry {
  std::string source;
  CartanType g, h;
  RankBoundResult result;
};

/// Simple non-regular (g, h) pairs read off both dimension tables, with rank(g)
/// <= rank_bound; an inclusion into a module of size N is audited in A_{N-1}.
std::vector<RankAuditEntry> rank_audit(const std::vector<DimFormulaRow>& table2,
                                       const std::vector<DimFormulaRow>& table3, int rank_bound);

}  // namespace lieck
