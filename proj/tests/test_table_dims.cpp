#include <doctest.h>

#include "lieck/record_file.hpp"
#include "lieck/root_system.hpp"
#include "lieck/table_dims.hpp"

using namespace lieck;

namespace {

const std::vector<DimFormulaRow>& t2() {
  static const auto r = load_dim_rows(resolve_data_dir() / "table2.txt", 2);
  return r;
}

const std::vector<DimFormulaRow>& t3() {
  static const auto r = load_dim_rows(resolve_data_dir() / "table3.txt", 3);
  return r;
}

}  // namespace

TEST_CASE("printed Table 2 values") {
  REQUIRE(t2().size() == 6);
  CHECK(evaluate_row(t2()[0], 2, 2) == 10);  // S^2 of the 4-dim sp(2) module
  CHECK(evaluate_row(t2()[0], 2, 1) == 4);
  CHECK(evaluate_row(t2()[1], 3, 1) == 7);
  CHECK(evaluate_row(t2()[3], 3) == 5);
  CHECK(*oracle_dim(t2()[3], 3) == 15);
  for (std::int64_t n = 3; n <= 8; ++n) CHECK(*oracle_dim(t2()[3], n) == n * evaluate_row(t2()[3], n));
  for (std::int64_t n = 1; n <= 8; ++n) CHECK(*oracle_dim(t2()[4], n) == n * evaluate_row(t2()[4], n));
  for (std::int64_t n = 2; n <= 8; ++n) CHECK(*oracle_dim(t2()[5], n, 1) == BigInt(1) << n);
  for (std::int64_t n = 2; n <= 8; ++n)
    for (std::int64_t k = 1; k <= 6; ++k) CHECK(*oracle_dim(t2()[0], n, k) == evaluate_row(t2()[0], n, k));
  CHECK_FALSE(oracle_dim(t2()[1], 3));
}

TEST_CASE("k = 1 values are the size of the middle algebra's defining module") {
  for (int i = 0; i < 3; ++i) {
    const auto& row = t2()[i];
    for (int n = row.n_lo; n <= row.n_hi; ++n) {
      CAPTURE(row.row);
      CHECK(evaluate_row(row, n, 1) - 1 == row.mid->at(n).rank);
    }
  }
}

TEST_CASE("printed Table 3 values") {
  REQUIRE(t3().size() == 3);
  CHECK(evaluate_row(t3()[0], 2) == 3);
  CHECK(evaluate_row(t3()[1], 1) == 3);
  CHECK(t3()[2].indicator == "(-1)^{n+1)k}");
}

TEST_CASE("consistency report: gated checks pass, discrepancies are flagged") {
  auto reps = table_consistency_report(t2(), 8);
  auto more = table_consistency_report(t3(), 8);
  reps.insert(reps.end(), more.begin(), more.end());
  for (const auto& r : reps) {
    CAPTURE(r.table);
    CAPTURE(r.row);
    CHECK(r.pass());
    CHECK(r.points > 0);
  }
  CHECK_FALSE(reps[3].flags.empty());
  CHECK_FALSE(reps[5].flags.empty());
  CHECK(reps[0].flags.empty());
}

TEST_CASE("a wrong oracle without a declared discrepancy gates") {
  auto row = t2()[3];
  row.declared_discrepancy.clear();
  auto reps = table_consistency_report({row}, 8);
  REQUIRE(reps.size() == 1);
  CHECK_FALSE(reps[0].pass());
}

TEST_CASE("Table 4 against weyl_dim") {
  auto rows = load_table4(resolve_data_dir() / "table4.txt");
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int l = 1; l <= 8; ++l) {
      CartanType t{f, l};
      if (!t.is_valid()) continue;
      auto chk = fundamental_dim_check(rows, t);
      CAPTURE(t.to_string());
      CHECK(chk.pass());
    }
  auto b3 = fundamental_dim_check(rows, CartanType{Family::B, 3});
  CHECK(b3.checked == 3);
}

TEST_CASE("rank audit") {
  auto audit = rank_audit(t2(), t3(), 8);
  CHECK(audit.size() == 21);
  int chains = 0;
  for (const auto& e : audit) {
    CAPTURE(e.source);
    CHECK(e.result.verdict != RankVerdict::Violation);
    if (e.result.verdict == RankVerdict::ExceptionChain) {
      ++chains;
      CHECK(e.g.family == Family::D);
      CHECK(e.h.family == Family::B);
    }
  }
  CHECK(chains > 0);
}
