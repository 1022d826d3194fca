#include <doctest.h>

#include <set>

#include "lieck/record_file.hpp"
#include "lieck/regular_subalgebras.hpp"

using namespace lieck;

namespace {

CartanType T(const char* s) { return CartanType::parse(s); }

bool has_type(const std::vector<SubalgebraRecord>& recs, const SubalgebraType& t) {
  for (const auto& r : recs)
    if (r.type == t) return true;
  return false;
}

}  // namespace

TEST_CASE("normalization of low-rank labels") {
  CHECK(normalize({{Family::D, 2}}) == normalize({T("A1"), T("A1")}));
  CHECK(normalize({{Family::D, 3}}).summands == std::vector<CartanType>{T("A3")});
  CHECK(normalize({{Family::C, 2}}).summands == std::vector<CartanType>{T("B2")});
  CHECK(normalize({{Family::B, 1}}).summands == std::vector<CartanType>{T("A1")});
  auto torus = normalize({{Family::D, 1}});
  CHECK(torus.summands.empty());
  CHECK(torus.torus_rank == 1);
}

TEST_CASE("extended diagram deletions") {
  CHECK(delete_extended_nodes(T("B4"), {2}) == normalize({T("A1"), T("A1"), T("B2")}));
  CHECK(delete_extended_nodes(T("G2"), {1}).summands == std::vector<CartanType>{T("A2")});
  for (int i = 0; i <= 3; ++i) {
    for (const auto& s : delete_extended_nodes(T("A3"), {i}).summands) CHECK(s.family == Family::A);
  }
  CHECK(delete_extended_nodes(T("A3"), {0}).summands == std::vector<CartanType>{T("A3")});
}

TEST_CASE("single deletions keep the ambient rank") {
  for (const auto& t : all_types_up_to(8)) {
    CAPTURE(t.to_string());
    for (const auto& r : borel_de_siebenthal_step(t))
      CHECK(r.type.semisimple_rank() + r.type.torus_rank == t.rank);
  }
}

TEST_CASE("regular closures") {
  for (const auto& r : regular_closure(T("C4"), 3)) {
    for (const auto& s : r.type.summands) {
      CAPTURE(r.type.to_string());
      CHECK((s.family == Family::A || s.family == Family::C || s.family == Family::B));
      if (s.family == Family::B) CHECK(s.rank == 2);  // C2 written as B2
      if (s.family == Family::A) CHECK(s.rank <= 3);
    }
  }
  auto b4 = regular_closure(T("B4"), 4);
  CHECK(closure_contains_summand(b4, T("D4")));
  CHECK(has_type(b4, normalize({T("A1"), T("A1"), T("B2")})));
  for (const auto& r : regular_closure(T("A2"), 5))
    for (const auto& s : r.type.summands) CHECK(s.family == Family::A);
  CHECK(closure_contains_summand(regular_closure(T("B6"), 6), T("D6")));
}

TEST_CASE("closure is a fixpoint at full depth") {
  for (const char* name : {"B4", "C3", "D5", "G2", "F4"}) {
    const CartanType t = T(name);
    auto a = regular_closure(t, t.rank);
    auto b = regular_closure(t, t.rank + 2);
    std::set<SubalgebraType> sa, sb;
    for (const auto& r : a) sa.insert(r.type);
    for (const auto& r : b) sb.insert(r.type);
    CAPTURE(name);
    CHECK(sa == sb);
  }
}

TEST_CASE("rank bound verdicts") {
  for (int p = 3; p <= 8; ++p)
    CHECK(rank_bound_check({Family::D, p}, {Family::B, p - 1}, false).verdict == RankVerdict::ExceptionChain);
  CHECK(rank_bound_check(T("A9"), T("B5"), false).verdict == RankVerdict::BoundHolds);
  CHECK(rank_bound_check(T("B6"), T("B5"), false).verdict == RankVerdict::ExceptionChain);
  CHECK(rank_bound_check(T("A3"), T("A3"), true).verdict == RankVerdict::NotApplicable);
  CHECK(rank_bound_check(T("A4"), T("A3"), false).verdict == RankVerdict::Violation);
  CHECK_THROWS_AS(rank_bound_check(T("A3"), T("B4"), false), InvalidArgument);
  CHECK_THROWS_AS(rank_bound_check(T("A3"), CartanType{Family::D, 2}, false), InvalidArgument);
}

TEST_CASE("classical notation readings") {
  std::string why;
  auto t = classical_notation_type("so(2)", why);
  REQUIRE(t);
  CHECK(t->torus_rank == 1);
  CHECK(t->summands.empty());
  t = classical_notation_type("gl(4)", why);
  REQUIRE(t);
  CHECK(t->summands == std::vector<CartanType>{T("A3")});
  CHECK(t->torus_rank == 1);
  CHECK_FALSE(classical_notation_type("sp(5)", why));
  CHECK_FALSE(why.empty());
}

TEST_CASE("maximal-rank table against single deletions") {
  auto rows = load_table5(resolve_data_dir() / "table5.txt");
  auto status = maximal_rank_table_check(rows, 8);
  REQUIRE(status.size() == 9);
  for (const auto& st : status) {
    CAPTURE(st.row.row);
    CHECK(st.confirmed == st.row.expect_confirmed);
    CHECK(st.instances > 0);
  }
  CHECK(status[0].confirmed);  // B_l so+so row
  CHECK_FALSE(status[1].confirmed);  // sp(2(l-k)+1) has odd size
  CHECK(status[8].row.derived);
  CHECK(status[8].confirmed);  // so(2k)+so(2(l-k)) in D_l
}
