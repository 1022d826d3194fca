#include <doctest.h>

#include "lieck/ck_criteria.hpp"
#include "lieck/form_spec.hpp"

using namespace lieck;

namespace {

const Catalog& cat() {
  static const Catalog c = Catalog::load_default();
  return c;
}

FormInstance simple(const char* spec) { return resolve_form(cat(), spec).factors.front(); }

}  // namespace

TEST_CASE("cocompactness and rank additivity") {
  auto tr = make_triple(cat(), "su(2,2n)", "sp(1,n)", "su(1,2n)", {{'n', 3}});
  CHECK(tr.g.d() == 24);
  CHECK(tr.h.d() == 12);
  CHECK(kobayashi_cocompact(tr));
  CHECK(rank_additive(tr));

  tr = make_triple(cat(), "so(3,4)", "g2(2)", "so(1,4)");
  CHECK(kobayashi_cocompact(tr));
  CHECK(rank_additive(make_triple(cat(), "so(4,4n)", "so(3,4n)", "sp(1,n)", {{'n', 2}})));

  tr = make_triple(cat(), "sl(3,R)", "so(3)", "so(2)");
  CHECK(tr.g.d() == 5);
  CHECK_FALSE(kobayashi_cocompact(tr));
  CHECK_FALSE(rank_additive(tr));

  tr = make_triple(cat(), "so(3,4)", "g2(2)", "so(1,3)");
  CHECK_FALSE(kobayashi_cocompact(tr));
  CHECK_THROWS_AS(make_triple(cat(), "su(3)", "so(3)", "so(2)"), InvalidArgument);
}

TEST_CASE("specific Table 1 rows") {
  for (int n = 1; n <= 20; ++n) {
    auto tr = make_triple(cat(), "so(2,2n)", "so(1,2n)", "u(1,n)", {{'n', n}});
    CHECK(tr.g.d() == 4 * n);
    CHECK(tr.h.d() + tr.l.d() == 4 * n);
  }
  auto tr = make_triple(cat(), "so(8,8)", "so(7,8)", "so(1,8)");
  CHECK(tr.g.d() == 64);
  CHECK(tr.h.d() == 56);
  tr = make_triple(cat(), "so(4,4)", "so(3,4)", "so(1,4) x so(3)");
  CHECK(tr.g.d() == 16);
  CHECK(tr.h.d() + tr.l.d() == 16);
}

TEST_CASE("Table 1 verifies for n <= 50") {
  auto rows = load_table1(resolve_data_dir() / "table1.txt");
  REQUIRE(rows.size() == 14);
  for (const auto& st : verify_table1(cat(), rows, 50)) {
    CAPTURE(st.row.row);
    CHECK(st.checked == 50);
    CHECK(st.failures.empty());
  }
}

TEST_CASE("cocompactness is symmetric in h and l") {
  auto rows = load_table1(resolve_data_dir() / "table1.txt");
  for (const auto& r : rows) {
    for (int n = 1; n <= 5; ++n) {
      auto a = make_triple(cat(), r.g, r.h, r.l, {{'n', n}});
      auto b = make_triple(cat(), r.g, r.l, r.h, {{'n', n}});
      CHECK(kobayashi_cocompact(a) == kobayashi_cocompact(b));
    }
  }
}

TEST_CASE("obstruction search") {
  auto w = obstruction_search(cat(), simple("so(5,8)"), simple("so(2,5)"));
  REQUIRE(w);
  CHECK(w->g_prime.label() == "so(2,7)");
  CHECK(w->g_prime.r() == 2);
  CHECK(w->g_prime.d() == 14);
  CHECK_FALSE(obstruction_search(cat(), simple("so(5,8)"), simple("so(2,8)")));
  CHECK_FALSE(obstruction_search(cat(), simple("so(4,4)"), simple("so(1,4)")));
  CHECK_THROWS_AS(obstruction_search(cat(), simple("su(2,3)"), simple("so(1,4)")), InvalidArgument);
}

TEST_CASE("obstruction witnesses satisfy the postcondition") {
  for (int m = 1; m <= 6; ++m)
    for (int s2 = m; s2 <= 10; ++s2)
      for (int q = 1; q <= m; ++q)
        for (int s = q; s <= s2; ++s) {
          if (q + s < 3 || m + s2 < 3) continue;
          auto g = simple(("so(" + std::to_string(m) + "," + std::to_string(s2) + ")").c_str());
          auto h = simple(("so(" + std::to_string(q) + "," + std::to_string(s) + ")").c_str());
          if (auto w = obstruction_search(cat(), g, h)) {
            CHECK(w->g_prime.r() == h.r());
            CHECK(w->g_prime.d() > h.d());
          }
        }
}

TEST_CASE("no Table 1 row is killed by the obstruction search") {
  auto rows = load_table1(resolve_data_dir() / "table1.txt");
  for (const auto& r : rows) {
    for (int n = 1; n <= 20; ++n) {
      auto tr = make_triple(cat(), r.g, r.h, r.l, {{'n', n}});
      const FormInstance& g = *tr.g.noncompact().front();
      if (g.id() != "so") continue;
      for (const auto* h : tr.h.noncompact()) {
        if (h->id() != "so") continue;
        CAPTURE(r.row);
        CAPTURE(n);
        CHECK_FALSE(obstruction_search(cat(), g, *h));
      }
    }
  }
}

TEST_CASE("split forms") {
  CHECK(is_split(simple("so(6,7)")));
  CHECK(is_split(simple("sl(4,R)")));
  CHECK_FALSE(is_split(simple("so(4,7)")));
  CHECK_FALSE(is_split(simple("g2C")));
}

TEST_CASE("G2 low-rank elimination") {
  auto cands = load_g2_candidates(resolve_data_dir() / "g2_candidates.txt");
  auto rep = lowrank_elimination_search(cat(), cands);
  REQUIRE(rep.survivors.size() == 1);
  CHECK(rep.survivors.front() == "(so(6,7), so(4,7), g2(C)) ambient split");

  bool saw_su34 = false, saw_b0 = false;
  for (const auto& e : rep.entries) {
    if (e.candidate.h == "g2_C" && e.g_label == "su(3,4)") {
      saw_su34 = true;
      CHECK(e.need_r == 1);
      CHECK(e.need_d == 10);
      for (const auto& m : e.matches) CHECK_FALSE(m.survives());
    }
    if (e.outcome == "rejected (b=0)") {
      saw_b0 = true;
      CHECK(e.matches.empty());
    }
  }
  CHECK(saw_su34);
  CHECK(saw_b0);

  // g2(2) in su(3,4) needs (r=1, d=16); no rank-one l fits
  auto one = lowrank_elimination_search(cat(), {{"g2_2", "su(3,4)", "A_6"}});
  REQUIRE(one.entries.size() == 1);
  CHECK(one.entries[0].need_r == 1);
  CHECK(one.entries[0].need_d == 16);
  CHECK(one.survivors.empty());
}
