#include <doctest.h>

#include <set>

#include "lieck/cartan_type.hpp"
#include "lieck/root_system.hpp"

using namespace lieck;

TEST_CASE("cartan types validate their rank bounds") {
  CHECK(CartanType::parse("B4") == CartanType{Family::B, 4});
  CHECK(CartanType::parse("e8").to_string() == "E8");
  CHECK_THROWS_AS(CartanType::parse("X9"), InvalidArgument);
  CHECK_THROWS_AS(CartanType::make(Family::D, 2), InvalidArgument);
  CHECK_THROWS_AS(CartanType::make(Family::E, 9), InvalidArgument);
  CHECK_THROWS_AS(CartanType::make(Family::G, 3), InvalidArgument);
  CHECK(CartanType{Family::F, 4}.is_valid());
}

TEST_CASE("root counts from reflection closure") {
  CHECK(build_root_system(CartanType::make(Family::A, 1)).all_roots.size() == 2);
  CHECK(build_root_system(CartanType::make(Family::G, 2)).all_roots.size() == 12);
  CHECK(build_root_system(CartanType::make(Family::D, 4)).all_roots.size() == 24);
  for (const auto& t : all_types_up_to(8)) {
    CAPTURE(t.to_string());
    CHECK(static_cast<std::int64_t>(build_root_system(t).all_roots.size()) == t.root_count_formula());
  }
}

TEST_CASE("A1 roots are alpha and -alpha") {
  auto rs = build_root_system(CartanType::make(Family::A, 1));
  std::set<RootVec> roots(rs.all_roots.begin(), rs.all_roots.end());
  CHECK(roots == std::set<RootVec>{{1}, {-1}});
}

TEST_CASE("highest roots") {
  CHECK(highest_root(build_root_system(CartanType::make(Family::A, 2))) == RootVec{1, 1});
  CHECK(highest_root(build_root_system(CartanType::make(Family::D, 5))) == RootVec{1, 2, 2, 1, 1});
  CHECK(highest_root(build_root_system(CartanType::make(Family::C, 3))) == RootVec{2, 2, 1});
  CHECK(highest_root(build_root_system(CartanType::make(Family::B, 3))) == RootVec{1, 2, 2});
}

TEST_CASE("D_{n+1} highest root follows eq. (7) for 3 <= n <= 7") {
  for (int n = 3; n <= 7; ++n) {
    RootVec want(n + 1, 2);
    want[0] = 1;
    want[n - 1] = 1;
    want[n] = 1;
    CHECK(highest_root(build_root_system(CartanType::make(Family::D, n + 1))) == want);
  }
}

TEST_CASE("extended diagrams") {
  auto b3 = extended_diagram(build_root_system(CartanType::make(Family::B, 3)));
  CHECK(b3.marks == std::vector<int>{1, 1, 2, 2});
  CHECK(b3.neighbours(0) == std::vector<int>{2});

  auto d5 = extended_diagram(build_root_system(CartanType::make(Family::D, 5)));
  CHECK(d5.marks == std::vector<int>{1, 1, 2, 2, 1, 1});

  auto a1 = extended_diagram(build_root_system(CartanType::make(Family::A, 1)));
  REQUIRE(a1.adjacency.size() == 1);
  CHECK(a1.adjacency[0].multiplicity == 4);
}

TEST_CASE("weyl dimension examples") {
  CHECK(weyl_dim(CartanType::make(Family::A, 2), {1, 1}) == 8);
  for (int l = 2; l <= 8; ++l) {
    std::vector<int> w(l, 0);
    w[l - 1] = 1;
    CHECK(weyl_dim(CartanType::make(Family::B, l), w) == BigInt(1) << l);
  }
  CHECK(weyl_dim(CartanType::make(Family::A, 3), {0, 1, 0}) == 6);
  CHECK(weyl_dim(CartanType::make(Family::C, 3), {0, 1, 0}) == 14);
  CHECK(weyl_dim(CartanType::make(Family::D, 4), {0, 0, 1, 0}) == 8);
  CHECK(weyl_dim(CartanType::make(Family::E, 8), std::vector<int>(8, 0)) == 1);
  CHECK(weyl_dim(CartanType::make(Family::G, 2), {1, 0}) + weyl_dim(CartanType::make(Family::G, 2), {0, 1}) == 21);
}

TEST_CASE("root system properties up to rank 8") {
  for (const auto& t : all_types_up_to(8)) {
    CAPTURE(t.to_string());
    const auto rs = build_root_system(t);
    const auto pos = rs.positive_roots();
    std::set<RootVec> all(rs.all_roots.begin(), rs.all_roots.end());
    CHECK(all.size() == rs.all_roots.size());
    for (const auto& r : rs.all_roots) {
      RootVec neg = r;
      for (int& x : neg) x = -x;
      CHECK(neg != r);
      CHECK(all.count(neg) == 1);
    }
    const RootVec theta = highest_root(rs);
    bool dominant = true;
    for (const auto& r : pos) dominant = dominant && dominates(theta, r);
    CHECK(dominant);
    CHECK(weyl_dim(t, std::vector<int>(t.rank, 0)) == 1);
    // adjoint = |roots| + rank
    CHECK(static_cast<std::int64_t>(rs.all_roots.size()) + t.rank == t.dimension());
  }
}

TEST_CASE("sum of positive roots is 2 rho") {
  for (const auto& t : all_types_up_to(6)) {
    const auto rs = build_root_system(t);
    RootVec sum(t.rank, 0);
    for (const auto& r : rs.positive_roots())
      for (int i = 0; i < t.rank; ++i) sum[i] += r[i];
    // (2 rho, alpha_j^vee) = 2 for every simple root
    for (int j = 0; j < t.rank; ++j) {
      RootVec e(t.rank, 0);
      e[j] = 1;
      CHECK(2 * rs.inner(sum, e) == 2 * rs.inner(e, e));
    }
  }
}

TEST_CASE("two hyperplanes never cover an indecomposable root system") {
  for (const auto& t : all_types_up_to(4)) {
    CAPTURE(t.to_string());
    CHECK_FALSE(two_hyperplane_cover_check(build_root_system(t)));
  }
  auto a1 = root_data(build_root_system(CartanType::make(Family::A, 1)));
  CHECK_THROWS_AS(two_hyperplane_cover_check(direct_sum(a1, a1)), InvalidArgument);
}
