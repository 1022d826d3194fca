#include <doctest.h>

#include <map>

#include "lieck/catalog.hpp"
#include "lieck/form_spec.hpp"

using namespace lieck;

namespace {

const Catalog& cat() {
  static const Catalog c = Catalog::load_default();
  return c;
}

ReductiveForm form(const char* spec, Env env = {}) { return resolve_form(cat(), spec, env); }

}  // namespace

TEST_CASE("catalog entries") {
  auto f44 = cat().instance("f4_4", std::nullopt, {});
  CHECK(f44.d() == 28);
  CHECK(f44.r() == 4);
  for (int n = 1; n <= 10; ++n)
    CHECK(cat().instance("su", Family::A, Env{{'a', 2}, {'t', 2 * n + 1}}).d() == 8 * n);
  auto k = cat().compact("sp(1)");
  CHECK(k.d() == 0);
  CHECK(k.r() == 0);
  CHECK(cat().instance("su_star", Family::A, Env{{'t', 7}}).r() == 3);
  CHECK(cat().instance("so_star", Family::D, Env{{'t', 5}}).r() == 2);
  CHECK(cat().instance("g2_2", std::nullopt, {}).r() == 2);
  CHECK_THROWS_AS(cat().instance("su", Family::A, Env{{'a', 3}, {'t', 2}}).d(), ConstraintViolation);
}

TEST_CASE("form specs resolve") {
  CHECK(form("so(1,2n)", {{'n', 5}}).d() == 10);
  CHECK(form("sp(3,R)").d() == 12);
  CHECK(form("sp(1,n) x sp(1)", {{'n', 3}}).d() == 12);
  CHECK(form("u(1,2n)", {{'n', 2}}).d() == form("su(1,2n)", {{'n', 2}}).d());
  CHECK(form("u(1,2n)", {{'n', 2}}).r() == 1);
  CHECK(form("g2C").d() == 14);
  CHECK(form("g2(2)").d() == 8);
  CHECK(form("so(6,7)").factors.front().label() == "so(6,7)");
  CHECK(form("so(7,6)").factors.front().label() == "so(6,7)");
  CHECK_THROWS(form("xy(1,2)"));
}

TEST_CASE("real forms of a type with rank and d targets") {
  bool found = false;
  for (const auto& f : enumerate_real_forms(cat(), CartanType::make(Family::A, 6), {1, std::nullopt}))
    found = found || (f.label() == "su(1,6)" && f.d() == 12);
  CHECK(found);

  auto b6 = enumerate_real_forms(cat(), CartanType::make(Family::B, 6), {4, 36});
  REQUIRE(b6.size() == 1);
  CHECK(b6.front().label() == "so(4,9)");
  CHECK(enumerate_real_forms(cat(), CartanType::make(Family::A, 1), {2, std::nullopt}).empty());
}

TEST_CASE("exceptional substitutions") {
  auto sub = [](const char* id) { return archetype_substitute(cat(), cat().get(id)); };
  auto s = sub("f4_4");
  REQUIRE(s);
  CHECK(s->form.label() == "so(4,9)");
  CHECK(s->form.d() == 36);
  s = sub("f4_rank1");
  REQUIRE(s);
  CHECK(s->form.label() == "sp(1,5)");
  CHECK(s->form.d() == 20);
  CHECK(s->form.r() == 1);
  s = sub("g2_C");
  REQUIRE(s);
  CHECK(s->form.label() == "so(2,7)");
  s = sub("f4_C");
  REQUIRE(s);
  CHECK(s->form.label() == "so(4,21)");
  CHECK(s->form.r() == 4);
  CHECK(s->paper_d == 83);
  CHECK(s->form.d() == 84);  // a(2t+1-a) with a=4, t=12; the printed 83 is a warning
  CHECK(s->warnings.size() == 1);
  CHECK_THROWS_AS(archetype_substitute(cat(), cat().get("su", Family::A)), InvalidArgument);

  for (const auto& f : cat().forms()) {
    if (!f.is_exceptional()) continue;
    auto r = archetype_substitute(cat(), f);
    if (!r) continue;
    FormInstance in{&f, Env{}, ""};
    CAPTURE(f.key());
    CHECK(r->form.r() == in.r());
    CHECK(r->form.d() >= in.d());
  }
}

TEST_CASE("catalog constraints hold up to rank 12") {
  for (const auto& f : enumerate_all_forms(cat(), 12)) {
    CAPTURE(f.label());
    CartanType t{f.form->family.value_or(Family::A), f.rank()};
    const std::int64_t dim = t.dimension() * (f.form->complex_as_real ? 2 : 1);
    CHECK(f.d() > 0);
    CHECK(f.d() <= dim);
    CHECK(f.r() >= 1);
    CHECK(f.r() <= f.complex_rank());
  }
}

TEST_CASE("split forms maximize d within a classical type") {
  for (Family fam : {Family::A, Family::B, Family::C, Family::D}) {
    for (int l = 1; l <= 8; ++l) {
      CartanType t{fam, l};
      if (!t.is_valid()) continue;
      std::int64_t best = 0, split = -1;
      for (const auto& f : enumerate_real_forms(cat(), t)) {
        if (f.form->complex_as_real) continue;
        best = std::max(best, f.d());
        if (f.r() == f.rank()) split = std::max(split, f.d());
      }
      CAPTURE(t.to_string());
      CHECK(split == best);
    }
  }
}

TEST_CASE("Observation 1: an archetype attains the largest d at each real rank") {
  // fixed real rank a, all classical non-compact forms of complex rank <= 10
  std::map<std::int64_t, std::int64_t> best;
  std::map<std::int64_t, bool> by_archetype;
  for (const auto& f : enumerate_all_forms(cat(), 10)) {
    if (f.form->is_exceptional() || f.complex_rank() > 10) continue;
    best[f.r()] = std::max(best[f.r()], f.d());
  }
  for (const auto& f : enumerate_all_forms(cat(), 10)) {
    if (f.form->is_exceptional() || f.complex_rank() > 10) continue;
    if (f.d() == best[f.r()] && !f.form->archetype.empty()) by_archetype[f.r()] = true;
  }
  for (const auto& [a, d] : best) {
    CAPTURE(a);
    CHECK(by_archetype[a]);
  }
}
