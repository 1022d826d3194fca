// One line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "lieck/catalog.hpp"
#include "lieck/ck_criteria.hpp"
#include "lieck/inequality_engine.hpp"
#include "lieck/record_file.hpp"
#include "lieck/regular_subalgebras.hpp"
#include "lieck/report.hpp"
#include "lieck/root_system.hpp"
#include "lieck/table_dims.hpp"

using namespace lieck;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

const Catalog& cat() {
  static const Catalog c = Catalog::load_default();
  return c;
}

Outcome table1() {
  auto t0 = Clock::now();
  auto rows = load_table1(resolve_data_dir() / "table1.txt");
  Outcome o;
  o.pass = rows.size() == 14;
  int checked = 0;
  for (const auto& st : verify_table1(cat(), rows, 50)) {
    o.pass = o.pass && st.failures.empty() && st.checked == 50;
    checked += st.checked;
  }
  const double s = seconds_since(t0);
  o.pass = o.pass && s < 1.0;
  std::ostringstream os;
  os << rows.size() << " rows, " << checked << " row-n pairs, " << s << " s";
  o.detail = os.str();
  return o;
}

Outcome inequalities() {
  auto t0 = Clock::now();
  auto cases = load_cases(resolve_data_dir() / "cases.txt");
  Outcome o;
  o.pass = cases.size() == 36;
  std::int64_t points = 0;
  std::map<std::string, std::size_t> nonpos;
  for (const auto& c : cases) {
    auto rep = verify_case(c, 60);
    points += rep.points;
    o.pass = o.pass && rep.pass();
    for (auto hits : rep.exception_hits) o.pass = o.pass && hits > 0;
    if (!rep.nonpositive.empty()) nonpos[rep.id] = rep.nonpositive.size();
    for (const auto& p : rep.nonpositive) {
      if (rep.id == "Bn_so (III,III)") o.pass = o.pass && p.a == p.b && 2 * p.a == p.n && p.D == 0;
      else if (rep.id == "Dn_sostar (I,I)") o.pass = o.pass && p.a == 1 && p.b == 1 && p.n == 4;
      else o.pass = false;
    }
  }
  const double s = seconds_since(t0);
  o.pass = o.pass && s < 30.0;
  std::ostringstream os;
  os << cases.size() << " cases, " << points << " points, non-positive:";
  for (const auto& [id, k] : nonpos) os << " " << id << "=" << k;
  os << ", " << s << " s";
  o.detail = os.str();
  return o;
}

Outcome roots() {
  Outcome o;
  int types = 0;
  for (const auto& t : all_types_up_to(8)) {
    ++types;
    o.pass = o.pass && static_cast<std::int64_t>(build_root_system(t).all_roots.size()) == t.root_count_formula();
  }
  for (int n = 3; n <= 7; ++n) {
    // eq. (7): alpha_1 + 2(alpha_2 + ... + alpha_{n-1}) + alpha_n + alpha_{n+1}
    RootVec want(n + 1, 2);
    want[0] = 1;
    want[n - 1] = 1;
    want[n] = 1;
    o.pass = o.pass && highest_root(build_root_system(CartanType::make(Family::D, n + 1))) == want;
  }
  o.detail = std::to_string(types) + " types incl. E6-E8, F4, G2; D4..D8 highest roots";
  return o;
}

Outcome table4() {
  auto rows = load_table4(resolve_data_dir() / "table4.txt");
  Outcome o;
  int modules = 0;
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int l = 1; l <= 8; ++l) {
      CartanType t{f, l};
      if (!t.is_valid()) continue;
      auto chk = fundamental_dim_check(rows, t);
      o.pass = o.pass && chk.pass();
      modules += chk.checked;
    }
  o.detail = std::to_string(modules) + " fundamental modules";
  return o;
}

Outcome lemma4() {
  auto t0 = Clock::now();
  Outcome o;
  int n = 0;
  for (const char* name : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4"}) {
    ++n;
    o.pass = o.pass && !two_hyperplane_cover_check(build_root_system(CartanType::parse(name)));
  }
  const double s = seconds_since(t0);
  o.pass = o.pass && s < 10.0;
  o.detail = std::to_string(n) + " systems, " + std::to_string(s) + " s";
  return o;
}

Outcome maximal_rank() {
  auto status = maximal_rank_table_check(load_table5(resolve_data_dir() / "table5.txt"), 8);
  Outcome o;
  int flagged = 0;
  bool b_row = false, d_row = false;
  for (const auto& st : status) {
    o.pass = o.pass && st.confirmed == st.row.expect_confirmed;
    if (!st.confirmed) ++flagged;
    if (st.row.ambient == "so(2*l+1)" && st.row.uses_k) b_row = st.confirmed;
    if (st.row.ambient == "so(2*l)" && st.row.derived) d_row = st.confirmed;
  }
  RunConfig cfg;
  auto sec = verify_maximal_rank_section(cfg);
  o.pass = o.pass && b_row && d_row && sec.pass;
  o.detail = "B_l and D_l so+so confirmed, " + std::to_string(flagged) + " printed rows flagged";
  return o;
}

Outcome rank_prop() {
  auto audit = rank_audit(load_dim_rows(resolve_data_dir() / "table2.txt", 2),
                          load_dim_rows(resolve_data_dir() / "table3.txt", 3), 8);
  Outcome o;
  int chains = 0;
  for (const auto& e : audit) {
    o.pass = o.pass && e.result.verdict != RankVerdict::Violation;
    chains += e.result.verdict == RankVerdict::ExceptionChain;
  }
  for (int p = 3; p <= 8; ++p)
    o.pass = o.pass &&
             rank_bound_check({Family::D, p}, {Family::B, p - 1}, false).verdict == RankVerdict::ExceptionChain;
  o.detail = std::to_string(audit.size()) + " pairs, " + std::to_string(chains) + " exception chains";
  return o;
}

Outcome substitutions() {
  struct Want {
    const char* id;
    const char* label;
    std::int64_t d;
  };
  Outcome o;
  std::string warn;
  for (const Want& w : {Want{"f4_4", "so(4,9)", 36}, Want{"f4_rank1", "sp(1,5)", 20}, Want{"f4_C", "so(4,21)", 83},
                        Want{"g2_C", "so(2,7)", 0}}) {
    const RealForm& f = cat().get(w.id);
    auto s = archetype_substitute(cat(), f);
    FormInstance in{&f, Env{}, ""};
    if (!s || s->form.label() != w.label || s->form.r() != in.r() || s->form.d() < in.d()) {
      o.pass = false;
      continue;
    }
    if (w.d != 0 && (s->paper_d ? *s->paper_d : s->form.d()) != w.d) o.pass = false;
    if (!s->warnings.empty()) warn += " " + std::string(w.id) + ": printed " + std::to_string(*s->paper_d) + ", computed " + std::to_string(s->form.d());
  }
  o.detail = "4 substitutions" + (warn.empty() ? std::string() : ";" + warn);
  return o;
}

Outcome g2() {
  auto rep = lowrank_elimination_search(cat(), load_g2_candidates(resolve_data_dir() / "g2_candidates.txt"));
  Outcome o;
  o.pass = rep.survivors.size() == 1 && rep.survivors.front() == "(so(6,7), so(4,7), g2(C)) ambient split";
  o.detail = std::to_string(rep.entries.size()) + " candidates, survivors:";
  for (const auto& s : rep.survivors) o.detail += " " + s;
  return o;
}

Outcome properties() {
  Outcome o;
  std::vector<std::string> bad;
  for (const auto& t : all_types_up_to(8)) {
    auto rs = build_root_system(t);
    for (const auto& r : rs.all_roots) {
      RootVec neg = r;
      for (auto& x : neg) x = -x;
      if (!rs.contains(neg)) bad.push_back("negation " + t.to_string());
    }
    auto hr = highest_root(rs);
    for (const auto& r : rs.positive_roots())
      if (!dominates(hr, r)) bad.push_back("dominance " + t.to_string());
  }
  for (const auto& f : enumerate_all_forms(cat(), 12))
    if (f.d() <= 0 || f.r() < 1 || f.r() > f.complex_rank()) bad.push_back("catalog " + f.label());

  auto cases = load_cases(resolve_data_dir() / "cases.txt");
  for (const auto& c : cases) {
    std::int64_t want = 0;
    for (std::int64_t n = 1; n <= 10; ++n)
      for (std::int64_t a = 1; a <= n + 1; ++a)
        for (std::int64_t b = 1; b <= n + 1; ++b) {
          Env env{{'a', a}, {'b', b}, {'n', n}};
          if (!satisfies(c.constraints, env)) continue;
          for (const auto& h : c.dh) {
            Env hv = env;
            hv.set('x', a);
            if (!satisfies(h.where, hv)) continue;
            for (const auto& l : c.dl) {
              Env lv = env;
              lv.set('x', b);
              want += satisfies(l.where, lv);
            }
          }
        }
    if (verify_case(c, 10).points != want) bad.push_back("count " + c.id());
  }

  RunConfig one;
  one.n_max = 20;
  RunConfig four = one;
  four.jobs = 4;
  if (report_json(run_verify("all", one), one).dump() != report_json(run_verify("all", four), four).dump())
    bad.push_back("report determinism");

  o.pass = bad.empty();
  o.detail = bad.empty() ? "negation, dominance, catalog, count oracle, determinism" : bad.front();
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"Table 1 reproduction", table1},
      {"inequality suite", inequalities},
      {"root-system oracle", roots},
      {"Weyl dimension vs Table 4", table4},
      {"root-sum lemma brute force", lemma4},
      {"Borel-de Siebenthal vs Table 5", maximal_rank},
      {"rank proposition audit", rank_prop},
      {"exceptional substitutions", substitutions},
      {"G2 elimination", g2},
      {"property suite", properties},
  };
  int failed = 0;
  int i = 0;
  for (const auto& [name, fn] : criteria) {
    ++i;
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("criterion %d: %s %s (%s)\n", i, o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
