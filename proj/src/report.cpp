#include "lieck/report.hpp"

#include <algorithm>
#include <sstream>

#include "lieck/ck_criteria.hpp"
#include "lieck/inequality_engine.hpp"
#include "lieck/regular_subalgebras.hpp"
#include "lieck/root_system.hpp"
#include "lieck/table_dims.hpp"

namespace lieck {

namespace {

std::filesystem::path data_dir(const RunConfig& cfg) { return resolve_data_dir(cfg.data_dir.string()); }

Catalog load_catalog(const RunConfig& cfg) { return Catalog::load(data_dir(cfg) / "catalog.txt"); }

std::string verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

void add_lines(Section& s, const std::string& prefix, const std::vector<std::string>& items) {
  for (const auto& i : items) s.text.push_back(prefix + i);
}

void dedupe(std::vector<std::string>& v) {
  std::vector<std::string> out;
  for (auto& x : v)
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(std::move(x));
  v = std::move(out);
}

Json point_json(const CasePoint& p) {
  return Json{{"a", p.a}, {"b", p.b}, {"n", p.n}, {"D", p.D.str()}, {"variant", p.variant}};
}

}  // namespace

Section verify_table1_section(const RunConfig& cfg) {
  Section s;
  s.name = "table1";
  const Catalog cat = load_catalog(cfg);
  const auto rows = load_table1(data_dir(cfg) / "table1.txt");
  Json items = Json::array();
  for (const auto& st : verify_table1(cat, rows, cfg.n_max)) {
    s.pass = s.pass && st.pass();
    items.push_back(Json{{"row", st.row.row},
                         {"g", st.row.g},
                         {"h", st.row.h},
                         {"l", st.row.l},
                         {"checked", st.checked},
                         {"pass", st.pass()},
                         {"failures", st.failures},
                         {"notes", st.notes}});
    s.text.push_back("  row " + std::to_string(st.row.row) + " " + verdict(st.pass()) + "  (" + st.row.g + ", " +
                     st.row.h + ", " + st.row.l + ")  n=1.." + std::to_string(cfg.n_max));
    add_lines(s, "    fail: ", st.failures);
    add_lines(s, "    note: ", st.notes);
  }
  s.data["rows"] = std::move(items);
  s.data["n_max"] = cfg.n_max;
  return s;
}

Section verify_inequalities_section(const RunConfig& cfg) {
  Section s;
  s.name = "inequalities";
  const Catalog cat = load_catalog(cfg);
  const auto records = load_cases(data_dir(cfg) / "cases.txt");
  Json cases = Json::array();
  std::int64_t total_points = 0;
  Json nonpositive = Json::array();
  for (const auto& run : verify_all_cases(records, cat, cfg.n_max, cfg.jobs)) {
    const auto& c = run.cases;
    const bool ok = c.pass() && run.ambient.ok;
    s.pass = s.pass && ok;
    total_points += c.points;
    std::vector<std::string> warnings = run.record.warnings;
    warnings.insert(warnings.end(), c.warnings.begin(), c.warnings.end());
    warnings.insert(warnings.end(), run.bound.warnings.begin(), run.bound.warnings.end());
    warnings.insert(warnings.end(), run.ambient.warnings.begin(), run.ambient.warnings.end());
    dedupe(warnings);
    s.warnings += static_cast<int>(warnings.size());

    Json pts = Json::array();
    for (const auto& p : c.nonpositive) {
      pts.push_back(point_json(p));
      Json q = point_json(p);
      q["case"] = c.id;
      nonpositive.push_back(std::move(q));
    }
    Json exc = Json::array();
    for (std::size_t i = 0; i < run.record.exceptions.size(); ++i) {
      const auto& e = run.record.exceptions[i];
      exc.push_back(Json{{"region", e.region_text},
                         {"status", to_string(e.status)},
                         {"expected", e.expected.to_string()},
                         {"citation", e.citation},
                         {"hits", i < c.exception_hits.size() ? c.exception_hits[i] : 0}});
    }
    cases.push_back(Json{
        {"id", c.id},
        {"pass", ok},
        {"points", c.points},
        {"positive", c.positive},
        {"nonpositive", std::move(pts)},
        {"exceptions", std::move(exc)},
        {"failures", c.failures},
        {"warnings", warnings},
        {"claimed_bound",
         Json{{"text", run.record.claimed_text},
              {"parsed", run.bound.parsed},
              {"relation", run.bound.relation},
              {"checked", run.bound.checked},
              {"mismatches", run.bound.mismatches}}},
        {"ambient", Json{{"ok", run.ambient.ok}, {"detail", run.ambient.detail}}},
    });
    s.text.push_back("  " + c.id + " " + verdict(ok) + "  points=" + std::to_string(c.points) +
                     " nonpositive=" + std::to_string(c.nonpositive.size()));
    add_lines(s, "    fail: ", c.failures);
    if (!run.ambient.ok) s.text.push_back("    fail: ambient " + run.ambient.detail);
    add_lines(s, "    warn: ", warnings);
  }
  s.data["cases"] = std::move(cases);
  s.data["case_count"] = records.size();
  s.data["points"] = total_points;
  s.data["nonpositive_points"] = std::move(nonpositive);
  s.data["n_max"] = cfg.n_max;
  s.text.insert(s.text.begin(), "  " + std::to_string(records.size()) + " cases, " + std::to_string(total_points) +
                                     " lattice points");

  // exceptional-form substitutions
  Json subs = Json::array();
  for (const auto& f : cat.forms()) {
    if (!f.is_exceptional() || f.substitute.empty()) continue;
    auto sub = archetype_substitute(cat, f);
    FormInstance in{&f, Env{}, ""};
    const bool ok = sub && sub->form.r() == in.r() && sub->form.d() >= in.d();
    std::vector<std::string> gating, info;
    if (sub)
      for (const auto& w : sub->warnings) (w.rfind("printed d=", 0) == 0 ? info : gating).push_back(w);
    const bool pass = ok && gating.empty();
    s.pass = s.pass && pass;
    s.warnings += static_cast<int>(info.size());
    Json j{{"form", in.label()}, {"d", in.d()}, {"r", in.r()}, {"pass", pass}, {"warnings", info},
           {"failures", gating}};
    if (sub) {
      j["substitute"] = sub->form.label();
      j["substitute_d"] = sub->form.d();
      j["substitute_r"] = sub->form.r();
      if (sub->paper_d) j["printed_d"] = *sub->paper_d;
    }
    subs.push_back(std::move(j));
    s.text.push_back("  substitute " + in.label() + " -> " + (sub ? sub->form.label() : "none") + " " +
                     verdict(pass));
    add_lines(s, "    fail: ", gating);
    add_lines(s, "    warn: ", info);
  }
  s.data["substitutions"] = std::move(subs);

  // G2 low-rank elimination
  const auto rep = lowrank_elimination_search(cat, load_g2_candidates(data_dir(cfg) / "g2_candidates.txt"));
  Json entries = Json::array();
  for (const auto& e : rep.entries) {
    Json m = Json::array();
    for (const auto& x : e.matches)
      m.push_back(Json{{"l", x.l_label}, {"d", x.d}, {"r", x.r}, {"status", x.status}});
    entries.push_back(Json{{"h", e.candidate.h},
                           {"g", e.g_label},
                           {"need_r", e.need_r},
                           {"need_d", e.need_d},
                           {"outcome", e.outcome},
                           {"ambient_split", e.ambient_split},
                           {"matches", std::move(m)}});
  }
  const bool g2_ok = rep.survivors.size() == 1 && rep.survivors.front().ends_with("ambient split");
  s.pass = s.pass && g2_ok;
  s.data["g2_elimination"] = Json{{"entries", std::move(entries)}, {"survivors", rep.survivors}, {"pass", g2_ok}};
  s.text.push_back("  G2 elimination " + verdict(g2_ok) + ": " + std::to_string(rep.survivors.size()) +
                   " surviving triple(s)");
  add_lines(s, "    ", rep.survivors);
  return s;
}

Section verify_lemma4_section(const RunConfig& cfg) {
  Section s;
  s.name = "lemma4";
  Json items = Json::array();
  for (const auto& t : all_types_up_to(cfg.lemma_rank)) {
    const RootSystem rs = build_root_system(t);
    const bool cover = two_hyperplane_cover_check(rs);
    s.pass = s.pass && !cover;
    items.push_back(Json{{"type", t.to_string()}, {"roots", rs.all_roots.size()}, {"cover", cover}});
    s.text.push_back("  " + t.to_string() + " " + (cover ? "FAIL cover found" : "PASS no cover"));
  }
  s.data["systems"] = std::move(items);
  s.data["rank_bound"] = cfg.lemma_rank;
  return s;
}

Section verify_tables_section(const RunConfig& cfg) {
  Section s;
  s.name = "tables";
  const auto dir = data_dir(cfg);
  const auto t2 = load_dim_rows(dir / "table2.txt", 2);
  const auto t3 = load_dim_rows(dir / "table3.txt", 3);
  const auto t4 = load_table4(dir / "table4.txt");

  Json rows = Json::array();
  std::vector<DimRowReport> reports = table_consistency_report(t2, cfg.rank_bound);
  auto r3 = table_consistency_report(t3, cfg.rank_bound);
  reports.insert(reports.end(), r3.begin(), r3.end());
  for (const auto& r : reports) {
    s.pass = s.pass && r.pass();
    s.warnings += static_cast<int>(r.flags.size());
    rows.push_back(Json{{"table", r.table},
                        {"row", r.row},
                        {"inclusion", r.inclusion_text},
                        {"points", r.points},
                        {"pass", r.pass()},
                        {"failures", r.failures},
                        {"flags", r.flags}});
    s.text.push_back("  table " + std::to_string(r.table) + " row " + std::to_string(r.row) + " " +
                     verdict(r.pass()) + "  " + r.inclusion_text + "  points=" + std::to_string(r.points) +
                     " flags=" + std::to_string(r.flags.size()));
    add_lines(s, "    fail: ", r.failures);
    add_lines(s, "    flag: ", r.flags);
  }
  s.data["dimension_rows"] = std::move(rows);

  Json fund = Json::array();
  int fund_ok = 0, fund_total = 0;
  for (const auto& t : all_types_up_to(cfg.rank_bound)) {
    if (!t.is_classical()) continue;
    auto fc = fundamental_dim_check(t4, t);
    ++fund_total;
    fund_ok += fc.pass();
    s.pass = s.pass && fc.pass();
    fund.push_back(Json{{"type", t.to_string()}, {"checked", fc.checked}, {"pass", fc.pass()}, {"failures", fc.failures}});
    add_lines(s, "    fail: ", fc.failures);
  }
  s.data["fundamental"] = std::move(fund);
  s.text.push_back("  fundamental dimensions: " + std::to_string(fund_ok) + "/" + std::to_string(fund_total) +
                   " classical types agree");

  Json audit = Json::array();
  int violations = 0;
  for (const auto& e : rank_audit(t2, t3, cfg.rank_bound)) {
    violations += e.result.verdict == RankVerdict::Violation;
    audit.push_back(Json{{"source", e.source},
                         {"g", e.g.to_string()},
                         {"h", e.h.to_string()},
                         {"verdict", to_string(e.result.verdict)},
                         {"detail", e.result.detail}});
    if (e.result.verdict == RankVerdict::Violation)
      s.text.push_back("    fail: " + e.source + " " + e.h.to_string() + " in " + e.g.to_string() + ": " +
                       e.result.detail);
  }
  Json chains = Json::array();
  int chain_bad = 0;
  for (int p = 3; p <= std::min(8, cfg.rank_bound); ++p) {
    CartanType g{Family::D, p}, h{Family::B, p - 1};
    auto res = rank_bound_check(g, h, false);
    const bool ok = res.verdict == RankVerdict::ExceptionChain;
    chain_bad += !ok;
    chains.push_back(Json{{"g", g.to_string()}, {"h", h.to_string()}, {"verdict", to_string(res.verdict)}, {"pass", ok}});
    if (!ok) s.text.push_back("    fail: " + h.to_string() + " in " + g.to_string() + " is " + to_string(res.verdict));
  }
  s.pass = s.pass && violations == 0 && chain_bad == 0;
  s.data["rank_audit"] = std::move(audit);
  s.data["rank_chains"] = std::move(chains);
  s.data["rank_bound"] = cfg.rank_bound;
  s.text.push_back("  rank audit: " + std::to_string(s.data["rank_audit"].size()) + " pairs, " +
                   std::to_string(violations) + " violations; B_{p-1} in D_p chains " +
                   (chain_bad ? "FAIL" : "PASS"));
  return s;
}

Section verify_maximal_rank_section(const RunConfig& cfg) {
  Section s;
  s.name = "maximal-rank";
  const auto rows = load_table5(data_dir(cfg) / "table5.txt");
  Json items = Json::array();
  for (const auto& st : maximal_rank_table_check(rows, cfg.rank_bound)) {
    const bool as_expected = st.confirmed == st.row.expect_confirmed;
    s.pass = s.pass && as_expected;
    if (!st.confirmed && !st.row.expect_confirmed) s.warnings += 1;
    std::string status = st.confirmed ? "confirmed" : "discrepant";
    items.push_back(Json{{"row", st.row.row},
                         {"derived", st.row.derived},
                         {"ambient", st.row.ambient_text},
                         {"sub", st.row.sub_text},
                         {"status", status},
                         {"expected", st.row.expect_confirmed ? "confirmed" : "discrepant"},
                         {"instances", st.instances},
                         {"pass", as_expected},
                         {"mismatches", st.mismatches}});
    s.text.push_back("  row " + std::to_string(st.row.row) + (st.row.derived ? " (reading)" : "") + " " +
                     (as_expected ? "PASS " : "FAIL ") + status + "  " + st.row.sub_text + " in " +
                     st.row.ambient_text);
    if (!st.mismatches.empty()) s.text.push_back("    " + std::string(as_expected ? "flag: " : "fail: ") + st.mismatches.front() +
                                                 (st.mismatches.size() > 1 ? " (+" + std::to_string(st.mismatches.size() - 1) + " more)" : ""));
  }
  s.data["rows"] = std::move(items);

  // every single-deletion record keeps the ambient rank
  int records = 0;
  Json broken = Json::array();
  for (const auto& t : all_types_up_to(cfg.rank_bound)) {
    for (const auto& r : borel_de_siebenthal_step(t)) {
      ++records;
      if (r.type.semisimple_rank() + r.type.torus_rank != t.rank)
        broken.push_back(t.to_string() + ": " + r.type.to_string());
    }
  }
  s.pass = s.pass && broken.empty();
  s.data["equal_rank"] = Json{{"records", records}, {"broken", broken}};
  s.text.push_back("  equal-rank invariant: " + std::to_string(records) + " records, " +
                   std::to_string(broken.size()) + " broken");
  return s;
}

const std::vector<std::string>& verify_targets() {
  static const std::vector<std::string> t{"table1", "inequalities", "lemma4", "tables", "maximal-rank"};
  return t;
}

std::vector<Section> run_verify(const std::string& target, const RunConfig& cfg) {
  std::vector<Section> out;
  auto want = [&](const char* name) { return target == "all" || target == name; };
  if (want("table1")) out.push_back(verify_table1_section(cfg));
  if (want("inequalities")) out.push_back(verify_inequalities_section(cfg));
  if (want("lemma4")) out.push_back(verify_lemma4_section(cfg));
  if (want("tables")) out.push_back(verify_tables_section(cfg));
  if (want("maximal-rank")) out.push_back(verify_maximal_rank_section(cfg));
  if (out.empty()) throw InvalidArgument("unknown verify target '" + target + "'");
  return out;
}

Json report_json(const std::vector<Section>& sections, const RunConfig& cfg) {
  Json j;
  j["schema"] = kReportSchema;
  j["config"] = Json{{"n_max", cfg.n_max}, {"rank_bound", cfg.rank_bound}, {"lemma_rank", cfg.lemma_rank}};
  bool pass = true;
  Json secs = Json::object();
  for (const auto& s : sections) {
    pass = pass && s.pass;
    Json d = s.data;
    d["pass"] = s.pass;
    d["warning_count"] = s.warnings;
    secs[s.name] = std::move(d);
  }
  j["sections"] = std::move(secs);
  j["pass"] = pass;
  return j;
}

std::string render_text(const std::vector<Section>& sections) {
  std::ostringstream out;
  bool pass = true;
  for (const auto& s : sections) {
    pass = pass && s.pass;
    out << "[" << verdict(s.pass) << "] " << s.name;
    if (s.warnings) out << " (" << s.warnings << " warnings)";
    out << "\n";
    for (const auto& line : s.text) out << line << "\n";
  }
  out << (pass ? "OVERALL PASS" : "OVERALL FAIL") << "\n";
  return out.str();
}

namespace {

std::string csv_field(const std::string& v) {
  if (v.find_first_of(",\"\n") == std::string::npos) return v;
  std::string q = "\"";
  for (char c : v) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

}  // namespace

std::string render_csv(const Json& report) {
  std::ostringstream out;
  out << "section,pointer,value\n";
  for (const auto& [name, sec] : report.at("sections").items()) {
    const Json flat = sec.flatten();
    for (const auto& [ptr, v] : flat.items())
      out << csv_field(name) << "," << csv_field(ptr) << "," << csv_field(v.is_string() ? v.get<std::string>() : v.dump())
          << "\n";
  }
  out << "report,/pass," << (report.at("pass").get<bool>() ? "true" : "false") << "\n";
  return out.str();
}

}  // namespace lieck
