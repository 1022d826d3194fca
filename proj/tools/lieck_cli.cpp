#include <CLI11.hpp>

#include <iostream>

#include "lieck/catalog.hpp"
#include "lieck/ck_criteria.hpp"
#include "lieck/form_spec.hpp"
#include "lieck/report.hpp"
#include "lieck/root_system.hpp"

using namespace lieck;

namespace {

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kData = 3 };

Json matrix_json(const IntMatrix& m) {
  Json j = Json::array();
  for (const auto& row : m) j.push_back(row);
  return j;
}

std::string matrix_text(const IntMatrix& m) {
  std::string out;
  for (const auto& row : m) {
    out += " ";
    for (int v : row) out += (v < 0 ? " " : "  ") + std::to_string(v);
    out += "\n";
  }
  return out;
}

int cmd_roots(const std::string& spec, const std::string& format, bool dot) {
  const CartanType t = CartanType::parse(spec);
  t.validate();
  const RootSystem rs = build_root_system(t);
  const RootVec theta = highest_root(rs);
  const ExtendedDiagram ext = extended_diagram(rs);
  if (format == "json") {
    Json j{{"schema", kReportSchema},
           {"type", t.to_string()},
           {"cartan_matrix", matrix_json(rs.cartan_matrix)},
           {"root_count", rs.all_roots.size()},
           {"highest_root", theta},
           {"extended_marks", ext.marks},
           {"extended_cartan_matrix", matrix_json(ext.cartan_matrix)}};
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "type,root_count,highest_root\n"
              << t.to_string() << "," << rs.all_roots.size() << ",\"" << format_vec(theta) << "\"\n";
  } else {
    std::cout << t.to_string() << "\nCartan matrix:\n" << matrix_text(rs.cartan_matrix)
              << "roots: " << rs.all_roots.size() << "\nhighest root: " << format_vec(theta)
              << "\nextended diagram:\n" << diagram_text(ext) << "\n";
    if (dot) std::cout << diagram_dot(ext) << "\n";
  }
  return kOk;
}

std::string factor_lines(const char* name, const ReductiveForm& f) {
  std::string out = std::string(name) + " = " + f.label() + "  d=" + std::to_string(f.d()) +
                    " r=" + std::to_string(f.r()) + "\n";
  return out;
}

int cmd_check_triple(const Catalog& cat, const std::string& g, const std::string& h, const std::string& l,
                     std::optional<int> n, const std::string& format) {
  Env env;
  if (n) env.set('n', *n);
  const Triple tr = make_triple(cat, g, h, l, env);
  const bool koba = kobayashi_cocompact(tr), rank = rank_additive(tr);
  const bool split = is_split(*tr.g.noncompact().front());
  const bool pass = koba && rank;
  if (format == "json") {
    auto side = [](const ReductiveForm& f) { return Json{{"label", f.label()}, {"d", f.d()}, {"r", f.r()}}; };
    Json j{{"schema", kReportSchema}, {"g", side(tr.g)},     {"h", side(tr.h)},          {"l", side(tr.l)},
           {"cocompact", koba},       {"rank_additive", rank}, {"ambient_split", split}, {"pass", pass}};
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "g,h,l,dg,dh,dl,rg,rh,rl,cocompact,rank_additive,ambient_split,pass\n"
              << "\"" << tr.g.label() << "\",\"" << tr.h.label() << "\",\"" << tr.l.label() << "\"," << tr.g.d()
              << "," << tr.h.d() << "," << tr.l.d() << "," << tr.g.r() << "," << tr.h.r() << "," << tr.l.r() << ","
              << koba << "," << rank << "," << split << "," << pass << "\n";
  } else {
    std::cout << factor_lines("g", tr.g) << factor_lines("h", tr.h) << factor_lines("l", tr.l);
    std::cout << "d(g) = d(h) + d(l): " << (koba ? "holds" : "fails") << " (" << tr.g.d()
              << (koba ? " = " : " != ") << tr.h.d() << "+" << tr.l.d() << ")\n";
    std::cout << "r(g) = r(h) + r(l): " << (rank ? "holds" : "fails") << " (" << tr.g.r()
              << (rank ? " = " : " != ") << tr.h.r() << "+" << tr.l.r() << ")\n";
    std::cout << (pass ? "PASS" : "FAIL") << (split ? "  ambient split" : "") << "\n";
  }
  return pass ? kOk : kFail;
}

int cmd_verify(const std::string& target, const RunConfig& cfg, const std::string& format) {
  const auto sections = run_verify(target, cfg);
  bool pass = true;
  for (const auto& s : sections) pass = pass && s.pass;
  if (format == "json")
    std::cout << report_json(sections, cfg).dump(2) << "\n";
  else if (format == "csv")
    std::cout << render_csv(report_json(sections, cfg));
  else
    std::cout << render_text(sections);
  return pass ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Root systems, real forms and Clifford-Klein triple checks"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "text", data_dir;
  app.add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--data-dir", data_dir, "data directory (default: $LIECK_DATA_DIR or the built-in path)");

  std::string type_spec;
  bool dot = false;
  auto* roots = app.add_subcommand("roots", "Cartan matrix, roots and extended diagram of a simple type");
  roots->add_option("type", type_spec, "type such as B4 or E8")->required();
  roots->add_flag("--dot", dot, "also print the extended diagram in DOT format");

  std::string g, h, l;
  std::optional<int> n;
  auto* check = app.add_subcommand("check-triple", "d and real-rank criteria for a triple (g, h, l)");
  check->add_option("g_spec", g, "ambient g")->required();
  check->add_option("h_spec", h, "subalgebra h")->required();
  check->add_option("l_spec", l, "subalgebra l")->required();
  check->add_option("--n", n, "binding for n in the specs");

  std::string target = "all";
  auto* verify = app.add_subcommand("verify", "run verification suites");
  std::vector<std::string> targets{"all"};
  for (const auto& t : verify_targets()) targets.push_back(t);
  verify->add_option("target", target, "all, table1, inequalities, lemma4, tables or maximal-rank")
      ->check(CLI::IsMember(targets));
  auto* rank_opt = verify->add_option("--rank-bound", cfg.rank_bound, "largest complex rank in table audits")
                       ->check(CLI::Range(2, 64));
  verify->add_option("--n-max", cfg.n_max, "largest n in exhaustive checks")->check(CLI::Range(2, 100000));
  verify->add_option("--lemma-rank", cfg.lemma_rank, "largest rank for the covering search")
      ->check(CLI::Range(1, 8));
  verify->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1, 256));

  // options may follow the subcommand as well
  for (auto* sub : {roots, check, verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  cfg.data_dir = data_dir;
  if (*rank_opt && verify->get_option("--lemma-rank")->count() == 0) cfg.lemma_rank = std::min(cfg.rank_bound, 8);

  try {
    if (*roots) return cmd_roots(type_spec, format, dot);
    if (*check) return cmd_check_triple(Catalog::load(resolve_data_dir(data_dir) / "catalog.txt"), g, h, l, n, format);
    return cmd_verify(target, cfg, format);
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kData;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFail;
  }
}
