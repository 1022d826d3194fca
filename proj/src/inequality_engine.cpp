#include "lieck/inequality_engine.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <regex>
#include <sstream>
#include <thread>

#include "lieck/polynomial.hpp"
#include "lieck/record_file.hpp"

namespace lieck {

std::string to_string(ExceptionStatus s) {
  switch (s) {
    case ExceptionStatus::Zero: return "zero";
    case ExceptionStatus::PositiveSpecial: return "positive_special";
    case ExceptionStatus::ExcludedSplit: return "excluded_split";
    case ExceptionStatus::ExcludedSymmetric: return "excluded_symmetric";
  }
  return "?";
}

Expr CaseRecord::effective_D(const Variant& h, const Variant& l) const { return dg - h.d - l.d; }

namespace {

Expr parse_or_fail(const Record& rec, const std::string& what, const std::string& text) {
  try {
    return parse(text);
  } catch (const SyntaxError& e) {
    rec.fail(what + ": " + e.what());
  }
}

ConstraintSet constraints_or_fail(const Record& rec, const std::string& what, const std::string& text) {
  try {
    return ConstraintSet::parse(text);
  } catch (const SyntaxError& e) {
    rec.fail(what + ": " + e.what());
  }
}

std::vector<Variant> parse_variants(const Record& rec, const std::string& key, const std::string& side) {
  static const std::regex labelled(R"(^\s*([A-Za-z0-9.']+)\s*:\s*(.*)$)");
  std::vector<Variant> out;
  for (const auto& part : split_top_level(rec.get(key), '|')) {
    Variant v;
    std::string body = part;
    std::smatch m;
    if (std::regex_match(part, m, labelled)) {
      v.label = m[1];
      body = m[2];
    } else {
      v.label = side;
    }
    auto at = body.find('@');
    v.text = trim(body);
    v.d = parse_or_fail(rec, key, trim(body.substr(0, at)));
    if (at != std::string::npos) v.where = constraints_or_fail(rec, key, trim(body.substr(at + 1)));
    out.push_back(std::move(v));
  }
  return out;
}

ExceptionStatus parse_status(const Record& rec, const std::string& s) {
  if (s == "zero") return ExceptionStatus::Zero;
  if (s == "positive_special") return ExceptionStatus::PositiveSpecial;
  if (s == "excluded_split") return ExceptionStatus::ExcludedSplit;
  if (s == "excluded_symmetric") return ExceptionStatus::ExcludedSymmetric;
  rec.fail("unknown exception status '" + s + "'");
}

}  // namespace

std::vector<CaseRecord> parse_cases(std::string_view text, const std::string& source) {
  std::vector<CaseRecord> out;
  for (const Record& rec : parse_records(text, source)) {
    CaseRecord c;
    c.where = rec.where();
    c.family = rec.get("family");
    c.pair = rec.get("pair");
    auto sides = split_top_level(c.pair, ',');
    if (sides.size() != 2) rec.fail("pair must be 'X,Y', got '" + c.pair + "'");
    c.dg = parse_or_fail(rec, "dg", rec.get("dg"));
    c.dh = parse_variants(rec, "dh", sides[0]);
    c.dl = parse_variants(rec, "dl", sides[1]);
    if (rec.get("D") != "-") c.printed_D = parse_or_fail(rec, "D", rec.get("D"));
    c.constraints_text = rec.get("constraints");
    c.constraints = constraints_or_fail(rec, "constraints", c.constraints_text);
    c.ambient = rec.get_or("ambient", "");
    c.claimed_text = rec.get_or("claimed_bound", "");
    c.dh_catalog = rec.get_or("dh_catalog", "");
    c.dl_catalog = rec.get_or("dl_catalog", "");
    for (const auto& e : rec.all("exception")) {
      auto parts = split_top_level(e, '|');
      if (parts.size() != 4) rec.fail("exception needs region | status | expected | citation");
      CaseException ex;
      ex.region_text = parts[0];
      ex.region = constraints_or_fail(rec, "exception region", parts[0]);
      ex.status = parse_status(rec, parts[1]);
      ex.expected = parse_or_fail(rec, "exception value", parts[2]);
      ex.citation = parts[3];
      c.exceptions.push_back(std::move(ex));
    }

    // double entry: printed D against dg - dh - dl
    if (c.printed_D) {
      bool any = false;
      for (const auto& h : c.dh)
        for (const auto& l : c.dl)
          if (polynomial_identity(*c.printed_D, c.effective_D(h, l))) any = true;
      if (!any) {
        Polynomial diff = Polynomial::from_expr(*c.printed_D) -
                          Polynomial::from_expr(c.effective_D(c.dh.front(), c.dl.front()));
        c.warnings.push_back("printed D differs from dg-dh-dl by " + diff.to_string() +
                             "; dg-dh-dl is used");
      }
    } else {
      c.warnings.push_back("no printed D line; D = dg-dh-dl");
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<CaseRecord> load_cases(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open data file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  auto cases = parse_cases(ss.str(), path.filename().string());
  if (cases.size() != 36)
    throw DataError(path.string() + ": expected 36 case records, found " + std::to_string(cases.size()));
  return cases;
}

namespace {

BigInt value_of(const Expr& e, const Env& env) {
  if (auto v = evaluate_int64(e, env)) return BigInt(*v);
  return evaluate_integer(e, env);
}

std::string point_text(std::int64_t a, std::int64_t b, std::int64_t n) {
  return "(a,b,n)=(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(n) + ")";
}

template <class Fn>
void for_each_point(const CaseRecord& c, int n_max, Fn&& fn) {
  for (const auto& h : c.dh)
    for (const auto& l : c.dl) {
      const Expr D = c.effective_D(h, l);
      const std::string label = c.dh.size() * c.dl.size() > 1 ? h.label + "," + l.label : "";
      for (std::int64_t n = 1; n <= n_max; ++n)
        for (std::int64_t a = 1; a <= n + 1; ++a)
          for (std::int64_t b = 1; b <= n + 1; ++b) {
            Env env{{'a', a}, {'b', b}, {'n', n}};
            if (!satisfies(c.constraints, env) || !satisfies(h.where, env) || !satisfies(l.where, env))
              continue;
            fn(env, D, label);
          }
    }
}

}  // namespace

CaseReport verify_case(const CaseRecord& c, int n_max) {
  if (n_max < 2) throw InvalidArgument("n_max must be at least 2");
  CaseReport rep;
  rep.id = c.id();
  rep.exception_hits.assign(c.exceptions.size(), 0);
  rep.warnings = c.warnings;
  for_each_point(c, n_max, [&](const Env& env, const Expr& D, const std::string& label) {
    const std::int64_t a = env.get('a'), b = env.get('b'), n = env.get('n');
    ++rep.points;
    BigInt d = value_of(D, env);
    std::string at = point_text(a, b, n) + (label.empty() ? "" : " [" + label + "]");
    int hit = -1;
    for (std::size_t i = 0; i < c.exceptions.size() && hit < 0; ++i)
      if (satisfies(c.exceptions[i].region, env)) hit = static_cast<int>(i);
    if (d > 0) ++rep.positive;
    else rep.nonpositive.push_back({a, b, n, d, label});

    if (hit < 0) {
      if (d <= 0) rep.failures.push_back("undeclared non-positive point " + at + ": D=" + to_string(d));
      return;
    }
    const CaseException& ex = c.exceptions[hit];
    ++rep.exception_hits[hit];
    BigInt want = value_of(ex.expected, env);
    if (d != want)
      rep.failures.push_back(to_string(ex.status) + " region " + ex.region_text + " at " + at + ": D=" +
                             to_string(d) + ", expected " + to_string(want));
    else if (ex.status == ExceptionStatus::PositiveSpecial && d <= 0)
      rep.failures.push_back("positive_special point " + at + " is not positive");
  });
  for (std::size_t i = 0; i < c.exceptions.size(); ++i)
    if (rep.exception_hits[i] == 0)
      rep.warnings.push_back("exception region " + c.exceptions[i].region_text + " not reached for n <= " +
                             std::to_string(n_max));
  return rep;
}

BoundReport verify_claimed_bound(const CaseRecord& c, int n_max) {
  BoundReport rep;
  rep.id = c.id();
  std::string text = trim(c.claimed_text);
  if (text.empty()) {
    rep.warnings.push_back("no claimed bound");
    return rep;
  }
  std::string body;
  if (text.rfind(">=", 0) == 0) {
    rep.relation = ">=";
    body = text.substr(2);
  } else if (text.rfind("=", 0) == 0) {
    rep.relation = "=";
    body = text.substr(1);
  } else {
    rep.warnings.push_back("claimed bound '" + text + "' is not of the form '>= expr' or '= expr'");
    return rep;
  }
  Expr bound;
  try {
    bound = parse(trim(body));
  } catch (const SyntaxError& e) {
    rep.warnings.push_back("claimed bound '" + text + "' does not parse: " + e.what());
    return rep;
  }
  rep.parsed = true;
  std::string first;
  for_each_point(c, n_max, [&](const Env& env, const Expr& D, const std::string& label) {
    ++rep.checked;
    Rational d = evaluate(D, env), lb = evaluate(bound, env);
    bool ok = rep.relation == "=" ? d == lb : d >= lb;
    if (ok) return;
    if (++rep.mismatches == 1)
      first = point_text(env.get('a'), env.get('b'), env.get('n')) + (label.empty() ? "" : " [" + label + "]") +
              ": D=" + to_string(d) + ", bound=" + to_string(lb);
  });
  if (rep.mismatches)
    rep.warnings.push_back("D " + rep.relation + " " + trim(body) + " fails at " + std::to_string(rep.mismatches) +
                           " point(s), first " + first);
  return rep;
}

namespace {

/// Catalog d-formula of "name{k=v, ...}" with the bindings substituted.
Polynomial instantiate_d(const Catalog& cat, const std::string& spec) {
  static const std::regex shape(R"(^\s*([A-Za-z0-9_]+)\s*\{(.*)\}\s*$)");
  std::smatch m;
  if (!std::regex_match(spec, m, shape)) throw InvalidArgument("cannot read ambient '" + spec + "'");
  std::optional<Family> family;
  std::vector<std::pair<char, Polynomial>> binds;
  for (const auto& kv : split_top_level(m[2].str(), ',')) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw InvalidArgument("ambient binding '" + kv + "' lacks '='");
    std::string k = trim(kv.substr(0, eq)), v = trim(kv.substr(eq + 1));
    if (k == "family") {
      family = v.size() == 1 ? family_from_letter(v[0]) : std::nullopt;
      continue;
    }
    binds.emplace_back(k.at(0), Polynomial::from_expr(parse(v)));
  }
  const RealForm& f = cat.get(m[1].str(), family);
  Polynomial p = Polynomial::from_expr(f.d);
  // two-phase substitution through placeholders so that a -> a+b is simultaneous
  std::string spare;
  for (char v : kVariables) {
    bool used = std::any_of(binds.begin(), binds.end(), [&](const auto& b) { return b.first == v; });
    if (!used && v != 'a' && v != 'b' && v != 'n') spare += v;
  }
  if (spare.size() < binds.size()) throw InternalError("not enough placeholder variables");
  for (std::size_t i = 0; i < binds.size(); ++i)
    p = p.substitute(binds[i].first, Polynomial::variable(spare[i]));
  for (std::size_t i = 0; i < binds.size(); ++i) p = p.substitute(spare[i], binds[i].second);
  return p;
}

}  // namespace

AmbientCheck cross_check_ambient(const CaseRecord& c, const Catalog& cat) {
  AmbientCheck out;
  if (c.ambient.empty()) {
    out.detail = "no ambient recorded";
    return out;
  }
  try {
    Polynomial want = instantiate_d(cat, c.ambient), have = Polynomial::from_expr(c.dg);
    out.ok = want == have;
    out.detail = out.ok ? "dg matches " + c.ambient
                        : "dg " + have.to_string() + " but " + c.ambient + " gives " + want.to_string();
    if (c.ambient.rfind("so_star", 0) == 0)
      out.warnings.push_back("so* convention: so*(2n) filed as D_n with d = n^2-n");
    auto side = [&](const std::string& spec, const std::vector<Variant>& vs, const char* name) {
      if (spec.empty()) return;
      Polynomial cat_d = instantiate_d(cat, spec);
      for (const auto& v : vs)
        if (!(Polynomial::from_expr(v.d) == cat_d))
          out.warnings.push_back(std::string(name) + " " + v.label + " = " + v.d.to_string() + " but " + spec +
                                 " gives " + cat_d.to_string() + "; the printed formula is operative");
    };
    side(c.dh_catalog, c.dh, "dh");
    side(c.dl_catalog, c.dl, "dl");
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = e.what();
  }
  return out;
}

std::vector<InequalityRun> verify_all_cases(const std::vector<CaseRecord>& records, const Catalog& cat,
                                            int n_max, int jobs) {
  std::vector<InequalityRun> out(records.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < records.size(); i = next++)
      out[i] = InequalityRun{records[i], verify_case(records[i], n_max), verify_claimed_bound(records[i], n_max),
                             cross_check_ambient(records[i], cat)};
  };
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(records.size())));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace lieck
