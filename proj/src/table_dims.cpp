#include "lieck/table_dims.hpp"

#include <map>

#include "lieck/constraint.hpp"
#include "lieck/record_file.hpp"
#include "lieck/root_system.hpp"

namespace lieck {

CartanType TypeTemplate::at(std::int64_t n) const {
  return CartanType{family, static_cast<int>(to_int64(evaluate_integer(rank, Env{{'n', n}})))};
}

namespace {

TypeTemplate parse_template(const Record& rec, std::string_view key) {
  const std::string& v = rec.get(key);
  auto colon = v.find(':');
  auto fam = colon == 1 ? family_from_letter(v[0]) : std::nullopt;
  if (!fam) rec.fail("'" + v + "' is not family:rank");
  try {
    return TypeTemplate{*fam, parse(v.substr(2)), v};
  } catch (const SyntaxError& e) {
    rec.fail(std::string(key) + ": " + e.what());
  }
}

Expr parse_field(const Record& rec, std::string_view key) {
  try {
    return parse(rec.get(key));
  } catch (const SyntaxError& e) {
    rec.fail(std::string(key) + ": " + e.what());
  }
}

std::pair<std::string, std::string> split_range(const Record& rec, std::string_view key) {
  const std::string& v = rec.get(key);
  auto dots = v.find("..");
  if (dots == std::string::npos) rec.fail("range '" + v + "' needs lo..hi");
  return {trim(v.substr(0, dots)), trim(v.substr(dots + 2))};
}

std::pair<int, int> int_range(const Record& rec, std::string_view key) {
  auto [lo, hi] = split_range(rec, key);
  try {
    return {std::stoi(lo), std::stoi(hi)};
  } catch (const std::exception&) {
    rec.fail("range '" + rec.get(key) + "' must have integer bounds");
  }
}

std::string at_text(std::int64_t n, std::optional<std::int64_t> k) {
  return "n=" + std::to_string(n) + (k ? ",k=" + std::to_string(*k) : "");
}

}  // namespace

std::vector<DimFormulaRow> load_dim_rows(const std::filesystem::path& path, int table) {
  std::vector<DimFormulaRow> out;
  for (const Record& rec : load_records(path)) {
    DimFormulaRow r;
    r.table = table;
    r.row = std::stoi(rec.get("row"));
    r.inclusion_text = rec.get("inclusion_text");
    r.second_text = rec.get_or("second_text", "");
    r.dim_text = rec.get("dim");
    r.dim = parse_field(rec, "dim");
    r.indicator = rec.get_or("indicator", "");
    r.note = rec.get_or("note", "");
    r.declared_discrepancy = rec.get_or("declared_discrepancy", "");
    r.h = parse_template(rec, "h");
    if (rec.has("mid")) r.mid = parse_template(rec, "mid");
    std::tie(r.n_lo, r.n_hi) = int_range(rec, "n");
    if (rec.has("k")) r.k_range = int_range(rec, "k");
    if (rec.has("target_at_k")) r.target_at_k = std::stoi(rec.get("target_at_k"));
    if (rec.has("oracle")) {
      r.oracle = parse_template(rec, "oracle");
      for (const auto& term : split_top_level(rec.get("weight"), '+')) {
        auto at = term.find('@');
        if (at == std::string::npos) rec.fail("weight term '" + term + "' needs coef@node");
        r.oracle_weight.emplace_back(parse(term.substr(0, at)), parse(term.substr(at + 1)));
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

Rational evaluate_row(const DimFormulaRow& row, std::int64_t n, std::int64_t k) {
  return evaluate(row.dim, Env{{'n', n}, {'k', k}});
}

std::optional<BigInt> oracle_dim(const DimFormulaRow& row, std::int64_t n, std::int64_t k) {
  if (!row.oracle) return std::nullopt;
  CartanType t = row.oracle->at(n);
  if (!t.is_valid()) return std::nullopt;
  std::vector<int> w(t.rank, 0);
  Env env{{'n', n}, {'k', k}};
  for (const auto& [coef, node] : row.oracle_weight) {
    auto i = to_int64(evaluate_integer(node, env));
    if (t.family == Family::A && i == t.rank + 1) continue;  // w_{n+1} = 0 in sl(n+1)
    if (i < 1 || i > t.rank) throw InvalidArgument("oracle node " + std::to_string(i) + " outside " + t.to_string());
    w[i - 1] += static_cast<int>(to_int64(evaluate_integer(coef, env)));
  }
  return weyl_dim(t, w);
}

std::vector<DimRowReport> table_consistency_report(const std::vector<DimFormulaRow>& rows, int rank_bound) {
  std::vector<DimRowReport> out;
  for (const auto& row : rows) {
    DimRowReport rep{row.table, row.row, row.inclusion_text, 0, {}, {}};
    for (std::int64_t n = row.n_lo; n <= row.n_hi; ++n) {
      int fit = row.h.at(n).rank;
      if (row.mid) fit = std::max(fit, row.mid->at(n).rank);
      if (fit > rank_bound) continue;
      const int k_lo = row.k_range ? row.k_range->first : 1;
      const int k_hi = row.k_range ? row.k_range->second : 1;
      std::optional<Rational> prev;
      for (std::int64_t k = k_lo; k <= k_hi; ++k) {
        std::string at = "n=" + std::to_string(n) + (row.k_range ? ",k=" + std::to_string(k) : "") + ": ";
        Rational v;
        try {
          v = evaluate_row(row, n, k);
        } catch (const EvalError& e) {
          rep.flags.push_back(at + e.what());
          continue;
        }
        ++rep.points;
        if (!is_integral(v))
          rep.flags.push_back(at + "non-integral value " + to_string(v));
        else if (v <= 0)
          rep.flags.push_back(at + "non-positive value " + to_string(v));
        if (prev && v <= *prev)
          rep.flags.push_back(at + "not increasing in k (" + to_string(*prev) + " then " + to_string(v) + ")");
        prev = v;
        if (row.target_at_k && *row.target_at_k == k && row.mid) {
          Rational want = row.mid->at(n).rank + 1;
          if (v != want)
            rep.failures.push_back(at + "value " + to_string(v) + " != " + row.mid->at(n).to_string() +
                                   " module size " + to_string(want));
        }
        if (auto o = oracle_dim(row, n, k); o && Rational(*o) != v) {
          std::string msg = at + "printed " + to_string(v) + ", Weyl dimension " + o->str();
          (row.declared_discrepancy.empty() ? rep.failures : rep.flags).push_back(msg);
        }
      }
    }
    if (rep.points == 0) rep.failures.push_back("no grid point within rank bound " + std::to_string(rank_bound));
    out.push_back(std::move(rep));
  }
  return out;
}

std::vector<FundamentalRow> load_table4(const std::filesystem::path& path) {
  std::vector<FundamentalRow> out;
  for (const Record& rec : load_records(path)) {
    FundamentalRow r;
    const std::string& fam = rec.get("family");
    auto f = fam.size() == 1 ? family_from_letter(fam[0]) : std::nullopt;
    if (!f) rec.fail("unknown family '" + fam + "'");
    r.family = *f;
    std::tie(r.l_lo, r.l_hi) = int_range(rec, "l");
    auto [lo, hi] = split_range(rec, "r");
    r.r_lo = parse(lo);
    r.r_hi = parse(hi);
    r.dim_text = rec.get("dim");
    r.dim = parse_field(rec, "dim");
    r.indicator = rec.get_or("indicator", "");
    out.push_back(std::move(r));
  }
  return out;
}

FundamentalCheck fundamental_dim_check(const std::vector<FundamentalRow>& rows, const CartanType& t) {
  t.validate();
  FundamentalCheck fc{t, 0, {}};
  std::map<std::int64_t, int> seen;
  for (const auto& row : rows) {
    if (row.family != t.family || t.rank < row.l_lo || t.rank > row.l_hi) continue;
    Env env{{'l', t.rank}};
    const auto lo = to_int64(evaluate_integer(row.r_lo, env));
    const auto hi = to_int64(evaluate_integer(row.r_hi, env));
    for (std::int64_t r = lo; r <= hi; ++r) {
      std::string at = t.to_string() + " r=" + std::to_string(r) + ": ";
      if (r < 1 || r > t.rank) {
        fc.failures.push_back(at + "node outside the diagram");
        continue;
      }
      if (seen[r]++) fc.failures.push_back(at + "covered by more than one row");
      env.set('r', r);
      std::vector<int> w(t.rank, 0);
      w[r - 1] = 1;
      BigInt want = weyl_dim(t, w);
      Rational got = evaluate(row.dim, env);
      ++fc.checked;
      if (got != Rational(want))
        fc.failures.push_back(at + "printed " + to_string(got) + ", Weyl dimension " + want.str());
    }
  }
  return fc;
}

namespace {

void audit(std::vector<RankAuditEntry>& out, std::string source, const CartanType& g, const CartanType& h,
           int rank_bound) {
  if (!g.is_valid() || !h.is_valid() || g.rank > rank_bound || h.rank > g.rank) return;
  if (normalize({g}) == normalize({h})) return;  // D3 = A3 and the like
  out.push_back({std::move(source), g, h, rank_bound_check(g, h, false)});
}

// Rows with a declared discrepancy contribute their Weyl dimension instead of the printed value.
std::optional<std::int64_t> module_size(const DimFormulaRow& row, std::int64_t n, std::int64_t k) {
  try {
    Rational v;
    if (auto o = row.declared_discrepancy.empty() ? std::nullopt : oracle_dim(row, n, k))
      v = Rational(*o);
    else
      v = evaluate_row(row, n, k);
    if (!is_integral(v) || v < 2) return std::nullopt;
    return to_int64(v);
  } catch (const EvalError&) {
    return std::nullopt;
  }
}

}  // namespace

std::vector<RankAuditEntry> rank_audit(const std::vector<DimFormulaRow>& table2,
                                       const std::vector<DimFormulaRow>& table3, int rank_bound) {
  std::vector<RankAuditEntry> out;
  for (const auto* rows : {&table2, &table3}) {
    for (const auto& row : *rows) {
      const std::string tag = "table " + std::to_string(row.table) + " row " + std::to_string(row.row);
      for (std::int64_t n = row.n_lo; n <= row.n_hi; ++n) {
        const CartanType h = row.h.at(n);
        if (row.mid) audit(out, tag + " inclusion 1, n=" + std::to_string(n), row.mid->at(n), h, rank_bound);
        const int k_lo = row.k_range ? row.k_range->first : 1;
        const int k_hi = row.k_range ? row.k_range->second : 1;
        for (std::int64_t k = k_lo; k <= k_hi; ++k) {
          auto N = module_size(row, n, k);
          if (!N || *N - 1 > rank_bound) continue;
          CartanType g{Family::A, static_cast<int>(*N - 1)};
          std::string at = at_text(n, row.k_range ? std::optional<std::int64_t>(k) : std::nullopt);
          if (row.mid) audit(out, tag + " inclusion 2, " + at, g, row.mid->at(n), rank_bound);
          if (!row.mid || g != row.mid->at(n)) audit(out, tag + " composite, " + at, g, h, rank_bound);
        }
      }
    }
  }
  return out;
}

}  // namespace lieck
