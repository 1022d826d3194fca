#include "lieck/regular_subalgebras.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <regex>
#include <set>

#include "lieck/constraint.hpp"
#include "lieck/expr.hpp"
#include "lieck/record_file.hpp"

namespace lieck {

int SubalgebraType::semisimple_rank() const {
  int s = 0;
  for (const auto& c : summands) s += c.rank;
  return s;
}

std::string SubalgebraType::to_string() const {
  std::string s;
  for (const auto& c : summands) {
    if (!s.empty()) s += "+";
    s += c.to_string();
  }
  if (torus_rank > 0) {
    if (!s.empty()) s += "+";
    s += "T" + std::to_string(torus_rank);
  }
  return s.empty() ? "0" : s;
}

SubalgebraType normalize(const std::vector<CartanType>& raw, int torus_rank) {
  SubalgebraType out;
  out.torus_rank = torus_rank;
  for (const auto& c : raw) {
    if (c.rank <= 0) continue;
    switch (c.family) {
      case Family::D:
        if (c.rank == 1) {
          ++out.torus_rank;
        } else if (c.rank == 2) {
          out.summands.push_back({Family::A, 1});
          out.summands.push_back({Family::A, 1});
        } else if (c.rank == 3) {
          out.summands.push_back({Family::A, 3});
        } else {
          out.summands.push_back(c);
        }
        break;
      case Family::B:
      case Family::C:
        if (c.rank == 1)
          out.summands.push_back({Family::A, 1});
        else if (c.rank == 2)
          out.summands.push_back({Family::B, 2});
        else
          out.summands.push_back(c);
        break;
      default:
        out.summands.push_back(c);
    }
  }
  std::sort(out.summands.begin(), out.summands.end());
  return out;
}

namespace {

int arm_length(const std::vector<std::vector<int>>& adj, int from, int start) {
  int len = 1, prev = from, cur = start;
  while (true) {
    int next = -1;
    for (int n : adj[cur])
      if (n != prev) next = n;
    if (next < 0 || adj[cur].size() > 2) break;
    prev = cur;
    cur = next;
    ++len;
  }
  return len;
}

CartanType identify_one(const ExtendedDiagram& d, const std::vector<int>& comp,
                        const std::vector<std::vector<int>>& adj) {
  const auto& A = d.cartan_matrix;
  const int m = static_cast<int>(comp.size());
  if (m == 1) return {Family::A, 1};
  int edges = 0, max_mult = 0, bi = -1, bj = -1;
  for (int i : comp)
    for (int j : adj[i])
      if (i < j) {
        ++edges;
        int mult = A[i][j] * A[j][i];
        if (mult > max_mult) {
          max_mult = mult;
          bi = i;
          bj = j;
        }
      }
  if (edges >= m || max_mult >= 4) throw InternalError("affine component survived a deletion");
  if (max_mult == 3) return {Family::G, 2};
  if (max_mult == 2) {
    if (m == 2) return {Family::B, 2};
    int end = adj[bi].size() == 1 ? bi : adj[bj].size() == 1 ? bj : -1;
    if (end < 0) {
      if (m == 4) return {Family::F, 4};
      throw InternalError("double bond inside a component that is not F4");
    }
    int other = end == bi ? bj : bi;
    bool end_short = std::abs(A[other][end]) > std::abs(A[end][other]);
    return {end_short ? Family::B : Family::C, m};
  }
  int branch = -1;
  for (int i : comp)
    if (adj[i].size() >= 3) branch = i;
  if (branch < 0) return {Family::A, m};
  if (adj[branch].size() != 3) throw InternalError("unexpected branch degree");
  std::vector<int> arms;
  for (int n : adj[branch]) arms.push_back(arm_length(adj, branch, n));
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {Family::D, m};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {Family::E, m};
  throw InternalError("unrecognised branched component");
}

}  // namespace

std::vector<CartanType> identify_components(const ExtendedDiagram& d, const std::vector<int>& nodes) {
  const int n = d.node_count();
  std::vector<char> in(n, 0);
  for (int v : nodes) in.at(v) = 1;
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && in[i] && in[j] && d.cartan_matrix[i][j] != 0) adj[i].push_back(j);

  std::vector<CartanType> out;
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (!in[s] || seen[s]) continue;
    std::vector<int> comp{s}, stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
          stack.push_back(w);
        }
    }
    out.push_back(identify_one(d, comp, adj));
  }
  return out;
}

SubalgebraType delete_extended_nodes(const CartanType& t, const std::vector<int>& nodes) {
  ExtendedDiagram d = extended_diagram(build_root_system(t));
  std::vector<int> keep;
  for (int v = 0; v < d.node_count(); ++v)
    if (std::find(nodes.begin(), nodes.end(), v) == nodes.end()) keep.push_back(v);
  return normalize(identify_components(d, keep));
}

std::vector<SubalgebraRecord> borel_de_siebenthal_step(const CartanType& t) {
  t.validate();
  ExtendedDiagram d = extended_diagram(build_root_system(t));
  const int l = t.rank;
  std::map<SubalgebraType, SubalgebraRecord> merged;
  auto add = [&](SubalgebraType ty, std::string prov) {
    auto [it, fresh] = merged.try_emplace(ty, SubalgebraRecord{t, ty, {}, true});
    it->second.provenance.push_back(std::move(prov));
  };
  for (int i = 1; i <= l; ++i) {
    std::vector<int> keep;
    for (int v = 0; v <= l; ++v)
      if (v != i) keep.push_back(v);
    add(normalize(identify_components(d, keep)), "ext-" + std::to_string(i));
  }
  for (int i = 1; i <= l; ++i) {
    std::vector<int> keep;
    for (int v = 1; v <= l; ++v)
      if (v != i) keep.push_back(v);
    add(normalize(identify_components(d, keep), 1), "plain-" + std::to_string(i));
  }
  std::vector<SubalgebraRecord> out;
  for (auto& [k, rec] : merged) out.push_back(std::move(rec));
  return out;
}

namespace {

const std::vector<SubalgebraRecord>& step_cached(const CartanType& t) {
  static std::mutex mu;
  static std::map<CartanType, std::vector<SubalgebraRecord>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(t);
  if (it == cache.end()) it = cache.emplace(t, borel_de_siebenthal_step(t)).first;
  return it->second;
}

}  // namespace

std::vector<SubalgebraRecord> regular_closure(const CartanType& t, int depth) {
  if (depth < 1) throw InvalidArgument("regular_closure depth must be positive");
  static std::mutex mu;
  static std::map<std::pair<CartanType, int>, std::vector<SubalgebraRecord>> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find({t, depth}); it != memo.end()) return it->second;
  }

  std::map<SubalgebraType, SubalgebraRecord> found;
  std::vector<SubalgebraType> frontier;
  for (const auto& rec : step_cached(t)) {
    found.emplace(rec.type, SubalgebraRecord{t, rec.type, {rec.provenance.front()}, true});
    frontier.push_back(rec.type);
  }
  for (int level = 2; level <= depth && !frontier.empty(); ++level) {
    std::vector<SubalgebraType> next;
    for (const auto& ty : frontier) {
      const std::string base = found.at(ty).provenance.front();
      for (std::size_t i = 0; i < ty.summands.size(); ++i) {
        if (i > 0 && ty.summands[i] == ty.summands[i - 1]) continue;
        for (const auto& s : step_cached(ty.summands[i])) {
          SubalgebraType nt;
          nt.torus_rank = ty.torus_rank + s.type.torus_rank;
          for (std::size_t j = 0; j < ty.summands.size(); ++j)
            if (j != i) nt.summands.push_back(ty.summands[j]);
          nt.summands.insert(nt.summands.end(), s.type.summands.begin(), s.type.summands.end());
          std::sort(nt.summands.begin(), nt.summands.end());
          if (found.count(nt)) continue;
          std::string prov = base + ";" + ty.summands[i].to_string() + ":" + s.provenance.front();
          found.emplace(nt, SubalgebraRecord{t, nt, {prov}, true});
          next.push_back(nt);
        }
      }
    }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }

  std::vector<SubalgebraRecord> out;
  for (auto& [k, rec] : found) out.push_back(std::move(rec));
  std::lock_guard lock(mu);
  memo.emplace(std::make_pair(t, depth), out);
  return out;
}

bool closure_contains_summand(const std::vector<SubalgebraRecord>& closure, const CartanType& s) {
  SubalgebraType want = normalize({s});
  for (const auto& rec : closure) {
    if (rec.type.torus_rank < want.torus_rank) continue;
    if (std::includes(rec.type.summands.begin(), rec.type.summands.end(), want.summands.begin(),
                      want.summands.end()))
      return true;
  }
  return false;
}

std::string to_string(RankVerdict v) {
  switch (v) {
    case RankVerdict::BoundHolds: return "bound_holds";
    case RankVerdict::ExceptionChain: return "exception_chain";
    case RankVerdict::Violation: return "violation";
    case RankVerdict::NotApplicable: return "not_applicable";
  }
  return "?";
}

RankBoundResult rank_bound_check(const CartanType& g, const CartanType& h, bool h_is_regular) {
  g.validate();
  if (!h.is_valid()) throw InvalidArgument("h = " + h.to_string() + " is not a simple type");
  if (h.rank > g.rank) throw InvalidArgument(h.to_string() + " has larger rank than " + g.to_string());
  if (h_is_regular) return {RankVerdict::NotApplicable, "bound concerns non-regular subalgebras only"};

  const int q = h.rank, n = g.rank;
  // item 1 is matched structurally before the numeric test (at p = 3 both apply)
  if (h.family == Family::B && g.family == Family::D && n == q + 1)
    return {RankVerdict::ExceptionChain, h.to_string() + " in " + g.to_string()};
  if (2 * q <= n + 1)
    return {RankVerdict::BoundHolds, "2*" + std::to_string(q) + " <= " + std::to_string(n) + "+1"};

  if (h.family == Family::B && (g.family == Family::B || g.family == Family::D)) {
    for (int p = std::max(3, q + 1); p <= n; ++p) {
      CartanType dp{Family::D, p};
      bool regular = g == dp || closure_contains_summand(regular_closure(g, n), dp);
      if (!regular) continue;
      std::string chain = h.to_string();
      if (q < p - 1) chain += " in B" + std::to_string(p - 1);
      chain += " in " + dp.to_string() + (g == dp ? "" : " in " + g.to_string());
      return {RankVerdict::ExceptionChain, chain};
    }
  }
  return {RankVerdict::Violation, "2*" + std::to_string(q) + " > " + std::to_string(n) + "+1 and no B_{p-1} in D_p chain"};
}

// ---- Table 5 ------------------------------------------------------------

namespace {

void parse_range(const Record& rec, std::string_view key, std::string& lo, std::string& hi) {
  std::string v = rec.get(key);
  auto dots = v.find("..");
  if (dots == std::string::npos) rec.fail("range '" + v + "' needs lo..hi");
  lo = trim(v.substr(0, dots));
  hi = trim(v.substr(dots + 2));
}

std::optional<SubalgebraType> term_type(const std::string& name, std::int64_t N, std::string& why) {
  std::vector<CartanType> raw;
  int torus = 0;
  if (N <= 0) {
    why = name + "(" + std::to_string(N) + ") has non-positive size";
    return std::nullopt;
  }
  const int n = static_cast<int>(N);
  if (name == "so") {
    if (n == 2)
      torus = 1;
    else if (n % 2)
      raw.push_back({Family::B, (n - 1) / 2});
    else
      raw.push_back({Family::D, n / 2});
  } else if (name == "sp") {
    if (n % 2) {
      why = "sp(" + std::to_string(n) + ") has odd size";
      return std::nullopt;
    }
    raw.push_back({Family::C, n / 2});
  } else if (name == "sl" || name == "gl") {
    raw.push_back({Family::A, n - 1});
    if (name == "gl") torus = 1;
  } else {
    why = "unknown algebra '" + name + "'";
    return std::nullopt;
  }
  return normalize(raw, torus);
}

std::optional<SubalgebraType> sum_type(const std::vector<std::string>& terms, const Env& env,
                                       std::string& why) {
  static const std::regex shape(R"(^\s*(so|sp|sl|gl)\((.*)\)\s*$)");
  SubalgebraType total;
  for (const auto& term : terms) {
    std::smatch m;
    if (!std::regex_match(term, m, shape)) {
      why = "cannot read '" + term + "'";
      return std::nullopt;
    }
    auto N = evaluate_int64(parse(m[2].str()), env);
    if (!N) {
      why = "non-integral size in '" + term + "'";
      return std::nullopt;
    }
    auto part = term_type(m[1].str(), *N, why);
    if (!part) return std::nullopt;
    total.summands.insert(total.summands.end(), part->summands.begin(), part->summands.end());
    total.torus_rank += part->torus_rank;
  }
  std::sort(total.summands.begin(), total.summands.end());
  return total;
}

std::int64_t eval_bound(const std::string& text, const Env& env) {
  auto v = evaluate_int64(parse(text), env);
  if (!v) throw DataError("range bound '" + text + "' is not an integer");
  return *v;
}

}  // namespace

std::optional<SubalgebraType> classical_notation_type(const std::string& text, std::string& why) {
  return sum_type(split_top_level(text, '+'), Env{}, why);
}

std::vector<MaximalRankRow> load_table5(const std::filesystem::path& path) {
  std::vector<MaximalRankRow> rows;
  for (const Record& rec : load_records(path)) {
    MaximalRankRow r;
    r.row = std::stoi(rec.get("row"));
    r.ambient_text = rec.get("ambient_text");
    r.sub_text = rec.get("sub_text");
    r.rank_text = rec.get("rank_text");
    r.note = rec.get_or("note", "");
    r.ambient = rec.get("ambient");
    r.sub = split_top_level(rec.get("sub"), '+');
    std::string lo, hi;
    parse_range(rec, "l", lo, hi);
    try {
      r.l_min = static_cast<int>(eval_bound(lo, Env{}));
      r.l_max = static_cast<int>(eval_bound(hi, Env{}));
    } catch (const std::exception& e) {
      rec.fail(e.what());
    }
    r.uses_k = rec.has("k");
    if (r.uses_k) parse_range(rec, "k", r.k_lo, r.k_hi);
    const std::string expect = rec.get_or("expect", "confirmed");
    if (expect != "confirmed" && expect != "discrepant") rec.fail("expect must be confirmed or discrepant");
    r.expect_confirmed = expect == "confirmed";
    r.derived = rec.get_or("derived", "no") == "yes";
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<MaximalRankStatus> maximal_rank_table_check(const std::vector<MaximalRankRow>& rows,
                                                        int l_max) {
  std::vector<MaximalRankStatus> out;
  for (const auto& row : rows) {
    MaximalRankStatus st{row, false, 0, {}};
    for (int l = row.l_min; l <= std::min(l_max, row.l_max); ++l) {
      Env env{{'l', l}};
      std::string why;
      auto amb = sum_type({row.ambient}, env, why);
      if (!amb || amb->summands.size() != 1 || amb->torus_rank != 0) {
        st.mismatches.push_back("l=" + std::to_string(l) + ": ambient " + row.ambient + " is not simple");
        continue;
      }
      const CartanType g = amb->summands.front();
      const auto& step = step_cached(g);
      std::int64_t k_lo = 0, k_hi = 0;
      if (row.uses_k) {
        k_lo = eval_bound(row.k_lo, env);
        k_hi = eval_bound(row.k_hi, env);
      }
      for (std::int64_t k = k_lo; k <= k_hi; ++k) {
        if (row.uses_k) env.set('k', k);
        ++st.instances;
        std::string at = "l=" + std::to_string(l) + (row.uses_k ? ",k=" + std::to_string(k) : "");
        auto printed = sum_type(row.sub, env, why);
        if (!printed) {
          st.mismatches.push_back(at + ": " + why);
          continue;
        }
        bool hit = std::any_of(step.begin(), step.end(),
                               [&](const SubalgebraRecord& r) { return r.type == *printed; });
        if (!hit) {
          std::string computed;
          for (const auto& r : step) {
            if (r.type.torus_rank != printed->torus_rank) continue;
            computed += (computed.empty() ? "" : ", ") + r.type.to_string();
          }
          st.mismatches.push_back(at + ": " + printed->to_string() + " is not a single deletion of " +
                                  g.to_string() + " (computed: " + computed + ")");
        }
      }
    }
    st.confirmed = st.mismatches.empty() && st.instances > 0;
    out.push_back(std::move(st));
  }
  return out;
}

}  // namespace lieck
