#include "lieck/ck_criteria.hpp"

#include <map>
#include <set>

#include "lieck/form_spec.hpp"
#include "lieck/record_file.hpp"

namespace lieck {

Triple make_triple(const Catalog& cat, const std::string& g, const std::string& h,
                   const std::string& l, const Env& env) {
  Triple tr{resolve_form(cat, g, env), resolve_form(cat, h, env), resolve_form(cat, l, env), env};
  if (tr.g.noncompact().size() != 1)
    throw InvalidArgument("g = '" + g + "' must have exactly one non-compact simple factor");
  return tr;
}

bool kobayashi_cocompact(const Triple& tr) { return tr.g.d() == tr.h.d() + tr.l.d(); }

bool rank_additive(const Triple& tr) {
  const auto rh = tr.h.r(), rl = tr.l.r();
  return rh >= 1 && rl >= 1 && tr.g.r() == rh + rl;
}

bool is_split(const FormInstance& f) {
  return !f.form->compact && !f.form->complex_as_real && f.r() == f.rank();
}

std::vector<Table1Row> load_table1(const std::filesystem::path& path) {
  std::vector<Table1Row> rows;
  for (const Record& rec : load_records(path)) {
    Table1Row r;
    r.row = std::stoi(rec.get("row"));
    r.g = rec.get("g");
    r.h = rec.get("h");
    r.l = rec.get("l");
    if (rec.has("duplicate_of")) r.duplicate_of = std::stoi(rec.get("duplicate_of"));
    if (rec.has("special_case_of")) r.special_case_of = std::stoi(rec.get("special_case_of"));
    rows.push_back(std::move(r));
  }
  return rows;
}

namespace {

std::string dr(const ReductiveForm& f) {
  return "(d=" + std::to_string(f.d()) + ",r=" + std::to_string(f.r()) + ")";
}

}  // namespace

std::vector<Table1Status> verify_table1(const Catalog& cat, const std::vector<Table1Row>& rows,
                                        int n_max) {
  std::map<int, const Table1Row*> by_number;
  for (const auto& r : rows) by_number[r.row] = &r;

  std::vector<Table1Status> out;
  for (const auto& row : rows) {
    Table1Status st{row, 0, {}, {}};
    for (int n = 1; n <= n_max; ++n) {
      std::string at = "n=" + std::to_string(n) + ": ";
      try {
        Triple tr = make_triple(cat, row.g, row.h, row.l, Env{{'n', n}});
        ++st.checked;
        if (!kobayashi_cocompact(tr))
          st.failures.push_back(at + "d " + std::to_string(tr.g.d()) + " != " + std::to_string(tr.h.d()) +
                                "+" + std::to_string(tr.l.d()));
        if (!rank_additive(tr))
          st.failures.push_back(at + "r " + std::to_string(tr.g.r()) + " != " + std::to_string(tr.h.r()) +
                                "+" + std::to_string(tr.l.r()));
      } catch (const std::exception& e) {
        st.failures.push_back(at + e.what());
      }
    }
    if (row.duplicate_of) st.notes.push_back("duplicate of row " + std::to_string(*row.duplicate_of));
    if (row.special_case_of) {
      auto it = by_number.find(*row.special_case_of);
      if (it == by_number.end()) {
        st.failures.push_back("special case of missing row " + std::to_string(*row.special_case_of));
      } else {
        const Table1Row& p = *it->second;
        try {
          Triple a = make_triple(cat, row.g, row.h, row.l, Env{{'n', 1}});
          Triple b = make_triple(cat, p.g, p.h, p.l, Env{{'n', 1}});
          bool same = a.g.d() == b.g.d() && a.g.r() == b.g.r() && a.h.d() == b.h.d() &&
                      a.h.r() == b.h.r() && a.l.d() == b.l.d() && a.l.r() == b.l.r();
          std::string cmp = dr(a.g) + dr(a.h) + dr(a.l) + " vs " + dr(b.g) + dr(b.h) + dr(b.l);
          if (same)
            st.notes.push_back("equals row " + std::to_string(p.row) + " at n=1 " + cmp);
          else
            st.failures.push_back("differs from row " + std::to_string(p.row) + " at n=1 " + cmp);
        } catch (const std::exception& e) {
          st.failures.push_back(std::string("special-case check: ") + e.what());
        }
      }
    }
    out.push_back(std::move(st));
  }
  return out;
}

std::pair<std::int64_t, std::int64_t> signature(const FormInstance& f) {
  const std::string id = f.id();
  if (id != "so" && id != "su" && id != "sp")
    throw InvalidArgument(f.label() + " is not a signature form so/su/sp(p,q)");
  const std::int64_t a = f.env.get('a'), t = f.env.get('t');
  std::int64_t total = 0;
  if (id == "so") total = *f.form->family == Family::B ? 2 * t + 1 : 2 * t;
  if (id == "su") total = t + 1;
  if (id == "sp") total = t;
  return {std::min(a, total - a), std::max(a, total - a)};
}

namespace {

FormInstance so_form(const Catalog& cat, std::int64_t p, std::int64_t q) {
  const std::int64_t n = p + q;
  Family fam = n % 2 ? Family::B : Family::D;
  return cat.instance("so", fam, Env{{'a', std::min(p, q)}, {'t', n / 2}});
}

}  // namespace

std::optional<ObstructionWitness> obstruction_search(const Catalog& cat, const FormInstance& g,
                                                     const FormInstance& h) {
  if (g.id() != "so" || h.id() != "so")
    throw InvalidArgument("obstruction_search needs so(p,q) inputs, got " + g.label() + " and " + h.label());
  auto [m, s2] = signature(g);
  auto [q, s] = signature(h);
  if (q > m || s > s2) return std::nullopt;  // h does not sit in g by signature
  const std::int64_t dh = h.d();
  for (std::int64_t sp = s + 2; sp <= s2; sp += 2) {
    FormInstance gp = so_form(cat, q, sp);
    if (gp.r() == h.r() && gp.d() > dh) return ObstructionWitness{gp, q, sp};
  }
  return std::nullopt;
}

std::vector<G2Candidate> load_g2_candidates(const std::filesystem::path& path) {
  std::vector<G2Candidate> out;
  for (const Record& rec : load_records(path)) {
    G2Candidate c{rec.get("h"), rec.get("g"), rec.get_or("section", "")};
    if (c.h != "g2_2" && c.h != "g2_C") rec.fail("h must be g2_2 or g2_C, got '" + c.h + "'");
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

enum class RepKind { Complex, Orthogonal, Symplectic };

/// Size of the natural module of an ambient, with the kind of form it preserves.
std::pair<std::int64_t, RepKind> ambient_module(const FormInstance& g) {
  const std::string id = g.id();
  const std::int64_t t = g.rank();
  if (id == "su" || id == "su_star" || id == "sl_R") return {t + 1, RepKind::Complex};
  if (id == "so") return {signature(g).first + signature(g).second, RepKind::Orthogonal};
  if (id == "so_star") return {2 * t, RepKind::Orthogonal};
  if (id == "sp" || id == "sp_R") return {2 * t, RepKind::Symplectic};
  throw InvalidArgument("no natural module recorded for ambient " + g.label());
}

std::int64_t minimal_module(const FormInstance& l, RepKind kind) {
  const Family fam = *l.form->family;
  const std::int64_t t = l.rank();
  std::int64_t base = 0;
  switch (fam) {
    case Family::A: base = t == 1 ? 2 : t + 1; break;
    case Family::B: base = 2 * t + 1; break;
    case Family::C: base = 2 * t; break;
    case Family::D: base = 2 * t; break;
    case Family::G: base = 7; break;
    case Family::F: base = 26; break;
    case Family::E: base = t == 6 ? 27 : t == 7 ? 56 : 248; break;
  }
  std::int64_t dim = base;
  if (kind == RepKind::Orthogonal) {
    if (l.id() == "so_star") dim = 4 * t;  // so*(2t) sits in so(2t,2t)
    else if (fam == Family::A) dim = t == 1 ? 3 : 2 * (t + 1);
    else if (fam == Family::C) dim = t == 1 ? 3 : 4 * t;
    else if (fam == Family::E) dim = t == 6 ? 54 : t == 7 ? 112 : 248;
  } else if (kind == RepKind::Symplectic) {
    if (fam == Family::A) dim = t == 1 ? 2 : 2 * (t + 1);
    else if (fam == Family::E && t == 7) dim = 56;
    else if (fam != Family::C) dim = 2 * minimal_module(l, RepKind::Orthogonal);
  }
  return l.form->complex_as_real ? 2 * dim : dim;
}

std::string classify(const FormInstance& g, const FormInstance& l) {
  if (l.complex_rank() > g.complex_rank()) return "infeasible-rank";
  auto [n, kind] = ambient_module(g);
  if (minimal_module(l, kind) > n) return "infeasible-rep";
  if (l.id() == g.id() && (l.id() == "so" || l.id() == "su" || l.id() == "sp")) {
    auto [p1, q1] = signature(l);
    auto [p2, q2] = signature(g);
    bool fits = (p1 <= p2 && q1 <= q2) || (p1 <= q2 && q1 <= p2);
    return fits ? "feasible-signature" : "infeasible-signature";
  }
  return "manual review";
}

}  // namespace

LowRankReport lowrank_elimination_search(const Catalog& cat, const std::vector<G2Candidate>& cands) {
  LowRankReport rep;
  std::map<std::string, std::string> seen;  // h|g label -> first spec
  for (const auto& c : cands) {
    LowRankEntry e;
    e.candidate = c;
    FormInstance h = cat.instance(c.h, std::nullopt, Env{});
    ReductiveForm gf = resolve_form(cat, c.g);
    if (gf.factors.size() != 1) throw InvalidArgument("candidate ambient '" + c.g + "' is not simple");
    const FormInstance& g = gf.factors.front();
    e.g_label = g.label();
    e.ambient_split = is_split(g);
    e.need_r = g.r() - h.r();
    e.need_d = g.d() - h.d();
    auto key = c.h + "|" + e.g_label;
    if (auto it = seen.find(key); it != seen.end()) {
      e.outcome = "duplicate of " + it->second;
      rep.entries.push_back(std::move(e));
      continue;
    }
    seen.emplace(key, c.g);
    if (e.need_r < 1) {
      e.outcome = "rejected (b=0)";
      rep.entries.push_back(std::move(e));
      continue;
    }
    e.outcome = "searched";
    for (const auto& l : enumerate_all_forms(cat, g.rank())) {
      if (l.r() != e.need_r || l.d() != e.need_d) continue;
      LowRankMatch m{l.label(), l.id(), l.d(), l.r(), classify(g, l)};
      if (m.survives())
        rep.survivors.push_back("(" + e.g_label + ", " + m.l_label + ", " + h.label() + ")" +
                                (e.ambient_split ? " ambient split" : ""));
      e.matches.push_back(std::move(m));
    }
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

}  // namespace lieck
