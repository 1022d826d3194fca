#include "lieck/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <set>
#include <tuple>

#include "lieck/form_spec.hpp"

namespace lieck {

bool RealForm::is_exceptional() const {
  return family && (*family == Family::E || *family == Family::F || *family == Family::G);
}

std::string RealForm::key() const {
  return family ? id + "/" + std::string(1, family_letter(*family)) : id;
}

namespace {

bool parse_flag(const Record& rec, std::string_view key) {
  std::string v = rec.get_or(key, "no");
  if (v == "yes" || v == "true" || v == "1") return true;
  if (v == "no" || v == "false" || v == "0") return false;
  rec.fail("field '" + std::string(key) + "' must be yes or no, got '" + v + "'");
}

Expr parse_field(const Record& rec, std::string_view key, const std::string& fallback) {
  std::string text = rec.get_or(key, fallback);
  try {
    return parse(text);
  } catch (const SyntaxError& e) {
    rec.fail("field '" + std::string(key) + "': " + e.what());
  }
}

std::string render_label(const std::string& pattern, const Env& env) {
  std::string out;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (pattern[i] != '{') {
      out += pattern[i];
      continue;
    }
    auto close = pattern.find('}', i);
    if (close == std::string::npos) return out + pattern.substr(i);
    std::string hole = pattern.substr(i + 1, close - i - 1);
    try {
      out += to_string(evaluate(parse(hole), env));
    } catch (const std::exception&) {
      out += hole;
    }
    i = close;
  }
  return out;
}

}  // namespace

Catalog Catalog::parse(std::string_view text, const std::string& source) {
  Catalog cat;
  std::set<std::string> keys;
  for (const Record& rec : parse_records(text, source)) {
    RealForm f;
    f.where = rec.where();
    f.id = rec.get("template");
    if (rec.has("family")) {
      const std::string& fam = rec.get("family");
      auto parsed = fam.size() == 1 ? family_from_letter(fam[0]) : std::nullopt;
      if (!parsed) rec.fail("bad family '" + fam + "'");
      f.family = parsed;
    }
    f.compact = parse_flag(rec, "compact");
    f.complex_as_real = parse_flag(rec, "complex_as_real");
    if (!f.compact && !f.family) rec.fail("non-compact entry without family");
    f.rank = parse_field(rec, "rank", "0");
    for (const auto& p : split_top_level(rec.get_or("params", ""), ',')) {
      if (p.empty()) continue;
      if (p.size() != 1 || !is_variable(p[0])) rec.fail("bad parameter '" + p + "'");
      f.params.push_back(p[0]);
    }
    f.d = parse_field(rec, "d", "");
    f.r = parse_field(rec, "r", "");
    try {
      f.constraints = ConstraintSet::parse(rec.get_or("constraints", ""));
    } catch (const SyntaxError& e) {
      rec.fail(std::string("constraints: ") + e.what());
    }
    f.label = rec.get_or("label", f.id);
    f.archetype = rec.get_or("archetype", "");
    f.note = rec.get_or("note", "");
    f.rep_target = rec.get_or("rep", "");
    f.substitute = rec.get_or("substitute", "");
    if (rec.has("substitute_max_rank")) f.substitute_max_rank = std::stoi(rec.get("substitute_max_rank"));
    if (rec.has("paper_d")) f.paper_d = std::stoll(rec.get("paper_d"));

    std::set<char> allowed(f.params.begin(), f.params.end());
    auto check_vars = [&](const std::set<char>& vars, const char* what) {
      for (char v : vars)
        if (!allowed.count(v))
          rec.fail(std::string(what) + " uses '" + v + "' which is not a declared parameter");
    };
    check_vars(f.d.free_variables(), "d");
    check_vars(f.r.free_variables(), "r");
    check_vars(f.rank.free_variables(), "rank");
    check_vars(f.constraints.free_variables(), "constraints");

    if (!keys.insert(f.key()).second) rec.fail("duplicate template id " + f.key());
    cat.forms_.push_back(std::move(f));
  }
  return cat;
}

Catalog Catalog::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open data file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path.filename().string());
}

Catalog Catalog::load_default(const std::string& data_dir) {
  return load(resolve_data_dir(data_dir) / "catalog.txt");
}

const RealForm* Catalog::find(std::string_view id, std::optional<Family> family) const {
  const RealForm* hit = nullptr;
  for (const auto& f : forms_) {
    if (f.id != id) continue;
    if (family && f.family != family) continue;
    if (hit) return nullptr;  // ambiguous without a family
    hit = &f;
  }
  return hit;
}

const RealForm& Catalog::get(std::string_view id, std::optional<Family> family) const {
  if (const RealForm* f = find(id, family)) return *f;
  throw InvalidArgument("no unique catalog entry '" + std::string(id) + "'" +
                        (family ? std::string(" of family ") + family_letter(*family) : ""));
}

FormInstance Catalog::instance(std::string_view id, std::optional<Family> family,
                               const Env& env) const {
  FormInstance fi{&get(id, family), env, ""};
  if (!fi.admissible())
    throw ConstraintViolation(fi.form->key() + " at " + env.to_string() + " violates " +
                              fi.form->constraints.to_string());
  return fi;
}

FormInstance Catalog::compact(const std::string& display) const {
  return FormInstance{&get("compact"), Env{}, display};
}

bool FormInstance::admissible() const {
  if (!form) return false;
  for (char p : form->params)
    if (!env.has(p)) return false;
  try {
    if (!satisfies(form->constraints, env)) return false;
    return is_integral(evaluate(form->d, env)) && is_integral(evaluate(form->r, env));
  } catch (const EvalError&) {
    return false;
  }
}

std::int64_t FormInstance::d() const {
  if (!admissible())
    throw ConstraintViolation(id() + " at " + env.to_string() + " violates " +
                              form->constraints.to_string());
  return to_int64(evaluate_integer(form->d, env));
}

std::int64_t FormInstance::r() const {
  if (!admissible())
    throw ConstraintViolation(id() + " at " + env.to_string() + " violates " +
                              form->constraints.to_string());
  return to_int64(evaluate_integer(form->r, env));
}

int FormInstance::rank() const { return static_cast<int>(to_int64(evaluate_integer(form->rank, env))); }

int FormInstance::complex_rank() const { return rank() * (form->complex_as_real ? 2 : 1); }

CartanType FormInstance::type() const {
  if (!form->family) throw InvalidArgument("compact factor has no Cartan type");
  return CartanType{*form->family, rank()};
}

std::string FormInstance::label() const {
  if (!display.empty()) return display;
  return render_label(form->label, env);
}

std::int64_t ReductiveForm::d() const {
  std::int64_t s = 0;
  for (const auto& f : factors) s += f.d();
  return s;
}

std::int64_t ReductiveForm::r() const {
  std::int64_t s = 0;
  for (const auto& f : factors) s += f.r();
  return s;
}

std::string ReductiveForm::label() const {
  std::string s;
  for (const auto& f : factors) {
    if (!s.empty()) s += " x ";
    s += f.label();
  }
  return s;
}

std::vector<const FormInstance*> ReductiveForm::noncompact() const {
  std::vector<const FormInstance*> out;
  for (const auto& f : factors)
    if (!f.form->compact) out.push_back(&f);
  return out;
}

namespace {

void push_bindings(const RealForm& f, std::int64_t t, std::vector<FormInstance>& out) {
  bool has_t = std::find(f.params.begin(), f.params.end(), 't') != f.params.end();
  bool has_a = std::find(f.params.begin(), f.params.end(), 'a') != f.params.end();
  Env env;
  if (has_t) env.set('t', t);
  if (!has_a) {
    FormInstance fi{&f, env, ""};
    if (fi.admissible()) out.push_back(fi);
    return;
  }
  for (std::int64_t a = 0; a <= 2 * t + 2; ++a) {
    env.set('a', a);
    FormInstance fi{&f, env, ""};
    if (fi.admissible()) out.push_back(fi);
  }
}

}  // namespace

std::vector<FormInstance> enumerate_real_forms(const Catalog& cat, const CartanType& t,
                                               const RankDimTarget& target) {
  std::vector<FormInstance> out;
  for (const auto& f : cat.forms()) {
    if (f.compact || f.family != t.family) continue;
    std::vector<FormInstance> cands;
    push_bindings(f, t.rank, cands);
    for (auto& fi : cands) {
      if (fi.rank() != t.rank) continue;
      if (target.r && fi.r() != *target.r) continue;
      if (target.d && fi.d() != *target.d) continue;
      out.push_back(fi);
    }
  }
  return out;
}

std::vector<FormInstance> enumerate_all_forms(const Catalog& cat, int max_rank) {
  std::vector<FormInstance> out;
  for (const auto& f : cat.forms()) {
    if (f.compact) continue;
    bool has_t = std::find(f.params.begin(), f.params.end(), 't') != f.params.end();
    if (has_t) {
      for (int t = 1; t <= max_rank; ++t) push_bindings(f, t, out);
    } else {
      std::vector<FormInstance> one;
      push_bindings(f, 0, one);
      for (auto& fi : one)
        if (fi.rank() <= max_rank) out.push_back(fi);
    }
  }
  return out;
}

std::optional<Substitution> archetype_substitute(const Catalog& cat, const RealForm& f) {
  if (!f.is_exceptional())
    throw InvalidArgument("archetype_substitute expects an exceptional form, got " + f.key());
  FormInstance input{&f, Env{}, ""};
  const std::int64_t d_in = input.d(), r_in = input.r();

  if (!f.substitute.empty()) {
    ReductiveForm rf = resolve_form(cat, f.substitute);
    if (rf.factors.size() != 1) throw DataError(f.where + ": substitute must be a single factor");
    Substitution s{rf.factors.front(), true, f.paper_d, {}};
    const FormInstance& g = s.form;
    if (g.r() != r_in)
      s.warnings.push_back("real rank " + std::to_string(g.r()) + " differs from " + std::to_string(r_in));
    if (g.d() < d_in)
      s.warnings.push_back("d " + std::to_string(g.d()) + " below " + std::to_string(d_in));
    if (f.substitute_max_rank && g.complex_rank() > f.substitute_max_rank)
      s.warnings.push_back("complex rank " + std::to_string(g.complex_rank()) + " exceeds " +
                           std::to_string(f.substitute_max_rank));
    if (f.paper_d && *f.paper_d != g.d())
      s.warnings.push_back("printed d=" + std::to_string(*f.paper_d) + " but " + g.label() +
                           " has d=" + std::to_string(g.d()));
    return s;
  }

  // search archetypes I (so, type B) and II (sp) within the rank budget
  std::vector<FormInstance> cands;
  for (int t = 1; t <= f.substitute_max_rank; ++t) {
    for (const auto& fi : enumerate_real_forms(cat, CartanType{Family::B, t}, {r_in, std::nullopt}))
      if (fi.id() == "so" && fi.d() >= d_in) cands.push_back(fi);
    for (const auto& fi : enumerate_real_forms(cat, CartanType{Family::C, t}, {r_in, std::nullopt}))
      if (fi.id() == "sp" && fi.d() >= d_in) cands.push_back(fi);
  }
  if (cands.empty()) return std::nullopt;
  std::stable_sort(cands.begin(), cands.end(), [](const FormInstance& x, const FormInstance& y) {
    return std::make_tuple(x.complex_rank(), x.d(), x.id() != "so") <
           std::make_tuple(y.complex_rank(), y.d(), y.id() != "so");
  });
  return Substitution{cands.front(), false, std::nullopt, {}};
}

}  // namespace lieck
