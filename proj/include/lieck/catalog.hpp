#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lieck/cartan_type.hpp"
#include "lieck/constraint.hpp"
#include "lieck/expr.hpp"
#include "lieck/record_file.hpp"

namespace lieck {

class ConstraintViolation : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

struct RealForm {
  std::string id;
  std::optional<Family> family;  // empty for the compact template
  Expr rank;                     // complex rank of one simple summand
  std::vector<char> params;
  Expr d;
  Expr r;
  ConstraintSet constraints;
  bool complex_as_real = false;
  bool compact = false;
  std::string label;  // pattern with {expr} holes
  std::string archetype;
  std::string note;
  std::string rep_target;
  std::string substitute;
  int substitute_max_rank = 0;
  std::optional<std::int64_t> paper_d;
  std::string where;

  bool is_exceptional() const;
  std::string key() const;
};

/// A catalog entry with a parameter binding.
struct FormInstance {
  const RealForm* form = nullptr;
  Env env;
  std::string display;  // overrides the label (compact factors)

  bool admissible() const;
  /// Throws ConstraintViolation when the binding is not admissible.
  std::int64_t d() const;
  std::int64_t r() const;
  int rank() const;
  /// rank of the complexification; doubled for complex-as-real forms
  int complex_rank() const;
  /// Plain-data type label (may be degenerate such as B1 or D2).
  CartanType type() const;
  std::string label() const;
  std::string id() const { return form ? form->id : "?"; }
};

struct ReductiveForm {
  std::vector<FormInstance> factors;

  std::int64_t d() const;
  std::int64_t r() const;
  std::string label() const;
  std::vector<const FormInstance*> noncompact() const;
  bool is_compact() const { return noncompact().empty(); }
};

class Catalog {
 public:
  static Catalog parse(std::string_view text, const std::string& source = "catalog.txt");
  static Catalog load(const std::filesystem::path& path);
  static Catalog load_default(const std::string& data_dir = "");

  const std::vector<RealForm>& forms() const { return forms_; }
  /// Entry by template id; `family` disambiguates so/so_C.
  const RealForm& get(std::string_view id, std::optional<Family> family = std::nullopt) const;
  const RealForm* find(std::string_view id, std::optional<Family> family = std::nullopt) const;

  FormInstance instance(std::string_view id, std::optional<Family> family, const Env& env) const;
  FormInstance compact(const std::string& display) const;

 private:
  std::vector<RealForm> forms_;
};

struct RankDimTarget {
  std::optional<std::int64_t> r;
  std::optional<std::int64_t> d;
};

/// All admissible bindings of entries filed under type t.
std::vector<FormInstance> enumerate_real_forms(const Catalog& cat, const CartanType& t,
                                               const RankDimTarget& target = {});

/// Every admissible non-compact instance whose filed rank is at most max_rank,
/// including degenerate low ranks admitted by the catalog.
std::vector<FormInstance> enumerate_all_forms(const Catalog& cat, int max_rank);

struct Substitution {
  FormInstance form;
  bool from_data = false;  // printed in the source versus found by search
  std::optional<std::int64_t> paper_d;
  std::vector<std::string> warnings;
};

std::optional<Substitution> archetype_substitute(const Catalog& cat, const RealForm& f);

}  // namespace lieck
