#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lieck/expr.hpp"

namespace lieck {

enum class CmpOp { Lt, Le, Eq, Ge, Gt, Ne };

std::string_view op_text(CmpOp op);
bool compare(const Rational& x, CmpOp op, const Rational& y);

struct Constraint {
  enum class Kind { Compare, Even, Odd, Integral };
  Kind kind = Kind::Compare;
  Expr lhs;
  CmpOp op = CmpOp::Eq;
  Expr rhs;

  bool holds(const Env& env) const;
  std::string to_string() const;
};

/// Conjunction of constraints. Text form: comma-separated items, each either
/// a comparison chain "e1 <= e2 < e3", or "e even" / "e odd" / "e integral".
struct ConstraintSet {
  std::vector<Constraint> items;

  static ConstraintSet parse(std::string_view text);
  bool empty() const { return items.empty(); }
  std::string to_string() const;
  std::set<char> free_variables() const;
  void append(const ConstraintSet& other);
};

bool satisfies(const ConstraintSet& c, const Env& env);

/// Splits on `sep` outside parentheses, trimming whitespace.
std::vector<std::string> split_top_level(std::string_view text, char sep);
std::string trim(std::string_view s);

}  // namespace lieck
