#include "lieck/constraint.hpp"

#include <cctype>

namespace lieck {

std::string_view op_text(CmpOp op) {
  switch (op) {
    case CmpOp::Lt: return "<";
    case CmpOp::Le: return "<=";
    case CmpOp::Eq: return "=";
    case CmpOp::Ge: return ">=";
    case CmpOp::Gt: return ">";
    case CmpOp::Ne: return "!=";
  }
  return "?";
}

bool compare(const Rational& x, CmpOp op, const Rational& y) {
  switch (op) {
    case CmpOp::Lt: return x < y;
    case CmpOp::Le: return x <= y;
    case CmpOp::Eq: return x == y;
    case CmpOp::Ge: return x >= y;
    case CmpOp::Gt: return x > y;
    case CmpOp::Ne: return x != y;
  }
  return false;
}

bool Constraint::holds(const Env& env) const {
  switch (kind) {
    case Kind::Compare: {
      auto x = evaluate_int64(lhs, env), y = evaluate_int64(rhs, env);
      if (x && y) {
        switch (op) {
          case CmpOp::Lt: return *x < *y;
          case CmpOp::Le: return *x <= *y;
          case CmpOp::Eq: return *x == *y;
          case CmpOp::Ge: return *x >= *y;
          case CmpOp::Gt: return *x > *y;
          case CmpOp::Ne: return *x != *y;
        }
      }
      return compare(evaluate(lhs, env), op, evaluate(rhs, env));
    }
    case Kind::Integral: return is_integral(evaluate(lhs, env));
    case Kind::Even:
    case Kind::Odd: {
      Rational v = evaluate(lhs, env);
      if (!is_integral(v)) return false;
      bool even = numerator(v) % 2 == 0;
      return kind == Kind::Even ? even : !even;
    }
  }
  return false;
}

std::string Constraint::to_string() const {
  switch (kind) {
    case Kind::Compare: return lhs.to_string() + std::string(op_text(op)) + rhs.to_string();
    case Kind::Even: return lhs.to_string() + " even";
    case Kind::Odd: return lhs.to_string() + " odd";
    case Kind::Integral: return lhs.to_string() + " integral";
  }
  return "?";
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(' || c == '{') ++depth;
    if (c == ')' || c == '}') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(text.substr(start)));
  return out;
}

namespace {

bool ends_with_word(const std::string& s, std::string_view word, std::string& head) {
  if (s.size() <= word.size() + 1) return false;
  if (s.compare(s.size() - word.size(), word.size(), word) != 0) return false;
  char before = s[s.size() - word.size() - 1];
  if (!std::isspace(static_cast<unsigned char>(before))) return false;
  head = trim(std::string_view(s).substr(0, s.size() - word.size()));
  return true;
}

}  // namespace

ConstraintSet ConstraintSet::parse(std::string_view text) {
  ConstraintSet cs;
  if (trim(text).empty()) return cs;
  for (const auto& item : split_top_level(text, ',')) {
    if (item.empty()) throw SyntaxError("empty constraint", 0, std::string(text));
    std::string head;
    if (ends_with_word(item, "even", head)) {
      cs.items.push_back({Constraint::Kind::Even, lieck::parse(head), CmpOp::Eq, Expr()});
      continue;
    }
    if (ends_with_word(item, "odd", head)) {
      cs.items.push_back({Constraint::Kind::Odd, lieck::parse(head), CmpOp::Eq, Expr()});
      continue;
    }
    if (ends_with_word(item, "integral", head)) {
      cs.items.push_back({Constraint::Kind::Integral, lieck::parse(head), CmpOp::Eq, Expr()});
      continue;
    }
    // chain of comparisons at depth 0
    std::vector<std::string> parts;
    std::vector<CmpOp> ops;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < item.size(); ++i) {
      char c = item[i];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth) continue;
      CmpOp op;
      std::size_t len = 0;
      if (item.compare(i, 2, "<=") == 0) op = CmpOp::Le, len = 2;
      else if (item.compare(i, 2, ">=") == 0) op = CmpOp::Ge, len = 2;
      else if (item.compare(i, 2, "!=") == 0) op = CmpOp::Ne, len = 2;
      else if (item.compare(i, 2, "==") == 0) op = CmpOp::Eq, len = 2;
      else if (c == '<') op = CmpOp::Lt, len = 1;
      else if (c == '>') op = CmpOp::Gt, len = 1;
      else if (c == '=') op = CmpOp::Eq, len = 1;
      if (!len) continue;
      parts.push_back(item.substr(start, i - start));
      ops.push_back(op);
      i += len - 1;
      start = i + 1;
    }
    parts.push_back(item.substr(start));
    if (ops.empty()) throw SyntaxError("constraint without comparison: '" + item + "'", 0, item);
    std::vector<Expr> exprs;
    for (const auto& p : parts) exprs.push_back(lieck::parse(p));
    for (std::size_t i = 0; i < ops.size(); ++i)
      cs.items.push_back({Constraint::Kind::Compare, exprs[i], ops[i], exprs[i + 1]});
  }
  return cs;
}

std::string ConstraintSet::to_string() const {
  std::string s;
  for (const auto& c : items) {
    if (!s.empty()) s += ", ";
    s += c.to_string();
  }
  return s;
}

std::set<char> ConstraintSet::free_variables() const {
  std::set<char> out;
  for (const auto& c : items) {
    auto l = c.lhs.free_variables();
    out.insert(l.begin(), l.end());
    auto r = c.rhs.free_variables();
    out.insert(r.begin(), r.end());
  }
  return out;
}

void ConstraintSet::append(const ConstraintSet& other) {
  items.insert(items.end(), other.items.begin(), other.items.end());
}

bool satisfies(const ConstraintSet& c, const Env& env) {
  for (const auto& item : c.items)
    if (!item.holds(env)) return false;
  return true;
}

}  // namespace lieck
