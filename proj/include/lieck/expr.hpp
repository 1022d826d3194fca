#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lieck/bigint.hpp"

namespace lieck {

/// Variables usable in data files. Single lowercase letters only.
inline constexpr std::string_view kVariables = "abnktpqmsrlx";
bool is_variable(char c);

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& msg, std::size_t pos, std::string source);
  std::size_t position() const { return pos_; }
  const std::string& source() const { return source_; }

 private:
  std::size_t pos_;
  std::string source_;
};

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integer assignment of variables.
class Env {
 public:
  Env() = default;
  Env(std::initializer_list<std::pair<char, std::int64_t>> init);

  void set(char var, std::int64_t value);
  void unset(char var);
  bool has(char var) const;
  /// Throws EvalError naming the variable when unbound.
  std::int64_t get(char var) const;
  std::string to_string() const;
  std::vector<std::pair<char, std::int64_t>> bindings() const;

  friend bool operator==(const Env&, const Env&) = default;

 private:
  std::array<std::optional<std::int64_t>, 26> slots_{};
};

struct ExprNode;
using NodePtr = std::shared_ptr<const ExprNode>;

enum class NodeKind { Num, Var, Neg, Add, Sub, Mul, Div, Pow, Binom, FloorDiv, Prod };

struct ExprNode {
  NodeKind kind;
  BigInt value;  // Num
  char var = 0;  // Var, and the bound index of Prod
  std::vector<NodePtr> args;
};

class Expr {
 public:
  Expr();  // the constant 0
  explicit Expr(NodePtr root);

  static Expr constant(const BigInt& v);
  static Expr variable(char v);

  const ExprNode& root() const { return *root_; }
  NodePtr node() const { return root_; }

  /// Canonical text; parse(to_string()) is structurally equal.
  std::string to_string() const;
  std::set<char> free_variables() const;
  bool is_constant() const { return free_variables().empty(); }

  friend bool operator==(const Expr& x, const Expr& y);
  friend Expr operator+(const Expr& x, const Expr& y);
  friend Expr operator-(const Expr& x, const Expr& y);
  friend Expr operator*(const Expr& x, const Expr& y);

 private:
  NodePtr root_;
};

/// Throws SyntaxError with the byte offset of the problem.
Expr parse(std::string_view source);

/// Exact value. Uses a checked 64-bit path and falls back to rationals on
/// overflow or inexact division.
Rational evaluate(const Expr& e, const Env& env);
/// Evaluates and requires an integral result.
BigInt evaluate_integer(const Expr& e, const Env& env);
/// Fast path only; nullopt when 64-bit arithmetic is not enough.
std::optional<std::int64_t> evaluate_int64(const Expr& e, const Env& env);

BigInt binomial(const BigInt& x, const BigInt& y);

/// Replaces free variable v by the expression r everywhere.
Expr substitute(const Expr& e, char v, const Expr& r);

}  // namespace lieck
