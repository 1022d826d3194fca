#include "lieck/expr.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace lieck {

bool is_variable(char c) { return kVariables.find(c) != std::string_view::npos; }

SyntaxError::SyntaxError(const std::string& msg, std::size_t pos, std::string source)
    : std::runtime_error("syntax error at offset " + std::to_string(pos) + " in '" + source +
                         "': " + msg),
      pos_(pos),
      source_(std::move(source)) {}

Env::Env(std::initializer_list<std::pair<char, std::int64_t>> init) {
  for (const auto& [k, v] : init) set(k, v);
}

void Env::set(char var, std::int64_t value) {
  if (var < 'a' || var > 'z') throw EvalError(std::string("bad variable name '") + var + "'");
  slots_[var - 'a'] = value;
}

void Env::unset(char var) {
  if (var >= 'a' && var <= 'z') slots_[var - 'a'].reset();
}

bool Env::has(char var) const { return var >= 'a' && var <= 'z' && slots_[var - 'a'].has_value(); }

std::int64_t Env::get(char var) const {
  if (!has(var)) throw EvalError(std::string("unbound variable '") + var + "'");
  return *slots_[var - 'a'];
}

std::vector<std::pair<char, std::int64_t>> Env::bindings() const {
  std::vector<std::pair<char, std::int64_t>> out;
  for (int i = 0; i < 26; ++i)
    if (slots_[i]) out.emplace_back(static_cast<char>('a' + i), *slots_[i]);
  return out;
}

std::string Env::to_string() const {
  std::string s;
  for (const auto& [k, v] : bindings()) {
    if (!s.empty()) s += ", ";
    s += std::string(1, k) + "=" + std::to_string(v);
  }
  return s;
}

namespace {

NodePtr make(NodeKind k, std::vector<NodePtr> args = {}) {
  auto n = std::make_shared<ExprNode>();
  n->kind = k;
  n->args = std::move(args);
  return n;
}

NodePtr make_num(const BigInt& v) {
  auto n = std::make_shared<ExprNode>();
  n->kind = NodeKind::Num;
  n->value = v;
  return n;
}

NodePtr make_var(char c) {
  auto n = std::make_shared<ExprNode>();
  n->kind = NodeKind::Var;
  n->var = c;
  return n;
}

bool node_equal(const ExprNode& x, const ExprNode& y) {
  if (x.kind != y.kind || x.var != y.var || x.value != y.value || x.args.size() != y.args.size())
    return false;
  for (std::size_t i = 0; i < x.args.size(); ++i)
    if (!node_equal(*x.args[i], *y.args[i])) return false;
  return true;
}

// --- parser -----------------------------------------------------------------

class Parser {
 public:
  explicit Parser(std::string_view src) : raw_(src) {
    // U+2212 MINUS SIGN and U+00D7 are accepted as '-' and '*'; offsets refer
    // to the normalized text
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (src.compare(i, 3, "\xE2\x88\x92") == 0) {
        text_ += '-';
        i += 2;
      } else if (src.compare(i, 2, "\xC3\x97") == 0) {
        text_ += '*';
        i += 1;
      } else {
        text_ += src[i];
      }
    }
  }

  Expr run() {
    skip();
    if (pos_ >= text_.size()) fail("empty expression");
    NodePtr e = expr();
    skip();
    if (pos_ < text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return Expr(e);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(msg, pos_, std::string(raw_));
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (accept('+'))
        lhs = make(NodeKind::Add, {lhs, term()});
      else if (accept('-'))
        lhs = make(NodeKind::Sub, {lhs, term()});
      else
        return lhs;
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      if (accept('*'))
        lhs = make(NodeKind::Mul, {lhs, unary()});
      else if (accept('/'))
        lhs = make(NodeKind::Div, {lhs, unary()});
      else
        return lhs;
    }
  }

  NodePtr unary() {
    if (accept('-')) return make(NodeKind::Neg, {unary()});
    if (accept('+')) return unary();
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (accept('^')) {
      skip();
      if (pos_ < text_.size() && text_[pos_] == '-') fail("negative exponent");
      return make(NodeKind::Pow, {base, power()});
    }
    return base;
  }

  NodePtr primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return make_num(BigInt(text_.substr(start, pos_ - start)));
    }
    if (c == '(') {
      ++pos_;
      NodePtr e = expr();
      expect(')');
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name = text_.substr(start, pos_ - start);
      skip();
      bool call = pos_ < text_.size() && text_[pos_] == '(';
      if (!call) {
        if (name.size() == 1 && is_variable(name[0])) return make_var(name[0]);
        pos_ = start;
        fail("unknown identifier '" + name + "'");
      }
      ++pos_;
      std::size_t call_pos = start;
      std::vector<NodePtr> args;
      if (name == "prod") {
        skip();
        std::size_t ipos = pos_;
        NodePtr idx = primary();
        if (idx->kind != NodeKind::Var) {
          pos_ = ipos;
          fail("prod index must be a variable");
        }
        expect(',');
        args.push_back(expr());
        expect(',');
        args.push_back(expr());
        expect(',');
        args.push_back(expr());
        expect(')');
        auto n = make(NodeKind::Prod, std::move(args));
        std::const_pointer_cast<ExprNode>(n)->var = idx->var;
        return n;
      }
      if (!accept(')')) {
        do args.push_back(expr());
        while (accept(','));
        expect(')');
      }
      NodeKind k;
      if (name == "binom")
        k = NodeKind::Binom;
      else if (name == "floor_div")
        k = NodeKind::FloorDiv;
      else {
        pos_ = call_pos;
        fail("unknown function '" + name + "'");
      }
      if (args.size() != 2) {
        pos_ = call_pos;
        fail(name + " takes 2 arguments, got " + std::to_string(args.size()));
      }
      return make(k, std::move(args));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view raw_;
  std::string text_;
  std::size_t pos_ = 0;
};

// --- printing ---------------------------------------------------------------

int precedence(const ExprNode& n) {
  switch (n.kind) {
    case NodeKind::Add:
    case NodeKind::Sub: return 1;
    case NodeKind::Mul:
    case NodeKind::Div: return 2;
    case NodeKind::Neg: return 3;
    case NodeKind::Pow: return 4;
    default: return 5;
  }
}

std::string print(const ExprNode& n);

std::string wrap(const ExprNode& n, bool paren) { return paren ? "(" + print(n) + ")" : print(n); }

std::string print(const ExprNode& n) {
  switch (n.kind) {
    case NodeKind::Num: return n.value.str();
    case NodeKind::Var: return std::string(1, n.var);
    case NodeKind::Neg: return "-" + wrap(*n.args[0], precedence(*n.args[0]) < 4);
    case NodeKind::Add:
    case NodeKind::Sub:
    case NodeKind::Mul:
    case NodeKind::Div: {
      int p = precedence(n);
      const char* op = n.kind == NodeKind::Add   ? "+"
                       : n.kind == NodeKind::Sub ? "-"
                       : n.kind == NodeKind::Mul ? "*"
                                                 : "/";
      // left-associative: the right operand needs parens at equal precedence
      bool lp = precedence(*n.args[0]) < p || n.args[0]->kind == NodeKind::Neg;
      bool rp = precedence(*n.args[1]) <= p || n.args[1]->kind == NodeKind::Neg;
      return wrap(*n.args[0], lp) + op + wrap(*n.args[1], rp);
    }
    case NodeKind::Pow: {
      bool lp = precedence(*n.args[0]) <= 4;
      bool rp = precedence(*n.args[1]) < 4;
      return wrap(*n.args[0], lp) + "^" + wrap(*n.args[1], rp);
    }
    case NodeKind::Binom: return "binom(" + print(*n.args[0]) + "," + print(*n.args[1]) + ")";
    case NodeKind::FloorDiv:
      return "floor_div(" + print(*n.args[0]) + "," + print(*n.args[1]) + ")";
    case NodeKind::Prod:
      return "prod(" + std::string(1, n.var) + "," + print(*n.args[0]) + "," + print(*n.args[1]) +
             "," + print(*n.args[2]) + ")";
  }
  return "?";
}

void collect_vars(const ExprNode& n, std::set<char>& out, std::set<char>& bound) {
  if (n.kind == NodeKind::Var) {
    if (!bound.count(n.var)) out.insert(n.var);
    return;
  }
  if (n.kind == NodeKind::Prod) {
    collect_vars(*n.args[0], out, bound);
    collect_vars(*n.args[1], out, bound);
    bool was = bound.count(n.var) > 0;
    bound.insert(n.var);
    collect_vars(*n.args[2], out, bound);
    if (!was) bound.erase(n.var);
    return;
  }
  for (const auto& a : n.args) collect_vars(*a, out, bound);
}

// --- evaluation -------------------------------------------------------------

struct Overflow {};

std::int64_t add64(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw Overflow{};
  return r;
}
std::int64_t sub64(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_sub_overflow(x, y, &r)) throw Overflow{};
  return r;
}
std::int64_t mul64(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw Overflow{};
  return r;
}

std::int64_t floor_div64(std::int64_t x, std::int64_t y) {
  if (y == 0) throw EvalError("floor_div by zero");
  std::int64_t q = x / y;
  if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
  return q;
}

std::int64_t binom64(std::int64_t x, std::int64_t y) {
  if (y < 0) return 0;
  if (x < 0) throw EvalError("binom with negative upper argument " + std::to_string(x));
  if (y > x) return 0;
  y = std::min(y, x - y);
  // running product stays integral: C(x-y+i, i)
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= y; ++i) {
    r = mul64(r, x - y + i);
    r /= i;
  }
  return r;
}

class Evaluator {
 public:
  explicit Evaluator(Env env) : env_(std::move(env)) {}

  std::int64_t fast(const ExprNode& n) {
    switch (n.kind) {
      case NodeKind::Num:
        if (n.value > std::numeric_limits<std::int64_t>::max()) throw Overflow{};
        return static_cast<std::int64_t>(n.value);
      case NodeKind::Var: return env_.get(n.var);
      case NodeKind::Neg: return sub64(0, fast(*n.args[0]));
      case NodeKind::Add: return add64(fast(*n.args[0]), fast(*n.args[1]));
      case NodeKind::Sub: return sub64(fast(*n.args[0]), fast(*n.args[1]));
      case NodeKind::Mul: return mul64(fast(*n.args[0]), fast(*n.args[1]));
      case NodeKind::Div: {
        std::int64_t x = fast(*n.args[0]), y = fast(*n.args[1]);
        if (y == 0) throw EvalError("division by zero");
        if (x % y != 0) throw Overflow{};
        return x / y;
      }
      case NodeKind::Pow: {
        std::int64_t b = fast(*n.args[0]), e = fast(*n.args[1]);
        if (e < 0) throw EvalError("negative exponent " + std::to_string(e));
        std::int64_t r = 1;
        for (std::int64_t i = 0; i < e; ++i) {
          r = mul64(r, b);
          if (r == 0 || r == 1) break;
        }
        if (r == 1 && b == -1 && e % 2 == 1) r = -1;
        return r;
      }
      case NodeKind::Binom: return binom64(fast(*n.args[0]), fast(*n.args[1]));
      case NodeKind::FloorDiv: return floor_div64(fast(*n.args[0]), fast(*n.args[1]));
      case NodeKind::Prod: {
        std::int64_t lo = fast(*n.args[0]), hi = fast(*n.args[1]);
        auto saved = env_.has(n.var) ? std::optional<std::int64_t>(env_.get(n.var)) : std::nullopt;
        std::int64_t r = 1;
        try {
          for (std::int64_t i = lo; i <= hi; ++i) {
            env_.set(n.var, i);
            r = mul64(r, fast(*n.args[2]));
          }
        } catch (...) {
          restore(n.var, saved);
          throw;
        }
        restore(n.var, saved);
        return r;
      }
    }
    throw EvalError("bad node");
  }

  Rational exact(const ExprNode& n) {
    switch (n.kind) {
      case NodeKind::Num: return Rational(n.value);
      case NodeKind::Var: return Rational(env_.get(n.var));
      case NodeKind::Neg: return -exact(*n.args[0]);
      case NodeKind::Add: return exact(*n.args[0]) + exact(*n.args[1]);
      case NodeKind::Sub: return exact(*n.args[0]) - exact(*n.args[1]);
      case NodeKind::Mul: return exact(*n.args[0]) * exact(*n.args[1]);
      case NodeKind::Div: {
        Rational y = exact(*n.args[1]);
        if (y == 0) throw EvalError("division by zero");
        return exact(*n.args[0]) / y;
      }
      case NodeKind::Pow: {
        Rational b = exact(*n.args[0]);
        Rational e = exact(*n.args[1]);
        if (!is_integral(e) || e < 0) throw EvalError("exponent " + lieck::to_string(e) + " is not a non-negative integer");
        BigInt k = numerator(e);
        Rational r = 1;
        for (BigInt i = 0; i < k; ++i) r *= b;
        return r;
      }
      case NodeKind::Binom: {
        Rational x = exact(*n.args[0]), y = exact(*n.args[1]);
        if (!is_integral(x) || !is_integral(y)) throw EvalError("binom of non-integer arguments");
        return Rational(binomial(numerator(x), numerator(y)));
      }
      case NodeKind::FloorDiv: {
        Rational q_den = exact(*n.args[1]);
        if (q_den == 0) throw EvalError("floor_div by zero");
        Rational q = exact(*n.args[0]) / q_den;
        BigInt f = numerator(q) / denominator(q);
        if (q < 0 && f * denominator(q) != numerator(q)) f -= 1;
        return Rational(f);
      }
      case NodeKind::Prod: {
        Rational lo = exact(*n.args[0]), hi = exact(*n.args[1]);
        if (!is_integral(lo) || !is_integral(hi)) throw EvalError("prod bounds must be integers");
        auto saved = env_.has(n.var) ? std::optional<std::int64_t>(env_.get(n.var)) : std::nullopt;
        Rational r = 1;
        for (std::int64_t i = to_int64(lo); i <= to_int64(hi); ++i) {
          env_.set(n.var, i);
          r *= exact(*n.args[2]);
        }
        restore(n.var, saved);
        return r;
      }
    }
    throw EvalError("bad node");
  }

 private:
  void restore(char v, const std::optional<std::int64_t>& saved) {
    if (saved)
      env_.set(v, *saved);
    else
      env_.unset(v);
  }

  Env env_;
};

NodePtr subst(const NodePtr& n, char v, const NodePtr& r) {
  if (n->kind == NodeKind::Var) return n->var == v ? r : n;
  if (n->kind == NodeKind::Num) return n;
  if (n->kind == NodeKind::Prod && n->var == v) {
    auto out = std::make_shared<ExprNode>(*n);
    out->args[0] = subst(n->args[0], v, r);
    out->args[1] = subst(n->args[1], v, r);
    return out;
  }
  auto out = std::make_shared<ExprNode>(*n);
  for (auto& a : out->args) a = subst(a, v, r);
  return out;
}

}  // namespace

Expr::Expr() : root_(make_num(0)) {}
Expr::Expr(NodePtr root) : root_(std::move(root)) {}
Expr Expr::constant(const BigInt& v) { return Expr(make_num(v)); }
Expr Expr::variable(char v) { return Expr(make_var(v)); }

std::string Expr::to_string() const { return print(*root_); }

std::set<char> Expr::free_variables() const {
  std::set<char> out, bound;
  collect_vars(*root_, out, bound);
  return out;
}

bool operator==(const Expr& x, const Expr& y) { return node_equal(*x.root_, *y.root_); }
Expr operator+(const Expr& x, const Expr& y) { return Expr(make(NodeKind::Add, {x.root_, y.root_})); }
Expr operator-(const Expr& x, const Expr& y) { return Expr(make(NodeKind::Sub, {x.root_, y.root_})); }
Expr operator*(const Expr& x, const Expr& y) { return Expr(make(NodeKind::Mul, {x.root_, y.root_})); }

Expr parse(std::string_view source) { return Parser(source).run(); }

BigInt binomial(const BigInt& x, const BigInt& y) {
  if (y < 0) return 0;
  if (x < 0) throw EvalError("binom with negative upper argument " + x.str());
  if (y > x) return 0;
  BigInt k = std::min(y, BigInt(x - y));
  BigInt r = 1;
  for (BigInt i = 1; i <= k; ++i) r = r * (x - k + i) / i;
  return r;
}

std::optional<std::int64_t> evaluate_int64(const Expr& e, const Env& env) {
  try {
    return Evaluator(env).fast(e.root());
  } catch (const Overflow&) {
    return std::nullopt;
  }
}

Rational evaluate(const Expr& e, const Env& env) {
  if (auto v = evaluate_int64(e, env)) return Rational(*v);
  return Evaluator(env).exact(e.root());
}

BigInt evaluate_integer(const Expr& e, const Env& env) {
  Rational q = evaluate(e, env);
  if (!is_integral(q))
    throw EvalError("'" + e.to_string() + "' is not integral at " + env.to_string() + ": " +
                    lieck::to_string(q));
  return numerator(q);
}

Expr substitute(const Expr& e, char v, const Expr& r) { return Expr(subst(e.node(), v, r.node())); }

}  // namespace lieck
