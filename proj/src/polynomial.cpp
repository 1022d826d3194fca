#include "lieck/polynomial.hpp"

#include <algorithm>
#include <vector>

namespace lieck {

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_[Monomial{}] = c;
}

Polynomial Polynomial::variable(char v) {
  Polynomial p;
  Monomial m{};
  m[v - 'a'] = 1;
  p.terms_[m] = 1;
  return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

Polynomial operator+(const Polynomial& x, const Polynomial& y) {
  Polynomial r = x;
  for (const auto& [m, c] : y.terms_) r.add_term(m, c);
  return r;
}

Polynomial operator-(const Polynomial& x) {
  Polynomial r;
  for (const auto& [m, c] : x.terms_) r.terms_[m] = -c;
  return r;
}

Polynomial operator-(const Polynomial& x, const Polynomial& y) { return x + (-y); }

Polynomial operator*(const Polynomial& x, const Polynomial& y) {
  Polynomial r;
  for (const auto& [mx, cx] : x.terms_)
    for (const auto& [my, cy] : y.terms_) {
      Monomial m;
      for (int i = 0; i < 26; ++i) m[i] = mx[i] + my[i];
      r.add_term(m, cx * cy);
    }
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial r(1);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

Rational Polynomial::evaluate(const Env& env) const {
  Rational s = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < 26; ++i)
      for (int e = 0; e < m[i]; ++e) t *= env.get(static_cast<char>('a' + i));
    s += t;
  }
  return s;
}

Polynomial Polynomial::substitute(char v, const Polynomial& r) const {
  Polynomial out;
  const int idx = v - 'a';
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    int e = rest[idx];
    rest[idx] = 0;
    Polynomial t;
    t.terms_[rest] = c;
    out = out + t * r.pow(e);
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  // highest total degree first
  std::vector<std::pair<Monomial, Rational>> items(terms_.begin(), terms_.end());
  std::stable_sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
    int dx = 0, dy = 0;
    for (int i = 0; i < 26; ++i) dx += x.first[i], dy += y.first[i];
    if (dx != dy) return dx > dy;
    return x.first > y.first;
  });
  for (const auto& [m, c] : items) {
    Rational mag = c < 0 ? Rational(-c) : c;
    std::string mono;
    for (int i = 0; i < 26; ++i) {
      if (!m[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += static_cast<char>('a' + i);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    std::string coef = lieck::to_string(mag);
    if (!is_integral(mag)) coef = "(" + coef + ")";
    std::string term = mono.empty() ? coef : (mag == 1 ? mono : coef + "*" + mono);
    if (s.empty())
      s = (c < 0 ? "-" : "") + term;
    else
      s += (c < 0 ? "-" : "+") + term;
  }
  return s;
}

namespace {

Polynomial expand(const ExprNode& n) {
  auto constant_value = [&]() {
    Expr e(std::make_shared<ExprNode>(n));
    if (!e.is_constant()) throw NotPolynomial("non-polynomial term '" + e.to_string() + "'");
    return Polynomial(lieck::evaluate(e, Env{}));
  };
  switch (n.kind) {
    case NodeKind::Num: return Polynomial(Rational(n.value));
    case NodeKind::Var: return Polynomial::variable(n.var);
    case NodeKind::Neg: return -expand(*n.args[0]);
    case NodeKind::Add: return expand(*n.args[0]) + expand(*n.args[1]);
    case NodeKind::Sub: return expand(*n.args[0]) - expand(*n.args[1]);
    case NodeKind::Mul: return expand(*n.args[0]) * expand(*n.args[1]);
    case NodeKind::Div: {
      Polynomial den = expand(*n.args[1]);
      if (!den.is_constant() || den.is_zero())
        throw NotPolynomial("division by a non-constant in polynomial context");
      Rational c = den.terms().begin()->second;
      return expand(*n.args[0]) * Polynomial(Rational(1) / c);
    }
    case NodeKind::Pow: {
      Polynomial e = expand(*n.args[1]);
      if (!e.is_constant()) throw NotPolynomial("symbolic exponent");
      Rational k = e.is_zero() ? Rational(0) : e.terms().begin()->second;
      if (!is_integral(k) || k < 0) throw NotPolynomial("exponent is not a non-negative integer");
      return expand(*n.args[0]).pow(static_cast<unsigned>(to_int64(k)));
    }
    default: return constant_value();
  }
}

}  // namespace

Polynomial Polynomial::from_expr(const Expr& e) { return expand(e.root()); }

bool polynomial_identity(const Expr& x, const Expr& y) {
  return Polynomial::from_expr(x) == Polynomial::from_expr(y);
}

}  // namespace lieck
