#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>

#include "lieck/bigint.hpp"
#include "lieck/expr.hpp"

namespace lieck {

class NotPolynomial : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exponent vector indexed by letter.
using Monomial = std::array<int, 26>;

/// Multivariate polynomial with rational coefficients in expanded form.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT: constants convert implicitly
  static Polynomial variable(char v);
  /// Expands e. Functions are allowed only when all their arguments are
  /// constant. Throws NotPolynomial otherwise.
  static Polynomial from_expr(const Expr& e);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational evaluate(const Env& env) const;
  Polynomial substitute(char v, const Polynomial& r) const;
  Polynomial pow(unsigned k) const;
  std::string to_string() const;

  const std::map<Monomial, Rational>& terms() const { return terms_; }

  friend Polynomial operator+(const Polynomial& x, const Polynomial& y);
  friend Polynomial operator-(const Polynomial& x, const Polynomial& y);
  friend Polynomial operator*(const Polynomial& x, const Polynomial& y);
  friend Polynomial operator-(const Polynomial& x);
  friend bool operator==(const Polynomial& x, const Polynomial& y) { return x.terms_ == y.terms_; }

 private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

/// Expanded-form identity test.
bool polynomial_identity(const Expr& x, const Expr& y);

}  // namespace lieck
