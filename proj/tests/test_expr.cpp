#include <doctest.h>

#include <functional>
#include <random>

#include "lieck/constraint.hpp"
#include "lieck/expr.hpp"
#include "lieck/polynomial.hpp"

using namespace lieck;

namespace {

Rational ev(const char* text, Env env = {}) { return evaluate(parse(text), env); }

}  // namespace

TEST_CASE("parser and evaluator examples") {
  CHECK(ev("2*a*t+2*a-2*a^2", {{'a', 1}, {'t', 3}}) == 6);
  CHECK(ev("binom(2*l+1, r)", {{'l', 3}, {'r', 2}}) == 21);
  CHECK(parse("0").is_constant());
  CHECK(ev("0") == 0);
  CHECK(ev("prod(s,1,2, binom(k+2*s-1,k))", {{'k', 1}}) == 8);
  CHECK(ev("x^0", {{'x', 17}}) == 1);
  CHECK(ev("4*a*n-4*a^2", {{'a', 1}, {'n', 5}}) == 16);
  CHECK(ev("(n-1)*(n+1)*(n+2)/8", {{'n', 3}}) == 5);
  CHECK(ev("7/2") == Rational(7, 2));
  CHECK(ev("floor_div(7,2)") == 3);
  CHECK(ev("-3^2") == -9);
}

TEST_CASE("syntax errors carry a position") {
  CHECK_THROWS_AS(parse("2*(a+"), SyntaxError);
  CHECK_THROWS_AS(parse("foo(1)"), SyntaxError);
  CHECK_THROWS_AS(parse("A+1"), SyntaxError);
  try {
    parse("1 + $");
    FAIL("no throw");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("unbound variables and division by zero are evaluation errors") {
  CHECK_THROWS_AS(ev("a+1"), EvalError);
  CHECK_THROWS_AS(ev("1/(n-n)", {{'n', 2}}), EvalError);
  CHECK_THROWS_AS(evaluate_integer(parse("n/2"), Env{{'n', 3}}), EvalError);
}

TEST_CASE("binomial totality conventions") {
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(9, 0) == 1);
  CHECK(binomial(60, 30) == BigInt("118264581564861424"));
  CHECK_THROWS_AS(binomial(-2, 1), EvalError);
}

TEST_CASE("large values leave 64 bits exactly") {
  Rational v = ev("binom(200,100)");
  CHECK(v == Rational(BigInt("90548514656103281165404177077484163874504589675413336841320")));
  CHECK_FALSE(evaluate_int64(parse("2^80"), Env{}).has_value());
  CHECK(evaluate_integer(parse("2^80"), Env{}) == BigInt(1) << 80);
}

TEST_CASE("printing round-trips") {
  for (const char* s : {"2*a*t+2*a-2*a^2", "binom(2*n-1+k,k)", "prod(s,1,n-1,binom(k+2*s-1,k)/binom(k+s,k))",
                        "-(a-b)^2", "floor_div(t,2)"}) {
    Expr e = parse(s);
    CHECK(parse(e.to_string()) == e);
  }
}

TEST_CASE("evaluate is a ring homomorphism on random expressions") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> small(-9, 9), pick(0, 5);
  const Env env{{'a', 3}, {'b', -2}, {'n', 7}};
  // builds a random +,-,* tree together with its value computed by BigInt arithmetic
  std::function<std::pair<Expr, BigInt>(int)> gen = [&](int depth) -> std::pair<Expr, BigInt> {
    int c = depth == 0 ? pick(rng) % 3 : pick(rng);
    if (c == 0) {
      int v = small(rng);
      return {Expr::constant(v), BigInt(v)};
    }
    if (c == 1) return {Expr::variable('a'), BigInt(3)};
    if (c == 2) return {Expr::variable('n'), BigInt(7)};
    auto [x, vx] = gen(depth - 1);
    auto [y, vy] = gen(depth - 1);
    if (c == 3) return {x + y, vx + vy};
    if (c == 4) return {x - y, vx - vy};
    return {x * y, vx * vy};
  };
  for (int i = 0; i < 1000; ++i) {
    auto [e, want] = gen(5);
    CHECK(evaluate_integer(e, env) == want);
    CHECK(evaluate_integer(parse(e.to_string()), env) == want);
  }
}

TEST_CASE("constraint sets") {
  CHECK(satisfies(ConstraintSet::parse("a>=1, a+b<=n"), Env{{'a', 1}, {'b', 1}, {'n', 2}}));
  CHECK_FALSE(satisfies(ConstraintSet::parse("2*a <= n"), Env{{'a', 3}, {'n', 5}}));
  CHECK(satisfies(ConstraintSet::parse("n even, a=n/2"), Env{{'a', 2}, {'n', 4}}));
  CHECK(satisfies(ConstraintSet::parse("1 <= a <= b < 4"), Env{{'a', 2}, {'b', 3}}));
  CHECK_FALSE(satisfies(ConstraintSet::parse("n odd"), Env{{'n', 4}}));
}

TEST_CASE("polynomial identity") {
  CHECK(polynomial_identity(parse("2*(a+b)*(2*n)+2*(a+b)-2*(a+b)^2"),
                            parse("4*a*n+4*b*n+2*a+2*b-2*a^2-2*b^2-4*a*b")));
  CHECK(polynomial_identity(parse("4*(a+b)*(n-a-b)"), parse("4*a*n+4*b*n-4*a^2-4*b^2-8*a*b")));
  CHECK_FALSE(polynomial_identity(parse("(a+b)^2"), parse("a^2+b^2")));
  CHECK(Polynomial::from_expr(parse("(x+1)^3")).substitute('x', Polynomial(Rational(-1))).is_zero());
}
