#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fga/expr.hpp"
#include "fga/sampling.hpp"

using namespace fga;

TEST_CASE("parser handles the surface grammar") {
  std::vector<std::string> params = {"a6", "b"};
  Expr e = parse_expr("q^2+a6*p^6+b*z", params);
  Point5 at{{1, 2, 2, 3, 5}};
  // a6 = 2, b = 7: 9 + 2*64 + 35 = 172
  REQUIRE(eval_scalar<Rational>(e, at, {2, 7}) == 172);

  Expr lit = parse_expr("1/3 + q");
  REQUIRE(eval_scalar<Rational>(lit, at) == Rational(10, 3));

  Expr neg = parse_expr("-q^2");  // unary minus binds below the power
  REQUIRE(eval_scalar<Rational>(neg, at) == -9);

  Expr paren = parse_expr("(q+p)*(q-p)");
  REQUIRE(eval_scalar<Rational>(paren, at) == 5);
}

TEST_CASE("parse errors carry offsets") {
  try {
    parse_expr("q^^2");
    FAIL("expected a parse error");
  } catch (const ParseError& pe) {
    REQUIRE(pe.offset == 2);
  }
  REQUIRE_THROWS_AS(parse_expr("q +"), ParseError);
  REQUIRE_THROWS_AS(parse_expr("unknown_symbol"), ParseError);
}

TEST_CASE("symbolic differentiation") {
  Expr e = parse_expr("q^3 + p*q");
  Expr dq = diff_expr(e, CQ);
  Point5 at{{0, 0, 5, 2, 0}};
  REQUIRE(eval_scalar<Rational>(dq, at) == 3 * 4 + 5);
  Expr dp = diff_expr(e, CP);
  REQUIRE(eval_scalar<Rational>(dp, at) == 2);
  Expr dx = diff_expr(e, CX);
  REQUIRE(eval_scalar<Rational>(dx, at) == 0);
}

TEST_CASE("total differential along the ODE flow") {
  // D = d_x + p d_y + q d_p + F d_z
  Expr F = parse_expr("q^2");
  Point5 at{{1, 1, 3, 7, 2}};
  REQUIRE(eval_scalar<Rational>(total_diff(parse_expr("p"), F), at) == 7);
  REQUIRE(eval_scalar<Rational>(total_diff(parse_expr("y"), F), at) == 3);
  REQUIRE(eval_scalar<Rational>(total_diff(parse_expr("2*q"), F), at) == 0);
  REQUIRE(eval_scalar<Rational>(total_diff(parse_expr("z"), F), at) == 49);
}

TEST_CASE("round trip through to_string") {
  std::mt19937_64 rng(3);
  std::vector<std::string> params = {"a3", "b"};
  Expr e = parse_expr("(q^3 - 2*a3*p)/(1 + z^2) + b*x*y", params);
  Expr round = parse_expr(to_string(e, params), params);
  for (int k = 0; k < 10; ++k) {
    Point5 at = random_point(rng);
    std::vector<Rational> pv = {random_rational(rng), random_rational(rng)};
    REQUIRE(eval_scalar<Rational>(e, at, pv) ==
            eval_scalar<Rational>(round, at, pv));
  }
}

TEST_CASE("jet evaluation matches symbolic derivatives") {
  Expr e = parse_expr("q^3*p + x*z^2");
  Point5 at{{2, 1, 3, 1, 4}};
  Jet<Rational> j = eval_jet<Rational>(e, at, 2);
  REQUIRE(j.value() == eval_scalar<Rational>(e, at));
  for (int v = 0; v < 5; ++v)
    REQUIRE(j.deriv(v).value() == eval_scalar<Rational>(diff_expr(e, v), at));
  REQUIRE(j.partial({0, 0, 0, 2, 0}) ==
          eval_scalar<Rational>(diff_expr(diff_expr(e, CQ), CQ), at));
}

TEST_CASE("environment evaluation binds arbitrary jets") {
  Expr e = parse_expr("s*q", {"s"});
  std::vector<Jet<Rational>> coords;
  for (int i = 0; i < 5; ++i)
    coords.push_back(Jet<Rational>::variable(5, 2, i, Rational(i + 1)));
  Jet<Rational> s = coords[CQ] * coords[CQ];  // bind s := q^2
  Jet<Rational> out = eval_jet_env<Rational>(e, coords, {s});
  REQUIRE(out.value() == 64);               // q^3 at q = 4
  REQUIRE(out.deriv(CQ).value() == 48);     // 3 q^2
}
