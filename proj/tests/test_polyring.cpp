#include "doctest.h"

#include <random>

#include "linkpoly/polyring.hpp"

using namespace linkpoly;

namespace {

MultiPoly rand_poly(const Registry& reg, std::mt19937_64& rng, int max_terms,
                    int vars, int max_abs_exp, int max_abs_coeff) {
  MultiPoly p(reg);
  const int terms = static_cast<int>(rng() % (max_terms + 1));
  for (int i = 0; i < terms; ++i) {
    ExpVec e(static_cast<std::size_t>(vars), 0);
    for (int& x : e)
      x = static_cast<int>(rng() % (2 * max_abs_exp + 1)) - max_abs_exp;
    int c = static_cast<int>(rng() % (2 * max_abs_coeff + 1)) - max_abs_coeff;
    p += MultiPoly::monomial(reg, std::move(e), c);
  }
  return p;
}

}  // namespace

TEST_CASE("registry interning is idempotent and keeps reserved order") {
  Registry reg = make_registry();
  CHECK(reg->find("A").value() == 0);
  CHECK(reg->find("q").value() == 7);
  const int a = reg->intern("alpha");
  CHECK(reg->intern("alpha") == a);
  CHECK(reg->name(a) == "alpha");
}

TEST_CASE("basic arithmetic") {
  Registry reg = make_registry();
  const MultiPoly A = MultiPoly::variable(reg, "A");
  const MultiPoly B = MultiPoly::variable(reg, "B");
  const MultiPoly d = MultiPoly::variable(reg, "d");

  CHECK(((A + d) * MultiPoly(reg)).is_zero());
  CHECK((A + B * d) - A == B * d);
  const MultiPoly one = MultiPoly::one(reg);
  CHECK((A * A + one) * (A * A - one) == pow(A, 4) - one);
}

TEST_CASE("powers") {
  Registry reg = make_registry();
  const MultiPoly A = MultiPoly::variable(reg, "A");
  const MultiPoly d = MultiPoly::variable(reg, "d");

  CHECK(pow(-pow(A, -3), 2) == pow(A, -6));
  CHECK(pow(-pow(A, 3), -1) == -pow(A, -3));
  CHECK_THROWS_AS(pow(A + d, -1), InputError);
  CHECK(pow(A + d, 0) == MultiPoly::one(reg));
}

TEST_CASE("exact division") {
  Registry reg = make_registry();
  const MultiPoly A = MultiPoly::variable(reg, "A");
  const MultiPoly B = MultiPoly::variable(reg, "B");
  const MultiPoly d = MultiPoly::variable(reg, "d");
  const MultiPoly X = A + B * d;

  // (X^2 - A^2)/d = 2AB + B^2 d
  const MultiPoly two = MultiPoly::constant(reg, 2);
  CHECK(exact_div(X * X - A * A, d) == two * A * B + B * B * d);
  const MultiPoly p = X * X + A;
  CHECK(exact_div(p, MultiPoly::one(reg)) == p);

  const MultiPoly num = pow(A, 9) + pow(A, -3);
  const MultiPoly den = pow(A, 2) + pow(A, -2);
  const MultiPoly quot = exact_div(num, den);
  CHECK(quot == parse_poly(reg, "A^7 - A^3 + A^-1"));
  CHECK(quot * den == num);

  // division by a monomial is always exact in the Laurent ring
  CHECK(exact_div(A + MultiPoly::one(reg), d) ==
        A * pow(d, -1) + pow(d, -1));
  CHECK_THROWS_AS(exact_div(A * A + MultiPoly::one(reg),
                            A + MultiPoly::one(reg)),
                  InternalError);
  CHECK_THROWS_AS(
      exact_div(MultiPoly::one(reg), A - MultiPoly::one(reg)),
      InternalError);
  CHECK_THROWS_AS(exact_div(A, MultiPoly(reg)), InputError);
}

TEST_CASE("substitution hits the bracket specialization") {
  Registry reg = make_registry();
  const MultiPoly A = MultiPoly::variable(reg, "A");
  const MultiPoly B = MultiPoly::variable(reg, "B");
  const MultiPoly d = MultiPoly::variable(reg, "d");
  const std::map<std::string, MultiPoly> bracket = {
      {"B", pow(A, -1)}, {"d", -(pow(A, 2) + pow(A, -2))}};

  CHECK(substitute(A + B * d, bracket) == -pow(A, -3));  // X
  CHECK(substitute(A * d + B, bracket) == -pow(A, 3));   // Y
  const MultiPoly p = A * B + d;
  CHECK(substitute(p, {}) == p);

  CHECK_THROWS_AS(
      substitute(pow(B, -1), {{"B", A + MultiPoly::one(reg)}}), InputError);
}

TEST_CASE("rational evaluation") {
  Registry reg = make_registry();
  const MultiPoly A = MultiPoly::variable(reg, "A");
  const MultiPoly q = MultiPoly::variable(reg, "q");
  const MultiPoly d_spec = -(pow(A, 2) + pow(A, -2));

  CHECK(evaluate(d_spec, {{"A", Rational(2)}}) == Rational(-17, 4));
  CHECK(evaluate(MultiPoly(reg), {}) == Rational(0));
  CHECK(evaluate(q - MultiPoly::one(reg), {{"q", Rational(5)}}) ==
        Rational(4));
  CHECK_THROWS_AS(evaluate(A, {}), InputError);
  CHECK_THROWS_AS(evaluate(pow(A, -1), {{"A", Rational(0)}}), InputError);
}

TEST_CASE("canonical strings") {
  Registry reg = make_registry();
  const MultiPoly A = MultiPoly::variable(reg, "A");
  const MultiPoly B = MultiPoly::variable(reg, "B");
  const MultiPoly d = MultiPoly::variable(reg, "d");

  CHECK(MultiPoly(reg).to_string() == "0");
  CHECK((-pow(A, 4) - pow(A, -4)).to_string() == "-A^4 - A^-4");
  CHECK((d * d).to_string() == "d^2");
  const MultiPoly two = MultiPoly::constant(reg, 2);
  CHECK((A * A * d + two * A * B + B * B * d).to_string() ==
        "A^2d + 2AB + B^2d");
  CHECK((pow(A, 4) - MultiPoly::one(reg)).to_string() == "A^4 - 1");
  CHECK(MultiPoly::constant(reg, -1).to_string() == "-1");
}

TEST_CASE("parsing inverts printing") {
  Registry reg = make_registry();
  CHECK(parse_poly(reg, "0").is_zero());
  CHECK(parse_poly(reg, "-A^4 - A^-4") ==
        -pow(MultiPoly::variable(reg, "A"), 4) -
            pow(MultiPoly::variable(reg, "A"), -4));
  CHECK(parse_poly(reg, "2*A*B") == parse_poly(reg, "2AB"));
  CHECK(parse_poly(reg, "z1z2") == MultiPoly::variable(reg, "z1") *
                                       MultiPoly::variable(reg, "z2"));
  CHECK_THROWS_AS(parse_poly(reg, ""), InputError);
  CHECK_THROWS_AS(parse_poly(reg, "A ^"), InputError);
  CHECK_THROWS_AS(parse_poly(reg, "2 +"), InputError);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const MultiPoly p = rand_poly(reg, rng, 6, 4, 4, 9);
    CHECK(parse_poly(reg, p.to_string()) == p);
  }
}

TEST_CASE("ring axioms on random triples") {
  Registry reg = make_registry();
  std::mt19937_64 rng(11);
  for (int i = 0; i < 40; ++i) {
    const MultiPoly p = rand_poly(reg, rng, 5, 3, 3, 7);
    const MultiPoly q = rand_poly(reg, rng, 5, 3, 3, 7);
    const MultiPoly r = rand_poly(reg, rng, 5, 3, 3, 7);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * q == q * p);
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p + (-p) == MultiPoly(reg));
  }
}

TEST_CASE("division inverts multiplication") {
  Registry reg = make_registry();
  std::mt19937_64 rng(13);
  for (int i = 0; i < 40; ++i) {
    const MultiPoly p = rand_poly(reg, rng, 5, 3, 3, 7);
    MultiPoly q = rand_poly(reg, rng, 5, 3, 3, 7);
    if (q.is_zero()) q = MultiPoly::one(reg);
    CHECK(exact_div(p * q, q) == p);
  }
}

TEST_CASE("substitution composes on disjoint domains") {
  Registry reg = make_registry();
  const MultiPoly t = MultiPoly::variable(reg, "t");
  const MultiPoly w = MultiPoly::variable(reg, "w");
  std::mt19937_64 rng(17);
  for (int i = 0; i < 20; ++i) {
    // nonnegative exponents only: the bindings are not units
    MultiPoly p(reg);
    for (int t2 = 0; t2 < 5; ++t2) {
      ExpVec e(3, 0);
      for (int& x : e) x = static_cast<int>(rng() % 4);
      p += MultiPoly::monomial(reg, std::move(e),
                               static_cast<int>(rng() % 11) - 5);
    }
    // sigma: A -> t + 1, tau: t -> w - 2; domains disjoint from ranges? no:
    // sigma's range contains t, so apply tau after sigma equals the composed
    // binding A -> (w-2) + 1 together with t -> w - 2.
    const MultiPoly sigma_value = t + MultiPoly::one(reg);
    const MultiPoly tau_value = w - MultiPoly::constant(reg, 2);
    const MultiPoly lhs =
        substitute(substitute(p, {{"A", sigma_value}}), {{"t", tau_value}});
    const MultiPoly rhs = substitute(
        p, {{"A", tau_value + MultiPoly::one(reg)}, {"t", tau_value}});
    CHECK(lhs == rhs);
  }
}

TEST_CASE("evaluation is multiplicative") {
  Registry reg = make_registry();
  std::mt19937_64 rng(19);
  for (int i = 0; i < 20; ++i) {
    MultiPoly p = rand_poly(reg, rng, 4, 3, 2, 5);
    MultiPoly q = rand_poly(reg, rng, 4, 3, 2, 5);
    const std::map<std::string, Rational> at = {
        {"A", Rational(2)}, {"B", Rational(-3)}, {"d", Rational(5, 2)}};
    CHECK(evaluate(p * q, at) == evaluate(p, at) * evaluate(q, at));
  }
}

TEST_CASE("registry mismatch is rejected") {
  Registry r1 = make_registry();
  Registry r2 = make_registry();
  const MultiPoly p = MultiPoly::variable(r1, "A");
  const MultiPoly q = MultiPoly::variable(r2, "A");
  CHECK_THROWS_AS((void)(p + q), InputError);
  CHECK_THROWS_AS((void)(p == q), InputError);
}
