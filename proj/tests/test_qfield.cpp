#include <doctest.h>

#include <random>

#include "tlbd/errors.hpp"
#include "tlbd/qfield.hpp"

using namespace tlbd;

namespace {

std::mt19937 rng(20240817);

Laurent random_laurent(int max_terms) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<long> exp(-3, 3);
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 4);
  Laurent p;
  const int t = nterms(rng);
  for (int i = 0; i < t; ++i) p.add(exp(rng), Rational(num(rng), den(rng)));
  return p;
}

RatFunc random_ratfunc() {
  Laurent d;
  while (d.is_zero()) d = random_laurent(3);
  return RatFunc(random_laurent(3), d);
}

}  // namespace

TEST_CASE("quantum integers") {
  CHECK(qint(2) == RatFunc::parse("q^-1 + q"));
  CHECK(qint(0).is_zero());
  CHECK(qint(-3) == -RatFunc::parse("q^-2 + 1 + q^2"));
  CHECK(qint(1) == RatFunc(1));
  // [2][n] = [n+1] + [n-1]
  for (long n = 1; n <= 12; ++n) CHECK(qint(2) * qint(n) == qint(n + 1) + qint(n - 1));
}

TEST_CASE("field operations") {
  CHECK(qint(2) * qint(2) == RatFunc::parse("q^-2 + 2 + q^2"));
  RatFunc d = qint(4) / qint(2);
  CHECK(d == RatFunc::parse("q^-2 + q^2"));
  CHECK(d * qint(2) == qint(4));  // round-trip through the division
  CHECK_THROWS_AS(RatFunc().inverse(), division_by_zero);
  CHECK_THROWS_AS(qint(2) / RatFunc(), division_by_zero);
}

TEST_CASE("evaluation") {
  CHECK(qint(2).eval_at(Rational(1)) == 2);
  for (long n = 1; n <= 10; ++n) CHECK(qint(n).eval_at(Rational(1)) == n);
  // reduction happens before evaluation
  Laurent qm1 = Laurent::monomial(1, 1) - Laurent(1);  // q - 1
  RatFunc f = RatFunc(Laurent(1), qm1) * RatFunc(qm1);
  CHECK(f == RatFunc(1));
  CHECK(f.eval_at(Rational(1)) == 1);
  CHECK_THROWS_AS(RatFunc(Laurent(1), qm1).eval_at(Rational(1)), pole_error);
}

TEST_CASE("canonical form") {
  // same fraction written two ways lands on the same structure
  Laurent n = random_laurent(3);
  Laurent d;
  while (d.is_zero()) d = random_laurent(3);
  RatFunc a(n, d);
  RatFunc b(n * Laurent(Rational(7, 3)), d * Laurent(Rational(7, 3)));
  CHECK(a == b);
  // denominator normalization: lowest exponent 0, lowest coefficient 1
  for (int t = 0; t < 50; ++t) {
    RatFunc r = random_ratfunc();
    if (r.is_zero()) {
      CHECK(r.den().is_one());
      continue;
    }
    CHECK(r.den().min_exp() == 0);
    CHECK(r.den().coeff(0) == 1);
  }
}

TEST_CASE("field laws on random values") {
  for (int t = 0; t < 60; ++t) {
    RatFunc a = random_ratfunc(), b = random_ratfunc(), c = random_ratfunc();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
  }
}

TEST_CASE("textual round-trip") {
  RatFunc doc = RatFunc::parse("3/2*q^-2 + 1 - 5*q^3");
  CHECK(doc.str() == "3/2*q^-2 + 1 - 5*q^3");
  CHECK(RatFunc::parse(doc.str()) == doc);
  RatFunc frac = RatFunc::parse("(q^-1 + q)/(1 + q^2)");
  CHECK(frac == RatFunc::monomial(1, -1));  // (q + q^-1)/(q^2 + 1) = q^-1
  for (int t = 0; t < 100; ++t) {
    RatFunc r = random_ratfunc();
    CHECK(RatFunc::parse(r.str()) == r);
  }
  CHECK_THROWS_AS(RatFunc::parse("q^^2"), parse_error);
  CHECK_THROWS_AS(RatFunc::parse("3 * * q"), parse_error);
}

TEST_CASE("q_pow_sum") {
  for (long n = 1; n <= 6; ++n) {
    CHECK(q_pow_sum(n) == RatFunc::monomial(1, n) + RatFunc::monomial(1, -n));
    // (q^n + q^-n) [n] = [2n]
    CHECK(q_pow_sum(n) * qint(n) == qint(2 * n));
  }
}
