#include "doctest.h"
#include "xsat/scalar.hpp"

using xsat::FieldError;
using xsat::Scalar;

namespace {
Scalar sqrt2() { return Scalar::sqrt(Scalar(2)); }
}  // namespace

TEST_CASE("rational arithmetic reduces eagerly") {
  Scalar a = Scalar::fraction(1, 3);
  Scalar b = Scalar::fraction(1, 6);
  CHECK(a + b == Scalar::fraction(1, 2));
  CHECK((a + b).str() == "1/2");
  CHECK(Scalar::fraction(2, 4) == Scalar::fraction(1, 2));
  CHECK(Scalar(3) * Scalar::fraction(1, 3) == Scalar(1));
}

TEST_CASE("division by zero is an error") {
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), FieldError);
  CHECK_THROWS_AS(Scalar(0).inverse(), FieldError);
}

TEST_CASE("quadratic extension basics") {
  Scalar r = sqrt2();
  CHECK(r * r == Scalar(2));
  CHECK((Scalar(1) + r) * (Scalar(1) - r) == Scalar(-1));
  CHECK((Scalar(1) + r).inverse() * (Scalar(1) + r) == Scalar(1));
  CHECK(r.sign() == 1);
  CHECK((-r).sign() == -1);
  CHECK((r - Scalar(1)).sign() == 1);
  CHECK((r - Scalar(2)).sign() == -1);
}

TEST_CASE("radicands normalize to squarefree integers") {
  CHECK(Scalar::sqrt(Scalar(8)) == Scalar(2) * sqrt2());
  CHECK(Scalar::sqrt(Scalar(4)) == Scalar(2));
  CHECK(Scalar::sqrt(Scalar::fraction(1, 2)) == Scalar::fraction(1, 2) * sqrt2());
  CHECK(Scalar::sqrt(Scalar(18)) * Scalar::sqrt(Scalar(2)) == Scalar(6));
}

TEST_CASE("square roots inside a tower are found, not re-adjoined") {
  Scalar r = sqrt2();
  Scalar x = Scalar(3) + Scalar(2) * r;  // (1 + sqrt 2)^2
  Scalar s = Scalar::sqrt(x);
  CHECK(s == Scalar(1) + r);
  CHECK(s.tower_height() == 1);
  auto t = Scalar::try_sqrt(Scalar(3) + r);
  CHECK(!t);
}

TEST_CASE("nested towers: fourth roots") {
  Scalar r = Scalar::sqrt(sqrt2());  // 2^(1/4)
  CHECK(r.tower_height() == 2);
  CHECK(r * r == sqrt2());
  CHECK(r.pow(4) == Scalar(2));
  CHECK((r.inverse() * r) == Scalar(1));
  CHECK((r + Scalar(1)) * (r - Scalar(1)) == r * r - Scalar(1));
}

TEST_CASE("mixed radicals multiply exactly") {
  Scalar a = Scalar::sqrt(Scalar(2));
  Scalar b = Scalar::sqrt(Scalar(3));
  CHECK((a * b) * (a * b) == Scalar(6));
  CHECK((a + b).squared() == Scalar(5) + Scalar(2) * a * b);
  CHECK((a / b) * b == a);
}

TEST_CASE("sqrt of a negative value is rejected") {
  CHECK_THROWS_AS(Scalar::sqrt(Scalar(-1)), FieldError);
  CHECK_THROWS_AS(Scalar::sqrt(Scalar(-1) - sqrt2()), FieldError);
}

TEST_CASE("embedding is a field homomorphism") {
  // arithmetic on rationals, then viewed in Q(sqrt 2), matches arithmetic done
  // alongside extension elements
  Scalar r = sqrt2();
  Scalar a = Scalar::fraction(3, 7), b = Scalar::fraction(-5, 2);
  Scalar lhs = (a + b) * (a - b);
  Scalar rhs = (a + b + Scalar(0) * r) * (a - b);
  CHECK(lhs == rhs);
  CHECK(((a + r) - r) == a);
}

TEST_CASE("scalar text round trips") {
  for (const char* text : {"0", "-3", "1/2", "-5/7"}) {
    Scalar s = Scalar::parse(text);
    CHECK(Scalar::parse(s.str()) == s);
    CHECK(s.str() == text);
  }
  Scalar e = Scalar(1) + Scalar::fraction(-1, 2) * sqrt2();
  CHECK(e.str() == "(1 + -1/2 * sqrt(2))");
  CHECK(Scalar::parse(e.str()) == e);

  Scalar nested = Scalar::sqrt(sqrt2()) + Scalar(1);
  CHECK(Scalar::parse(nested.str()) == nested);
}

TEST_CASE("parser normalizes non-canonical radicands") {
  CHECK(Scalar::parse("(0 + 1 * sqrt(8))") == Scalar(2) * sqrt2());
  CHECK(Scalar::parse("(0 + 1 * sqrt(9))") == Scalar(3));
  // higher-tower coefficient on a lower radical still nests consistently
  Scalar mongrel = Scalar::parse("(0 + (0 + 1 * sqrt(3)) * sqrt(2))");
  CHECK(mongrel == Scalar::sqrt(Scalar(6)));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(Scalar::parse("1/0"), xsat::ParseError);
  CHECK_THROWS_AS(Scalar::parse("(1 + 2 sqrt(2))"), xsat::ParseError);
  CHECK_THROWS_AS(Scalar::parse("2x"), xsat::ParseError);
}

TEST_CASE("ordering via exact signs") {
  Scalar r = sqrt2();
  CHECK(Scalar(1) < r);
  CHECK(r < Scalar::fraction(3, 2));
  CHECK(Scalar::sqrt(Scalar(3)) < Scalar(2));
  CHECK(r < Scalar::sqrt(Scalar(3)));
}

TEST_CASE("nth roots without tower growth") {
  CHECK(*Scalar::try_nth_root(Scalar(27), 3) == Scalar(3));
  CHECK(*Scalar::try_nth_root(Scalar::fraction(1, 8), 3) == Scalar::fraction(1, 2));
  CHECK(*Scalar::try_nth_root(Scalar(-8), 3) == Scalar(-2));
  CHECK(!Scalar::try_nth_root(Scalar(2), 3));
  CHECK(*Scalar::try_nth_root(Scalar(16), 4) == Scalar(2));
}
