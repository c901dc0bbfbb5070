#include "doctest.h"
#include "resint/error.hpp"
#include "resint/ring.hpp"

using namespace resint;

namespace {
GradedRing xyz() { return GradedRing::create(Field::rationals(), {"x", "y", "z"}); }
}  // namespace

TEST_CASE("parse and print round trip") {
  auto R = xyz();
  for (const char* s : {"-y^2+x*z", "-3*x^2", "1/2*x", "0", "x^3+2*x*y*z-7", "y"}) {
    auto p = R.parse(s);
    CHECK(p.to_string() == s);
    CHECK(R.parse(p.to_string()) == p);
  }
  CHECK(R.parse("x + x - 2*x").is_zero());
  CHECK(R.parse(" - y + x ").to_string() == "x-y");
}

TEST_CASE("parse errors") {
  auto R = xyz();
  CHECK(R.parse("xz-y^2") == R.parse("x*z-y^2"));
  CHECK(R.parse("2xy^2z") == R.parse("2*x*y^2*z"));
  CHECK(R.parse("x y") == R.parse("x*y"));
  CHECK_THROWS_AS(R.parse("xw"), ParseError);
  CHECK_THROWS_AS(R.parse("x w"), ParseError);
  CHECK_THROWS_AS(R.parse("w"), ParseError);
  CHECK_THROWS_AS(R.parse("x^"), ParseError);
  CHECK(R.parse("2 x") == R.parse("2*x"));
  auto A = GradedRing::create(Field::prime(7), {"a", "ab", "b", "ba"});
  CHECK_THROWS_AS(A.parse("aba"), ParseError);
  CHECK(A.parse("ab") == A.parse("1*ab"));
  auto F = GradedRing::create(Field::prime(5), {"x"});
  CHECK_THROWS_AS(F.parse("1/5*x"), ParseError);
  CHECK(F.parse("1/2*x").to_string() == "-2*x");
}

TEST_CASE("ring construction errors") {
  CHECK_THROWS_AS(GradedRing::create(Field::rationals(), {"x", "x"}), ArgumentError);
  CHECK_THROWS_AS(GradedRing::create(Field::rationals(), {"x", "y"}, {1, 0}), ArgumentError);
  CHECK_THROWS_AS(GradedRing::create(Field::rationals(), {"1x"}), ArgumentError);
}

TEST_CASE("polynomial arithmetic") {
  auto R = xyz();
  auto a = R.parse("x+y"), b = R.parse("x-y");
  CHECK(a * b == R.parse("x^2-y^2"));
  CHECK(a.pow(3) == a * a * a);
  CHECK(*Polynomial::divide_exact(a * b, b) == a);
  CHECK_FALSE(Polynomial::divide_exact(a * b + R.parse("z^2"), b).has_value());
  CHECK(a.is_homogeneous());
  CHECK_FALSE(R.parse("x+1").is_homogeneous());
  CHECK(*R.parse("x^2*y+z").degree() == 3);
}

TEST_CASE("weighted degrees and orders") {
  auto R = GradedRing::create(Field::rationals(), {"x", "y"}, {1, 2});
  CHECK(*R.parse("y").degree() == 2);
  CHECK(R.parse("x^2+y").is_homogeneous());
  auto L = GradedRing::create(Field::rationals(), {"x", "y", "z"}, {}, MonomialOrderKind::Lex);
  CHECK(L.parse("y^3+x*z^5").leading_term().mono == L.parse("x*z^5").leading_term().mono);
  auto G = xyz();
  // degrevlex: x*z < y^2
  CHECK(G.parse("x*z+y^2").leading_term().mono == G.parse("y^2").leading_term().mono);
}
