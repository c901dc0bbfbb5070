#include "doctest.h"
#include "oracle.hpp"
#include "resint/budget.hpp"
#include "resint/error.hpp"
#include "resint/groebner.hpp"

using namespace resint;

namespace {

std::vector<Polynomial> polys(const GradedRing& R, std::initializer_list<const char*> xs) {
  std::vector<Polynomial> out;
  for (auto s : xs) out.push_back(R.parse(s));
  return out;
}

GradedIdeal ideal(const GradedRing& R, std::initializer_list<const char*> xs) {
  return GradedIdeal(R, polys(R, xs));
}

}  // namespace

TEST_CASE("twisted cubic basis and invariants") {
  auto R = GradedRing::create(Field::rationals(), {"x", "y", "z", "w"});
  auto I = ideal(R, {"x*z-y^2", "y*w-z^2", "x*w-y*z"});
  CHECK(I.groebner_basis().size() == 3);
  CHECK(I.dimension() == 2);
  CHECK(I.height() == 2);
  // HS of the twisted cubic: (1+2t)/(1-t)^2
  auto h = I.hilbert_series();
  for (int d = 0; d <= 8; ++d) CHECK(h.coefficient(d) == 3 * d + 1);
  CHECK(I.contains(R.parse("x^2*w-y^3")));
  CHECK_FALSE(I.contains(R.parse("x^3")));
  CHECK(I.contains(R.parse("x*y*w-x*z^2")));
}

TEST_CASE("minimal generators drop redundant ones") {
  auto R = GradedRing::create(Field::rationals(), {"x", "y"});
  auto I = ideal(R, {"x^2", "x*y", "x^2*y", "y^3", "x^3+x*y^2"});
  auto m = I.minimal_generators();
  CHECK(m.size() == 3);
  CHECK(I.minimal_count() == 3);
}

TEST_CASE("unit and zero ideals") {
  auto R = GradedRing::create(Field::prime(32003), {"x", "y"});
  auto U = GradedIdeal::unit(R);
  CHECK(U.is_unit());
  CHECK_FALSE(U.height().has_value());
  CHECK(U.dimension() == -1);
  auto Z = GradedIdeal::zero(R);
  CHECK(Z.height() == 0);
  CHECK(Z.hilbert_series().coefficient(3) == 4);
}

TEST_CASE("hilbert function agrees with linear algebra") {
  for (Field k : {Field::rationals(), Field::prime(32003)}) {
    auto R = GradedRing::create(k, {"a", "b", "c", "d"});
    auto gens = polys(R, {"a*b-c^2", "b^3-a*d^2", "a^2*c+b*c*d-d^3"});
    GradedIdeal I(R, gens);
    auto h = I.hilbert_series();
    for (int d = 0; d <= 6; ++d) {
      auto piece = oracle::ideal_piece(R, gens, d);
      CHECK(h.coefficient(d) == static_cast<std::int64_t>(piece.ambient_dim() - piece.dim()));
      CHECK(I.dimension_in_degree(d) == static_cast<std::int64_t>(piece.dim()));
    }
  }
}

TEST_CASE("weighted grading") {
  auto R = GradedRing::create(Field::rationals(), {"x", "y", "z"}, {1, 2, 3});
  auto gens = polys(R, {"x^2-y", "x*y-z"});
  GradedIdeal I(R, gens);
  for (int d = 0; d <= 8; ++d) {
    auto piece = oracle::ideal_piece(R, gens, d);
    CHECK(I.dimension_in_degree(d) == static_cast<std::int64_t>(piece.dim()));
  }
  CHECK(I.height() == 2);
}

TEST_CASE("quotients match the degree-wise oracle") {
  auto R = GradedRing::create(Field::rationals(), {"x", "y", "z"});
  auto I = polys(R, {"x*z-y^2", "x^2-y*z", "x*y-z^2"});
  auto a = polys(R, {"x*z-y^2", "x^2-y*z"});
  GradedIdeal J = quotient(GradedIdeal(R, a), GradedIdeal(R, I));
  for (int d = 0; d <= 6; ++d)
    CHECK(static_cast<std::size_t>(J.dimension_in_degree(d)) ==
          oracle::quotient_piece_dim(R, a, I, d));
  for (const auto& g : J.generators())
    for (const auto& f : I) CHECK(oracle::in_ideal(R, a, g * f));
  CHECK(J == quotient_by_elimination(GradedIdeal(R, a), GradedIdeal(R, I)));
  CHECK(quotient(ideal(R, {"x^2"}), ideal(R, {"x"})) == ideal(R, {"x"}));
  CHECK(quotient(GradedIdeal(R, I), GradedIdeal(R, I)).is_unit());
  // single element quotient
  GradedIdeal q = quotient(ideal(R, {"x^2*y", "x*z^3"}), R.parse("x"));
  CHECK(q == ideal(R, {"x*y", "z^3"}));
  CHECK(quotient(ideal(R, {"x"}), GradedIdeal::unit(R)) == ideal(R, {"x"}));
  CHECK(quotient(ideal(R, {"x", "y"}), ideal(R, {"x"})).is_unit());
}

TEST_CASE("intersection") {
  auto R = GradedRing::create(Field::rationals(), {"x", "y", "z"});
  auto i = intersect(ideal(R, {"x", "y"}), ideal(R, {"y", "z"}));
  CHECK(i == ideal(R, {"y", "x*z"}));
  auto j = intersect(ideal(R, {"x^2", "y"}), ideal(R, {"x*y", "z"}));
  for (int d = 0; d <= 5; ++d) {
    auto a = oracle::ideal_piece(R, polys(R, {"x^2", "y"}), d);
    auto b = oracle::ideal_piece(R, polys(R, {"x*y", "z"}), d);
    // dim(A ∩ B) = dim A + dim B - dim(A + B)
    auto s = oracle::ideal_piece(R, polys(R, {"x^2", "y", "x*y", "z"}), d);
    CHECK(static_cast<std::size_t>(j.dimension_in_degree(d)) == a.dim() + b.dim() - s.dim());
  }
}

TEST_CASE("syzygies and lift") {
  auto R = GradedRing::create(Field::rationals(), {"x", "y", "z"});
  auto I = ideal(R, {"x*z-y^2", "x^2-y*z", "x*y-z^2"});
  GradedMap row = I.as_row();
  GradedMap syz = syzygies(row);
  CHECK(syz.cols() == 2);
  CHECK((row * syz).is_zero());
  CHECK(syz.source() == Degrees{3, 3});
  // Koszul relation of x, y
  auto K = ideal(R, {"x", "y"}).as_row();
  auto s2 = syzygies(K);
  CHECK(s2.cols() == 1);
  CHECK((K * s2).is_zero());
  // lift x*y*z into (x, y)
  GradedMap v(R, {0}, {3}, {R.parse("x*y*z+y^3")});
  auto x = lift(K, v);
  REQUIRE(x.has_value());
  CHECK((K * *x).at(0, 0) == v.at(0, 0));
  GradedMap w(R, {0}, {2}, {R.parse("z^2")});
  CHECK_FALSE(lift(K, w).has_value());
}

TEST_CASE("minors and determinants") {
  auto R = GradedRing::create(Field::rationals(), {"x", "y", "z"});
  GradedMap m(R, {0, 0}, {1, 1, 1}, polys(R, {"x", "y", "z", "y", "z", "x"}));
  auto I2 = minors_ideal(m, 2);
  CHECK(I2 == ideal(R, {"x*z-y^2", "x^2-y*z", "x*y-z^2"}));
  CHECK(minors_ideal(m, 0).is_unit());
  CHECK(minors_ideal(m, 3).is_zero());
  CHECK(fitting_ideal(m, 0) == I2);
  CHECK(fitting_ideal(m, 1) == ideal(R, {"x", "y", "z"}));
  CHECK(fitting_ideal(m, 2).is_unit());
  auto d = determinant(polys(R, {"x", "y", "0", "0", "y", "z", "z", "0", "x"}), 3);
  CHECK(d == R.parse("x^2*y+y*z^2"));
}

TEST_CASE("budget is enforced") {
  auto R = GradedRing::create(Field::rationals(), {"x", "y", "z"});
  Budget b;
  b.max_degree = 3;
  ScopedBudget scope(b);
  auto I = ideal(R, {"x^3-y*z^2", "y^3-x^2*z", "z^3-x*y^2"});
  CHECK_THROWS_AS(I.groebner_basis(), BudgetExceeded);
}

TEST_CASE("Q and F_p agree on a generic example") {
  std::vector<std::int64_t> hq, hp;
  for (Field k : {Field::rationals(), Field::prime(32003)}) {
    auto R = GradedRing::create(k, {"x", "y", "z", "w"});
    auto J = quotient(ideal(R, {"x*y-z*w", "x^3-y^2*w"}), ideal(R, {"x", "z"}));
    auto& h = k.is_prime() ? hp : hq;
    h = J.hilbert_series().coefficients(0, 8);
  }
  CHECK(hq == hp);
}
