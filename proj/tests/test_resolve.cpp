#include "doctest.h"
#include "resint/resolve.hpp"

using namespace resint;

namespace {
GradedIdeal ideal(const GradedRing& R, std::initializer_list<const char*> xs) {
  std::vector<Polynomial> g;
  for (auto s : xs) g.push_back(R.parse(s));
  return GradedIdeal(R, g);
}
}  // namespace

TEST_CASE("twisted cubic resolution") {
  auto R = GradedRing::create(Field::rationals(), {"x", "y", "z", "w"});
  auto I = ideal(R, {"x*z-y^2", "y*w-z^2", "x*w-y*z"});
  auto c = resolve(I);
  CHECK(c.is_complex());
  auto b = c.betti();
  CHECK(b(0, 0) == 1);
  CHECK(b(1, 2) == 3);
  CHECK(b(2, 3) == 2);
  CHECK(b.length() == 2);
  CHECK(b.regularity() == 1);
  for (const auto& m : c.maps) CHECK_FALSE(m.has_unit_entry());
  auto inv = invariants(I);
  CHECK(inv.depth == 2);
  CHECK(inv.dimension == 2);
  CHECK(inv.cohen_macaulay);
  CHECK(b.to_string() == "       0 1 2\ntotal: 1 3 2\n    0: 1 . .\n    1: . 3 2\n");
}

TEST_CASE("koszul complex and non CM example") {
  auto R = GradedRing::create(Field::prime(32003), {"x", "y", "z"});
  auto b = resolve(ideal(R, {"x", "y", "z"})).betti();
  CHECK(b.total(0) == 1);
  CHECK(b.total(1) == 3);
  CHECK(b.total(2) == 3);
  CHECK(b.total(3) == 1);
  // two skew lines in P^3: not CM
  auto S = GradedRing::create(Field::rationals(), {"a", "b", "c", "d"});
  auto inv = invariants(ideal(S, {"a*c", "a*d", "b*c", "b*d"}));
  CHECK(inv.dimension == 2);
  CHECK(inv.depth == 1);
  CHECK_FALSE(inv.cohen_macaulay);
}

TEST_CASE("pruning a non-minimal presentation") {
  auto R = GradedRing::create(Field::rationals(), {"x", "y"});
  GradedMap p(R, {0, 1}, {1, 2}, {R.parse("x"), R.zero(), R.parse("-1"), R.parse("y")});
  GradedMap q = prune(p);
  CHECK(q.rows() == 1);
  CHECK(q.cols() == 1);
  CHECK(ideal(R, {"x*y"}) == GradedIdeal(R, {q.at(0, 0)}));
  CHECK(hilbert_series(p) == hilbert_series(q));
}

TEST_CASE("complex minimization keeps homology") {
  auto R = GradedRing::create(Field::rationals(), {"x", "y"});
  // R <- R(-1)^2 + R(-0)... build a non-minimal resolution of R/(x,y)
  FreeComplex c(R);
  c.modules = {{0}, {1, 1, 1}, {2, 1}};
  c.maps.push_back(GradedMap(R, {0}, {1, 1, 1}, {R.parse("x"), R.parse("y"), R.parse("x+y")}));
  // relations: (y, -x, 0) and (1, 1, -1)
  c.maps.push_back(GradedMap(R, {1, 1, 1}, {2, 1},
                             {R.parse("y"), R.parse("1"), R.parse("-x"), R.parse("1"),
                              R.zero(), R.parse("-1")}));
  REQUIRE(c.is_complex());
  c.minimize();
  CHECK(c.is_complex());
  CHECK(c.betti() == resolve(ideal(R, {"x", "y"})).betti());
}

TEST_CASE("ext of a codimension two CM quotient") {
  auto R = GradedRing::create(Field::rationals(), {"x", "y", "z", "w"});
  auto I = ideal(R, {"x*z-y^2", "y*w-z^2", "x*w-y*z"});
  CHECK(ext(I.as_row(), 0).rows() == 0);
  CHECK(ext(I.as_row(), 1).rows() == 0);
  CHECK(ext(I.as_row(), 3).rows() == 0);
  auto e2 = ext(I.as_row(), 2);
  CHECK(e2.rows() == 2);
  HilbertSeries expected(R.weights(), {{-3, 2}, {-2, -3}, {0, 1}});
  CHECK(hilbert_series(e2) == expected);
}

TEST_CASE("homology of a simple complex") {
  auto R = GradedRing::create(Field::rationals(), {"x", "y"});
  // 0 <- R <-x- R(-1) <-0- 0 : H_0 = R/(x), H_1 = 0
  GradedMap d(R, {0}, {1}, {R.parse("x")});
  GradedMap zero_in(R, {1}, {});
  CHECK(homology(d, zero_in).rows() == 0);
  GradedMap to_zero(R, {}, {0});
  auto h0 = homology(to_zero, d);
  CHECK(hilbert_series(h0) == ideal(R, {"x"}).hilbert_series());
}
