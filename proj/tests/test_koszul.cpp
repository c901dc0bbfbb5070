#include "doctest.h"
#include "resint/error.hpp"
#include "resint/koszul.hpp"

using namespace resint;

namespace {

std::vector<Polynomial> polys(const GradedRing& R, std::initializer_list<const char*> xs) {
  std::vector<Polynomial> out;
  for (auto s : xs) out.push_back(R.parse(s));
  return out;
}

GradedRing xyz() { return GradedRing::create(Field::prime(32003), {"x", "y", "z"}); }

}  // namespace

TEST_CASE("koszul complex shape") {
  auto R = xyz();
  KoszulData one(polys(R, {"x"}));
  CHECK(one.complex().modules == std::vector<Degrees>{{0}, {1}});
  KoszulData K(polys(R, {"x*z-y^2", "x^2-y*z", "x*y-z^2"}));
  CHECK(K.complex().is_complex());
  std::vector<std::size_t> ranks;
  for (const auto& m : K.complex().modules) ranks.push_back(m.size());
  CHECK(ranks == std::vector<std::size_t>{1, 3, 3, 1});
  CHECK(K.complex().modules[2] == Degrees{4, 4, 4});
  CHECK(K.complex().modules[3] == Degrees{6});
  long euler = 0;
  for (std::size_t i = 0; i < ranks.size(); ++i) euler += (i % 2 ? -1 : 1) * static_cast<long>(ranks[i]);
  CHECK(euler == 0);
  CHECK_THROWS_AS(K.cycles(4), ArgumentError);
  CHECK_THROWS_AS(KoszulData(polys(R, {"x+1"})), ArgumentError);
}

TEST_CASE("cycles and homology of the 2x3 minors") {
  auto R = xyz();
  auto f = polys(R, {"x*z-y^2", "x^2-y*z", "x*y-z^2"});
  KoszulData K(f);
  CHECK(K.grade() == 2);
  CHECK(K.cycles(3).rows() == 0);  // Z_r = 0
  CHECK(K.cycles(0).rows() == 1);  // Z_0 = R
  CHECK(K.cycles(0).cols() == 0);
  // H_0 = R/I
  CHECK(hilbert_series(K.homology(0)) == GradedIdeal(R, f).hilbert_series());
  // Z_1 is generated by the full syzygy module of f
  CHECK(K.cycles(1).rows() == syzygies(GradedIdeal(R, f).as_row()).cols());
  // H_2 = H_3 = 0 (depth sensitivity: r - g = 1)
  CHECK(K.homology_invariants(2).zero);
  CHECK(K.homology_invariants(3).zero);
  // H_{r-g} is the canonical module up to twist: H_1 = Ext^2(R/I, R)(-6)
  auto e2 = ext(GradedIdeal(R, f).as_row(), 2);
  CHECK(hilbert_series(K.homology(1)) == hilbert_series(e2).shifted(6));
}

TEST_CASE("regular sequences pass everything") {
  auto R = GradedRing::create(Field::prime(32003), {"x", "y", "z", "w"});
  KoszulData K(polys(R, {"x^2", "y*z-w^2"}));
  for (int k = -1; k <= 1; ++k)
    for (int t = -1; t <= 3; ++t) {
      CHECK(check_sd(K, k, t).holds);
      CHECK(check_sdc(K, k, t).holds);
    }
  for (int s = 1; s <= 6; ++s) CHECK(check_gs(K.ideal(), s).holds);
  CHECK(check_scm(K).holds);
  auto z = classify_depth_ztop(K);
  CHECK(z.case_label == "1");
  CHECK(z.depth == 4);
  CHECK(z.consistent);
  CHECK(check_sd(K, 5, std::nullopt).holds);  // all higher H_i vanish
}

TEST_CASE("large k fails once a homology module has small depth") {
  auto R = GradedRing::create(Field::prime(32003), {"a", "b", "c", "d"});
  KoszulData K(polys(R, {"a*c", "a*d", "b*c", "b*d"}));
  CHECK(K.grade() == 2);
  auto rep = check_sd(K, 10, std::nullopt);
  CHECK_FALSE(rep.holds);
  CHECK(rep.entries.front().index == 0);
  CHECK(rep.entries.front().depth == 1);
  CHECK(classify_depth_ztop(K).case_label == "untested hypothesis");
}

TEST_CASE("sliding depth on the 2x3 minors") {
  auto R = xyz();
  KoszulData K(polys(R, {"x*z-y^2", "x^2-y*z", "x*y-z^2"}));
  CHECK(check_scm(K).holds);
  CHECK(check_sd(K, 1, 1).holds);
  CHECK(check_sdc(K, 1, 0).holds);
  auto z = classify_depth_ztop(K);
  CHECK(z.case_label == "3");
  CHECK(z.depth == 3);
  CHECK(z.consistent);
  // the threshold is capped by d - g, so large k still passes a CM H_0
  CHECK(check_sd(K, 10, std::nullopt).holds);
  // cycles above r - g: depth Z_i = d - r + i + 1 for r-g+1 <= i <= r-1
  CHECK(K.cycle_invariants(2).depth == 3 - 3 + 2 + 1);
}

TEST_CASE("G_s via Fitting heights") {
  auto R = xyz();
  GradedIdeal principal(R, polys(R, {"x*y"}));
  for (int s = 1; s <= 5; ++s) CHECK(check_gs(principal, s).holds);
  GradedIdeal I(R, polys(R, {"x*z-y^2", "x^2-y*z", "x*y-z^2"}));
  CHECK(check_gs(I, 1).entries.empty());
  auto g2 = check_gs(I, 2);
  REQUIRE(g2.entries.size() == 1);
  CHECK(g2.entries[0].height == 2);  // Fitt_1 = I_2(phi) = I
  CHECK(g2.holds);
  CHECK(check_gs(I, 3).holds);
  CHECK_THROWS_AS(check_gs(I, 0), ArgumentError);
  // (x, y)^2 in k[x,y,z]: three generators, height 2, locally 3 > 2 at (x, y)
  GradedIdeal m2(R, polys(R, {"x^2", "x*y", "y^2"}));
  CHECK_FALSE(check_gs(m2, 3).holds);
  CHECK(check_gs_minus(m2, 3).holds);
}
