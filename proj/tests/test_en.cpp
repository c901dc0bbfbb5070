#include <algorithm>

#include "doctest.h"
#include "resint/en.hpp"
#include "resint/error.hpp"

using namespace resint;

namespace {

GradedRing xyz() { return GradedRing::create(Field::prime(32003), {"x", "y", "z"}); }
GradedRing xyzw() { return GradedRing::create(Field::prime(32003), {"x", "y", "z", "w"}); }

GradedIdeal ideal(const GradedRing& R, std::initializer_list<const char*> xs) {
  std::vector<Polynomial> out;
  for (auto s : xs) out.push_back(R.parse(s));
  return GradedIdeal(R, out);
}

// beta via the derivative sequence A^0 = (x-1)^m, A^1 = A^0', A^{i+1} = (x A^i)'.
mpz_class beta_by_derivatives(int m, int t) {
  std::vector<mpz_class> p(static_cast<std::size_t>(m) + 1);
  for (int j = 0; j <= m; ++j) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(j));
    p[static_cast<std::size_t>(j)] = (m - j) % 2 ? mpz_class(-c) : c;
  }
  auto derive = [](const std::vector<mpz_class>& q) {
    std::vector<mpz_class> out(q.size() > 1 ? q.size() - 1 : 1, 0);
    for (std::size_t i = 1; i < q.size(); ++i) out[i - 1] = q[i] * static_cast<unsigned long>(i);
    return out;
  };
  for (int i = 0; i < t; ++i) {
    if (i > 0) p.insert(p.begin(), mpz_class(0));  // times x
    p = derive(p);
  }
  mpz_class at1 = 0;
  for (const auto& c : p) at1 += c;
  return at1;
}

}  // namespace

TEST_CASE("beta table") {
  CHECK(beta(2, 2) == 2);
  CHECK(beta(1, 0) == 0);
  CHECK(beta(1, 1) == 1);
  for (int m = 1; m <= 10; ++m)
    for (int t = 0; t <= 15; ++t) {
      if (t <= m - 1) CHECK(beta(m, t) == 0);
      else CHECK(beta(m, t) > 0);
      CHECK(beta(m, t) == beta_by_derivatives(m, t));
    }
  CHECK_THROWS_AS(beta(0, 3), ArgumentError);
  CHECK_THROWS_AS(beta(2, -1), ArgumentError);
}

TEST_CASE("Hilbert-Burch of the 2x3 minors") {
  auto R = xyz();
  auto hb = hilbert_burch(ideal(R, {"x*z-y^2", "x^2-y*z", "x*y-z^2"}));
  CHECK(hb.matrix.rows() == 3);
  CHECK(hb.matrix.cols() == 2);
  CHECK(hb.b_degrees == Degrees{3, 3});
  CHECK(hb.i_degrees == Degrees{2, 2, 2});
  CHECK(hb.u == 3);
  CHECK(hb.sigma_b == 6);
}

TEST_CASE("Hilbert-Burch of a complete intersection") {
  auto R = xyzw();
  auto I = ideal(R, {"x^2", "y*z-w^2"});
  auto hb = hilbert_burch(I);
  CHECK(hb.matrix.rows() == 2);
  CHECK(hb.matrix.cols() == 1);
  CHECK(hb.b_degrees == Degrees{4});
  CHECK(minors_ideal(hb.matrix, 1) == I);
  // the entries are the two forms up to sign
  for (std::size_t t = 0; t < 2; ++t) {
    const Polynomial& e = hb.matrix.at(t, 0);
    CHECK((I.contains(e) && e.degree() == hb.f[1 - t].degree()));
  }
}

TEST_CASE("Hilbert-Burch gates") {
  auto R = xyzw();
  CHECK_THROWS_AS(hilbert_burch(ideal(R, {"x", "y", "z"})), HypothesisError);
  // two skew lines: height 2, pd 3
  CHECK_THROWS_AS(hilbert_burch(ideal(R, {"x*z", "x*w", "y*z", "y*w"})), HypothesisError);
}

TEST_CASE("mapping cone presentation") {
  auto R = xyz();
  auto I = ideal(R, {"x*z-y^2", "x^2-y*z", "x*y-z^2"});
  auto hb = hilbert_burch(I);
  CHECK(mapping_cone_presentation(hb, GradedIdeal::zero(R)).cols() == 2);

  auto a = ideal(R, {"x*z-y^2", "x^2-y*z"});
  auto psi = mapping_cone_presentation(hb, a);
  CHECK(psi.rows() == 3);
  CHECK(psi.cols() == 4);
  CHECK(minors_ideal(psi, 3) == quotient(a, I));
  CHECK(minors_ideal(psi, 3) == quotient_by_elimination(a, I));

  auto self = mapping_cone_presentation(hb, I);
  CHECK(hilbert_series(self).is_zero());
  CHECK(minors_ideal(self, 3).is_unit());

  CHECK_THROWS_AS(mapping_cone_presentation(hb, ideal(R, {"x^2"})), HypothesisError);
}

TEST_CASE("Eagon-Northcott of the link") {
  auto R = xyz();
  auto I = ideal(R, {"x*z-y^2", "x^2-y*z", "x*y-z^2"});
  auto a = ideal(R, {"x*z-y^2", "x^2-y*z"});
  auto psi = mapping_cone_presentation(I, a);
  auto en = eagon_northcott(psi);
  CHECK(en.is_complex());
  REQUIRE(en.modules.size() == 3);
  CHECK(en.modules[1].size() == 4);  // C(2,0) C(4,3)
  CHECK(en.modules[2].size() == 3);  // C(3,1) C(4,4)
  auto sh = en_shape({2, 2, 2}, {3, 3}, {2, 2});
  for (std::size_t j = 0; j < 2; ++j) {
    Degrees built = en.modules[j + 1];
    std::sort(built.rbegin(), built.rend());
    CHECK(built == sh.twists[j]);
  }
  auto mini = en;
  mini.minimize();
  mini.trim();
  CHECK(mini.betti() == resolve(quotient(a, I)).betti());
}

TEST_CASE("Eagon-Northcott for s = 1 is the determinant map") {
  auto R = xyzw();
  auto I = ideal(R, {"x", "y"});
  auto psi = mapping_cone_presentation(I, ideal(R, {"x"}));
  auto en = eagon_northcott(psi);
  CHECK(en.modules.size() == 2);
  CHECK(en.modules[1].size() == 1);
  CHECK(GradedIdeal(R, {en.maps[0].at(0, 0)}) == ideal(R, {"x"}));
  CHECK_THROWS_AS(eagon_northcott(GradedMap(R, {0, 0, 0}, {1})), ArgumentError);
}

TEST_CASE("Eagon-Northcott squares to zero on larger shapes") {
  auto R = xyzw();
  // 4 x 5 matrix of linear forms
  const char* e[4][5] = {{"x", "y", "z", "w", "0"},
                         {"y", "z", "w", "x", "y"},
                         {"z", "w", "x", "y", "z"},
                         {"w", "x", "0", "z", "x"}};
  GradedMap psi(R, {0, 0, 0, 0}, {1, 1, 1, 1, 1});
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 5; ++j) psi.set(i, j, R.parse(e[i][j]));
  auto en = eagon_northcott(psi);
  CHECK(en.is_complex());
  CHECK(en.modules[1].size() == 5);
  CHECK(en.modules[2].size() == 4);
}

TEST_CASE("en counts") {
  // C(0, 1) = 0
  CHECK(en_counts(2, 2, 1, 1).n == 1);
  CHECK(en_counts(3, 3, 2, 2).n == 1 * 3);
  CHECK(en_counts(3, 2, 1, 1).n == 1);
  CHECK(en_counts(3, 2, 1, 2).n == 1);
  CHECK(en_counts(4, 4, 1, 3).n == 1);
  CHECK_THROWS_AS(en_counts(3, 2, 1, 0), ArgumentError);
  CHECK_THROWS_AS(en_counts(3, 2, 1, 3), ArgumentError);
  CHECK_THROWS_AS(en_counts(3, 4, 1, 2), ArgumentError);
}

TEST_CASE("alternating sum of n(j)") {
  for (int s = 2; s <= 10; ++s)
    for (int k = 0; k <= s; ++k)
      for (int u = std::max(1, s - k); u <= 10; ++u) {
        mpz_class sum = en_alternating_sum(s, k, u);
        CHECK((sum != 0) == en_alternating_nonzero_predicted(s, k, u));
        if (sum != 0) CHECK(sgn(sum) == (s % 2 ? 1 : -1));
      }
}

TEST_CASE("en shape bookkeeping") {
  auto sh = en_shape({4, 4, 4, 3}, {5, 5, 5}, {4, 4, 3});
  CHECK(sh.k == 2);
  CHECK(sh.u == 1);
  CHECK(sh.c == Degrees{5, 5, 5, 4, 4, 3});
  CHECK(sh.f == sh.f_formula);
  CHECK(sh.f_ordering_holds());
  for (int j = std::max(sh.k - 1, 0); j <= sh.s - 1; ++j)
    CHECK(sh.n[static_cast<std::size_t>(j)] == en_counts(sh.s, sh.k, sh.u, j).n);
  // a ties with a b-degree: the merged order does not change f or n
  auto tie = en_shape({3, 3, 3}, {4, 4}, {4, 3});
  CHECK(tie.c == Degrees{4, 4, 4, 3});
  auto swapped = en_shape({3, 3, 3}, {4, 4}, {3, 4});
  CHECK(tie.f == swapped.f);
  CHECK(tie.n == swapped.n);
  CHECK_THROWS_AS(en_shape({3, 3}, {4, 4}, {3}), ArgumentError);
}

TEST_CASE("en pipeline on the link") {
  auto R = xyz();
  auto rep = en_analysis(ideal(R, {"x*z-y^2", "x^2-y*z", "x*y-z^2"}), ideal(R, {"x*z-y^2", "x^2-y*z"}));
  CHECK(rep.residual);
  CHECK(rep.cm);
  CHECK(rep.s_minus_k_le_u);
  CHECK(rep.regime == "s-k<=u-1");
  CHECK(rep.predicted_general == 0);
  CHECK(rep.predicted_strict == 0);
  CHECK(rep.actual_en == 0);
  CHECK(rep.actual_resolution == 0);
  CHECK(rep.en_is_complex);
  CHECK(rep.en_exact);
  CHECK(rep.h0_matches);
  CHECK(rep.fitting_matches);
  CHECK(rep.betti_match);
  CHECK(rep.n_matches);
  CHECK(rep.agree);
  CHECK_FALSE(rep.en_minimal);  // constant lift coefficients
}

TEST_CASE("en pipeline in the s - k = u regime") {
  auto R = xyzw();
  auto I = ideal(R, {"-z^3+y*w^2", "-y*z^2+x*w^2", "-y^2+x*z"});
  auto a = ideal(R, {"-y^2+x*z", "-y^2*z+x*z^2+z^3-y*w^2"});
  auto rep = en_analysis(I, a);
  CHECK(rep.k == 1);
  CHECK(rep.u == 1);
  CHECK(rep.regime == "s-k=u");
  CHECK_FALSE(rep.predicted_strict);
  CHECK(rep.actual_resolution < rep.strict_rhs);
  CHECK(rep.actual_resolution == rep.predicted_general);
  CHECK(rep.predicted_refined == rep.actual_resolution);
  CHECK(rep.beg_I_mod_a == 3);
  CHECK(rep.agree);
}

TEST_CASE("en pipeline errors") {
  auto R = xyz();
  auto I = ideal(R, {"x*z-y^2", "x^2-y*z", "x*y-z^2"});
  CHECK_THROWS_AS(en_analysis(I, I), HypothesisError);
  CHECK_THROWS_AS(en_analysis(ideal(R, {"x", "y", "z"}), ideal(R, {"x"})), HypothesisError);
}
