#ifndef RESINT_EN_HPP
#define RESINT_EN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "resint/groebner.hpp"
#include "resint/resolve.hpp"

namespace resint {

/// beta_m(t) = (-1)^m sum_{j=0}^m (-1)^j j^t C(m, j), exactly. Throws
/// ArgumentError unless m >= 1 and t >= 0.
mpz_class beta(int m, int t);

/// Syzygy data of a perfect ideal of height 2.
struct HilbertBurchData {
  GradedIdeal I;
  std::vector<Polynomial> f;  ///< minimal generators, degrees i_1 >= ... >= i_r
  GradedMap matrix;           ///< r x (r-1), columns of degrees b_1 >= ... >= b_{r-1}
  Degrees i_degrees, b_degrees;
  int u = 0;                  ///< multiplicity of the least degree i_r
  int sigma_b = 0;            ///< sum of the b_t (= sum of the i_t)
};

/// Throws HypothesisError naming the failed test when ht I != 2 or
/// pd(R/I) != 2, or when the minors do not give back I.
HilbertBurchData hilbert_burch(const GradedIdeal& I);

/// psi = [HB matrix | coordinates of the minimal generators of a], presenting
/// I/a. The a-columns follow a's generator degrees, descending.
/// Throws HypothesisError if a is not inside I.
GradedMap mapping_cone_presentation(const HilbertBurchData& hb, const GradedIdeal& a);
GradedMap mapping_cone_presentation(const GradedIdeal& I, const GradedIdeal& a);

/// Eagon-Northcott complex of an r x m map psi : (+)R(-c_k) -> (+)R(-i_t), r <= m:
/// position 0 is R, position j+1 has basis y^(alpha) (x) g_K with |alpha| = j
/// and |K| = r + j, in degree sum_K c - sum alpha_t i_t - sum_t i_t.
/// Throws ArgumentError if r > m or r = 0.
FreeComplex eagon_northcott(const GradedMap& psi);

/// Twist bookkeeping of the Eagon-Northcott resolution of R/J.
struct ENShape {
  Degrees c;                            ///< merged b and a degrees, descending (b first on ties)
  Degrees i_degrees, b_degrees, a_degrees;
  int r = 0, s = 0, k = 0, u = 0;
  int sigma_b = 0;
  std::vector<Degrees> twists;          ///< generator degrees of N_j[sigma], j = 0..s-1
  std::vector<int> f;                   ///< max of twists[j]
  std::vector<int> f_formula;           ///< sum_{t<=r+j} c_t - j i_r - sigma_b
  std::vector<std::int64_t> n;          ///< multiplicity of f(j) in twists[j]
  /// f(0) < ... < f(k-1) = f(k) = ... = f(s-1) and f(0) > 0.
  bool f_ordering_holds() const;
};

/// Throws ArgumentError on empty or inconsistent degree lists.
ENShape en_shape(const Degrees& i_degrees, const Degrees& b_degrees, const Degrees& a_degrees);

struct ENCount {
  int f_relative = 0;   ///< f(j) - f(s-1); zero on the whole admissible range
  std::int64_t n = 0;   ///< C(s-k, j-k+1) C(u+j-1, u-1)
};
/// Admissible j: max(k-1, 0) <= j <= s-1. Throws ArgumentError otherwise or
/// unless 0 <= k <= s and u >= 1.
ENCount en_counts(int s, int k, int u, int j);
/// sum_{j=max(k-1,0)}^{s-1} (-1)^j n(j).
mpz_class en_alternating_sum(int s, int k, int u);
/// The sum is predicted nonzero exactly when s - k <= u - 1.
inline bool en_alternating_nonzero_predicted(int s, int k, int u) { return s - k <= u - 1; }

/// Full height-2 pipeline for J = a : I.
struct ENReport {
  int r = 0, s = 0, k = 0, u = 0;
  int sigma_a = 0;
  int beg_I = 0;                          ///< i_r
  int beg_I_mod_a = 0;
  bool residual = false;                  ///< ht J >= s and s >= 2
  bool cm = false;                        ///< R/J CM of height s
  bool s_minus_k_le_u = false;
  std::string regime;                     ///< "s-k<=u-1" or "s-k=u" (or "s-k>u")
  int predicted_general = 0;              ///< sigma - (s-1) beg(I/a) - s
  std::optional<int> predicted_strict;    ///< sigma - (s-1) i_r - s when s-k <= u-1
  int strict_rhs = 0;                     ///< sigma - (s-1) i_r - s, always
  std::optional<int> predicted_refined;   ///< refined remark prediction when it applies
  int actual_en = 0;                      ///< from the minimized EN complex
  int actual_resolution = 0;              ///< from the minimal resolution of R/J
  bool en_is_complex = false;
  bool en_exact = false;                  ///< H_i = 0 for i >= 1
  bool en_minimal = false;                ///< no unit entries before minimization
  bool h0_matches = false;                ///< coker of the first map vs R/J up to h0_up_to
  int h0_up_to = 12;
  bool fitting_matches = false;           ///< I_r(psi) == J
  bool betti_match = false;               ///< minimized EN vs minimal resolution
  bool n_matches = false;                 ///< counted n(j) vs closed form on the admissible range
  bool agree = false;                     ///< EN, resolution and the beg(I/a) formula agree
  ENShape shape;
  BettiTable en_betti, resolution_betti;
  std::vector<std::string> warnings;
};

/// Throws HypothesisError when I is not perfect of height 2, a is not in I,
/// or J = R.
ENReport en_analysis(const GradedIdeal& I, const GradedIdeal& a, int max_degree = 12);

}  // namespace resint

#endif
