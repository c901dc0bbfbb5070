#ifndef RESINT_RESIDUAL_HPP
#define RESINT_RESIDUAL_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "resint/groebner.hpp"
#include "resint/koszul.hpp"
#include "resint/resolve.hpp"

namespace resint {

// ---------------------------------------------------------------- bookkeeping

/// One summand of a module in the bookkeeping complexes, over S = R[T_1..T_r]
/// graded by deg T = 1 (R in degree 0): multiplicity copies of M (x) S(-twist),
/// where M is the cycle module Z_index or the free module K_index.
struct ShapeSummand {
  bool free = false;           ///< K_index (free of rank `rank`) or Z_index
  int index = 0;
  std::int64_t rank = 0;       ///< rank of K_index; 0 for cycle modules
  int twist = 0;               ///< S-twist; for Z+ entries the R-module is untwisted
  std::int64_t multiplicity = 0;
};

struct ComplexShape {
  int r = 0, g = 0, s = 0;
  /// Z'_i, i = 0..r-1.
  std::vector<std::vector<ShapeSummand>> z_prime;
  /// D_i = (+)_q Z'_{i-q} (x) S(-q)^{C(s,q)}, i = 0..r+s-1.
  std::vector<std::vector<ShapeSummand>> d;
  /// Z+_j = H^r(D_{j+s})_0 for j = r-s..r-1, stored at position j - (r - s).
  /// Twist is 0 here; multiplicity already includes C(a-1, r-1).
  std::vector<std::vector<ShapeSummand>> z_plus;
  std::vector<int> beg_constructed;   ///< least twist in D_i
  std::vector<int> max_twist;         ///< largest twist in D_i
  std::vector<int> beg_formula;       ///< the closed formula
  bool beg_matches() const { return beg_constructed == beg_formula; }
  /// First i with beg_constructed != beg_formula, or -1.
  int first_beg_mismatch() const;
};

/// Closed formula: i for i <= r-g; r-g+1 for r-g+1 <= i <= r-1; i-g+2 above.
int beg_d_formula(int r, int g, int i);
/// Throws ArgumentError unless 1 <= g <= r and s >= g.
ComplexShape complex_shapes(int r, int g, int s);
/// r = |f|, g = ht (f), s = |a_degrees|.
ComplexShape complex_shapes(const std::vector<Polynomial>& f, const std::vector<int>& a_degrees);

// ---------------------------------------------------------------- residual data

struct ResidualData {
  ResidualData(GradedIdeal i, GradedIdeal a_, GradedIdeal j)
      : I(std::move(i)), a(std::move(a_)), J(std::move(j)) {}
  GradedIdeal I, a, J;
  std::vector<Polynomial> f;       ///< minimal generators of I, degrees descending
  std::vector<Polynomial> alpha;   ///< minimal generators of a, degrees descending
  Degrees i_degrees, a_degrees;
  int n = 0, r = 0, s = 0, g = 0;
  int sigma_a = 0;
  std::optional<int> beg_I_mod_a;  ///< nullopt when I = a
  std::optional<int> height_J;     ///< nullopt: J = R
  std::optional<int> height_I_plus_J;
  bool trivial = false;            ///< a = I, so J = R
  bool is_residual = false;        ///< s >= g and ht J >= s
  bool is_geometric = false;       ///< residual and ht(I + J) >= s + 1
  bool a_input_minimal = true;
  std::vector<std::string> warnings;

  std::shared_ptr<const KoszulData> koszul;
  ConditionReport sd0, sd1, sdc1, scm;  ///< sdc1 at level min(s-g, r-g)
  FittingReport gs, gs_minus;           ///< G_s and G-_{s+1}
  std::optional<int> fitt1_height;      ///< ht Fitt_1(I/a); nullopt: unit
  bool local_cyclic_direct = false;     ///< ht Fitt_1(I/a) >= s + 1
  bool local_mu_condition = false;
  std::string local_mu_route;           ///< "geometric", "fitting", "G-_{s+1}" or "none"
};

/// Presentation of I/a in terms of the generators f of I:
/// [syz(f) | lift of alpha] : (+)R(-b) (+) (+)R(-a) -> (+)R(-i).
GradedMap quotient_presentation(const std::vector<Polynomial>& f,
                                const std::vector<Polynomial>& alpha);

/// Throws HypothesisError if a is not inside I or I is the unit ideal,
/// ArgumentError if a = 0 or the rings differ.
ResidualData build_residual(const GradedIdeal& a, const GradedIdeal& I);

struct CmReport {
  bool checked = false;           ///< false when the gate (is_residual) fails
  bool cm = false;                ///< R/J CM of dimension n - s
  int dimension = -1;
  int expected_dimension = 0;
  std::optional<int> depth;
  std::string hypotheses;         ///< "verified", "partially verified", "unverified", "hypotheses fail"
  std::string route;              ///< which theorem's hypotheses were met
};
CmReport verify_cm_conclusion(const ResidualData& data);

struct RegularityReport {
  bool sentinel = false;          ///< J = R: no bound
  int bound = 0;
  int actual = 0;
  bool holds = false;
  bool tight = false;             ///< degree (s-g+1)beg(I/a) piece of (I^{s-g+1}+J)/J nonzero
  bool equality = false;          ///< actual == bound
  bool hypotheses_verified = false;
};
RegularityReport regularity_bound(const ResidualData& data);

struct CanonicalReport {
  std::string status;                    ///< "equal", "unequal", "inconclusive"
  bool hypotheses_verified = false;
  std::vector<std::string> missing;      ///< unverified hypotheses
  std::optional<int> first_discrepancy;  ///< degree, when compared and unequal
  int lowest_degree = 0;
  int highest_degree = 12;
  std::vector<std::int64_t> ext_side, power_side;  ///< coefficients, lowest..highest
};
/// Compares HS(Ext^s(R/J, R)) with t^{-sigma(a)} HS((I^{s-g+1}+J)/J) for all
/// degrees up to max_degree (the common twist b cancels).
CanonicalReport canonical_module_check(const ResidualData& data, int max_degree = 12);

/// Degree-wise dimensions of I∩J and a for 0..max_degree; equal lists mean
/// I∩J = a in those degrees.
bool intersection_equals_a(const ResidualData& data, int max_degree);

}  // namespace resint

#endif
