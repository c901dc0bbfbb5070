#ifndef RESINT_KOSZUL_HPP
#define RESINT_KOSZUL_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "resint/groebner.hpp"
#include "resint/resolve.hpp"

namespace resint {

/// Koszul complex K(f; R) of a sequence of nonzero homogeneous polynomials,
/// with lazily cached cycle and homology modules.
class KoszulData {
public:
  /// Throws ArgumentError on zero or non-homogeneous entries or an empty list.
  explicit KoszulData(std::vector<Polynomial> f);

  const GradedRing& ring() const { return f_.front().ring(); }
  const std::vector<Polynomial>& sequence() const { return f_; }
  int length() const { return static_cast<int>(f_.size()); }
  /// Modules K_0..K_r and maps[i] = d_{i+1} : K_{i+1} -> K_i.
  const FreeComplex& complex() const { return complex_; }
  /// Basis of K_i: increasing index subsets, in the order used by the maps.
  const std::vector<std::vector<int>>& subsets(int i) const;
  const GradedIdeal& ideal() const { return ideal_; }
  /// ht I; nullopt for the unit ideal.
  std::optional<int> grade() const { return ideal_.height(); }

  /// Presentation of Z_i = ker d_i (Z_0 = K_0). Throws ArgumentError unless 0 <= i <= r.
  GradedMap cycles(int i) const;
  /// Presentation of H_i = Z_i / B_i.
  GradedMap homology(int i) const;
  const ModuleInvariants& cycle_invariants(int i) const;
  const ModuleInvariants& homology_invariants(int i) const;

private:
  struct Cache;
  std::vector<Polynomial> f_;
  FreeComplex complex_;
  std::vector<std::vector<std::vector<int>>> subsets_;
  GradedIdeal ideal_;
  std::shared_ptr<Cache> cache_;
  void check_index(int i) const;
};

/// One row of a depth table.
struct DepthEntry {
  int index = 0;
  std::optional<int> depth;  ///< nullopt: zero module (infinite depth)
  int threshold = 0;
  bool pass = false;
};

struct ConditionReport {
  std::string name;           ///< "SD", "SDC", "SCM"
  int k = 0;
  std::optional<int> level;   ///< nullopt: no level (SCM)
  bool holds = false;
  std::vector<DepthEntry> entries;
};

/// depth H_i >= min(d - g, d - r + i + k) for all i >= r - g - t.
/// t = nullopt means t = r - g (plain SD_k). Throws HypothesisError if I = R.
ConditionReport check_sd(const KoszulData& K, int k, std::optional<int> t = std::nullopt);
/// depth Z_i >= min(d - r + i + k, d - g + 2, d) for r - g - t <= i <= r - g.
ConditionReport check_sdc(const KoszulData& K, int k, int t);
/// Every Koszul homology module is CM (zero modules count as CM).
ConditionReport check_scm(const KoszulData& K);

struct FittingEntry {
  int index = 0;                ///< j in Fitt_j
  std::optional<int> height;    ///< nullopt: unit ideal
  int required = 0;
  bool pass = false;
};

struct FittingReport {
  std::string name;  ///< "G_s" or "G-_s"
  int s = 0;
  bool holds = false;
  std::vector<FittingEntry> entries;
};

/// G_s: ht Fitt_j(I) >= j + 1 for 1 <= j <= s - 1 (presentation from the
/// minimal generators of I). Throws ArgumentError for s < 1.
FittingReport check_gs(const GradedIdeal& I, int s);
/// G-_s: mu(I_p) <= ht p + 1 for primes of height <= s - 1, i.e.
/// ht Fitt_j(I) >= j for 1 <= j <= s.
FittingReport check_gs_minus(const GradedIdeal& I, int s);

struct ZtopReport {
  int index = 0;                 ///< r - g
  std::optional<int> depth;      ///< computed depth of Z_{r-g}
  std::string case_label;        ///< "1", "3" or "untested hypothesis"
  std::optional<int> expected;
  bool consistent = true;        ///< computed == expected when a case applies
};

/// Matches depth(Z_{r-g}) against the certified cases: d when g = 1 or f is a
/// regular sequence; d - g + 2 when g >= 2, R/I is CM and r > g.
ZtopReport classify_depth_ztop(const KoszulData& K);

}  // namespace resint

#endif
