#ifndef RESINT_RESOLVE_HPP
#define RESINT_RESOLVE_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "resint/groebner.hpp"
#include "resint/hilbert.hpp"
#include "resint/module.hpp"

namespace resint {

/// Graded Betti numbers beta_{i,j}: the number of generators of degree j in
/// homological position i.
class BettiTable {
public:
  BettiTable() = default;
  explicit BettiTable(const std::vector<Degrees>& modules);

  std::size_t operator()(int i, int j) const;
  const std::map<std::pair<int, int>, std::size_t>& entries() const { return entries_; }
  /// Total rank in position i.
  std::size_t total(int i) const;
  bool empty() const { return entries_.empty(); }
  /// max (j - i); only meaningful for a nonempty table.
  int regularity() const;
  /// Largest i with a nonzero entry; -1 for the empty table.
  int length() const;

  /// Staircase layout: columns i, rows j - i.
  std::string to_string() const;

  friend bool operator==(const BettiTable& a, const BettiTable& b) {
    return a.entries_ == b.entries_;
  }

private:
  std::map<std::pair<int, int>, std::size_t> entries_;
};

/// A complex of graded free modules F_0 <- F_1 <- ... <- F_L with
/// maps[k] : F_{k+1} -> F_k.
struct FreeComplex {
  GradedRing ring;
  std::vector<Degrees> modules;
  std::vector<GradedMap> maps;

  explicit FreeComplex(GradedRing r) : ring(std::move(r)) {}
  /// Checks shapes and that consecutive maps compose to zero.
  bool is_complex() const;
  /// Cancels unit entries until none is left. Homology is unchanged.
  void minimize();
  /// Drops trailing zero modules.
  void trim();
  BettiTable betti() const { return BettiTable(modules); }
};

/// Minimal graded free resolution of coker(presentation).
FreeComplex resolve(const GradedMap& presentation);
/// Minimal graded free resolution of R/I.
FreeComplex resolve(const GradedIdeal& ideal);

/// Minimal presentation of the same cokernel.
GradedMap prune(const GradedMap& presentation);
/// Presentation of ker(a) / im(b) for composable a : F -> G, b : E -> F with
/// a * b = 0.
GradedMap homology(const GradedMap& a, const GradedMap& b);
/// Presentation of Ext^i_R(coker(presentation), R).
GradedMap ext(const GradedMap& presentation, int i);

HilbertSeries hilbert_series(const GradedMap& presentation);

/// Numerical invariants of M = coker(presentation).
struct ModuleInvariants {
  bool zero = false;
  int dimension = -1;              ///< Krull dimension, -1 for M = 0
  std::optional<int> depth;        ///< nullopt = infinite (M = 0)
  int projective_dimension = -1;   ///< -1 for M = 0
  std::optional<int> regularity;   ///< nullopt for M = 0
  bool cohen_macaulay = false;     ///< depth == dim (false for M = 0)
  BettiTable betti;
};

ModuleInvariants invariants(const GradedMap& presentation);
ModuleInvariants invariants(const GradedIdeal& ideal);  ///< of R/I

/// "inf" for nullopt, otherwise the number.
std::string depth_to_string(const std::optional<int>& d);

}  // namespace resint

#endif
