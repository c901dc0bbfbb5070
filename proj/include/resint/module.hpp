#ifndef RESINT_MODULE_HPP
#define RESINT_MODULE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "resint/ring.hpp"

namespace resint {

/// Generator degrees of a graded free module: {d_1..d_m} stands for
/// R(-d_1) + ... + R(-d_m).
using Degrees = std::vector<int>;

/// A degree-0 homomorphism of graded free modules, stored as a matrix whose
/// columns are the images of the source generators. Entry (i, j) is zero or
/// homogeneous of degree source[j] - target[i].
class GradedMap {
public:
  /// Zero map.
  GradedMap(GradedRing ring, Degrees target, Degrees source);
  /// entries is row-major, rows x cols. Throws ArgumentError when an entry is
  /// not homogeneous of the required degree.
  GradedMap(GradedRing ring, Degrees target, Degrees source, std::vector<Polynomial> entries);
  /// Degrees of the source are inferred from the columns: column j has degree
  /// target[i] + deg(entry) for any nonzero entry. Zero columns get degree
  /// zero_column_degree.
  static GradedMap from_columns(GradedRing ring, Degrees target,
                                const std::vector<std::vector<Polynomial>>& columns,
                                int zero_column_degree = 0);

  const GradedRing& ring() const { return ring_; }
  std::size_t rows() const { return target_.size(); }
  std::size_t cols() const { return source_.size(); }
  const Degrees& target() const { return target_; }
  const Degrees& source() const { return source_; }

  const Polynomial& at(std::size_t i, std::size_t j) const { return entries_[i * cols() + j]; }
  void set(std::size_t i, std::size_t j, Polynomial p);
  std::vector<Polynomial> column(std::size_t j) const;

  bool is_zero() const;
  /// True if some entry is a nonzero constant (the map is not minimal).
  bool has_unit_entry() const;

  /// a ∘ b. Requires a.source == b.target.
  friend GradedMap operator*(const GradedMap& a, const GradedMap& b);
  /// Hom(-, R): transposed matrix between the negated degree lists.
  GradedMap dual() const;
  /// [a | b] with common target.
  static GradedMap concat(const GradedMap& a, const GradedMap& b);
  GradedMap select_columns(const std::vector<std::size_t>& cols) const;
  GradedMap select_rows(const std::vector<std::size_t>& rows) const;
  /// Shifts all degrees by k (twist by R(-k) on both sides).
  GradedMap shifted(int k) const;

  std::string to_string() const;

private:
  GradedRing ring_;
  Degrees target_;
  Degrees source_;
  std::vector<Polynomial> entries_;
};

}  // namespace resint

#endif
