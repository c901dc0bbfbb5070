#ifndef RESINT_GROEBNER_HPP
#define RESINT_GROEBNER_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "resint/hilbert.hpp"
#include "resint/module.hpp"
#include "resint/ring.hpp"

namespace resint {

/// Submodule of a graded free module F, generated by the columns of a graded
/// map G -> F. Gröbner data is computed lazily, once; a Submodule may be read
/// from several threads.
class Submodule {
public:
  explicit Submodule(GradedMap generators);

  const GradedRing& ring() const;
  const GradedMap& generators() const;
  const Degrees& ambient() const { return generators().target(); }

  /// Reduced Gröbner basis as columns (target = ambient).
  GradedMap groebner_basis() const;
  /// Leading monomials of the Gröbner basis lying in component c.
  std::vector<Monomial> leading_monomials(std::size_t c) const;
  /// A minimal homogeneous generating set picked from the generators
  /// (scanned by degree, then by index), as column indices.
  std::vector<std::size_t> minimal_generator_indices() const;
  GradedMap minimal_generators() const;

  std::vector<Polynomial> normal_form(const std::vector<Polynomial>& v) const;
  bool contains(const std::vector<Polynomial>& v) const;
  /// Whether every column of m lies in this submodule.
  bool contains(const GradedMap& m) const;

  /// Hilbert series of F / M.
  HilbertSeries quotient_hilbert_series() const;
  /// Krull dimension of F / M; -1 when M = F.
  int quotient_dimension() const;

private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
  Impl& ready() const;
};

/// Homogeneous ideal of a graded ring.
class GradedIdeal {
public:
  /// Zero generators are dropped. Throws ArgumentError on non-homogeneous
  /// generators or generators from another ring.
  GradedIdeal(GradedRing ring, std::vector<Polynomial> generators);
  static GradedIdeal unit(const GradedRing& ring);
  static GradedIdeal zero(const GradedRing& ring);

  const GradedRing& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  /// Reduced Gröbner basis, sorted by increasing leading monomial.
  std::vector<Polynomial> groebner_basis() const;
  std::vector<Monomial> leading_monomials() const;
  /// Minimal generators chosen among the given generators (input order kept).
  std::vector<Polynomial> minimal_generators() const;
  /// Number of minimal generators.
  std::size_t minimal_count() const { return minimal_generators().size(); }

  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const;
  bool contains(const GradedIdeal& other) const;
  friend bool operator==(const GradedIdeal& a, const GradedIdeal& b);

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;

  /// Hilbert series of R / I.
  HilbertSeries hilbert_series() const;
  /// dim R/I, -1 for the unit ideal.
  int dimension() const;
  /// Height; nullopt stands for +infinity (unit ideal). The zero ideal has height 0.
  std::optional<int> height() const;
  /// dim_K I_d.
  std::int64_t dimension_in_degree(int d) const;

  /// "(g1, g2, ...)" with the given generators.
  std::string to_string() const;
  /// Stable hash of the reduced Gröbner basis (so equal ideals hash equal).
  std::uint64_t hash() const;
  std::string hash_hex() const;

  /// The generators as a 1 x k map R^k -> R.
  GradedMap as_row() const;

private:
  GradedRing ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Submodule> sub_;
};

GradedIdeal ideal_sum(const GradedIdeal& a, const GradedIdeal& b);
GradedIdeal ideal_product(const GradedIdeal& a, const GradedIdeal& b);
GradedIdeal ideal_power(const GradedIdeal& a, unsigned k);
GradedIdeal intersect(const GradedIdeal& a, const GradedIdeal& b);
/// a : f = {x : x f in a}, as (a ∩ (f)) / f.
GradedIdeal quotient(const GradedIdeal& a, const Polynomial& f);
/// a : I = {x : x I in a}: the intersection of a : f over the minimal
/// generators f of I.
GradedIdeal quotient(const GradedIdeal& a, const GradedIdeal& i);
/// a : I by one elimination in R^{r+1} over the module a R^r + R (f_1..f_r, 1).
/// Independent second route, used for cross-checking.
GradedIdeal quotient_by_elimination(const GradedIdeal& a, const GradedIdeal& i);

/// Determinant of a square matrix of polynomials (row-major, k x k).
Polynomial determinant(const std::vector<Polynomial>& m, std::size_t k);
/// Ideal of k x k minors of m. k <= 0 gives the unit ideal; k larger than
/// the matrix gives the zero ideal.
GradedIdeal minors_ideal(const GradedMap& m, int k);
/// Fitt_i of coker(psi): the (rows - i)-minors; the unit ideal once i >= rows.
/// Throws ArgumentError for negative i.
GradedIdeal fitting_ideal(const GradedMap& psi, int i);

/// Kernel of m, minimally generated: a map whose columns generate ker m.
GradedMap syzygies(const GradedMap& m);
/// x with m * x = v (same target), or nullopt when some column of v is not
/// in the image of m.
std::optional<GradedMap> lift(const GradedMap& m, const GradedMap& v);

}  // namespace resint

#endif
