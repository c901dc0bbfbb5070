// Homogeneous Buchberger engine for submodules of graded free modules.
// Internal header: the public surface is groebner.hpp / resolve.hpp.
#ifndef RESINT_SRC_GB_ENGINE_HPP
#define RESINT_SRC_GB_ENGINE_HPP

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "resint/module.hpp"
#include "resint/ring.hpp"

namespace resint::detail {

struct ModTerm {
  Monomial mono;
  std::uint32_t comp;
  Scalar coeff;
};
// Terms strictly decreasing in the module order, no zero coefficients.
using ModVec = std::vector<ModTerm>;

// Term order on F = ⊕ R(-twist_c) e_c. Components are grouped in blocks; a
// higher block dominates everything below it (elimination). Inside a block:
// total degree, then the ring order, then smaller component index first.
class ModuleOrder {
public:
  ModuleOrder(GradedRing ring, Degrees twists, std::vector<int> blocks = {});

  const GradedRing& ring() const { return ring_; }
  const Degrees& twists() const { return twists_; }
  std::size_t rank() const { return twists_.size(); }
  int block(std::uint32_t c) const { return blocks_[c]; }

  int compare(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const;
  int compare(const ModTerm& a, const ModTerm& b) const {
    return compare(a.mono, a.comp, b.mono, b.comp);
  }
  int degree(const ModTerm& t) const { return t.mono.degree() + twists_[t.comp]; }

private:
  GradedRing ring_;
  Degrees twists_;
  std::vector<int> blocks_;
};

// Column vector of polynomials -> sorted ModVec.
ModVec to_modvec(const ModuleOrder& order, const std::vector<Polynomial>& column);
// Inverse; rank entries.
std::vector<Polynomial> from_modvec(const ModuleOrder& order, const ModVec& v);

// a + c * m * b  (b scaled by the monomial m and coefficient c).
ModVec add_scaled(const ModuleOrder& order, const ModVec& a, const ModVec& b,
                  const Monomial& m, const Scalar& c);

class GBEngine {
public:
  explicit GBEngine(ModuleOrder order);

  // Homogeneous generator; zero vectors are accepted and never minimal.
  // Returns the input index.
  std::size_t add_input(ModVec v);
  void run();

  const ModuleOrder& order() const { return order_; }
  // Reduced Gröbner basis, monic, sorted by increasing leading term.
  const std::vector<ModVec>& basis() const { return basis_; }
  // For each input: true iff it is needed in a minimal generating set when
  // inputs are scanned by degree, then by index.
  const std::vector<bool>& input_is_minimal() const { return minimal_; }
  // Full normal form w.r.t. the reduced basis.
  ModVec reduce(ModVec v) const;
  std::int64_t pairs_reduced() const { return pairs_reduced_; }

private:
  struct Elem {
    ModVec vec;
    int degree;
  };
  struct Pair {
    int degree;
    Monomial lcm;
    std::uint32_t comp;
    std::uint32_t i, j;
  };

  ModVec reduce_with(ModVec v, const std::vector<Elem>& elems, std::size_t skip) const;
  long find_reducer(const std::vector<Elem>& elems, const Monomial& m, std::uint32_t comp,
                    std::size_t skip) const;
  void insert(ModVec v, int degree);
  bool chain_criterion(const Pair& p) const;
  static std::uint64_t key(std::uint32_t i, std::uint32_t j) {
    if (i > j) std::swap(i, j);
    return (std::uint64_t{i} << 32) | j;
  }

  ModuleOrder order_;
  std::vector<ModVec> inputs_;
  std::vector<int> input_degree_;
  std::vector<bool> minimal_;
  std::vector<Elem> elems_;
  std::vector<std::vector<std::uint32_t>> by_comp_;
  std::vector<Pair> pairs_;  // heap
  std::unordered_set<std::uint64_t> pending_;
  std::vector<ModVec> basis_;
  std::int64_t pairs_reduced_ = 0;
  bool done_ = false;
};

}  // namespace resint::detail

#endif
