#ifndef RESINT_HILBERT_HPP
#define RESINT_HILBERT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "resint/monomial.hpp"

namespace resint {

/// Hilbert series N(t) / prod_i (1 - t^{w_i}) of a finitely generated graded
/// module, with N a Laurent polynomial with integer coefficients.
class HilbertSeries {
public:
  HilbertSeries() = default;
  explicit HilbertSeries(std::vector<int> weights) : weights_(std::move(weights)) {}
  HilbertSeries(std::vector<int> weights, std::map<int, std::int64_t> numerator);

  /// Series of R/M for the monomial ideal M generated by gens (any
  /// generating set; 1 in gens gives the zero series).
  static HilbertSeries of_monomial_quotient(const std::vector<Monomial>& gens,
                                            const std::vector<int>& weights);

  const std::vector<int>& weights() const { return weights_; }
  /// Nonzero coefficients of the numerator, by exponent.
  const std::map<int, std::int64_t>& numerator() const { return num_; }
  bool is_zero() const { return num_.empty(); }

  /// Coefficient of t^d in the expanded series (the Hilbert function).
  std::int64_t coefficient(int d) const;
  /// Coefficients for degrees lo..hi inclusive.
  std::vector<std::int64_t> coefficients(int lo, int hi) const;
  /// Lowest degree with a nonzero coefficient (the lowest numerator exponent).
  /// Throws ArgumentError on the zero series.
  int initial_degree() const;

  HilbertSeries shifted(int k) const;  ///< times t^k
  friend HilbertSeries operator+(const HilbertSeries& a, const HilbertSeries& b);
  friend HilbertSeries operator-(const HilbertSeries& a, const HilbertSeries& b);
  friend bool operator==(const HilbertSeries& a, const HilbertSeries& b) {
    return a.weights_ == b.weights_ && a.num_ == b.num_;
  }

  std::string to_string() const;

private:
  std::vector<int> weights_;
  std::map<int, std::int64_t> num_;
};

/// Krull dimension of R/M for a monomial ideal: the largest set of variables
/// containing the support of no generator. -1 when M is the unit ideal.
int monomial_quotient_dimension(const std::vector<Monomial>& gens, std::size_t num_variables);

}  // namespace resint

#endif
