#ifndef RESINT_RING_HPP
#define RESINT_RING_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "resint/field.hpp"
#include "resint/monomial.hpp"

namespace resint {

class Polynomial;

/// A polynomial ring K[x_1..x_n] with a positive grading and a monomial
/// order. Immutable; copies share the same data.
class GradedRing {
public:
  /// weights empty means standard grading. Throws ArgumentError on duplicate
  /// or malformed names, nonpositive weights, or too many variables.
  static GradedRing create(Field field, std::vector<std::string> variables,
                           std::vector<int> weights = {},
                           MonomialOrderKind order = MonomialOrderKind::DegRevLex);

  const Field& field() const { return data_->field; }
  std::size_t num_variables() const { return data_->names.size(); }
  const std::vector<std::string>& variables() const { return data_->names; }
  const std::vector<int>& weights() const { return data_->weights; }
  MonomialOrderKind order() const { return data_->order; }
  /// Sum of the variable weights; R(-weight_sum) is the canonical module.
  int weight_sum() const;
  /// Index of a variable name, or nullopt.
  std::optional<std::size_t> variable_index(const std::string& name) const;

  Monomial monomial(std::span<const int> exponents) const;
  Monomial unit_monomial() const { return Monomial(); }
  Monomial lcm(const Monomial& a, const Monomial& b) const {
    return Monomial::lcm(a, b, data_->weights);
  }
  Monomial quotient(const Monomial& a, const Monomial& b) const {
    return Monomial::quotient(a, b, data_->weights);
  }
  int compare(const Monomial& a, const Monomial& b) const {
    return compare_monomials(data_->order, num_variables(), a, b);
  }

  Polynomial zero() const;
  Polynomial one() const;
  Polynomial constant(std::int64_t c) const;
  Polynomial variable(std::size_t i) const;
  /// Parses the polynomial grammar: integer (or p/q) coefficients, `+ - * ^`,
  /// no implicit multiplication. Throws ParseError.
  Polynomial parse(const std::string& text) const;

  std::string describe() const;

  friend bool operator==(const GradedRing& a, const GradedRing& b);
  friend bool operator!=(const GradedRing& a, const GradedRing& b) { return !(a == b); }

private:
  struct Data {
    Field field;
    std::vector<std::string> names;
    std::vector<int> weights;
    MonomialOrderKind order;
  };
  explicit GradedRing(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
};

struct Term {
  Monomial mono;
  Scalar coeff;
};

/// A polynomial with terms kept in strictly decreasing monomial order and no
/// zero coefficients.
class Polynomial {
public:
  explicit Polynomial(GradedRing ring) : ring_(std::move(ring)) {}
  /// Builds from arbitrary terms: combines duplicates, drops zeros, sorts.
  Polynomial(GradedRing ring, std::vector<Term> terms);
  /// Takes terms that are already strictly decreasing with nonzero coefficients.
  static Polynomial from_sorted(GradedRing ring, std::vector<Term> terms);

  const GradedRing& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Nonzero constant.
  bool is_unit() const { return terms_.size() == 1 && terms_[0].mono.is_one(); }
  const Term& leading_term() const { return terms_.front(); }

  /// Largest weighted degree of a term; nullopt for the zero polynomial.
  std::optional<int> degree() const;
  /// True for zero and for polynomials whose terms all share one degree.
  bool is_homogeneous() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial scaled(const Scalar& c) const;
  Polynomial times_monomial(const Monomial& m, const Scalar& c) const;
  Polynomial pow(unsigned k) const;
  /// Scales so the leading coefficient is 1 (zero stays zero).
  Polynomial monic() const;

  /// Exact quotient a / b if b divides a, else nullopt. b must be nonzero.
  static std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  std::string to_string() const;

private:
  GradedRing ring_;
  std::vector<Term> terms_;

};

}  // namespace resint

#endif
