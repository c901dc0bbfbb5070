#ifndef RESINT_MONOMIAL_HPP
#define RESINT_MONOMIAL_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace resint {

inline constexpr std::size_t kMaxVariables = 16;

/// Exponent vector with its weighted degree and a support bitmask cached.
/// The degree is only meaningful relative to the weights it was built with;
/// all monomials of one ring share those weights.
class Monomial {
public:
  Monomial() = default;
  Monomial(std::span<const int> exponents, std::span<const int> weights);

  int operator[](std::size_t i) const { return exp_[i]; }
  int degree() const { return degree_; }
  std::uint32_t support() const { return support_; }
  bool is_one() const { return support_ == 0; }

  /// True iff this divides other.
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient a / b; b must divide a.
  static Monomial quotient(const Monomial& a, const Monomial& b, std::span<const int> weights);
  static Monomial lcm(const Monomial& a, const Monomial& b, std::span<const int> weights);
  static bool coprime(const Monomial& a, const Monomial& b) {
    return (a.support_ & b.support_) == 0;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.support_ == b.support_ && a.exp_ == b.exp_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  std::size_t hash() const;

private:
  std::array<std::uint16_t, kMaxVariables> exp_{};
  std::int32_t degree_ = 0;
  std::uint32_t support_ = 0;

  void refresh_support();
};

/// Term orders on monomials. All of them are compatible with multiplication;
/// the graded ones compare weighted degree first.
enum class MonomialOrderKind { DegRevLex, DegLex, Lex };

std::string to_string(MonomialOrderKind k);
/// "degrevlex" | "grevlex" | "deglex" | "glex" | "lex"; throws ArgumentError otherwise.
MonomialOrderKind parse_monomial_order(const std::string& name);

/// Three-way comparison of a and b on n variables: negative, 0, positive.
int compare_monomials(MonomialOrderKind order, std::size_t n, const Monomial& a,
                      const Monomial& b);

}  // namespace resint

#endif
