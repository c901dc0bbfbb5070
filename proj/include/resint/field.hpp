#ifndef RESINT_FIELD_HPP
#define RESINT_FIELD_HPP

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace resint {

/// A field element. Elements of a prime field are stored as residues in
/// [0, p); rationals are stored as normalized GMP rationals. A Scalar carries
/// no field pointer: all arithmetic goes through the owning Field.
class Scalar {
public:
  Scalar() = default;

private:
  friend class Field;
  explicit Scalar(std::uint32_t r) : v_(r) {}
  explicit Scalar(mpq_class q) : v_(std::move(q)) {}

  std::variant<std::uint32_t, mpq_class> v_{std::uint32_t{0}};
};

/// The coefficient field: either Q or F_p with p an odd or even prime below 2^31.
class Field {
public:
  enum class Kind { Rationals, Prime };

  /// The rationals.
  static Field rationals();
  /// F_p. Throws ArgumentError unless p is a prime in [2, 2^31).
  static Field prime(std::int64_t p);

  Kind kind() const { return kind_; }
  std::uint32_t characteristic() const { return p_; }
  bool is_prime() const { return kind_ == Kind::Prime; }
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t n) const;
  Scalar from_mpz(const mpz_class& n) const;
  /// num/den; throws ArgumentError when den is zero in this field.
  Scalar from_ratio(const mpz_class& num, const mpz_class& den) const;

  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;
  bool equal(const Scalar& a, const Scalar& b) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  /// Multiplicative inverse; throws ArgumentError on zero.
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  /// a += b * c, the inner step of every reduction loop.
  void add_mul(Scalar& a, const Scalar& b, const Scalar& c) const;

  /// Decimal text. Residues print in the symmetric range (-p/2, p/2].
  std::string to_string(const Scalar& a) const;
  /// Sign used when printing: -1, 0 or +1 (symmetric representative for F_p).
  int sign(const Scalar& a) const;

  friend bool operator==(const Field& x, const Field& y) {
    return x.kind_ == y.kind_ && x.p_ == y.p_;
  }
  friend bool operator!=(const Field& x, const Field& y) { return !(x == y); }

private:
  Field(Kind k, std::uint32_t p) : kind_(k), p_(p) {}

  std::uint32_t residue(const Scalar& a) const;
  mpq_class rational(const Scalar& a) const;

  Kind kind_;
  std::uint32_t p_;
};

}  // namespace resint

#endif
