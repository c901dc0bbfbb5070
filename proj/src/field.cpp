#include "resint/field.hpp"

#include "resint/error.hpp"

namespace resint {

namespace {

bool is_prime_number(std::int64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::int64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t reduce_mpz(const mpz_class& n, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace

Field Field::rationals() { return Field(Kind::Rationals, 0); }

Field Field::prime(std::int64_t p) {
  if (p >= (std::int64_t{1} << 31) || !is_prime_number(p))
    throw ArgumentError("field characteristic " + std::to_string(p) +
                        " is not a prime below 2^31");
  return Field(Kind::Prime, static_cast<std::uint32_t>(p));
}

std::string Field::name() const {
  if (kind_ == Kind::Rationals) return "Q";
  return "F_" + std::to_string(p_);
}

std::uint32_t Field::residue(const Scalar& a) const {
  if (const auto* r = std::get_if<std::uint32_t>(&a.v_)) return *r;
  const mpq_class& q = std::get<mpq_class>(a.v_);
  std::uint32_t num = reduce_mpz(q.get_num(), p_);
  std::uint32_t den = reduce_mpz(q.get_den(), p_);
  return static_cast<std::uint32_t>(std::uint64_t{num} * inverse_mod(den, p_) % p_);
}

mpq_class Field::rational(const Scalar& a) const {
  if (const auto* q = std::get_if<mpq_class>(&a.v_)) return *q;
  return mpq_class(static_cast<unsigned long>(std::get<std::uint32_t>(a.v_)));
}

Scalar Field::zero() const {
  if (kind_ == Kind::Rationals) return Scalar(mpq_class(0));
  return Scalar(std::uint32_t{0});
}

Scalar Field::one() const {
  if (kind_ == Kind::Rationals) return Scalar(mpq_class(1));
  return Scalar(std::uint32_t{1 % p_});
}

Scalar Field::from_int(std::int64_t n) const {
  if (kind_ == Kind::Rationals) {
    mpz_class z;
    mpz_set_si(z.get_mpz_t(), static_cast<long>(n));
    return Scalar(mpq_class(z));
  }
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Scalar(static_cast<std::uint32_t>(r));
}

Scalar Field::from_mpz(const mpz_class& n) const {
  if (kind_ == Kind::Rationals) return Scalar(mpq_class(n));
  return Scalar(reduce_mpz(n, p_));
}

Scalar Field::from_ratio(const mpz_class& num, const mpz_class& den) const {
  if (kind_ == Kind::Rationals) {
    if (den == 0) throw ArgumentError("division by zero in coefficient");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(std::move(q));
  }
  std::uint32_t d = reduce_mpz(den, p_);
  if (d == 0)
    throw ArgumentError("denominator is zero in " + name());
  return Scalar(static_cast<std::uint32_t>(std::uint64_t{reduce_mpz(num, p_)} *
                                           inverse_mod(d, p_) % p_));
}

bool Field::is_zero(const Scalar& a) const {
  if (const auto* r = std::get_if<std::uint32_t>(&a.v_)) return *r == 0;
  return sgn(std::get<mpq_class>(a.v_)) == 0;
}

bool Field::is_one(const Scalar& a) const {
  if (kind_ == Kind::Prime) return residue(a) == 1;
  return rational(a) == 1;
}

bool Field::equal(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::Prime) return residue(a) == residue(b);
  return rational(a) == rational(b);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::Prime) {
    std::uint32_t s = residue(a) + residue(b);
    if (s >= p_) s -= p_;
    return Scalar(s);
  }
  return Scalar(mpq_class(rational(a) + rational(b)));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::Prime) {
    std::uint32_t x = residue(a), y = residue(b);
    return Scalar(x >= y ? x - y : x + p_ - y);
  }
  return Scalar(mpq_class(rational(a) - rational(b)));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::Prime)
    return Scalar(static_cast<std::uint32_t>(std::uint64_t{residue(a)} * residue(b) % p_));
  return Scalar(mpq_class(rational(a) * rational(b)));
}

Scalar Field::neg(const Scalar& a) const {
  if (kind_ == Kind::Prime) {
    std::uint32_t x = residue(a);
    return Scalar(x == 0 ? 0u : p_ - x);
  }
  return Scalar(mpq_class(-rational(a)));
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw ArgumentError("inverse of zero");
  if (kind_ == Kind::Prime) return Scalar(inverse_mod(residue(a), p_));
  mpq_class q = rational(a);
  mpq_inv(q.get_mpq_t(), q.get_mpq_t());
  return Scalar(std::move(q));
}

void Field::add_mul(Scalar& a, const Scalar& b, const Scalar& c) const {
  if (kind_ == Kind::Prime) {
    std::uint64_t s = std::uint64_t{residue(a)} + std::uint64_t{residue(b)} * residue(c);
    a.v_ = static_cast<std::uint32_t>(s % p_);
    return;
  }
  auto* q = std::get_if<mpq_class>(&a.v_);
  if (q == nullptr) {
    a.v_ = rational(a);
    q = std::get_if<mpq_class>(&a.v_);
  }
  const auto* qb = std::get_if<mpq_class>(&b.v_);
  const auto* qc = std::get_if<mpq_class>(&c.v_);
  if (qb != nullptr && qc != nullptr) {
    *q += (*qb) * (*qc);
  } else {
    *q += rational(b) * rational(c);
  }
}

int Field::sign(const Scalar& a) const {
  if (kind_ == Kind::Rationals) return sgn(rational(a));
  std::uint32_t r = residue(a);
  if (r == 0) return 0;
  return r <= p_ / 2 ? 1 : -1;
}

std::string Field::to_string(const Scalar& a) const {
  if (kind_ == Kind::Rationals) return rational(a).get_str();
  std::uint32_t r = residue(a);
  if (r <= p_ / 2) return std::to_string(r);
  return "-" + std::to_string(p_ - r);
}

}  // namespace resint
