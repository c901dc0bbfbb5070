#include "resint/monomial.hpp"

#include <algorithm>

#include "resint/error.hpp"

namespace resint {

Monomial::Monomial(std::span<const int> exponents, std::span<const int> weights) {
  if (exponents.size() > kMaxVariables)
    throw ArgumentError("too many variables (limit " + std::to_string(kMaxVariables) + ")");
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] > 0xffff)
      throw ArgumentError("exponent out of range");
    exp_[i] = static_cast<std::uint16_t>(exponents[i]);
    degree_ += exponents[i] * (i < weights.size() ? weights[i] : 1);
  }
  refresh_support();
}

void Monomial::refresh_support() {
  support_ = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (exp_[i] != 0) support_ |= (1u << i);
}

bool Monomial::divides(const Monomial& other) const {
  if ((support_ & ~other.support_) != 0) return false;
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (exp_[i] > other.exp_[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    unsigned e = unsigned{a.exp_[i]} + b.exp_[i];
    if (e > 0xffff) throw ArgumentError("exponent overflow");
    m.exp_[i] = static_cast<std::uint16_t>(e);
  }
  m.degree_ = a.degree_ + b.degree_;
  m.support_ = a.support_ | b.support_;
  return m;
}

Monomial Monomial::quotient(const Monomial& a, const Monomial& b, std::span<const int> weights) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    m.exp_[i] = static_cast<std::uint16_t>(a.exp_[i] - b.exp_[i]);
    m.degree_ += m.exp_[i] * (i < weights.size() ? weights[i] : 1);
  }
  m.refresh_support();
  return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b, std::span<const int> weights) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    m.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
    m.degree_ += m.exp_[i] * (i < weights.size() ? weights[i] : 1);
  }
  m.support_ = a.support_ | b.support_;
  return m;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (auto e : exp_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::string to_string(MonomialOrderKind k) {
  switch (k) {
    case MonomialOrderKind::DegRevLex: return "degrevlex";
    case MonomialOrderKind::DegLex: return "deglex";
    case MonomialOrderKind::Lex: return "lex";
  }
  return "degrevlex";
}

MonomialOrderKind parse_monomial_order(const std::string& name) {
  if (name == "degrevlex" || name == "grevlex") return MonomialOrderKind::DegRevLex;
  if (name == "deglex" || name == "glex") return MonomialOrderKind::DegLex;
  if (name == "lex") return MonomialOrderKind::Lex;
  throw ArgumentError("unknown monomial order '" + name + "'");
}

int compare_monomials(MonomialOrderKind order, std::size_t n, const Monomial& a,
                      const Monomial& b) {
  switch (order) {
    case MonomialOrderKind::DegRevLex:
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      for (std::size_t i = n; i-- > 0;)
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
      return 0;
    case MonomialOrderKind::DegLex:
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      [[fallthrough]];
    case MonomialOrderKind::Lex:
      for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
  }
  return 0;
}

}  // namespace resint
