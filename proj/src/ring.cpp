#include "resint/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "resint/error.hpp"

namespace resint {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

// Sorts descending, merges equal monomials, drops zero coefficients.
void normalize(const GradedRing& ring, std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return ring.compare(a.mono, b.mono) > 0;
  });
  const Field& k = ring.field();
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = k.add(out.back().coeff, t.coeff);
    } else {
      if (!out.empty() && k.is_zero(out.back().coeff)) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && k.is_zero(out.back().coeff)) out.pop_back();
  terms = std::move(out);
}

}  // namespace

GradedRing GradedRing::create(Field field, std::vector<std::string> variables,
                              std::vector<int> weights, MonomialOrderKind order) {
  if (variables.size() > kMaxVariables)
    throw ArgumentError("at most " + std::to_string(kMaxVariables) + " variables are supported");
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (!valid_identifier(v)) throw ArgumentError("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw ArgumentError("duplicate variable name '" + v + "'");
  }
  if (weights.empty()) weights.assign(variables.size(), 1);
  if (weights.size() != variables.size())
    throw ArgumentError("weight list length does not match variable count");
  for (int w : weights)
    if (w < 1) throw ArgumentError("variable weights must be positive");
  return GradedRing(std::make_shared<const Data>(
      Data{std::move(field), std::move(variables), std::move(weights), order}));
}

int GradedRing::weight_sum() const {
  int s = 0;
  for (int w : data_->weights) s += w;
  return s;
}

std::optional<std::size_t> GradedRing::variable_index(const std::string& name) const {
  for (std::size_t i = 0; i < data_->names.size(); ++i)
    if (data_->names[i] == name) return i;
  return std::nullopt;
}

Monomial GradedRing::monomial(std::span<const int> exponents) const {
  if (exponents.size() != num_variables())
    throw ArgumentError("exponent vector has wrong length");
  return Monomial(exponents, data_->weights);
}

Polynomial GradedRing::zero() const { return Polynomial(*this); }

Polynomial GradedRing::one() const { return constant(1); }

Polynomial GradedRing::constant(std::int64_t c) const {
  return Polynomial(*this, {Term{Monomial(), field().from_int(c)}});
}

Polynomial GradedRing::variable(std::size_t i) const {
  if (i >= num_variables()) throw ArgumentError("variable index out of range");
  std::vector<int> e(num_variables(), 0);
  e[i] = 1;
  return Polynomial(*this, {Term{monomial(e), field().one()}});
}

std::string GradedRing::describe() const {
  std::ostringstream os;
  os << field().name() << "[";
  for (std::size_t i = 0; i < num_variables(); ++i) {
    if (i) os << ",";
    os << data_->names[i];
  }
  os << "]";
  bool standard = std::all_of(data_->weights.begin(), data_->weights.end(),
                              [](int w) { return w == 1; });
  if (!standard) {
    os << " weights(";
    for (std::size_t i = 0; i < num_variables(); ++i) os << (i ? "," : "") << data_->weights[i];
    os << ")";
  }
  os << " " << to_string(order());
  return os.str();
}

bool operator==(const GradedRing& a, const GradedRing& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->field == b.data_->field && a.data_->names == b.data_->names &&
         a.data_->weights == b.data_->weights && a.data_->order == b.data_->order;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Token {
  enum Kind { Number, Ident, Plus, Minus, Star, Caret, Slash, End } kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Token::Number, s.substr(start, i - start), start});
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Token::Ident, s.substr(start, i - start), start});
    } else {
      Token::Kind k;
      switch (c) {
        case '+': k = Token::Plus; break;
        case '-': k = Token::Minus; break;
        case '*': k = Token::Star; break;
        case '^': k = Token::Caret; break;
        case '/': k = Token::Slash; break;
        default:
          throw ParseError("unexpected character '" + std::string(1, c) + "' at position " +
                           std::to_string(i));
      }
      out.push_back({k, std::string(1, c), start});
      ++i;
    }
  }
  out.push_back({Token::End, "", s.size()});
  return out;
}

class PolyParser {
public:
  PolyParser(const GradedRing& ring, const std::string& text)
      : ring_(ring), toks_(tokenize(text)) {}

  Polynomial parse() {
    if (peek().kind == Token::End) throw ParseError("empty polynomial");
    std::vector<Term> terms;
    bool negative = false;
    if (peek().kind == Token::Plus || peek().kind == Token::Minus) {
      negative = next().kind == Token::Minus;
    }
    terms.push_back(term(negative));
    while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
      negative = next().kind == Token::Minus;
      terms.push_back(term(negative));
    }
    if (peek().kind != Token::End)
      throw ParseError("malformed polynomial near position " + std::to_string(peek().pos));
    return Polynomial(ring_, std::move(terms));
  }

private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  Term term(bool negative) {
    const Field& k = ring_.field();
    Scalar coeff = negative ? k.from_int(-1) : k.one();
    std::vector<int> exps(ring_.num_variables(), 0);
    factor(coeff, exps);
    // juxtaposition multiplies: "xz", "2x", "x y"
    for (;;) {
      if (peek().kind == Token::Star) next();
      else if (peek().kind != Token::Ident && peek().kind != Token::Number) break;
      factor(coeff, exps);
    }
    return Term{ring_.monomial(exps), coeff};
  }

  void factor(Scalar& coeff, std::vector<int>& exps) {
    const Field& k = ring_.field();
    const Token& t = next();
    if (t.kind == Token::Number) {
      mpz_class num(t.text);
      mpz_class den(1);
      if (peek().kind == Token::Slash) {
        next();
        const Token& d = next();
        if (d.kind != Token::Number)
          throw ParseError("expected integer denominator at position " + std::to_string(d.pos));
        den = mpz_class(d.text);
      }
      Scalar c;
      try {
        c = k.from_ratio(num, den);
      } catch (const ArgumentError& e) {
        throw ParseError(std::string("coefficient not in field: ") + e.what());
      }
      coeff = k.mul(coeff, c);
      if (peek().kind == Token::Caret) throw ParseError("exponent on a coefficient is not allowed");
      return;
    }
    if (t.kind == Token::Ident) {
      auto pieces = split_identifier(t.text);
      for (std::size_t p = 0; p + 1 < pieces.size(); ++p) exps[pieces[p]] += 1;
      const std::size_t last = pieces.back();
      long e = 1;
      if (peek().kind == Token::Caret) {
        next();
        const Token& n = next();
        if (n.kind != Token::Number)
          throw ParseError("expected exponent at position " + std::to_string(n.pos));
        if (n.text.size() > 5) throw ParseError("exponent too large");
        e = std::stol(n.text);
      }
      exps[last] += static_cast<int>(e);
      for (std::size_t p : pieces)
        if (exps[p] > 0xffff) throw ParseError("exponent too large");
      return;
    }
    throw ParseError("expected coefficient or variable at position " + std::to_string(t.pos));
  }

  // A name that is not a variable is read as a product of variable names,
  // provided it splits in exactly one way.
  std::vector<std::size_t> split_identifier(const std::string& name) const {
    if (auto idx = ring_.variable_index(name)) return {*idx};
    const std::size_t n = name.size();
    std::vector<int> ways(n + 1, 0);
    std::vector<std::size_t> cut(n + 1, 0);
    ways[n] = 1;
    for (std::size_t i = n; i-- > 0;)
      for (std::size_t j = i + 1; j <= n; ++j)
        if (ways[j] && ring_.variable_index(name.substr(i, j - i))) {
          ways[i] = std::min(2, ways[i] + ways[j]);
          cut[i] = j;
        }
    if (ways[0] == 0) throw ParseError("unknown variable '" + name + "'");
    if (ways[0] > 1) throw ParseError("ambiguous product of variables '" + name + "'");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; i = cut[i]) out.push_back(*ring_.variable_index(name.substr(i, cut[i] - i)));
    return out;
  }

  const GradedRing& ring_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial GradedRing::parse(const std::string& text) const {
  return PolyParser(*this, text).parse();
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(GradedRing ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  normalize(ring_, terms_);
}

Polynomial Polynomial::from_sorted(GradedRing ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

std::optional<int> Polynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = terms_.front().mono.degree();
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = ring_.field().neg(t.coeff);
  return r;
}

namespace {

Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
  if (a.ring() != b.ring()) throw ArgumentError("ring mismatch in polynomial arithmetic");
  const GradedRing& ring = a.ring();
  const Field& k = ring.field();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  const auto& x = a.terms();
  const auto& y = b.terms();
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    int c = (i == x.size()) ? -1 : (j == y.size()) ? 1 : ring.compare(x[i].mono, y[j].mono);
    if (c > 0) {
      out.push_back(x[i++]);
    } else if (c < 0) {
      out.push_back(Term{y[j].mono, subtract ? k.neg(y[j].coeff) : y[j].coeff});
      ++j;
    } else {
      Scalar s = subtract ? k.sub(x[i].coeff, y[j].coeff) : k.add(x[i].coeff, y[j].coeff);
      if (!k.is_zero(s)) out.push_back(Term{x[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return Polynomial::from_sorted(ring, std::move(out));
}

}  // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.ring() != b.ring()) throw ArgumentError("ring mismatch in polynomial arithmetic");
  const Field& k = a.ring().field();
  std::vector<Term> prod;
  prod.reserve(a.size() * b.size());
  for (const auto& s : a.terms())
    for (const auto& t : b.terms()) prod.push_back(Term{s.mono * t.mono, k.mul(s.coeff, t.coeff)});
  return Polynomial(a.ring(), std::move(prod));
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  const Field& k = ring_.field();
  if (k.is_zero(c)) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{t.mono, k.mul(t.coeff, c)});
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Scalar& c) const {
  const Field& k = ring_.field();
  if (k.is_zero(c)) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{t.mono * m, k.mul(t.coeff, c)});
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = ring_.one();
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_.field().inv(terms_.front().coeff));
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw ArgumentError("division by the zero polynomial");
  if (a.ring() != b.ring()) throw ArgumentError("ring mismatch in division");
  const GradedRing& ring = a.ring();
  const Field& k = ring.field();
  Scalar lead_inv = k.inv(b.leading_term().coeff);
  const Monomial& lead = b.leading_term().mono;
  Polynomial rest = a;
  std::vector<Term> quotient;
  while (!rest.is_zero()) {
    const Term& t = rest.leading_term();
    if (!lead.divides(t.mono)) return std::nullopt;
    Term q{ring.quotient(t.mono, lead), k.mul(t.coeff, lead_inv)};
    rest = rest - b.times_monomial(q.mono, q.coeff);
    quotient.push_back(std::move(q));
  }
  return Polynomial::from_sorted(ring, std::move(quotient));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.ring_ != b.ring_ || a.terms_.size() != b.terms_.size()) return false;
  const Field& k = a.ring_.field();
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mono != b.terms_[i].mono) return false;
    if (!k.equal(a.terms_[i].coeff, b.terms_[i].coeff)) return false;
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const Field& k = ring_.field();
  const auto& names = ring_.variables();
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    int sgn = k.sign(t.coeff);
    Scalar mag = sgn < 0 ? k.neg(t.coeff) : t.coeff;
    if (sgn < 0) {
      os << "-";
    } else if (!first) {
      os << "+";
    }
    first = false;
    bool unit_coeff = k.is_one(mag);
    bool wrote = false;
    if (!unit_coeff || t.mono.is_one()) {
      os << k.to_string(mag);
      wrote = true;
    }
    for (std::size_t i = 0; i < names.size(); ++i) {
      int e = t.mono[i];
      if (e == 0) continue;
      if (wrote) os << "*";
      os << names[i];
      if (e > 1) os << "^" << e;
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace resint
