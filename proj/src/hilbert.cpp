#include "resint/hilbert.hpp"

#include <algorithm>
#include <sstream>

#include "resint/error.hpp"

namespace resint {

namespace {

using Poly = std::map<int, std::int64_t>;

void add_into(Poly& a, const Poly& b, int shift, std::int64_t sign) {
  for (const auto& [e, c] : b) {
    auto& slot = a[e + shift];
    slot += sign * c;
    if (slot == 0) a.erase(e + shift);
  }
}

int weighted_degree(const std::array<int, kMaxVariables>& e, const std::vector<int>& w) {
  int d = 0;
  for (std::size_t i = 0; i < w.size(); ++i) d += e[i] * w[i];
  return d;
}

using Exps = std::array<int, kMaxVariables>;

bool divides(const Exps& a, const Exps& b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

void minimalize(std::vector<Exps>& g, std::size_t n) {
  std::sort(g.begin(), g.end(), [&](const Exps& a, const Exps& b) {
    int sa = 0, sb = 0;
    for (std::size_t i = 0; i < n; ++i) sa += a[i], sb += b[i];
    if (sa != sb) return sa < sb;
    return a < b;
  });
  g.erase(std::unique(g.begin(), g.end()), g.end());
  std::vector<Exps> out;
  for (const auto& m : g) {
    bool red = false;
    for (const auto& o : out)
      if (divides(o, m, n)) {
        red = true;
        break;
      }
    if (!red) out.push_back(m);
  }
  g.swap(out);
}

// Numerator of HS(R/M), M minimal generators g.
Poly hs_numerator(std::vector<Exps> g, const std::vector<int>& w) {
  const std::size_t n = w.size();
  Poly result;
  if (g.empty()) {
    result[0] = 1;
    return result;
  }
  for (const auto& m : g)
    if (std::all_of(m.begin(), m.begin() + static_cast<long>(n), [](int e) { return e == 0; }))
      return result;
  // Pairwise coprime generators: product of (1 - t^deg).
  std::array<int, kMaxVariables> count{};
  for (const auto& m : g)
    for (std::size_t i = 0; i < n; ++i)
      if (m[i]) ++count[i];
  std::size_t pivot = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (count[i] > count[pivot]) pivot = i;
  if (count[pivot] <= 1) {
    result[0] = 1;
    for (const auto& m : g) {
      Poly next = result;
      add_into(next, result, weighted_degree(m, w), -1);
      result.swap(next);
    }
    return result;
  }
  // Pivot x^e with e the smallest positive exponent of the busiest variable.
  // N(M) = N(M + x^e) + t^{e w} N(M : x^e)
  int e = 0;
  for (const auto& m : g)
    if (m[pivot] && (e == 0 || m[pivot] < e)) e = m[pivot];
  std::vector<Exps> plus, colon;
  Exps p{};
  p[pivot] = e;
  plus.push_back(p);
  for (const auto& m : g) {
    if (m[pivot] < e) plus.push_back(m);
    Exps c = m;
    c[pivot] = std::max(0, c[pivot] - e);
    colon.push_back(c);
  }
  minimalize(plus, n);
  minimalize(colon, n);
  result = hs_numerator(std::move(plus), w);
  add_into(result, hs_numerator(std::move(colon), w), e * w[pivot], 1);
  return result;
}

}  // namespace

HilbertSeries::HilbertSeries(std::vector<int> weights, std::map<int, std::int64_t> numerator)
    : weights_(std::move(weights)) {
  for (const auto& [e, c] : numerator)
    if (c != 0) num_[e] = c;
}

HilbertSeries HilbertSeries::of_monomial_quotient(const std::vector<Monomial>& gens,
                                                  const std::vector<int>& weights) {
  std::vector<Exps> g;
  for (const auto& m : gens) {
    Exps e{};
    for (std::size_t i = 0; i < weights.size(); ++i) e[i] = m[i];
    g.push_back(e);
  }
  minimalize(g, weights.size());
  return HilbertSeries(weights, hs_numerator(std::move(g), weights));
}

std::int64_t HilbertSeries::coefficient(int d) const { return coefficients(d, d)[0]; }

std::vector<std::int64_t> HilbertSeries::coefficients(int lo, int hi) const {
  std::vector<std::int64_t> out(static_cast<std::size_t>(std::max(0, hi - lo + 1)), 0);
  if (num_.empty() || hi < lo) return out;
  int lowest = num_.begin()->first;
  int span = hi - lowest;
  if (span < 0) return out;
  // number of monomials of each weighted degree 0..span
  std::vector<std::int64_t> mons(static_cast<std::size_t>(span) + 1, 0);
  mons[0] = 1;
  for (int w : weights_)
    for (int k = w; k <= span; ++k) mons[static_cast<std::size_t>(k)] += mons[static_cast<std::size_t>(k - w)];
  for (int d = lo; d <= hi; ++d) {
    std::int64_t s = 0;
    for (const auto& [e, c] : num_) {
      if (e > d) break;
      s += c * mons[static_cast<std::size_t>(d - e)];
    }
    out[static_cast<std::size_t>(d - lo)] = s;
  }
  return out;
}

int HilbertSeries::initial_degree() const {
  if (num_.empty()) throw ArgumentError("initial degree of the zero module");
  return num_.begin()->first;
}

HilbertSeries HilbertSeries::shifted(int k) const {
  HilbertSeries h(weights_);
  for (const auto& [e, c] : num_) h.num_[e + k] = c;
  return h;
}

HilbertSeries operator+(const HilbertSeries& a, const HilbertSeries& b) {
  if (a.weights_ != b.weights_ && !a.num_.empty() && !b.num_.empty())
    throw ArgumentError("Hilbert series over different rings");
  HilbertSeries h = a.num_.empty() ? HilbertSeries(b.weights_) : HilbertSeries(a.weights_);
  h.num_ = a.num_;
  add_into(h.num_, b.num_, 0, 1);
  return h;
}

HilbertSeries operator-(const HilbertSeries& a, const HilbertSeries& b) {
  if (a.weights_ != b.weights_ && !a.num_.empty() && !b.num_.empty())
    throw ArgumentError("Hilbert series over different rings");
  HilbertSeries h = a.num_.empty() ? HilbertSeries(b.weights_) : HilbertSeries(a.weights_);
  h.num_ = a.num_;
  add_into(h.num_, b.num_, 0, -1);
  return h;
}

std::string HilbertSeries::to_string() const {
  std::ostringstream os;
  if (num_.empty()) return "0";
  bool first = true;
  os << "(";
  for (const auto& [e, c] : num_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    std::int64_t a = c < 0 ? -c : c;
    if (e == 0) os << a;
    else {
      if (a != 1) os << a << "*";
      os << "t";
      if (e != 1) os << "^" << (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
    }
  }
  os << ")/(";
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    os << (i ? "*" : "") << "(1-t";
    if (weights_[i] != 1) os << "^" << weights_[i];
    os << ")";
  }
  os << ")";
  return os.str();
}

int monomial_quotient_dimension(const std::vector<Monomial>& gens, std::size_t n) {
  std::vector<std::uint32_t> supports;
  for (const auto& m : gens) {
    if (m.is_one()) return -1;
    supports.push_back(m.support());
  }
  std::sort(supports.begin(), supports.end());
  supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
  int best = 0;
  const std::uint32_t full = n == 32 ? ~0u : ((1u << n) - 1);
  for (std::uint32_t s = 0; s <= full; ++s) {
    int c = __builtin_popcount(s);
    if (c <= best) continue;
    bool ok = true;
    for (auto g : supports)
      if ((g & ~s) == 0) {
        ok = false;
        break;
      }
    if (ok) best = c;
    if (s == full) break;
  }
  return best;
}

}  // namespace resint
