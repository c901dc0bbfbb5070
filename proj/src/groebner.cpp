#include "resint/groebner.hpp"

#include <algorithm>
#include <cstdio>
#include <mutex>

#include "gb_engine.hpp"
#include "resint/error.hpp"

namespace resint {

using detail::GBEngine;
using detail::ModuleOrder;
using detail::ModVec;

struct Submodule::Impl {
  GradedMap gens;
  std::once_flag once;
  std::unique_ptr<GBEngine> engine;
  explicit Impl(GradedMap g) : gens(std::move(g)) {}
};

Submodule::Submodule(GradedMap generators) : impl_(std::make_shared<Impl>(std::move(generators))) {}

const GradedRing& Submodule::ring() const { return impl_->gens.ring(); }
const GradedMap& Submodule::generators() const { return impl_->gens; }

Submodule::Impl& Submodule::ready() const {
  std::call_once(impl_->once, [this] {
    const GradedMap& g = impl_->gens;
    auto eng = std::make_unique<GBEngine>(ModuleOrder(g.ring(), g.target()));
    for (std::size_t j = 0; j < g.cols(); ++j)
      eng->add_input(detail::to_modvec(eng->order(), g.column(j)));
    eng->run();
    impl_->engine = std::move(eng);
  });
  return *impl_;
}

GradedMap Submodule::groebner_basis() const {
  const auto& eng = *ready().engine;
  std::vector<std::vector<Polynomial>> cols;
  for (const auto& v : eng.basis()) cols.push_back(detail::from_modvec(eng.order(), v));
  return GradedMap::from_columns(ring(), ambient(), cols);
}

std::vector<Monomial> Submodule::leading_monomials(std::size_t c) const {
  std::vector<Monomial> out;
  for (const auto& v : ready().engine->basis())
    if (v.front().comp == c) out.push_back(v.front().mono);
  return out;
}

std::vector<std::size_t> Submodule::minimal_generator_indices() const {
  const auto& flags = ready().engine->input_is_minimal();
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < flags.size(); ++j)
    if (flags[j]) out.push_back(j);
  return out;
}

GradedMap Submodule::minimal_generators() const {
  return generators().select_columns(minimal_generator_indices());
}

std::vector<Polynomial> Submodule::normal_form(const std::vector<Polynomial>& v) const {
  const auto& eng = *ready().engine;
  return detail::from_modvec(eng.order(), eng.reduce(detail::to_modvec(eng.order(), v)));
}

bool Submodule::contains(const std::vector<Polynomial>& v) const {
  const auto& eng = *ready().engine;
  return eng.reduce(detail::to_modvec(eng.order(), v)).empty();
}

bool Submodule::contains(const GradedMap& m) const {
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!contains(m.column(j))) return false;
  return true;
}

HilbertSeries Submodule::quotient_hilbert_series() const {
  HilbertSeries h(ring().weights());
  for (std::size_t c = 0; c < ambient().size(); ++c)
    h = h + HilbertSeries::of_monomial_quotient(leading_monomials(c), ring().weights())
                .shifted(ambient()[c]);
  return h;
}

int Submodule::quotient_dimension() const {
  int d = -1;
  for (std::size_t c = 0; c < ambient().size(); ++c)
    d = std::max(d, monomial_quotient_dimension(leading_monomials(c), ring().num_variables()));
  return d;
}

// ---------------------------------------------------------------- ideals

GradedIdeal::GradedIdeal(GradedRing ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)) {
  for (auto& g : generators) {
    if (g.ring() != ring_) throw ArgumentError("generator from another ring");
    if (g.is_zero()) continue;
    if (!g.is_homogeneous())
      throw ArgumentError("generator " + g.to_string() + " is not homogeneous");
    gens_.push_back(std::move(g));
  }
  sub_ = std::make_shared<Submodule>(as_row());
}

GradedIdeal GradedIdeal::unit(const GradedRing& ring) { return GradedIdeal(ring, {ring.one()}); }
GradedIdeal GradedIdeal::zero(const GradedRing& ring) { return GradedIdeal(ring, {}); }

GradedMap GradedIdeal::as_row() const {
  Degrees src;
  for (const auto& g : gens_) src.push_back(*g.degree());
  return GradedMap(ring_, {0}, src, gens_);
}

std::vector<Polynomial> GradedIdeal::groebner_basis() const {
  GradedMap g = sub_->groebner_basis();
  std::vector<Polynomial> out;
  for (std::size_t j = 0; j < g.cols(); ++j) out.push_back(g.at(0, j));
  return out;
}

std::vector<Monomial> GradedIdeal::leading_monomials() const { return sub_->leading_monomials(0); }

std::vector<Polynomial> GradedIdeal::minimal_generators() const {
  std::vector<Polynomial> out;
  for (auto j : sub_->minimal_generator_indices()) out.push_back(gens_[j]);
  return out;
}

Polynomial GradedIdeal::normal_form(const Polynomial& f) const {
  if (f.ring() != ring_) throw ArgumentError("polynomial from another ring");
  return sub_->normal_form({f})[0];
}

bool GradedIdeal::contains(const Polynomial& f) const {
  if (f.is_zero()) return true;
  if (!f.is_homogeneous()) {
    // split into homogeneous parts
    std::map<int, std::vector<Term>> parts;
    for (const auto& t : f.terms()) parts[t.mono.degree()].push_back(t);
    for (auto& [d, ts] : parts)
      if (!contains(Polynomial(ring_, ts))) return false;
    return true;
  }
  return normal_form(f).is_zero();
}

bool GradedIdeal::contains(const GradedIdeal& other) const {
  for (const auto& g : other.gens_)
    if (!contains(g)) return false;
  return true;
}

bool operator==(const GradedIdeal& a, const GradedIdeal& b) {
  return a.ring_ == b.ring_ && a.contains(b) && b.contains(a);
}

bool GradedIdeal::is_unit() const {
  for (const auto& m : leading_monomials())
    if (m.is_one()) return true;
  return false;
}

HilbertSeries GradedIdeal::hilbert_series() const { return sub_->quotient_hilbert_series(); }

int GradedIdeal::dimension() const { return sub_->quotient_dimension(); }

std::optional<int> GradedIdeal::height() const {
  int d = dimension();
  if (d < 0) return std::nullopt;
  return static_cast<int>(ring_.num_variables()) - d;
}

std::int64_t GradedIdeal::dimension_in_degree(int d) const {
  HilbertSeries full = HilbertSeries::of_monomial_quotient({}, ring_.weights());
  return full.coefficient(d) - hilbert_series().coefficient(d);
}

std::string GradedIdeal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + gens_[i].to_string();
  return s + ")";
}

std::uint64_t GradedIdeal::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto feed = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
  };
  feed(ring_.describe());
  for (const auto& g : groebner_basis()) {
    feed(g.to_string());
    feed(";");
  }
  return h;
}

std::string GradedIdeal::hash_hex() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash()));
  return buf;
}

// ---------------------------------------------------------------- operations

namespace {

void same_ring(const GradedIdeal& a, const GradedIdeal& b) {
  if (a.ring() != b.ring()) throw ArgumentError("ideals live in different rings");
}

// Elements of the reduced basis of an elimination engine whose leading term
// lies in block 0, restricted to the given components.
std::vector<std::vector<Polynomial>> lower_block(const GBEngine& eng,
                                                 const std::vector<std::uint32_t>& comps) {
  std::vector<std::vector<Polynomial>> out;
  for (const auto& v : eng.basis()) {
    if (eng.order().block(v.front().comp) != 0) continue;
    auto full = detail::from_modvec(eng.order(), v);
    std::vector<Polynomial> part;
    for (auto c : comps) part.push_back(full[c]);
    out.push_back(std::move(part));
  }
  return out;
}

}  // namespace

GradedIdeal ideal_sum(const GradedIdeal& a, const GradedIdeal& b) {
  same_ring(a, b);
  auto g = a.generators();
  g.insert(g.end(), b.generators().begin(), b.generators().end());
  return GradedIdeal(a.ring(), g);
}

GradedIdeal ideal_product(const GradedIdeal& a, const GradedIdeal& b) {
  same_ring(a, b);
  std::vector<Polynomial> g;
  for (const auto& x : a.minimal_generators())
    for (const auto& y : b.minimal_generators()) g.push_back(x * y);
  return GradedIdeal(a.ring(), g);
}

GradedIdeal ideal_power(const GradedIdeal& a, unsigned k) {
  GradedIdeal p = GradedIdeal::unit(a.ring());
  for (unsigned i = 0; i < k; ++i) p = GradedIdeal(a.ring(), ideal_product(p, a).minimal_generators());
  return p;
}

GradedIdeal intersect(const GradedIdeal& a, const GradedIdeal& b) {
  same_ring(a, b);
  const GradedRing& R = a.ring();
  if (a.is_zero() || b.is_zero()) return GradedIdeal::zero(R);
  ModuleOrder ord(R, {0, 0, 0}, {1, 1, 0});
  GBEngine eng(ord);
  for (const auto& f : a.generators()) eng.add_input(detail::to_modvec(ord, {f, R.zero(), R.zero()}));
  for (const auto& g : b.generators()) eng.add_input(detail::to_modvec(ord, {R.zero(), g, R.zero()}));
  eng.add_input(detail::to_modvec(ord, {R.one(), R.one(), R.one()}));
  eng.run();
  std::vector<Polynomial> gens;
  for (auto& v : lower_block(eng, {2})) gens.push_back(std::move(v[0]));
  return GradedIdeal(R, GradedIdeal(R, gens).minimal_generators());
}

GradedIdeal quotient(const GradedIdeal& a, const Polynomial& f) {
  const GradedRing& R = a.ring();
  if (f.ring() != R) throw ArgumentError("polynomial from another ring");
  if (f.is_zero() || a.contains(f)) return GradedIdeal::unit(R);
  std::vector<Polynomial> gens;
  GradedIdeal both = intersect(a, GradedIdeal(R, {f}));
  for (const auto& g : both.generators()) {
    auto q = Polynomial::divide_exact(g, f);
    if (!q) throw std::logic_error("intersection element not divisible by f");
    gens.push_back(std::move(*q));
  }
  return GradedIdeal(R, gens);
}

GradedIdeal quotient(const GradedIdeal& a, const GradedIdeal& i) {
  same_ring(a, i);
  const GradedRing& R = a.ring();
  GradedIdeal j = GradedIdeal::unit(R);
  for (const auto& f : i.minimal_generators()) {
    GradedIdeal q = quotient(a, f);
    j = j.is_unit() ? q : intersect(j, q);
  }
  return j;
}

GradedIdeal quotient_by_elimination(const GradedIdeal& a, const GradedIdeal& i) {
  same_ring(a, i);
  const GradedRing& R = a.ring();
  auto fs = i.minimal_generators();
  if (fs.empty() || a.is_unit()) return GradedIdeal::unit(R);
  // In R^{r+1}: the module a*R^r + R*(f_1,..,f_r,1); eliminate the first r
  // coordinates and read x from the last one.
  const std::size_t r = fs.size();
  Degrees tw(r + 1, 0);
  std::vector<int> blocks(r + 1, 1);
  blocks[r] = 0;
  for (std::size_t k = 0; k < r; ++k) tw[k] = -*fs[k].degree();
  ModuleOrder ord(R, tw, blocks);
  GBEngine eng(ord);
  std::vector<Polynomial> v(r + 1, R.zero());
  for (std::size_t k = 0; k < r; ++k) v[k] = fs[k];
  v[r] = R.one();
  eng.add_input(detail::to_modvec(ord, v));
  for (std::size_t k = 0; k < r; ++k)
    for (const auto& g : a.minimal_generators()) {
      std::vector<Polynomial> w(r + 1, R.zero());
      w[k] = g;
      eng.add_input(detail::to_modvec(ord, w));
    }
  eng.run();
  std::vector<Polynomial> gens;
  for (auto& x : lower_block(eng, {static_cast<std::uint32_t>(r)})) gens.push_back(std::move(x[0]));
  return GradedIdeal(R, GradedIdeal(R, gens).minimal_generators());
}

Polynomial determinant(const std::vector<Polynomial>& m, std::size_t k) {
  if (m.size() != k * k) throw ArgumentError("determinant needs a square matrix");
  if (k == 0) throw ArgumentError("determinant of an empty matrix");
  const GradedRing& R = m[0].ring();
  // dp[mask] = minor on rows 0..|mask|-1 and the columns in mask
  std::vector<Polynomial> dp(std::size_t{1} << k, R.zero());
  dp[0] = R.one();
  for (std::size_t mask = 1; mask < dp.size(); ++mask) {
    std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask)) - 1;
    Polynomial s = R.zero();
    int sign = 1;
    // expand along the last row: columns in increasing order
    int pos = 0;
    for (std::size_t c = 0; c < k; ++c) {
      if (!(mask >> c & 1)) continue;
      const Polynomial& e = m[row * k + c];
      std::size_t rest = mask & ~(std::size_t{1} << c);
      int cnt = __builtin_popcountll(mask) - 1;
      sign = ((cnt - pos) % 2 == 0) ? 1 : -1;
      ++pos;
      if (e.is_zero() || dp[rest].is_zero()) continue;
      Polynomial t = e * dp[rest];
      s = sign > 0 ? s + t : s - t;
    }
    dp[mask] = std::move(s);
  }
  return dp.back();
}

GradedIdeal minors_ideal(const GradedMap& m, int k) {
  const GradedRing& R = m.ring();
  if (k <= 0) return GradedIdeal::unit(R);
  auto uk = static_cast<std::size_t>(k);
  if (uk > m.rows() || uk > m.cols()) return GradedIdeal::zero(R);
  auto subsets = [](std::size_t n, std::size_t r) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur(r);
    for (std::size_t i = 0; i < r; ++i) cur[i] = i;
    while (true) {
      out.push_back(cur);
      std::size_t i = r;
      while (i > 0 && cur[i - 1] == n - r + i - 1) --i;
      if (i == 0) break;
      ++cur[i - 1];
      for (std::size_t j = i; j < r; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
  };
  std::vector<Polynomial> gens;
  for (const auto& rs : subsets(m.rows(), uk))
    for (const auto& cs : subsets(m.cols(), uk)) {
      std::vector<Polynomial> sq;
      for (auto i : rs)
        for (auto j : cs) sq.push_back(m.at(i, j));
      Polynomial d = determinant(sq, uk);
      if (!d.is_zero()) gens.push_back(std::move(d));
    }
  return GradedIdeal(R, gens);
}

GradedIdeal fitting_ideal(const GradedMap& psi, int i) {
  if (i < 0) throw ArgumentError("Fitting index must be nonnegative");
  return minors_ideal(psi, static_cast<int>(psi.rows()) - i);
}

namespace {

// Engine on F0 (+) F1 with F0 = target of m (block 1) and F1 = source of m
// (block 0), fed with (col_j, e_j).
std::unique_ptr<GBEngine> elimination_engine(const GradedMap& m) {
  Degrees tw = m.target();
  tw.insert(tw.end(), m.source().begin(), m.source().end());
  std::vector<int> blocks(m.rows(), 1);
  blocks.resize(tw.size(), 0);
  auto eng = std::make_unique<GBEngine>(ModuleOrder(m.ring(), tw, blocks));
  for (std::size_t j = 0; j < m.cols(); ++j) {
    auto v = m.column(j);
    for (std::size_t k = 0; k < m.cols(); ++k) v.push_back(k == j ? m.ring().one() : m.ring().zero());
    eng->add_input(detail::to_modvec(eng->order(), v));
  }
  eng->run();
  return eng;
}

}  // namespace

GradedMap syzygies(const GradedMap& m) {
  const GradedRing& R = m.ring();
  if (m.cols() == 0) return GradedMap(R, {}, {});
  auto eng = elimination_engine(m);
  std::vector<std::uint32_t> comps;
  for (std::size_t k = 0; k < m.cols(); ++k) comps.push_back(static_cast<std::uint32_t>(m.rows() + k));
  auto cols = lower_block(*eng, comps);
  GradedMap all = GradedMap::from_columns(R, m.source(), cols);
  return Submodule(all).minimal_generators();
}

std::optional<GradedMap> lift(const GradedMap& m, const GradedMap& v) {
  if (m.target() != v.target()) throw ArgumentError("lift needs a common target");
  const GradedRing& R = m.ring();
  GradedMap x(R, m.source(), v.source());
  if (v.cols() == 0) return x;
  if (m.cols() == 0) {
    if (!v.is_zero()) return std::nullopt;
    return x;
  }
  auto eng = elimination_engine(m);
  for (std::size_t j = 0; j < v.cols(); ++j) {
    auto col = v.column(j);
    col.resize(m.rows() + m.cols(), R.zero());
    auto red = detail::from_modvec(eng->order(), eng->reduce(detail::to_modvec(eng->order(), col)));
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (!red[i].is_zero()) return std::nullopt;
    for (std::size_t k = 0; k < m.cols(); ++k) x.set(k, j, -red[m.rows() + k]);
  }
  return x;
}

}  // namespace resint
