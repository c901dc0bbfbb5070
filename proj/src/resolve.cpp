#include "resint/resolve.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

#include "resint/error.hpp"

namespace resint {

BettiTable::BettiTable(const std::vector<Degrees>& modules) {
  for (std::size_t i = 0; i < modules.size(); ++i)
    for (int d : modules[i]) ++entries_[{static_cast<int>(i), d}];
}

std::size_t BettiTable::operator()(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

std::size_t BettiTable::total(int i) const {
  std::size_t t = 0;
  for (const auto& [k, v] : entries_)
    if (k.first == i) t += v;
  return t;
}

int BettiTable::regularity() const {
  if (entries_.empty()) throw ArgumentError("regularity of the zero module");
  int r = INT_MIN;
  for (const auto& [k, v] : entries_) r = std::max(r, k.second - k.first);
  return r;
}

int BettiTable::length() const {
  int l = -1;
  for (const auto& [k, v] : entries_) l = std::max(l, k.first);
  return l;
}

std::string BettiTable::to_string() const {
  if (entries_.empty()) return "(zero module)\n";
  int lo = INT_MAX, hi = INT_MIN;
  for (const auto& [k, v] : entries_) {
    lo = std::min(lo, k.second - k.first);
    hi = std::max(hi, k.second - k.first);
  }
  const int len = length();
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head{""}, tot{"total:"};
  for (int i = 0; i <= len; ++i) {
    head.push_back(std::to_string(i));
    tot.push_back(std::to_string(total(i)));
  }
  cells.push_back(head);
  cells.push_back(tot);
  for (int r = lo; r <= hi; ++r) {
    std::vector<std::string> row{std::to_string(r) + ":"};
    for (int i = 0; i <= len; ++i) {
      auto v = (*this)(i, i + r);
      row.push_back(v ? std::to_string(v) : ".");
    }
    cells.push_back(row);
  }
  std::vector<std::size_t> width(static_cast<std::size_t>(len) + 2, 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream os;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << std::string(width[c] - row[c].size(), ' ') << row[c];
      if (c + 1 < row.size()) os << ' ';
    }
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------- complexes

bool FreeComplex::is_complex() const {
  if (modules.empty()) return maps.empty();
  if (maps.size() + 1 != modules.size()) return false;
  for (std::size_t k = 0; k < maps.size(); ++k)
    if (maps[k].target() != modules[k] || maps[k].source() != modules[k + 1]) return false;
  for (std::size_t k = 0; k + 1 < maps.size(); ++k)
    if (!(maps[k] * maps[k + 1]).is_zero()) return false;
  return true;
}

namespace {

std::vector<std::size_t> all_but(std::size_t n, std::size_t skip) {
  std::vector<std::size_t> v;
  for (std::size_t i = 0; i < n; ++i)
    if (i != skip) v.push_back(i);
  return v;
}

// Splits off the unit u = maps[k](a, b).
void cancel(FreeComplex& c, std::size_t k, std::size_t a, std::size_t b) {
  GradedMap& d = c.maps[k];
  const Field& K = c.ring.field();
  Scalar inv = K.inv(d.at(a, b).leading_term().coeff);
  GradedMap nd = d;
  for (std::size_t r = 0; r < d.rows(); ++r) {
    if (r == a || d.at(r, b).is_zero()) continue;
    Polynomial f = d.at(r, b).scaled(inv);
    for (std::size_t col = 0; col < d.cols(); ++col) {
      if (col == b || d.at(a, col).is_zero()) continue;
      nd.set(r, col, nd.at(r, col) - f * d.at(a, col));
    }
  }
  d = nd.select_rows(all_but(d.rows(), a)).select_columns(all_but(d.cols(), b));
  if (k + 1 < c.maps.size()) c.maps[k + 1] = c.maps[k + 1].select_rows(all_but(c.maps[k + 1].rows(), b));
  if (k > 0) c.maps[k - 1] = c.maps[k - 1].select_columns(all_but(c.maps[k - 1].cols(), a));
  c.modules[k].erase(c.modules[k].begin() + static_cast<long>(a));
  c.modules[k + 1].erase(c.modules[k + 1].begin() + static_cast<long>(b));
}

bool cancel_one(FreeComplex& c) {
  for (std::size_t k = 0; k < c.maps.size(); ++k) {
    const GradedMap& d = c.maps[k];
    for (std::size_t a = 0; a < d.rows(); ++a)
      for (std::size_t b = 0; b < d.cols(); ++b)
        if (d.at(a, b).is_unit()) {
          cancel(c, k, a, b);
          return true;
        }
  }
  return false;
}

}  // namespace

void FreeComplex::minimize() {
  while (cancel_one(*this)) {
  }
}

void FreeComplex::trim() {
  while (modules.size() > 1 && modules.back().empty()) {
    modules.pop_back();
    maps.pop_back();
  }
}

GradedMap prune(const GradedMap& presentation) {
  GradedMap p = presentation;
  while (true) {
    p = Submodule(p).minimal_generators();
    FreeComplex c(p.ring());
    c.modules = {p.target(), p.source()};
    c.maps = {p};
    if (!cancel_one(c)) return p;
    while (cancel_one(c)) {
    }
    p = c.maps[0];
  }
}

FreeComplex resolve(const GradedMap& presentation) {
  const GradedRing& R = presentation.ring();
  GradedMap p = prune(presentation);
  FreeComplex c(R);
  c.modules.push_back(p.target());
  if (p.target().empty()) return c;
  c.modules.push_back(p.source());
  c.maps.push_back(p);
  const std::size_t limit = R.num_variables() + 2;
  while (!c.modules.back().empty()) {
    if (c.maps.size() > limit) throw std::logic_error("resolution longer than the number of variables");
    GradedMap s = syzygies(c.maps.back());
    c.modules.push_back(s.source());
    c.maps.push_back(std::move(s));
  }
  c.trim();
  return c;
}

FreeComplex resolve(const GradedIdeal& ideal) { return resolve(ideal.as_row()); }

GradedMap homology(const GradedMap& a, const GradedMap& b) {
  if (a.source() != b.target()) throw ArgumentError("homology needs composable maps");
  const GradedRing& R = a.ring();
  GradedMap z = syzygies(a);
  if (z.cols() == 0) return GradedMap(R, {}, {});
  GradedMap s = syzygies(GradedMap::concat(z, b));
  std::vector<std::size_t> rows(z.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  GradedMap rel = s.select_rows(rows);
  return prune(rel);
}

GradedMap ext(const GradedMap& presentation, int i) {
  const GradedRing& R = presentation.ring();
  if (i < 0) return GradedMap(R, {}, {});
  FreeComplex c = resolve(presentation);
  auto ui = static_cast<std::size_t>(i);
  if (ui >= c.modules.size()) return GradedMap(R, {}, {});
  Degrees dual_i;
  for (int d : c.modules[ui]) dual_i.push_back(-d);
  GradedMap a = ui < c.maps.size() ? c.maps[ui].dual() : GradedMap(R, {}, dual_i);
  GradedMap b = ui >= 1 ? c.maps[ui - 1].dual() : GradedMap(R, dual_i, {});
  return homology(a, b);
}

HilbertSeries hilbert_series(const GradedMap& presentation) {
  return Submodule(presentation).quotient_hilbert_series();
}

ModuleInvariants invariants(const GradedMap& presentation) {
  ModuleInvariants inv;
  FreeComplex c = resolve(presentation);
  inv.betti = c.betti();
  if (c.modules[0].empty()) {
    inv.zero = true;
    return inv;
  }
  const int n = static_cast<int>(presentation.ring().num_variables());
  inv.dimension = Submodule(presentation).quotient_dimension();
  inv.projective_dimension = static_cast<int>(c.modules.size()) - 1;
  inv.depth = n - inv.projective_dimension;
  inv.regularity = inv.betti.regularity();
  inv.cohen_macaulay = *inv.depth == inv.dimension;
  return inv;
}

ModuleInvariants invariants(const GradedIdeal& ideal) { return invariants(ideal.as_row()); }

std::string depth_to_string(const std::optional<int>& d) {
  return d ? std::to_string(*d) : std::string("inf");
}

}  // namespace resint
