#include "resint/koszul.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "resint/error.hpp"

namespace resint {

struct KoszulData::Cache {
  std::mutex mu;
  std::map<int, GradedMap> cycles, homology;
  std::map<int, ModuleInvariants> cycle_inv, homology_inv;
};

namespace {

void subsets_rec(int n, int k, int start, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    subsets_rec(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

KoszulData::KoszulData(std::vector<Polynomial> f)
    : f_(std::move(f)),
      complex_(f_.empty() ? throw ArgumentError("empty sequence") : f_.front().ring()),
      ideal_(f_.front().ring(), f_),
      cache_(std::make_shared<Cache>()) {
  for (const auto& p : f_) {
    if (p.ring() != ring()) throw ArgumentError("sequence mixes rings");
    if (p.is_zero()) throw ArgumentError("Koszul sequence contains zero");
    if (!p.is_homogeneous()) throw ArgumentError(p.to_string() + " is not homogeneous");
  }
  const int r = length();
  for (int i = 0; i <= r; ++i) {
    std::vector<std::vector<int>> s;
    std::vector<int> cur;
    subsets_rec(r, i, 0, cur, s);
    Degrees deg;
    for (const auto& S : s) {
      int d = 0;
      for (int t : S) d += *f_[static_cast<std::size_t>(t)].degree();
      deg.push_back(d);
    }
    subsets_.push_back(std::move(s));
    complex_.modules.push_back(std::move(deg));
  }
  // d(e_S) = sum_k (-1)^k f_{s_k} e_{S \ s_k}
  for (int i = 1; i <= r; ++i) {
    const auto& src = subsets_[static_cast<std::size_t>(i)];
    const auto& tgt = subsets_[static_cast<std::size_t>(i - 1)];
    std::map<std::vector<int>, std::size_t> where;
    for (std::size_t a = 0; a < tgt.size(); ++a) where[tgt[a]] = a;
    GradedMap d(ring(), complex_.modules[static_cast<std::size_t>(i - 1)],
                complex_.modules[static_cast<std::size_t>(i)]);
    for (std::size_t b = 0; b < src.size(); ++b)
      for (std::size_t k = 0; k < src[b].size(); ++k) {
        std::vector<int> rest = src[b];
        rest.erase(rest.begin() + static_cast<long>(k));
        const Polynomial& fk = f_[static_cast<std::size_t>(src[b][k])];
        d.set(where.at(rest), b, k % 2 == 0 ? fk : -fk);
      }
    complex_.maps.push_back(std::move(d));
  }
}

const std::vector<std::vector<int>>& KoszulData::subsets(int i) const {
  check_index(i);
  return subsets_[static_cast<std::size_t>(i)];
}

void KoszulData::check_index(int i) const {
  if (i < 0 || i > length())
    throw ArgumentError("Koszul index " + std::to_string(i) + " out of range 0.." +
                        std::to_string(length()));
}

GradedMap KoszulData::cycles(int i) const {
  check_index(i);
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->cycles.find(i);
    if (it != cache_->cycles.end()) return it->second;
  }
  const GradedRing& R = ring();
  GradedMap pres(R, {}, {});
  if (i == 0) {
    pres = GradedMap(R, complex_.modules[0], {});
  } else {
    GradedMap z = syzygies(complex_.maps[static_cast<std::size_t>(i - 1)]);
    if (z.cols() > 0) pres = prune(syzygies(z));
  }
  std::lock_guard<std::mutex> lock(cache_->mu);
  return cache_->cycles.emplace(i, pres).first->second;
}

GradedMap KoszulData::homology(int i) const {
  check_index(i);
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->homology.find(i);
    if (it != cache_->homology.end()) return it->second;
  }
  const GradedRing& R = ring();
  const auto ui = static_cast<std::size_t>(i);
  GradedMap out = i == 0 ? GradedMap(R, {}, complex_.modules[0]) : complex_.maps[ui - 1];
  GradedMap in = i == length() ? GradedMap(R, complex_.modules[ui], {}) : complex_.maps[ui];
  GradedMap pres = resint::homology(out, in);
  std::lock_guard<std::mutex> lock(cache_->mu);
  return cache_->homology.emplace(i, pres).first->second;
}

const ModuleInvariants& KoszulData::cycle_invariants(int i) const {
  GradedMap p = cycles(i);
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->cycle_inv.find(i);
    if (it != cache_->cycle_inv.end()) return it->second;
  }
  ModuleInvariants inv = invariants(p);
  std::lock_guard<std::mutex> lock(cache_->mu);
  return cache_->cycle_inv.emplace(i, std::move(inv)).first->second;
}

const ModuleInvariants& KoszulData::homology_invariants(int i) const {
  GradedMap p = homology(i);
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->homology_inv.find(i);
    if (it != cache_->homology_inv.end()) return it->second;
  }
  ModuleInvariants inv = invariants(p);
  std::lock_guard<std::mutex> lock(cache_->mu);
  return cache_->homology_inv.emplace(i, std::move(inv)).first->second;
}

// ---------------------------------------------------------------- conditions

namespace {

int proper_grade(const KoszulData& K) {
  auto g = K.grade();
  if (!g) throw HypothesisError("the ideal is the unit ideal");
  return *g;
}

DepthEntry entry(int i, const ModuleInvariants& inv, int threshold) {
  DepthEntry e;
  e.index = i;
  e.depth = inv.depth;
  e.threshold = threshold;
  e.pass = !inv.depth || *inv.depth >= threshold;
  return e;
}

}  // namespace

ConditionReport check_sd(const KoszulData& K, int k, std::optional<int> t) {
  const int g = proper_grade(K);
  const int r = K.length();
  const int d = static_cast<int>(K.ring().num_variables());
  const int level = t.value_or(r - g);
  ConditionReport rep{"SD", k, level, true, {}};
  for (int i = std::max(0, r - g - level); i <= r; ++i) {
    auto e = entry(i, K.homology_invariants(i), std::min(d - g, d - r + i + k));
    rep.holds = rep.holds && e.pass;
    rep.entries.push_back(e);
  }
  return rep;
}

ConditionReport check_sdc(const KoszulData& K, int k, int t) {
  const int g = proper_grade(K);
  const int r = K.length();
  const int d = static_cast<int>(K.ring().num_variables());
  ConditionReport rep{"SDC", k, t, true, {}};
  for (int i = std::max(0, r - g - t); i <= r - g; ++i) {
    auto e = entry(i, K.cycle_invariants(i), std::min({d - r + i + k, d - g + 2, d}));
    rep.holds = rep.holds && e.pass;
    rep.entries.push_back(e);
  }
  return rep;
}

ConditionReport check_scm(const KoszulData& K) {
  proper_grade(K);
  ConditionReport rep{"SCM", 0, std::nullopt, true, {}};
  for (int i = 0; i <= K.length(); ++i) {
    const auto& inv = K.homology_invariants(i);
    DepthEntry e;
    e.index = i;
    e.depth = inv.depth;
    e.threshold = inv.dimension;
    e.pass = inv.zero || inv.cohen_macaulay;
    rep.holds = rep.holds && e.pass;
    rep.entries.push_back(e);
  }
  return rep;
}

namespace {

FittingReport fitting_check(const GradedIdeal& I, int s, bool minus) {
  if (s < 1) throw ArgumentError("G_s needs s >= 1");
  FittingReport rep{minus ? "G-_s" : "G_s", s, true, {}};
  auto gens = I.minimal_generators();
  GradedIdeal m(I.ring(), gens);
  GradedMap phi = syzygies(m.as_row());
  const int last = minus ? s : s - 1;
  for (int j = 1; j <= last; ++j) {
    FittingEntry e;
    e.index = j;
    e.required = minus ? j : j + 1;
    e.height = fitting_ideal(phi, j).height();
    e.pass = !e.height || *e.height >= e.required;
    rep.holds = rep.holds && e.pass;
    rep.entries.push_back(e);
  }
  return rep;
}

}  // namespace

FittingReport check_gs(const GradedIdeal& I, int s) { return fitting_check(I, s, false); }
FittingReport check_gs_minus(const GradedIdeal& I, int s) { return fitting_check(I, s, true); }

ZtopReport classify_depth_ztop(const KoszulData& K) {
  const int g = proper_grade(K);
  const int r = K.length();
  const int d = static_cast<int>(K.ring().num_variables());
  ZtopReport rep;
  rep.index = r - g;
  rep.depth = K.cycle_invariants(r - g).depth;
  if (g == 1 || r == g) {
    rep.case_label = "1";
    rep.expected = d;
  } else if (g >= 2 && r > g && invariants(K.ideal()).cohen_macaulay) {
    rep.case_label = "3";
    rep.expected = d - g + 2;
  } else {
    rep.case_label = "untested hypothesis";
  }
  if (rep.expected) rep.consistent = rep.depth && *rep.depth == *rep.expected;
  return rep;
}

}  // namespace resint
