#include "gb_engine.hpp"

#include <algorithm>
#include <numeric>

#include "resint/budget.hpp"
#include "resint/error.hpp"

namespace resint::detail {

ModuleOrder::ModuleOrder(GradedRing ring, Degrees twists, std::vector<int> blocks)
    : ring_(std::move(ring)), twists_(std::move(twists)), blocks_(std::move(blocks)) {
  if (blocks_.empty()) blocks_.assign(twists_.size(), 0);
  if (blocks_.size() != twists_.size()) throw ArgumentError("block list has wrong length");
}

int ModuleOrder::compare(const Monomial& a, std::uint32_t ca, const Monomial& b,
                         std::uint32_t cb) const {
  if (blocks_[ca] != blocks_[cb]) return blocks_[ca] < blocks_[cb] ? -1 : 1;
  int da = a.degree() + twists_[ca], db = b.degree() + twists_[cb];
  if (da != db) return da < db ? -1 : 1;
  if (int c = ring_.compare(a, b)) return c;
  if (ca != cb) return ca < cb ? 1 : -1;
  return 0;
}

ModVec to_modvec(const ModuleOrder& order, const std::vector<Polynomial>& column) {
  if (column.size() != order.rank()) throw ArgumentError("vector has wrong rank");
  ModVec v;
  for (std::uint32_t c = 0; c < column.size(); ++c)
    for (const auto& t : column[c].terms()) v.push_back({t.mono, c, t.coeff});
  std::sort(v.begin(), v.end(),
            [&](const ModTerm& a, const ModTerm& b) { return order.compare(a, b) > 0; });
  return v;
}

std::vector<Polynomial> from_modvec(const ModuleOrder& order, const ModVec& v) {
  std::vector<std::vector<Term>> parts(order.rank());
  for (const auto& t : v) parts[t.comp].push_back({t.mono, t.coeff});
  std::vector<Polynomial> out;
  out.reserve(order.rank());
  for (auto& p : parts) out.push_back(Polynomial(order.ring(), std::move(p)));
  return out;
}

ModVec add_scaled(const ModuleOrder& order, const ModVec& a, const ModVec& b, const Monomial& m,
                  const Scalar& c) {
  const Field& k = order.ring().field();
  ModVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Monomial bm = b[j].mono * m;
    int cmp = i == a.size() ? -1 : order.compare(a[i].mono, a[i].comp, bm, b[j].comp);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({bm, b[j].comp, k.mul(c, b[j].coeff)});
      ++j;
    } else {
      Scalar s = a[i].coeff;
      k.add_mul(s, c, b[j].coeff);
      if (!k.is_zero(s)) out.push_back({bm, b[j].comp, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

GBEngine::GBEngine(ModuleOrder order) : order_(std::move(order)), by_comp_(order_.rank()) {}

std::size_t GBEngine::add_input(ModVec v) {
  if (done_) throw ArgumentError("engine already ran");
  int d = v.empty() ? 0 : order_.degree(v.front());
  for (const auto& t : v)
    if (order_.degree(t) != d) throw ArgumentError("generator is not homogeneous");
  inputs_.push_back(std::move(v));
  input_degree_.push_back(d);
  return inputs_.size() - 1;
}

long GBEngine::find_reducer(const std::vector<Elem>& elems, const Monomial& m, std::uint32_t comp,
                            std::size_t skip) const {
  const auto& cand = by_comp_[comp];
  for (auto idx : cand) {
    if (idx == skip) continue;
    const Monomial& lm = elems[idx].vec.front().mono;
    if (lm.divides(m)) return static_cast<long>(idx);
  }
  return -1;
}

ModVec GBEngine::reduce_with(ModVec f, const std::vector<Elem>& elems, std::size_t skip) const {
  const Field& k = order_.ring().field();
  ModVec out;
  while (!f.empty()) {
    std::size_t pos = 0;
    long r = -1;
    for (; pos < f.size(); ++pos) {
      r = find_reducer(elems, f[pos].mono, f[pos].comp, skip);
      if (r >= 0) break;
    }
    // Terms before pos are irreducible and stay final: every later term is smaller.
    for (std::size_t t = 0; t < pos; ++t) out.push_back(std::move(f[t]));
    if (r < 0) break;
    const ModVec& g = elems[static_cast<std::size_t>(r)].vec;
    Monomial q = order_.ring().quotient(f[pos].mono, g.front().mono);
    Scalar c = k.neg(f[pos].coeff);
    ModVec rest(std::make_move_iterator(f.begin() + static_cast<long>(pos) + 1),
                std::make_move_iterator(f.end()));
    ModVec tail(g.begin() + 1, g.end());
    f = add_scaled(order_, rest, tail, q, c);
  }
  return out;
}

ModVec GBEngine::reduce(ModVec v) const {
  if (!done_) throw ArgumentError("engine has not run");
  return reduce_with(std::move(v), elems_, static_cast<std::size_t>(-1));
}

void GBEngine::insert(ModVec v, int degree) {
  const Field& k = order_.ring().field();
  if (!k.is_one(v.front().coeff)) {
    Scalar inv = k.inv(v.front().coeff);
    for (auto& t : v) t.coeff = k.mul(t.coeff, inv);
  }
  auto idx = static_cast<std::uint32_t>(elems_.size());
  const Monomial lm = v.front().mono;
  const std::uint32_t comp = v.front().comp;
  elems_.push_back({std::move(v), degree});
  for (auto other : by_comp_[comp]) {
    const Monomial& om = elems_[other].vec.front().mono;
    if (order_.rank() == 1 && Monomial::coprime(lm, om)) continue;
    Monomial l = order_.ring().lcm(lm, om);
    Pair p{l.degree() + order_.twists()[comp], l, comp, other, idx};
    pairs_.push_back(p);
    pending_.insert(key(other, idx));
  }
  by_comp_[comp].push_back(idx);
}

bool GBEngine::chain_criterion(const Pair& p) const {
  for (auto k : by_comp_[p.comp]) {
    if (k == p.i || k == p.j) continue;
    if (!elems_[k].vec.front().mono.divides(p.lcm)) continue;
    if (pending_.count(key(p.i, k)) || pending_.count(key(p.j, k))) continue;
    return true;
  }
  return false;
}

void GBEngine::run() {
  if (done_) return;
  const Budget& budget = current_budget();
  const Field& k = order_.ring().field();
  minimal_.assign(inputs_.size(), false);
  std::vector<std::size_t> order(inputs_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](auto a, auto b) { return input_degree_[a] < input_degree_[b]; });

  // min-heap on (degree, lcm, i, j)
  auto later = [&](const Pair& a, const Pair& b) {
    if (a.degree != b.degree) return a.degree > b.degree;
    if (int c = order_.compare(a.lcm, a.comp, b.lcm, b.comp)) return c > 0;
    if (a.i != b.i) return a.i > b.i;
    return a.j > b.j;
  };

  std::size_t next = 0;
  while (true) {
    while (next < order.size() && inputs_[order[next]].empty()) ++next;
    bool have_pair = !pairs_.empty();
    bool have_input = next < order.size();
    if (!have_pair && !have_input) break;
    int d = have_pair ? pairs_.front().degree : input_degree_[order[next]];
    if (have_pair && have_input) d = std::min(d, input_degree_[order[next]]);

    while (!pairs_.empty() && pairs_.front().degree == d) {
      std::pop_heap(pairs_.begin(), pairs_.end(), later);
      Pair p = pairs_.back();
      pairs_.pop_back();
      pending_.erase(key(p.i, p.j));
      if (chain_criterion(p)) continue;
      if (p.lcm.degree() > budget.max_degree)
        throw BudgetExceeded("degree budget " + std::to_string(budget.max_degree) +
                             " exceeded (S-pair of degree " + std::to_string(p.lcm.degree()) +
                             ")");
      if (++pairs_reduced_ > budget.max_pairs)
        throw BudgetExceeded("pair budget " + std::to_string(budget.max_pairs) + " exceeded");
      const ModVec& a = elems_[p.i].vec;
      const ModVec& b = elems_[p.j].vec;
      ModVec s = add_scaled(order_, ModVec(), ModVec(a.begin() + 1, a.end()),
                            order_.ring().quotient(p.lcm, a.front().mono), k.one());
      s = add_scaled(order_, s, ModVec(b.begin() + 1, b.end()),
                     order_.ring().quotient(p.lcm, b.front().mono), k.neg(k.one()));
      ModVec r = reduce_with(std::move(s), elems_, static_cast<std::size_t>(-1));
      if (!r.empty()) {
        insert(std::move(r), d);
        std::make_heap(pairs_.begin(), pairs_.end(), later);
      }
    }
    while (next < order.size() && input_degree_[order[next]] == d) {
      std::size_t idx = order[next++];
      if (inputs_[idx].empty()) continue;
      ModVec r = reduce_with(inputs_[idx], elems_, static_cast<std::size_t>(-1));
      if (!r.empty()) {
        minimal_[idx] = true;
        insert(std::move(r), d);
        std::make_heap(pairs_.begin(), pairs_.end(), later);
      }
    }
  }

  // Interreduce tails; leads are already pairwise non-divisible.
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    ModVec& v = elems_[i].vec;
    ModTerm lead = v.front();
    ModVec tail = reduce_with(ModVec(v.begin() + 1, v.end()), elems_, i);
    v.clear();
    v.push_back(std::move(lead));
    v.insert(v.end(), std::make_move_iterator(tail.begin()), std::make_move_iterator(tail.end()));
  }
  std::sort(elems_.begin(), elems_.end(), [&](const Elem& a, const Elem& b) {
    return order_.compare(a.vec.front(), b.vec.front()) < 0;
  });
  for (auto& bc : by_comp_) bc.clear();
  for (std::uint32_t i = 0; i < elems_.size(); ++i) by_comp_[elems_[i].vec.front().comp].push_back(i);
  basis_.clear();
  for (const auto& e : elems_) basis_.push_back(e.vec);
  pending_.clear();
  done_ = true;
}

}  // namespace resint::detail
