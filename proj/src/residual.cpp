#include "resint/residual.hpp"

#include <algorithm>
#include <future>
#include <map>

#include "resint/budget.hpp"
#include "resint/error.hpp"

namespace resint {

namespace {

std::int64_t binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::int64_t out = 1;
  for (int t = 1; t <= k; ++t) out = out * (n - k + t) / t;
  return out;
}

// Runs fn on another thread with the caller's budget.
template <class F>
auto spawn(F fn) {
  Budget b = current_budget();
  return std::async(std::launch::async, [b, fn = std::move(fn)]() {
    ScopedBudget scope(b);
    return fn();
  });
}

std::vector<Polynomial> by_degree_desc(std::vector<Polynomial> v) {
  std::stable_sort(v.begin(), v.end(), [](const Polynomial& p, const Polynomial& q) {
    return *p.degree() > *q.degree();
  });
  return v;
}

Degrees degrees_of(const std::vector<Polynomial>& v) {
  Degrees out;
  for (const auto& p : v) out.push_back(*p.degree());
  return out;
}

GradedMap row_of(const GradedRing& R, const std::vector<Polynomial>& v) {
  return GradedMap(R, {0}, degrees_of(v), v);
}

bool geq(const std::optional<int>& h, int bound) { return !h || *h >= bound; }

}  // namespace

// ---------------------------------------------------------------- bookkeeping

int ComplexShape::first_beg_mismatch() const {
  for (std::size_t i = 0; i < beg_formula.size(); ++i)
    if (beg_constructed[i] != beg_formula[i]) return static_cast<int>(i);
  return -1;
}

int beg_d_formula(int r, int g, int i) {
  if (i <= r - g) return i;
  if (i <= r - 1) return r - g + 1;
  return i - g + 2;
}

ComplexShape complex_shapes(int r, int g, int s) {
  if (g < 1 || g > r || s < g)
    throw ArgumentError("complex shapes need 1 <= g <= r and s >= g (got r=" + std::to_string(r) +
                        ", g=" + std::to_string(g) + ", s=" + std::to_string(s) + ")");
  ComplexShape cs;
  cs.r = r;
  cs.g = g;
  cs.s = s;
  // Z'_i = Z_i (x) S(-i) below the cut, K_{i+1} (x) (+)_{p=r-g+1}^{i} S(-p) above it.
  for (int i = 0; i < r; ++i) {
    std::vector<ShapeSummand> z;
    if (i <= r - g) {
      z.push_back({false, i, 0, i, 1});
    } else {
      for (int p = r - g + 1; p <= i; ++p) z.push_back({true, i + 1, binom(r, i + 1), p, 1});
    }
    cs.z_prime.push_back(std::move(z));
  }
  for (int i = 0; i <= r + s - 1; ++i) {
    std::vector<ShapeSummand> d;
    for (int q = 0; q <= s; ++q) {
      const int j = i - q;
      if (j < 0 || j >= r) continue;
      for (auto z : cs.z_prime[static_cast<std::size_t>(j)]) {
        z.twist += q;
        z.multiplicity *= binom(s, q);
        d.push_back(z);
      }
    }
    int lo = d.front().twist, hi = lo;
    for (const auto& x : d) {
      lo = std::min(lo, x.twist);
      hi = std::max(hi, x.twist);
    }
    cs.beg_constructed.push_back(lo);
    cs.max_twist.push_back(hi);
    cs.beg_formula.push_back(beg_d_formula(r, g, i));
    cs.d.push_back(std::move(d));
  }
  // H^r of S(-a), degree 0, has rank C(a-1, r-1) over R.
  for (int j = r - s; j <= r - 1; ++j) {
    std::map<std::pair<bool, int>, ShapeSummand> merged;
    for (const auto& x : cs.d[static_cast<std::size_t>(j + s)]) {
      const std::int64_t m = x.multiplicity * binom(x.twist - 1, r - 1);
      if (m == 0) continue;
      auto [it, fresh] = merged.try_emplace({x.free, x.index}, ShapeSummand{x.free, x.index, x.rank, 0, 0});
      it->second.multiplicity += m;
    }
    std::vector<ShapeSummand> zp;
    for (auto& [key, v] : merged) zp.push_back(v);
    cs.z_plus.push_back(std::move(zp));
  }
  return cs;
}

ComplexShape complex_shapes(const std::vector<Polynomial>& f, const std::vector<int>& a_degrees) {
  if (f.empty()) throw ArgumentError("empty sequence");
  GradedIdeal I(f.front().ring(), f);
  auto g = I.height();
  if (!g) throw ArgumentError("the sequence generates the unit ideal");
  return complex_shapes(static_cast<int>(f.size()), *g, static_cast<int>(a_degrees.size()));
}

// ---------------------------------------------------------------- residual data

GradedMap quotient_presentation(const std::vector<Polynomial>& f,
                                const std::vector<Polynomial>& alpha) {
  if (f.empty()) throw ArgumentError("empty generator list");
  const GradedRing& R = f.front().ring();
  GradedMap row = row_of(R, f);
  GradedMap syz = syzygies(row);
  if (alpha.empty()) return syz;
  auto A = lift(row, row_of(R, alpha));
  if (!A) throw HypothesisError("a is not contained in I");
  return GradedMap::concat(syz, *A);
}

ResidualData build_residual(const GradedIdeal& a, const GradedIdeal& I) {
  if (a.ring() != I.ring()) throw ArgumentError("a and I live in different rings");
  if (a.is_zero()) throw ArgumentError("a must be nonzero");
  if (I.is_unit()) throw HypothesisError("I is the unit ideal");
  if (!I.contains(a)) throw HypothesisError("a is not contained in I");

  ResidualData D(I, a, GradedIdeal::zero(I.ring()));
  D.n = static_cast<int>(I.ring().num_variables());
  D.f = by_degree_desc(I.minimal_generators());
  D.alpha = by_degree_desc(a.minimal_generators());
  D.i_degrees = degrees_of(D.f);
  D.a_degrees = degrees_of(D.alpha);
  D.a_input_minimal = D.alpha.size() == a.generators().size();
  if (!D.a_input_minimal)
    D.warnings.push_back("a was not minimally generated: " + std::to_string(a.generators().size()) +
                         " generators reduced to " + std::to_string(D.alpha.size()));
  D.r = static_cast<int>(D.f.size());
  D.s = static_cast<int>(D.alpha.size());
  D.g = *I.height();
  for (int d : D.a_degrees) D.sigma_a += d;

  auto koszul = std::make_shared<const KoszulData>(D.f);
  D.koszul = koszul;
  const int s = D.s, r = D.r, g = D.g;
  auto sd = spawn([koszul] { return std::make_pair(check_sd(*koszul, 0), check_sd(*koszul, 1)); });
  auto sdc = spawn([koszul, r, s, g] {
    return check_sdc(*koszul, 1, std::max(0, std::min(s - g, r - g)));
  });
  auto scm = spawn([koszul] { return check_scm(*koszul); });
  auto fit = spawn([I, s] { return std::make_pair(check_gs(I, s), check_gs_minus(I, s + 1)); });
  auto cyc = spawn([f = D.f, alpha = D.alpha] {
    return fitting_ideal(quotient_presentation(f, alpha), 1).height();
  });

  D.J = quotient(a, I);
  D.trivial = D.J.is_unit();
  D.height_J = D.J.height();
  D.height_I_plus_J = ideal_sum(I, D.J).height();
  // s >= g is part of the definition.
  D.is_residual = s >= g && geq(D.height_J, s);
  D.is_geometric = D.is_residual && geq(D.height_I_plus_J, s + 1);

  if (!D.trivial) {
    const auto [lo, hi] = std::minmax_element(D.i_degrees.begin(), D.i_degrees.end());
    for (int d = *lo; d <= *hi && !D.beg_I_mod_a; ++d)
      if (I.dimension_in_degree(d) > a.dimension_in_degree(d)) D.beg_I_mod_a = d;
  }

  std::tie(D.sd0, D.sd1) = sd.get();
  D.sdc1 = sdc.get();
  D.scm = scm.get();
  std::tie(D.gs, D.gs_minus) = fit.get();
  D.fitt1_height = cyc.get();
  D.local_cyclic_direct = geq(D.fitt1_height, s + 1);
  D.local_mu_condition = D.local_cyclic_direct;
  if (D.is_geometric)
    D.local_mu_route = "geometric";
  else if (D.local_cyclic_direct)
    D.local_mu_route = "fitting";
  else
    D.local_mu_route = "none";
  return D;
}

CmReport verify_cm_conclusion(const ResidualData& D) {
  CmReport rep;
  rep.expected_dimension = D.n - D.s;
  if (!D.is_residual || D.trivial) {
    rep.hypotheses = "hypotheses fail";
    rep.route = D.trivial ? "trivial" : "none";
    return rep;
  }
  rep.checked = true;
  const ModuleInvariants inv = invariants(D.J);
  rep.dimension = inv.dimension;
  rep.depth = inv.depth;
  rep.cm = inv.cohen_macaulay && inv.dimension == rep.expected_dimension;

  const bool sd_route = D.is_geometric && D.sd0.holds;
  const bool sdc_route = D.sdc1.holds && D.local_mu_condition;
  if (sd_route || sdc_route) {
    rep.hypotheses = "verified";
    rep.route = sd_route ? "geometric + SD" : "SDC_1 + local cyclic";
  } else if (D.is_geometric || D.sd0.holds || D.sdc1.holds || D.local_mu_condition) {
    rep.hypotheses = "partially verified";
    rep.route = "none";
  } else {
    rep.hypotheses = "unverified";
    rep.route = "none";
  }
  return rep;
}

RegularityReport regularity_bound(const ResidualData& D) {
  RegularityReport rep;
  if (D.trivial || !D.beg_I_mod_a) {
    rep.sentinel = true;
    return rep;
  }
  const int k = D.s - D.g + 1;
  const int beg = *D.beg_I_mod_a;
  rep.bound = D.sigma_a - k * beg - D.s;
  rep.actual = invariants(D.J).regularity.value_or(0);
  rep.holds = rep.actual <= rep.bound;
  rep.equality = rep.actual == rep.bound;
  rep.hypotheses_verified = D.is_residual && D.sd1.holds && D.local_mu_condition;
  if (k >= 1) {
    GradedIdeal top = ideal_sum(ideal_power(D.I, static_cast<unsigned>(k)), D.J);
    rep.tight = top.dimension_in_degree(k * beg) > D.J.dimension_in_degree(k * beg);
  }
  return rep;
}

CanonicalReport canonical_module_check(const ResidualData& D, int max_degree) {
  CanonicalReport rep;
  rep.highest_degree = max_degree;
  if (!D.is_geometric) rep.missing.push_back("geometric");
  if (!D.gs.holds) rep.missing.push_back("G_s");
  if (!D.scm.holds) rep.missing.push_back("SCM");
  if (D.trivial) rep.missing.push_back("J proper");
  rep.hypotheses_verified = rep.missing.empty();
  if (D.trivial) {
    rep.status = "inconclusive";
    return rep;
  }
  const int k = D.s - D.g + 1;
  HilbertSeries lhs = hilbert_series(ext(D.J.as_row(), D.s));
  HilbertSeries rhs;
  if (k >= 1) {
    GradedIdeal top = ideal_sum(ideal_power(D.I, static_cast<unsigned>(k)), D.J);
    rhs = (D.J.hilbert_series() - top.hilbert_series()).shifted(-D.sigma_a);
  } else {
    rhs = D.J.hilbert_series().shifted(-D.sigma_a);
  }
  int lo = max_degree;
  if (!lhs.is_zero()) lo = std::min(lo, lhs.initial_degree());
  if (!rhs.is_zero()) lo = std::min(lo, rhs.initial_degree());
  rep.lowest_degree = lo;
  rep.ext_side = lhs.coefficients(lo, max_degree);
  rep.power_side = rhs.coefficients(lo, max_degree);
  for (int d = lo; d <= max_degree && !rep.first_discrepancy; ++d)
    if (rep.ext_side[static_cast<std::size_t>(d - lo)] != rep.power_side[static_cast<std::size_t>(d - lo)])
      rep.first_discrepancy = d;
  if (!rep.hypotheses_verified)
    rep.status = "inconclusive";
  else
    rep.status = rep.first_discrepancy ? "unequal" : "equal";
  return rep;
}

bool intersection_equals_a(const ResidualData& D, int max_degree) {
  GradedIdeal both = intersect(D.I, D.J);
  for (int d = 0; d <= max_degree; ++d)
    if (both.dimension_in_degree(d) != D.a.dimension_in_degree(d)) return false;
  return true;
}

}  // namespace resint
