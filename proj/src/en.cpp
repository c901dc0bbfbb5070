#include "resint/en.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "resint/error.hpp"

namespace resint {

namespace {

mpz_class binom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
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

void subsets(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

// Exponent vectors of length r summing to j, lexicographically descending.
void multisets(int r, int j, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(static_cast<std::size_t>(r), 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == r - 1) {
      cur[static_cast<std::size_t>(pos)] = left;
      out.push_back(cur);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[static_cast<std::size_t>(pos)] = e;
      rec(pos + 1, left - e);
    }
  };
  if (r > 0) rec(0, j);
}

bool zero_module(const GradedMap& presentation) { return hilbert_series(presentation).is_zero(); }

}  // namespace

mpz_class beta(int m, int t) {
  if (m < 1 || t < 0) throw ArgumentError("beta needs m >= 1 and t >= 0");
  mpz_class sum = 0;
  for (int j = 0; j <= m; ++j) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(t));
    mpz_class term = p * binom(m, j);
    if (j % 2) sum -= term;
    else sum += term;
  }
  return m % 2 ? mpz_class(-sum) : sum;
}

// ---------------------------------------------------------------- Hilbert-Burch

HilbertBurchData hilbert_burch(const GradedIdeal& I) {
  auto h = I.height();
  if (!h || *h != 2)
    throw HypothesisError("Hilbert-Burch needs height 2, got height " + (h ? std::to_string(*h) : std::string("inf")));
  const int pd = static_cast<int>(resolve(I).modules.size()) - 1;
  if (pd != 2) throw HypothesisError("I is not perfect: pd(R/I) = " + std::to_string(pd) + ", height 2");

  auto f = by_degree_desc(I.minimal_generators());
  GradedIdeal gens(I.ring(), f);
  GradedMap syz = syzygies(gens.as_row());
  const std::size_t r = f.size();
  if (syz.cols() + 1 != r) throw HypothesisError("syzygy matrix has the wrong shape");
  std::vector<std::size_t> order(syz.cols());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t p, std::size_t q) {
    return syz.source()[p] > syz.source()[q];
  });
  GradedMap m = syz.select_columns(order);

  HilbertBurchData hb{I, f, m, degrees_of(f), m.source(), 0, 0};
  for (int d : hb.i_degrees) hb.u += d == hb.i_degrees.back();
  for (int b : hb.b_degrees) hb.sigma_b += b;
  for (int b : hb.b_degrees)
    if (b <= hb.i_degrees.back()) throw HypothesisError("syzygy degree not above i_r");
  if (!(minors_ideal(m, static_cast<int>(r) - 1) == I))
    throw HypothesisError("maximal minors do not regenerate I");
  return hb;
}

GradedMap mapping_cone_presentation(const HilbertBurchData& hb, const GradedIdeal& a) {
  const GradedRing& R = hb.I.ring();
  if (a.is_zero()) return hb.matrix;
  if (!hb.I.contains(a)) throw HypothesisError("a is not contained in I");
  auto alpha = by_degree_desc(a.minimal_generators());
  GradedMap row(R, {0}, hb.i_degrees, hb.f);
  auto A = lift(row, GradedMap(R, {0}, degrees_of(alpha), alpha));
  if (!A) throw HypothesisError("a is not contained in I");
  return GradedMap::concat(hb.matrix, *A);
}

GradedMap mapping_cone_presentation(const GradedIdeal& I, const GradedIdeal& a) {
  return mapping_cone_presentation(hilbert_burch(I), a);
}

// ---------------------------------------------------------------- Eagon-Northcott

FreeComplex eagon_northcott(const GradedMap& psi) {
  const int r = static_cast<int>(psi.rows());
  const int m = static_cast<int>(psi.cols());
  if (r == 0 || r > m) throw ArgumentError("Eagon-Northcott needs 1 <= rows <= columns");
  const GradedRing& R = psi.ring();
  const Degrees& idg = psi.target();
  const Degrees& cdg = psi.source();
  const int sum_i = std::accumulate(idg.begin(), idg.end(), 0);

  struct Basis {
    std::vector<std::vector<int>> alpha, K;
    Degrees deg;
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::size_t> where;
  };
  std::vector<Basis> basis;  // basis[j] is position j + 1
  for (int j = 0; j <= m - r; ++j) {
    Basis b;
    std::vector<std::vector<int>> as, ks;
    multisets(r, j, as);
    subsets(m, r + j, ks);
    for (const auto& al : as)
      for (const auto& K : ks) {
        int d = -sum_i;
        for (int k : K) d += cdg[static_cast<std::size_t>(k)];
        for (int t = 0; t < r; ++t) d -= al[static_cast<std::size_t>(t)] * idg[static_cast<std::size_t>(t)];
        b.where[{al, K}] = b.alpha.size();
        b.alpha.push_back(al);
        b.K.push_back(K);
        b.deg.push_back(d);
      }
    basis.push_back(std::move(b));
  }

  FreeComplex C(R);
  C.modules.push_back({0});
  for (const auto& b : basis) C.modules.push_back(b.deg);

  // g_K -> det psi_K
  GradedMap d1(R, {0}, basis[0].deg);
  for (std::size_t col = 0; col < basis[0].K.size(); ++col) {
    const auto& K = basis[0].K[col];
    std::vector<Polynomial> sq;
    for (int t = 0; t < r; ++t)
      for (int k : K) sq.push_back(psi.at(static_cast<std::size_t>(t), static_cast<std::size_t>(k)));
    d1.set(0, col, determinant(sq, static_cast<std::size_t>(r)));
  }
  C.maps.push_back(std::move(d1));

  // y^(alpha) (x) g_K -> sum_t sum_q (-1)^q psi[t][K_q] y^(alpha - e_t) (x) g_{K \ K_q}
  for (std::size_t j = 1; j < basis.size(); ++j) {
    const Basis& src = basis[j];
    const Basis& tgt = basis[j - 1];
    GradedMap d(R, tgt.deg, src.deg);
    for (std::size_t col = 0; col < src.K.size(); ++col) {
      for (int t = 0; t < r; ++t) {
        if (src.alpha[col][static_cast<std::size_t>(t)] == 0) continue;
        auto al = src.alpha[col];
        --al[static_cast<std::size_t>(t)];
        const auto& K = src.K[col];
        for (std::size_t q = 0; q < K.size(); ++q) {
          const Polynomial& e = psi.at(static_cast<std::size_t>(t), static_cast<std::size_t>(K[q]));
          if (e.is_zero()) continue;
          auto rest = K;
          rest.erase(rest.begin() + static_cast<long>(q));
          const std::size_t row = tgt.where.at({al, rest});
          d.set(row, col, d.at(row, col) + (q % 2 ? -e : e));
        }
      }
    }
    C.maps.push_back(std::move(d));
  }
  return C;
}

// ---------------------------------------------------------------- counting

bool ENShape::f_ordering_holds() const {
  if (f.empty()) return true;
  if (f[0] <= 0) return false;
  for (int j = 0; j + 1 < static_cast<int>(f.size()); ++j) {
    const bool rising = j + 1 <= k - 1;
    const int a = f[static_cast<std::size_t>(j)], b = f[static_cast<std::size_t>(j + 1)];
    if (rising ? !(a < b) : a != b) return false;
  }
  return true;
}

ENShape en_shape(const Degrees& i_degrees, const Degrees& b_degrees, const Degrees& a_degrees) {
  if (i_degrees.empty() || a_degrees.empty()) throw ArgumentError("empty degree list");
  if (b_degrees.size() + 1 != i_degrees.size()) throw ArgumentError("need r - 1 syzygy degrees");
  ENShape sh;
  sh.i_degrees = i_degrees;
  sh.b_degrees = b_degrees;
  sh.a_degrees = a_degrees;
  std::sort(sh.i_degrees.rbegin(), sh.i_degrees.rend());
  std::sort(sh.b_degrees.rbegin(), sh.b_degrees.rend());
  std::sort(sh.a_degrees.rbegin(), sh.a_degrees.rend());
  sh.r = static_cast<int>(i_degrees.size());
  sh.s = static_cast<int>(a_degrees.size());
  const int ir = sh.i_degrees.back();
  for (int d : sh.i_degrees) sh.u += d == ir;
  for (int a : sh.a_degrees) sh.k += a > ir;
  for (int b : sh.b_degrees) sh.sigma_b += b;
  // merge, b before a on ties
  std::size_t p = 0, q = 0;
  while (p < sh.b_degrees.size() || q < sh.a_degrees.size()) {
    if (q == sh.a_degrees.size() || (p < sh.b_degrees.size() && sh.b_degrees[p] >= sh.a_degrees[q]))
      sh.c.push_back(sh.b_degrees[p++]);
    else
      sh.c.push_back(sh.a_degrees[q++]);
  }
  const int m = static_cast<int>(sh.c.size());
  for (int j = 0; j <= sh.s - 1 && sh.r + j <= m; ++j) {
    std::vector<std::vector<int>> as, ks;
    multisets(sh.r, j, as);
    subsets(m, sh.r + j, ks);
    Degrees tw;
    for (const auto& al : as)
      for (const auto& K : ks) {
        int d = -sh.sigma_b;
        for (int k : K) d += sh.c[static_cast<std::size_t>(k)];
        for (int t = 0; t < sh.r; ++t) d -= al[static_cast<std::size_t>(t)] * sh.i_degrees[static_cast<std::size_t>(t)];
        tw.push_back(d);
      }
    std::sort(tw.rbegin(), tw.rend());
    const int top = tw.front();
    sh.f.push_back(top);
    sh.n.push_back(std::count(tw.begin(), tw.end(), top));
    int ff = -j * ir - sh.sigma_b;
    for (int t = 0; t < sh.r + j; ++t) ff += sh.c[static_cast<std::size_t>(t)];
    sh.f_formula.push_back(ff);
    sh.twists.push_back(std::move(tw));
  }
  return sh;
}

ENCount en_counts(int s, int k, int u, int j) {
  if (k < 0 || k > s || u < 1) throw ArgumentError("en_counts needs 0 <= k <= s and u >= 1");
  if (j < std::max(k - 1, 0) || j > s - 1)
    throw ArgumentError("j = " + std::to_string(j) + " outside " + std::to_string(std::max(k - 1, 0)) + ".." +
                        std::to_string(s - 1));
  mpz_class n = binom(s - k, j - k + 1) * binom(u + j - 1, u - 1);
  return {0, n.get_si()};
}

mpz_class en_alternating_sum(int s, int k, int u) {
  mpz_class sum = 0;
  for (int j = std::max(k - 1, 0); j <= s - 1; ++j) {
    mpz_class n = en_counts(s, k, u, j).n;
    if (j % 2) sum -= n;
    else sum += n;
  }
  return sum;
}

// ---------------------------------------------------------------- pipeline

ENReport en_analysis(const GradedIdeal& I, const GradedIdeal& a, int max_degree) {
  if (a.ring() != I.ring()) throw ArgumentError("a and I live in different rings");
  if (a.is_zero()) throw ArgumentError("a must be nonzero");
  HilbertBurchData hb = hilbert_burch(I);
  if (!I.contains(a)) throw HypothesisError("a is not contained in I");
  GradedIdeal J = quotient(a, I);
  if (J.is_unit()) throw HypothesisError("J = R: a = I");

  ENReport rep;
  rep.h0_up_to = max_degree;
  auto alpha = by_degree_desc(a.minimal_generators());
  const Degrees adeg = degrees_of(alpha);
  rep.r = static_cast<int>(hb.f.size());
  rep.s = static_cast<int>(alpha.size());
  rep.sigma_a = std::accumulate(adeg.begin(), adeg.end(), 0);
  rep.beg_I = hb.i_degrees.back();
  rep.u = hb.u;
  const int n = static_cast<int>(I.ring().num_variables());
  auto htJ = J.height();
  rep.residual = rep.s >= 2 && (!htJ || *htJ >= rep.s);
  if (!rep.residual) rep.warnings.push_back("not an s-residual intersection: ht J < s");

  for (int d = hb.i_degrees.back(); d <= hb.i_degrees.front(); ++d)
    if (I.dimension_in_degree(d) > a.dimension_in_degree(d)) {
      rep.beg_I_mod_a = d;
      break;
    }

  rep.shape = en_shape(hb.i_degrees, hb.b_degrees, adeg);
  rep.k = rep.shape.k;
  rep.s_minus_k_le_u = rep.s - rep.k <= rep.u;
  rep.regime = rep.s - rep.k <= rep.u - 1 ? "s-k<=u-1" : rep.s - rep.k == rep.u ? "s-k=u" : "s-k>u";
  rep.predicted_general = rep.sigma_a - (rep.s - 1) * rep.beg_I_mod_a - rep.s;
  rep.strict_rhs = rep.sigma_a - (rep.s - 1) * rep.beg_I - rep.s;
  if (rep.s - rep.k <= rep.u - 1) rep.predicted_strict = rep.strict_rhs;
  if (rep.s - rep.k == rep.u && rep.u < rep.r) {
    // second least generator degree, its multiplicity, and how many a_t sit there
    const int second = hb.i_degrees[static_cast<std::size_t>(rep.r - rep.u - 1)];
    const int mult = static_cast<int>(std::count(hb.i_degrees.begin(), hb.i_degrees.end(), second));
    const int t = static_cast<int>(std::count(adeg.begin(), adeg.end(), second));
    if (t < mult) rep.predicted_refined = rep.sigma_a - (rep.s - 1) * second - rep.s;
  }
  rep.n_matches = true;
  for (int j = std::max(rep.k - 1, 0); j <= rep.s - 1 && j < static_cast<int>(rep.shape.n.size()); ++j)
    rep.n_matches = rep.n_matches && rep.shape.n[static_cast<std::size_t>(j)] == en_counts(rep.s, rep.k, rep.u, j).n;

  GradedMap psi = mapping_cone_presentation(hb, a);
  GradedIdeal Ir = minors_ideal(psi, rep.r);
  rep.fitting_matches = Ir == J;
  auto grade = Ir.height();
  if (grade && *grade < rep.s) rep.warnings.push_back("grade of I_r(psi) below s: not a resolution");

  FreeComplex en = eagon_northcott(psi);
  rep.en_is_complex = en.is_complex();
  rep.en_minimal = true;
  for (const auto& d : en.maps) rep.en_minimal = rep.en_minimal && !d.has_unit_entry();
  HilbertSeries h0 = hilbert_series(en.maps[0]);
  HilbertSeries hj = J.hilbert_series();
  rep.h0_matches = h0.coefficients(0, max_degree) == hj.coefficients(0, max_degree);

  // Unit cancellation is a homotopy equivalence, so higher homology is
  // checked on the minimized complex, where the syzygy computations are small.
  FreeComplex mini = en;
  mini.minimize();
  mini.trim();
  rep.en_exact = mini.is_complex();
  const std::size_t L = mini.maps.size();
  for (std::size_t j = 1; j <= L && rep.en_exact; ++j) {
    GradedMap in = j < L ? mini.maps[j] : GradedMap(mini.ring, mini.modules[j], {});
    rep.en_exact = zero_module(homology(mini.maps[j - 1], in));
  }
  rep.en_betti = mini.betti();
  rep.actual_en = rep.en_betti.regularity();
  FreeComplex res = resolve(J);
  rep.resolution_betti = res.betti();
  rep.actual_resolution = rep.resolution_betti.regularity();
  rep.betti_match = rep.en_betti == rep.resolution_betti;
  rep.agree = rep.actual_en == rep.actual_resolution && rep.actual_resolution == rep.predicted_general;

  const ModuleInvariants inv = invariants(J);
  rep.cm = inv.cohen_macaulay && inv.dimension == n - rep.s;
  return rep;
}

}  // namespace resint
