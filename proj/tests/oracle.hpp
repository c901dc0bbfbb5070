// Brute-force linear algebra in a single degree. Independent of the
// Gröbner machinery; used to cross-check it.
#ifndef RESINT_TESTS_ORACLE_HPP
#define RESINT_TESTS_ORACLE_HPP

#include <map>
#include <vector>

#include "resint/ring.hpp"

namespace oracle {

using resint::Field;
using resint::GradedRing;
using resint::Monomial;
using resint::Polynomial;
using resint::Scalar;

inline std::vector<Monomial> monomials_of_degree(const GradedRing& R, int d) {
  std::vector<Monomial> out;
  const std::size_t n = R.num_variables();
  std::vector<int> e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == n) {
      if (left == 0) out.push_back(R.monomial(e));
      return;
    }
    int w = R.weights()[i];
    for (int k = 0; k * w <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - k * w);
    }
    e[i] = 0;
  };
  if (d >= 0) rec(rec, 0, d);
  return out;
}

// Row-echelon span of vectors in K^{monomials of degree d}.
class Span {
public:
  Span(const GradedRing& R, int d) : R_(R), basis_(monomials_of_degree(R, d)) {
    for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i].hash()].push_back(i);
  }

  std::size_t ambient_dim() const { return basis_.size(); }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Monomial>& monomials() const { return basis_; }

  std::vector<Scalar> vec(const Polynomial& p) const {
    std::vector<Scalar> v(basis_.size(), R_.field().zero());
    for (const auto& t : p.terms()) v[find(t.mono)] = t.coeff;
    return v;
  }

  // Reduces v against the rows; returns true if v was independent (and adds it).
  bool insert(std::vector<Scalar> v) {
    reduce(v);
    const Field& k = R_.field();
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!k.is_zero(v[i])) {
        Scalar inv = k.inv(v[i]);
        for (auto& x : v) x = k.mul(x, inv);
        rows_.push_back({i, std::move(v)});
        return true;
      }
    return false;
  }

  void reduce(std::vector<Scalar>& v) const {
    const Field& k = R_.field();
    for (const auto& [p, row] : rows_) {
      if (k.is_zero(v[p])) continue;
      Scalar c = k.neg(v[p]);
      for (std::size_t i = 0; i < v.size(); ++i)
        if (!k.is_zero(row[i])) k.add_mul(v[i], c, row[i]);
    }
  }

  bool contains(std::vector<Scalar> v) const {
    reduce(v);
    for (const auto& x : v)
      if (!R_.field().is_zero(x)) return false;
    return true;
  }

private:
  std::size_t find(const Monomial& m) const {
    for (auto i : index_.at(m.hash()))
      if (basis_[i] == m) return i;
    throw std::logic_error("monomial not in degree");
  }

  GradedRing R_;
  std::vector<Monomial> basis_;
  std::map<std::size_t, std::vector<std::size_t>> index_;
  std::vector<std::pair<std::size_t, std::vector<Scalar>>> rows_;
};

// The degree-d piece of the ideal generated by gens.
inline Span ideal_piece(const GradedRing& R, const std::vector<Polynomial>& gens, int d) {
  Span s(R, d);
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    for (const auto& m : monomials_of_degree(R, d - *g.degree()))
      s.insert(s.vec(g.times_monomial(m, R.field().one())));
  }
  return s;
}

inline bool in_ideal(const GradedRing& R, const std::vector<Polynomial>& gens, const Polynomial& f) {
  if (f.is_zero()) return true;
  return ideal_piece(R, gens, *f.degree()).contains(ideal_piece(R, {}, *f.degree()).vec(f));
}

// dim_K (a : I)_d computed as the kernel of x -> (x f_i mod a)_i on R_d.
inline std::size_t quotient_piece_dim(const GradedRing& R, const std::vector<Polynomial>& a,
                                      const std::vector<Polynomial>& I, int d) {
  auto mons = monomials_of_degree(R, d);
  std::vector<Span> targets;
  for (const auto& f : I) targets.push_back(ideal_piece(R, a, d + *f.degree()));
  // images of each monomial, reduced mod a, concatenated
  std::vector<std::vector<Scalar>> images;
  for (const auto& m : mons) {
    std::vector<Scalar> row;
    for (std::size_t i = 0; i < I.size(); ++i) {
      auto v = targets[i].vec(I[i].times_monomial(m, R.field().one()));
      targets[i].reduce(v);
      row.insert(row.end(), v.begin(), v.end());
    }
    images.push_back(std::move(row));
  }
  // rank of images
  const Field& k = R.field();
  std::size_t rank = 0;
  std::vector<std::pair<std::size_t, std::vector<Scalar>>> rows;
  for (auto v : images) {
    for (const auto& [p, row] : rows) {
      if (k.is_zero(v[p])) continue;
      Scalar c = k.neg(v[p]);
      for (std::size_t i = 0; i < v.size(); ++i)
        if (!k.is_zero(row[i])) k.add_mul(v[i], c, row[i]);
    }
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!k.is_zero(v[i])) {
        Scalar inv = k.inv(v[i]);
        for (auto& x : v) x = k.mul(x, inv);
        rows.push_back({i, std::move(v)});
        ++rank;
        break;
      }
  }
  return mons.size() - rank;
}

}  // namespace oracle

#endif
