#include "resint/module.hpp"

#include <sstream>

#include "resint/error.hpp"

namespace resint {

namespace {

void check_entry(const Polynomial& p, int want) {
  if (p.is_zero()) return;
  if (!p.is_homogeneous() || *p.degree() != want)
    throw ArgumentError("matrix entry " + p.to_string() + " is not homogeneous of degree " +
                        std::to_string(want));
}

}  // namespace

GradedMap::GradedMap(GradedRing ring, Degrees target, Degrees source)
    : ring_(std::move(ring)), target_(std::move(target)), source_(std::move(source)) {
  entries_.assign(target_.size() * source_.size(), ring_.zero());
}

GradedMap::GradedMap(GradedRing ring, Degrees target, Degrees source,
                     std::vector<Polynomial> entries)
    : ring_(std::move(ring)),
      target_(std::move(target)),
      source_(std::move(source)),
      entries_(std::move(entries)) {
  if (entries_.size() != target_.size() * source_.size())
    throw ArgumentError("matrix shape does not match degree lists");
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) {
      if (at(i, j).ring() != ring_) throw ArgumentError("matrix entry from another ring");
      check_entry(at(i, j), source_[j] - target_[i]);
    }
}

GradedMap GradedMap::from_columns(GradedRing ring, Degrees target,
                                  const std::vector<std::vector<Polynomial>>& columns,
                                  int zero_column_degree) {
  Degrees source;
  std::vector<Polynomial> entries(target.size() * columns.size(), ring.zero());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != target.size()) throw ArgumentError("column length mismatch");
    int d = zero_column_degree;
    for (std::size_t i = 0; i < target.size(); ++i)
      if (!columns[j][i].is_zero()) {
        d = target[i] + *columns[j][i].degree();
        break;
      }
    source.push_back(d);
    for (std::size_t i = 0; i < target.size(); ++i)
      entries[i * columns.size() + j] = columns[j][i];
  }
  return GradedMap(std::move(ring), std::move(target), std::move(source), std::move(entries));
}

void GradedMap::set(std::size_t i, std::size_t j, Polynomial p) {
  check_entry(p, source_[j] - target_[i]);
  entries_[i * cols() + j] = std::move(p);
}

std::vector<Polynomial> GradedMap::column(std::size_t j) const {
  std::vector<Polynomial> c;
  c.reserve(rows());
  for (std::size_t i = 0; i < rows(); ++i) c.push_back(at(i, j));
  return c;
}

bool GradedMap::is_zero() const {
  for (const auto& p : entries_)
    if (!p.is_zero()) return false;
  return true;
}

bool GradedMap::has_unit_entry() const {
  for (const auto& p : entries_)
    if (p.is_unit()) return true;
  return false;
}

GradedMap operator*(const GradedMap& a, const GradedMap& b) {
  if (a.source_ != b.target_) throw ArgumentError("maps are not composable");
  GradedMap c(a.ring_, a.target_, b.source_);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Polynomial s = a.ring_.zero();
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
        s += a.at(i, k) * b.at(k, j);
      }
      c.entries_[i * c.cols() + j] = std::move(s);
    }
  return c;
}

GradedMap GradedMap::dual() const {
  Degrees t, s;
  for (int d : source_) t.push_back(-d);
  for (int d : target_) s.push_back(-d);
  GradedMap m(ring_, t, s);
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) m.entries_[j * m.cols() + i] = at(i, j);
  return m;
}

GradedMap GradedMap::concat(const GradedMap& a, const GradedMap& b) {
  if (a.target_ != b.target_) throw ArgumentError("concat needs a common target");
  Degrees s = a.source_;
  s.insert(s.end(), b.source_.begin(), b.source_.end());
  GradedMap m(a.ring_, a.target_, s);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m.entries_[i * m.cols() + j] = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j)
      m.entries_[i * m.cols() + a.cols() + j] = b.at(i, j);
  }
  return m;
}

GradedMap GradedMap::select_columns(const std::vector<std::size_t>& cs) const {
  Degrees s;
  for (auto j : cs) s.push_back(source_.at(j));
  GradedMap m(ring_, target_, s);
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t k = 0; k < cs.size(); ++k) m.entries_[i * m.cols() + k] = at(i, cs[k]);
  return m;
}

GradedMap GradedMap::select_rows(const std::vector<std::size_t>& rs) const {
  Degrees t;
  for (auto i : rs) t.push_back(target_.at(i));
  GradedMap m(ring_, t, source_);
  for (std::size_t k = 0; k < rs.size(); ++k)
    for (std::size_t j = 0; j < cols(); ++j) m.entries_[k * m.cols() + j] = at(rs[k], j);
  return m;
}

GradedMap GradedMap::shifted(int k) const {
  GradedMap m = *this;
  for (auto& d : m.target_) d += k;
  for (auto& d : m.source_) d += k;
  return m;
}

std::string GradedMap::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows(); ++i) {
    os << (i ? "; " : "") << "[";
    for (std::size_t j = 0; j < cols(); ++j) os << (j ? ", " : "") << at(i, j).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace resint
