#include "kha/ring/monomial.hpp"

#include <algorithm>

namespace kha::ring {

Monomial Monomial::variable(VarId v, int exponent) {
  Monomial m;
  if (exponent != 0) m.entries_.push_back({v, exponent});
  return m;
}

Monomial Monomial::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  Monomial m;
  for (const auto& [v, e] : entries) {
    if (!m.entries_.empty() && m.entries_.back().first == v) {
      m.entries_.back().second += e;
    } else {
      m.entries_.push_back({v, e});
    }
    if (m.entries_.back().second == 0) m.entries_.pop_back();
  }
  return m;
}

int Monomial::exponent(VarId v) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                             [](const Entry& e, VarId key) { return e.first < key; });
  return it != entries_.end() && it->first == v ? it->second : 0;
}

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& e : entries_) d += e.second;
  return d;
}

bool Monomial::is_polynomial() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Entry& e) { return e.second > 0; });
}

namespace {

// Merges two sorted supports, combining exponents with f; zero results are dropped.
template <class F>
std::vector<Monomial::Entry> merge(const std::vector<Monomial::Entry>& a,
                                   const std::vector<Monomial::Entry>& b, F f) {
  std::vector<Monomial::Entry> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    VarId v;
    int ea = 0, eb = 0;
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      v = a[i].first;
      ea = a[i++].second;
    } else if (i == a.size() || b[j].first < a[i].first) {
      v = b[j].first;
      eb = b[j++].second;
    } else {
      v = a[i].first;
      ea = a[i++].second;
      eb = b[j++].second;
    }
    int e = f(ea, eb);
    if (e != 0) out.push_back({v, e});
  }
  return out;
}

}  // namespace

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  m.entries_ = merge(entries_, other.entries_, [](int a, int b) { return a + b; });
  return m;
}

Monomial Monomial::inverse() const {
  Monomial m = *this;
  for (auto& e : m.entries_) e.second = -e.second;
  return m;
}

Monomial Monomial::min_with(const Monomial& other) const {
  Monomial m;
  m.entries_ = merge(entries_, other.entries_, [](int a, int b) { return std::min(a, b); });
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  return (other * inverse()).is_polynomial();
}

Monomial Monomial::pow(int k) const {
  if (k == 0) return {};
  Monomial m = *this;
  for (auto& e : m.entries_) e.second *= k;
  return m;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  std::size_t i = 0, j = 0;
  const auto& x = a.entries_;
  const auto& y = b.entries_;
  while (i < x.size() || j < y.size()) {
    int ea = 0, eb = 0;
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      ea = x[i++].second;
    } else if (i == x.size() || y[j].first < x[i].first) {
      eb = y[j++].second;
    } else {
      ea = x[i++].second;
      eb = y[j++].second;
    }
    if (ea != eb) return ea <=> eb;
  }
  return std::strong_ordering::equal;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  return a < b;
}

}  // namespace kha::ring
