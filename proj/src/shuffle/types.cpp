#include "kha/shuffle/types.hpp"

#include <algorithm>
#include <numeric>

#include "kha/errors.hpp"

namespace kha::shuffle {

DimVector::DimVector(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e < 0) throw Error("dimension vector entries must be non-negative");
  }
}

DimVector DimVector::unit(int n, int i) {
  if (i < 1 || i > n) throw Error("vertex " + std::to_string(i) + " out of range");
  std::vector<int> e(n, 0);
  e[i - 1] = 1;
  return DimVector(std::move(e));
}

int DimVector::total() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

DimVector DimVector::operator+(const DimVector& o) const {
  if (n() != o.n()) throw GradeMismatch("dimension vectors of different length");
  std::vector<int> e(entries_);
  for (int i = 0; i < n(); ++i) e[i] += o.entries_[i];
  return DimVector(std::move(e));
}

std::string to_string(const DimVector& d) {
  std::string s = "(";
  for (int i = 0; i < d.n(); ++i) {
    if (i) s += ",";
    s += std::to_string(d.entries()[i]);
  }
  return s + ")";
}

namespace {

std::size_t multinomial_of(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  std::size_t count = 0;
  do {
    ++count;
  } while (std::next_permutation(v.begin(), v.end()));
  return count;
}

void check_key(const OrbitKey& key, const DimVector& grade) {
  if (static_cast<int>(key.size()) != grade.n()) throw GradeMismatch("orbit key has wrong vertex count");
  for (int i = 1; i <= grade.n(); ++i) {
    if (static_cast<int>(key[i - 1].size()) != grade.at(i)) {
      throw GradeMismatch("orbit key length does not match grade " + to_string(grade));
    }
  }
}

ring::Monomial representative(const OrbitKey& key) {
  std::vector<ring::Monomial::Entry> es;
  for (std::size_t i = 0; i < key.size(); ++i) {
    for (std::size_t j = 0; j < key[i].size(); ++j) {
      es.push_back({{static_cast<int>(i) + 1, static_cast<int>(j) + 1}, key[i][j]});
    }
  }
  return ring::Monomial::from_entries(std::move(es));
}

}  // namespace

std::size_t orbit_size(const OrbitKey& key) {
  std::size_t s = 1;
  for (const auto& v : key) s *= multinomial_of(v);
  return s;
}

SymLaurent SymLaurent::constant(DimVector grade, const Rational& c) {
  SymLaurent s(grade);
  OrbitKey key;
  for (int e : grade.entries()) key.emplace_back(e, 0);
  s.add_orbit(std::move(key), c);
  return s;
}

SymLaurent SymLaurent::degree_one(int n, int i, int r) {
  SymLaurent s(DimVector::unit(n, i));
  OrbitKey key(n);
  key[i - 1] = {r};
  s.add_orbit(std::move(key), 1);
  return s;
}

SymLaurent SymLaurent::from_laurent(const LaurentPoly& p, const DimVector& grade) {
  SymLaurent s(grade);
  std::size_t covered = 0;
  for (const auto& [m, c] : p.terms()) {
    OrbitKey key;
    for (int e : grade.entries()) key.emplace_back(e, 0);
    for (const auto& [v, e] : m.entries()) {
      if (v.vertex < 1 || v.vertex > grade.n() || v.slot < 1 || v.slot > grade.at(v.vertex)) {
        throw Error("variable outside grade " + to_string(grade));
      }
      key[v.vertex - 1][v.slot - 1] = e;
    }
    for (auto& row : key) std::sort(row.begin(), row.end(), std::greater<>());
    if (p.coefficient(representative(key)) != c) throw Error("polynomial is not symmetric");
    if (!s.terms_.count(key)) {
      covered += orbit_size(key);
      s.terms_.emplace(std::move(key), c);
    }
  }
  if (covered != p.size()) throw Error("polynomial is not symmetric");
  return s;
}

void SymLaurent::add_orbit(OrbitKey key, const Rational& c) {
  check_key(key, grade_);
  for (auto& row : key) std::sort(row.begin(), row.end(), std::greater<>());
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly SymLaurent::expand() const {
  LaurentPoly out;
  for (const auto& [key, c] : terms_) {
    // Distinct permutations per vertex, then their Cartesian product.
    std::vector<std::vector<std::vector<int>>> perms(key.size());
    for (std::size_t i = 0; i < key.size(); ++i) {
      std::vector<int> v = key[i];
      std::sort(v.begin(), v.end());
      do {
        perms[i].push_back(v);
      } while (std::next_permutation(v.begin(), v.end()));
    }
    std::vector<std::size_t> idx(key.size(), 0);
    while (true) {
      std::vector<ring::Monomial::Entry> es;
      for (std::size_t i = 0; i < key.size(); ++i) {
        const auto& row = perms[i][idx[i]];
        for (std::size_t j = 0; j < row.size(); ++j) {
          es.push_back({{static_cast<int>(i) + 1, static_cast<int>(j) + 1}, row[j]});
        }
      }
      out.add_term(ring::Monomial::from_entries(std::move(es)), c);
      std::size_t i = 0;
      while (i < idx.size() && ++idx[i] == perms[i].size()) idx[i++] = 0;
      if (i == idx.size()) break;
    }
  }
  return out;
}

SymLaurent& SymLaurent::operator+=(const SymLaurent& o) {
  if (!(grade_ == o.grade_)) throw GradeMismatch("adding symmetric polynomials of different grades");
  for (const auto& [k, c] : o.terms_) add_orbit(k, c);
  return *this;
}

SymLaurent& SymLaurent::operator-=(const SymLaurent& o) {
  if (!(grade_ == o.grade_)) throw GradeMismatch("subtracting symmetric polynomials of different grades");
  for (const auto& [k, c] : o.terms_) add_orbit(k, -c);
  return *this;
}

SymLaurent& SymLaurent::operator*=(const Rational& c) {
  if (c == 0) terms_.clear();
  for (auto& t : terms_) t.second *= c;
  return *this;
}

KHAElement::KHAElement(SymLaurent s) : n_(s.grade().n()) { add(s, 1); }

KHAElement KHAElement::unit(int n) { return KHAElement(SymLaurent::constant(DimVector::zero(n))); }

SymLaurent KHAElement::component(const DimVector& d) const {
  auto it = components_.find(d);
  return it == components_.end() ? SymLaurent(d) : it->second;
}

void KHAElement::add(const SymLaurent& s, const Rational& scale) {
  if (s.grade().n() != n_) throw GradeMismatch("component has the wrong vertex count");
  if (s.is_zero() || scale == 0) return;
  auto it = components_.find(s.grade());
  if (it == components_.end()) {
    components_.emplace(s.grade(), s * scale);
    return;
  }
  it->second += s * scale;
  if (it->second.is_zero()) components_.erase(it);
}

KHAElement& KHAElement::operator+=(const KHAElement& o) {
  if (o.is_zero()) return *this;
  if (is_zero() && n_ == 0) n_ = o.n_;
  for (const auto& [d, s] : o.components_) add(s, 1);
  return *this;
}

KHAElement& KHAElement::operator-=(const KHAElement& o) {
  if (o.is_zero()) return *this;
  if (is_zero() && n_ == 0) n_ = o.n_;
  for (const auto& [d, s] : o.components_) add(s, -1);
  return *this;
}

KHAElement& KHAElement::operator*=(const Rational& c) {
  if (c == 0) components_.clear();
  for (auto& [d, s] : components_) s *= c;
  return *this;
}

std::string to_string(const KHAElement& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [d, s] : e.components()) {
    if (!out.empty()) out += "\n";
    out += to_string(d) + ": " + ring::to_string(s.expand());
  }
  return out;
}

}  // namespace kha::shuffle
