#pragma once

#include <map>
#include <string>
#include <vector>

#include "kha/ring/laurent_poly.hpp"

namespace kha::shuffle {

using ring::LaurentPoly;
using ring::Rational;

/// Dimension vector (alpha^1, ..., alpha^n) with 1-based vertex access.
class DimVector {
 public:
  DimVector() = default;
  explicit DimVector(std::vector<int> entries);
  static DimVector zero(int n) { return DimVector(std::vector<int>(n, 0)); }
  /// omega_i.
  static DimVector unit(int n, int i);

  int n() const { return static_cast<int>(entries_.size()); }
  int at(int vertex) const { return entries_.at(vertex - 1); }
  const std::vector<int>& entries() const { return entries_; }
  int total() const;
  bool is_zero() const { return total() == 0; }

  DimVector operator+(const DimVector& o) const;
  friend auto operator<=>(const DimVector&, const DimVector&) = default;

 private:
  std::vector<int> entries_;
};

std::string to_string(const DimVector& d);

/// Per vertex, a weakly decreasing list of alpha^i exponents. Identifies the
/// orbit sum of the monomial prod x_{i,j}^{key[i-1][j-1]}.
using OrbitKey = std::vector<std::vector<int>>;

/// Symmetric Laurent polynomial of a fixed grade, stored in the basis of
/// orbit sums (monomial symmetric functions per vertex).
class SymLaurent {
 public:
  using TermMap = std::map<OrbitKey, Rational>;

  SymLaurent() = default;
  explicit SymLaurent(DimVector grade) : grade_(std::move(grade)) {}

  /// The constant `c` in the given grade.
  static SymLaurent constant(DimVector grade, const Rational& c = 1);
  /// x_{i,1}^r in grade omega_i.
  static SymLaurent degree_one(int n, int i, int r);
  /// Reads off orbit coefficients of a polynomial that must be invariant
  /// under the slot permutations of `grade`. Throws Error if it is not.
  static SymLaurent from_laurent(const LaurentPoly& p, const DimVector& grade);

  const DimVector& grade() const { return grade_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c times the orbit sum of `key`; the key is sorted first.
  void add_orbit(OrbitKey key, const Rational& c);

  /// Full monomial expansion in the variables x_{i,j}, j <= alpha^i.
  LaurentPoly expand() const;

  SymLaurent& operator+=(const SymLaurent& o);
  SymLaurent& operator-=(const SymLaurent& o);
  SymLaurent& operator*=(const Rational& c);
  friend SymLaurent operator+(SymLaurent a, const SymLaurent& b) { return a += b; }
  friend SymLaurent operator-(SymLaurent a, const SymLaurent& b) { return a -= b; }
  friend SymLaurent operator*(SymLaurent a, const Rational& c) { return a *= c; }
  friend bool operator==(const SymLaurent&, const SymLaurent&) = default;

 private:
  DimVector grade_;
  TermMap terms_;
};

/// Number of distinct monomials in the orbit of `key`.
std::size_t orbit_size(const OrbitKey& key);

/// Finite sum of homogeneous components. Zero components are never stored.
class KHAElement {
 public:
  KHAElement() = default;
  explicit KHAElement(int n) : n_(n) {}
  KHAElement(SymLaurent s);  // NOLINT(google-explicit-constructor)

  static KHAElement unit(int n);

  int n() const { return n_; }
  const std::map<DimVector, SymLaurent>& components() const { return components_; }
  bool is_zero() const { return components_.empty(); }
  /// The component of grade d (zero if absent).
  SymLaurent component(const DimVector& d) const;

  KHAElement& operator+=(const KHAElement& o);
  KHAElement& operator-=(const KHAElement& o);
  KHAElement& operator*=(const Rational& c);
  friend KHAElement operator+(KHAElement a, const KHAElement& b) { return a += b; }
  friend KHAElement operator-(KHAElement a, const KHAElement& b) { return a -= b; }
  friend KHAElement operator*(KHAElement a, const Rational& c) { return a *= c; }
  friend bool operator==(const KHAElement&, const KHAElement&) = default;

 private:
  void add(const SymLaurent& s, const Rational& scale);

  int n_ = 0;
  std::map<DimVector, SymLaurent> components_;
};

/// Per grade: "(a1,..,an): <expanded polynomial>", one grade per line; "0" when empty.
std::string to_string(const KHAElement& e);

}  // namespace kha::shuffle
