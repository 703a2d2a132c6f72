#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kha/ring/rational_function.hpp"

namespace kha::flagk {

using ring::LaurentPoly;
using ring::Rational;

/// Torus parameter t_a, stored as the variable x_{1,a}.
inline ring::VarId tvar(int a) { return {1, a}; }
inline LaurentPoly t(int a, int e = 1) { return LaurentPoly::variable(tvar(a), e); }

/// N / prod_{a<b} (t_b - t_a)^{m_ab}: the fractions met in fixed-point
/// localization. Closed under +, * and t -> t^{-1}. After every operation
/// no denominator factor divides N, which makes the representation canonical.
class LocalizedFraction {
 public:
  using Factors = std::map<std::pair<int, int>, int>;  // (a, b), a < b -> exponent

  LocalizedFraction() = default;
  LocalizedFraction(LaurentPoly num);  // NOLINT(google-explicit-constructor)
  explicit LocalizedFraction(long c) : LocalizedFraction(LaurentPoly(c)) {}

  /// 1 / (t_hi - t_lo) for distinct indices in either order.
  static LocalizedFraction inverse_difference(int hi, int lo);

  const LaurentPoly& num() const { return num_; }
  const Factors& factors() const { return factors_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return factors_.empty(); }

  LocalizedFraction& operator+=(const LocalizedFraction& o);
  LocalizedFraction& operator-=(const LocalizedFraction& o);
  LocalizedFraction& operator*=(const LocalizedFraction& o);
  friend LocalizedFraction operator+(LocalizedFraction a, const LocalizedFraction& b) { return a += b; }
  friend LocalizedFraction operator-(LocalizedFraction a, const LocalizedFraction& b) { return a -= b; }
  friend LocalizedFraction operator*(LocalizedFraction a, const LocalizedFraction& b) { return a *= b; }
  LocalizedFraction operator-() const;
  friend bool operator==(const LocalizedFraction&, const LocalizedFraction&) = default;

  /// t_a -> t_a^{-1} for every a (the dual of a torus character).
  LocalizedFraction conj() const;

  ring::RationalFunction to_rational_function() const;

 private:
  void reduce();

  LaurentPoly num_;
  Factors factors_;
};

std::string to_string(const LocalizedFraction& f);

/// Dense matrix of localized fractions.
class FracMatrix {
 public:
  FracMatrix() = default;
  FracMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static FracMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  LocalizedFraction& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const LocalizedFraction& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  FracMatrix operator*(const FracMatrix& o) const;
  FracMatrix operator+(const FracMatrix& o) const;
  FracMatrix operator-(const FracMatrix& o) const;
  FracMatrix operator-() const;
  friend bool operator==(const FracMatrix&, const FracMatrix&) = default;

  std::size_t nonzero_entries() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<LocalizedFraction> a_;
};

}  // namespace kha::flagk
