#pragma once

#include <string>

#include "kha/ring/laurent_poly.hpp"

namespace kha::ring {

/// gcd of two ordinary polynomials (non-negative exponents), normalized so
/// the lex-leading coefficient is 1. gcd(0, 0) = 0.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Quotient of Laurent polynomials in lowest terms.
///
/// Canonical form: the denominator is an ordinary polynomial not divisible
/// by any variable, with lex-leading coefficient 1; all monomial factors
/// live in the numerator; gcd(num, den) = 1. Equal functions therefore have
/// identical representations.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(LaurentPoly num);  // NOLINT(google-explicit-constructor)
  RationalFunction(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// True when the denominator is 1, i.e. the value is a Laurent polynomial.
  bool is_laurent() const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  RationalFunction operator-() const;
  RationalFunction inverse() const;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  RationalFunction permuted(const SlotPermutation& sigma) const;
  RationalFunction inverted() const;

 private:
  void normalize();

  LaurentPoly num_;
  LaurentPoly den_{Rational(1)};
};

std::string to_string(const RationalFunction& f);

}  // namespace kha::ring
