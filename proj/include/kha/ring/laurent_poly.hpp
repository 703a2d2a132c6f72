#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <string_view>

#include "kha/ring/monomial.hpp"
#include "kha/ring/rational.hpp"

namespace kha::ring {

class SlotPermutation;

/// Multivariate Laurent polynomial over Q in canonical form: no zero
/// coefficients are stored, so equal polynomials have identical maps.
class LaurentPoly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  LaurentPoly() = default;
  explicit LaurentPoly(const Rational& c);
  explicit LaurentPoly(long c) : LaurentPoly(Rational(c)) {}

  static LaurentPoly variable(VarId v, int exponent = 1);
  static LaurentPoly monomial(const Monomial& m, const Rational& c = 1);
  /// x_hi - x_lo.
  static LaurentPoly difference(VarId hi, VarId lo);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_polynomial() const;
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const { return coefficient(Monomial{}); }

  std::set<VarId> variables() const;
  int degree_in(VarId v) const;
  int min_degree_in(VarId v) const;
  /// Componentwise minimum exponent over all terms (the largest monomial
  /// dividing every term). Undefined for zero; returns 1 there.
  Monomial min_exponents() const;

  /// Lex-largest term.
  const std::pair<const Monomial, Rational>& leading_term() const;

  /// Adds c*m in place.
  void add_term(const Monomial& m, const Rational& c);

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly& operator*=(const Rational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  LaurentPoly pow(unsigned k) const;
  /// Multiplication by a monomial.
  LaurentPoly shifted(const Monomial& m) const;
  /// Substitutes x -> x^{-1} for every variable.
  LaurentPoly inverted() const;
  /// Applies a variable renaming. The map need not be injective (used for
  /// specializations such as x_b -> x_a).
  LaurentPoly renamed(const std::function<VarId(VarId)>& rename) const;
  /// Coefficient of v^k viewed as a polynomial in v over the other variables.
  LaurentPoly coefficient_in(VarId v, int k) const;
  /// Splits into powers of v: result[k] is the coefficient of v^k.
  std::map<int, LaurentPoly> split_by(VarId v) const;

 private:
  TermMap terms_;
};

/// Canonical text form: terms in ascending monomial order joined by " + ",
/// each "p/q * x[i,j]^e * ...". The zero polynomial is "0".
std::string to_string(const LaurentPoly& p);

/// Renders with a custom variable printer (used for torus parameters).
std::string to_string(const LaurentPoly& p, const std::function<std::string(VarId)>& var_name);

/// Parses the canonical grammar. Whitespace is insignificant, a missing
/// coefficient means 1 and a missing exponent means 1.
LaurentPoly parse_laurent(std::string_view text);

/// Relabels slots within each vertex: x_{i,j} -> x_{i,sigma(j)}. Throws
/// InvalidPermutation when sigma does not describe a bijection.
LaurentPoly permute_vars(const LaurentPoly& p, const SlotPermutation& sigma);

/// Exact division in the Laurent ring. Both sides are shifted to
/// polynomials and divided with graded-lex leading terms; any nonzero
/// remainder raises InexactDivision.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q);

/// p / (x_hi - x_lo) by synthetic division in x_hi. Throws InexactDivision.
LaurentPoly exact_div_difference(const LaurentPoly& p, VarId hi, VarId lo);

/// True when (x_hi - x_lo) divides p, i.e. p vanishes at x_hi = x_lo.
bool divisible_by_difference(const LaurentPoly& p, VarId hi, VarId lo);

}  // namespace kha::ring
