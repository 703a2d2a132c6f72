#pragma once

#include <vector>

#include "kha/ring/rational_function.hpp"
#include "kha/shuffle/types.hpp"

namespace kha::shuffle {

/// Arrow counts c(i, i') of the quiver. The type-A table has one arrow
/// i+1 -> i for each i; other tables are accepted but untested.
class QuiverKernel {
 public:
  static QuiverKernel type_a(int n);
  explicit QuiverKernel(std::vector<std::vector<int>> arrows);

  int n() const { return static_cast<int>(arrows_.size()); }
  /// Number of arrows from vertex i to vertex j (1-based).
  int arrows(int i, int j) const { return arrows_.at(i - 1).at(j - 1); }

 private:
  std::vector<std::vector<int>> arrows_;
};

/// Sum of f over all slot permutations of grade alpha. Throws
/// NonPolynomialSymmetrization when the sum is not a Laurent polynomial.
SymLaurent symmetrize(const ring::RationalFunction& f, const DimVector& alpha);

/// Shuffle product, summing over the minimal coset representatives of
/// S_{alpha+beta} / (S_alpha x S_beta).
SymLaurent shuffle_mul(const SymLaurent& f, const SymLaurent& g, const QuiverKernel& kernel);
SymLaurent shuffle_mul(const SymLaurent& f, const SymLaurent& g);
KHAElement shuffle_mul(const KHAElement& f, const KHAElement& g);

/// Left-to-right shuffle product of per-vertex parts; part i must have
/// grade alpha^i * omega_i. Throws GradeMismatch otherwise.
KHAElement mu_product(const std::vector<SymLaurent>& parts);

/// One summand of a factorization f = sum c * mu(parts).
struct PbwTerm {
  Rational coeff;
  std::vector<SymLaurent> parts;
};

/// Splits f into per-vertex orbit sums, one term per orbit key.
std::vector<PbwTerm> pbw_factors(const SymLaurent& f);

/// Multiplies each grade-alpha component by (prod x_{i,j})^{-k}.
SymLaurent eta_shift(int k, const SymLaurent& s);
KHAElement eta_shift(int k, const KHAElement& e);

/// True iff every orbit exponent is <= 0.
bool in_negative_sector(const KHAElement& e);

}  // namespace kha::shuffle
