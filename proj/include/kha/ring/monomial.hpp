#pragma once

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

namespace kha::ring {

/// Variable x_{vertex,slot}. Ordered by (vertex, slot).
struct VarId {
  int vertex = 1;
  int slot = 1;

  friend auto operator<=>(const VarId&, const VarId&) = default;
};

/// Laurent monomial: a finitely supported map VarId -> nonzero integer
/// exponent, stored sorted by VarId.
class Monomial {
 public:
  using Entry = std::pair<VarId, int>;

  Monomial() = default;

  static Monomial variable(VarId v, int exponent = 1);
  /// Sorts, merges repeated variables and drops zero exponents.
  static Monomial from_entries(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const { return entries_; }
  bool is_one() const { return entries_.empty(); }
  int exponent(VarId v) const;
  int total_degree() const;
  bool is_polynomial() const;

  Monomial operator*(const Monomial& other) const;
  Monomial inverse() const;
  /// Componentwise minimum / maximum over the union of supports.
  Monomial min_with(const Monomial& other) const;
  /// True when other / *this has only non-negative exponents.
  bool divides(const Monomial& other) const;
  Monomial pow(int k) const;

  /// Lexicographic comparison of exponent vectors: at the smallest VarId
  /// where the exponents differ, the smaller exponent sorts first.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

 private:
  std::vector<Entry> entries_;
};

/// Graded lexicographic order (total degree first, ties by lex).
bool grlex_less(const Monomial& a, const Monomial& b);

}  // namespace kha::ring
