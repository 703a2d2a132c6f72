#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "kha/ring/rational.hpp"
#include "kha/shuffle/types.hpp"

namespace kha::uplus {

using ring::Rational;
using shuffle::DimVector;

/// Generator e_{vertex,degree}.
struct Letter {
  int vertex = 1;
  int degree = 0;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

struct BiGrade {
  DimVector alpha;
  int m = 0;
  friend bool operator==(const BiGrade&, const BiGrade&) = default;
};

/// Bigrade of a word over n vertices: (sum of omega_i, sum of r).
BiGrade bigrade(const Word& w, int n);

/// Rational combination of words; multiplication is concatenation.
class UElement {
 public:
  using TermMap = std::map<Word, Rational>;

  UElement() = default;
  explicit UElement(Word w, const Rational& c = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Word& w, const Rational& c);

  UElement& operator+=(const UElement& o);
  UElement& operator-=(const UElement& o);
  UElement& operator*=(const Rational& c);
  friend UElement operator+(UElement a, const UElement& b) { return a += b; }
  friend UElement operator-(UElement a, const UElement& b) { return a -= b; }
  friend UElement operator*(UElement a, const Rational& c) { return a *= c; }
  friend UElement operator*(const UElement& a, const UElement& b);
  friend bool operator==(const UElement&, const UElement&) = default;

 private:
  TermMap terms_;
};

/// Pairs a < b with vertex_a > vertex_b.
int inversions(const Word& w);

/// Termination measure, compared lexicographically: (inversions, sum of r^2).
std::pair<int, long long> potential(const Word& w);

enum class Strategy { Leftmost, Rightmost };

/// Rewrites the leftmost (or rightmost) reducible adjacent pair of w, or
/// returns nullopt when w is already in normal form.
std::optional<UElement> rewrite_step(const Word& w, Strategy strategy = Strategy::Leftmost);

/// True when no adjacent pair is reducible: vertices weakly increase and
/// loop degrees weakly decrease within each vertex.
bool is_normal(const Word& w);

UElement normal_form(const UElement& u, Strategy strategy = Strategy::Leftmost);
UElement normal_form(const Word& w, Strategy strategy = Strategy::Leftmost);

/// e_{i,r} -> e_{i,r+k}.
Word tau_shift(int k, const Word& w);
UElement tau_shift(int k, const UElement& u);

/// Normal-form words of bigrade g with all degrees >= 0: e_{1,r_{1,1}} ...
/// e_{n,r_{n,a^n}} with r_{i,1} >= ... >= 0. Ordered by the concatenated,
/// vertex-major degree vector, lexicographically largest first. Throws
/// NegativeDegree when g.m < 0.
std::vector<Word> canonical_basis(const BiGrade& g);

/// "e[i,r] e[i,r] ..."; the unit word may be written "1" or left empty.
Word parse_word(std::string_view text);
std::string to_string(const Word& w);
/// "p/q * e[..] e[..] + ...", "0" for zero; the unit word is printed as its coefficient alone.
std::string to_string(const UElement& u);

/// {"terms": [{"coeff": "p/q", "word": [[i,r], ...]}]}
nlohmann::json to_json(const UElement& u);
UElement uelement_from_json(const nlohmann::json& j);

}  // namespace kha::uplus
