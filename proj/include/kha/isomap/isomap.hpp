#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "kha/shuffle/shuffle.hpp"
#include "kha/uplus/uplus.hpp"

namespace kha::isomap {

using shuffle::DimVector;
using shuffle::KHAElement;
using shuffle::SymLaurent;
using uplus::BiGrade;
using uplus::UElement;
using uplus::Word;

/// Evaluates phi(e_{i,r}) = x_{i,1}^{-r}, extended multiplicatively.
/// Products of prefixes are memoized; an instance is not thread-safe.
class Phi {
 public:
  explicit Phi(int n);

  int n() const { return n_; }
  SymLaurent word(const Word& w);
  KHAElement operator()(const UElement& u);

 private:
  int n_;
  shuffle::QuiverKernel kernel_;
  std::map<Word, SymLaurent> memo_;
};

KHAElement phi(const UElement& u, int n);

struct RelationRow {
  std::string family;  // same-vertex, forced-zero, adjacent, distant
  int i = 0, j = 0, r = 0, s = 0;
  bool pass = false;
};

/// Checks the three relation families under phi for all vertices and all
/// r, s in [lo, hi]. Row order is fixed: by vertex, then r, then s.
std::vector<RelationRow> verify_relations(int n, int lo, int hi);

/// p_d(m): partitions of m into at most d parts.
std::uint64_t partition_count(int d, int m);

/// Sum over compositions m = m_1 + ... + m_n of prod p_{alpha^i}(m_i).
std::uint64_t sector_dimension(const BiGrade& g);

struct Caps {
  int max_alpha_sum = 4;
  int max_m = 6;
  std::size_t max_coordinates = 5000;
};

struct DimReport {
  BiGrade grade;
  std::size_t basis_size = 0;
  std::uint64_t formula_dim = 0;
  std::size_t phi_rank = 0;
  /// Every phi-image lies in the grade (alpha, -m) part of the negative sector.
  bool in_sector = false;
  bool pass = false;
};

/// Exact rank of the phi-images of canonical_basis(g) in orbit-sum
/// coordinates, compared with the basis size and sector_dimension. Throws
/// ResourceCapExceeded outside `caps` and NegativeDegree for m < 0.
DimReport graded_rank(const BiGrade& g, const Caps& caps = {});
DimReport graded_rank(const BiGrade& g, Phi& phi, const Caps& caps = {});

/// Rank over Q of a matrix with rational entries (fraction-free elimination).
std::size_t exact_rank(const std::vector<std::vector<ring::Rational>>& rows);

struct IntertwineReport {
  int k = 0;
  int samples = 0;
  int failures = 0;
  bool pass() const { return failures == 0; }
};

/// phi(tau_k w) = eta_k(phi(w)) on `samples` random words (fixed seed).
IntertwineReport intertwine_check(int n, int k, int samples, std::uint64_t seed);

nlohmann::json to_json(const DimReport& r);
nlohmann::json to_json(const RelationRow& r);

}  // namespace kha::isomap
