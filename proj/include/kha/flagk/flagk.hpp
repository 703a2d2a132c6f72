#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"
#include "kha/flagk/localized.hpp"

namespace kha::flagk {

/// Weak composition (k_1, ..., k_n) of N; also used for the formal weights
/// just outside C(n, N) that index zero weight spaces.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {}

  int n() const { return static_cast<int>(parts_.size()); }
  int at(int i) const { return parts_.at(i - 1); }
  const std::vector<int>& parts() const { return parts_; }
  int total() const;
  /// Membership in C(n, N): all parts >= 0 and summing to N.
  bool valid(int N) const;
  /// k + e_i - e_{i+1} (the target of E_i).
  Composition raised(int i) const;
  /// k - e_i + e_{i+1}.
  Composition lowered(int i) const;

  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

std::string to_string(const Composition& k);

/// Coordinate flag: blocks[i-1] holds the coordinate lines of block i, sorted.
struct FixedPoint {
  std::vector<std::vector<int>> blocks;
  friend auto operator<=>(const FixedPoint&, const FixedPoint&) = default;
};

/// All ordered set partitions of {1..N} with block sizes k, block 1 chosen
/// first in lexicographic order of combinations. Empty for invalid k.
std::vector<FixedPoint> fixed_points(const Composition& k, int N);

struct KOperator {
  Composition source;
  Composition target;
  FracMatrix matrix;  // rows: target fixed points, cols: source fixed points
};

/// Composition a o b (b applied first).
KOperator compose(const KOperator& a, const KOperator& b);

using YoungDiagram = std::vector<int>;  // positive parts, weakly decreasing
using YoungTuple = std::vector<YoungDiagram>;

/// P(a, b): lambda_1 <= a and at most b parts, in lexicographic order.
std::vector<YoungDiagram> young_diagrams(int a, int b);

/// Product-lexicographic order: compare lambda(1) first.
bool pl_less(const YoungTuple& a, const YoungTuple& b);

enum class Side { Left, Right };

struct CheckRow {
  std::string condition;
  Composition weight;
  std::vector<int> params;  // condition-specific: i, j, r, s as applicable
  std::string status;       // pass, fail or untested
  std::size_t nonzero = 0;  // entries of lhs - rhs
};

struct VerifyOptions {
  int lo = -2, hi = 2;
  /// Negative control: flips the sign of the right-hand side of (2)(a).
  bool tamper_2a_sign = false;
};

struct SodPair {
  YoungTuple lambda, mu;
  std::string kind;  // fully-faithful or semiorthogonal
  LocalizedFraction value;
  bool pass = false;
};

struct SodReport {
  Composition k;
  std::vector<YoungTuple> tuples;
  std::size_t fixed_points = 0;
  std::vector<SodPair> pairs;
  bool full = false;
  bool pass = false;
};

struct FlagCaps {
  int max_n = 3;
  int max_N = 4;
};

/// Localization model of the weight categories K(Fl_k(C^N)), k in C(n, N).
/// Operators are cached; the cache is guarded by a mutex.
class FlagModel {
 public:
  FlagModel(int n, int N, const FlagCaps& caps = {});

  int n() const { return n_; }
  int N() const { return N_; }
  std::vector<Composition> weights() const;

  const std::vector<FixedPoint>& points(const Composition& k);

  /// E_{i,r} 1_k : K(k) -> K(k + e_i - e_{i+1}). Throws InvalidComposition
  /// unless k is in C(n, N); the target may lie outside, giving 0 rows.
  KOperator operator_E(int i, int r, const Composition& k);

  /// Diagonal entries 1 / lambda_{-1}(T*_p) and their inverses.
  std::vector<LocalizedFraction> gram(const Composition& k);
  FracMatrix euler_gram(const Composition& k);

  /// <a, b> = sum_p conj(a_p) b_p g_p.
  LocalizedFraction pairing(const Composition& k, const std::vector<LocalizedFraction>& a,
                            const std::vector<LocalizedFraction>& b);

  /// Pairing transpose; the adjunction identity is re-checked on a basis
  /// and a failure throws SingularGram.
  KOperator adjoint(const KOperator& e, Side side);

  /// E^R_{i,s} 1_k and E^L_{i,s} 1_k: adjoints of E_{i,s} 1_{k - e_i + e_{i+1}}.
  KOperator adjoint_E(int i, int s, const Composition& k, Side side);

  std::vector<CheckRow> verify_action(const VerifyOptions& opts = {});

  SodReport sod_check(const Composition& k);

  /// Class of O in K(k): 1 at every fixed point.
  std::vector<LocalizedFraction> structure_sheaf(const Composition& k);

 private:
  KOperator raw_E(int i, int r, const Composition& k);

  int n_, N_;
  std::recursive_mutex mu_;
  std::map<Composition, std::vector<FixedPoint>> points_;
  std::map<std::tuple<int, int, Composition>, KOperator> e_cache_;
  std::map<std::tuple<int, int, Composition, int>, KOperator> adj_cache_;
};

nlohmann::json to_json(const CheckRow& r);
nlohmann::json to_json(const SodReport& r);
std::string to_string(const YoungTuple& t);

}  // namespace kha::flagk
