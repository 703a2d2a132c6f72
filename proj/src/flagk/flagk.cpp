#include "kha/flagk/flagk.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "kha/errors.hpp"

namespace kha::flagk {

int Composition::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Composition::valid(int N) const {
  return total() == N && std::all_of(parts_.begin(), parts_.end(), [](int p) { return p >= 0; });
}

Composition Composition::raised(int i) const {
  auto p = parts_;
  ++p.at(i - 1);
  --p.at(i);
  return Composition(std::move(p));
}

Composition Composition::lowered(int i) const {
  auto p = parts_;
  --p.at(i - 1);
  ++p.at(i);
  return Composition(std::move(p));
}

std::string to_string(const Composition& k) {
  std::string s = "(";
  for (int i = 0; i < k.n(); ++i) s += (i ? "," : "") + std::to_string(k.parts()[i]);
  return s + ")";
}

std::vector<FixedPoint> fixed_points(const Composition& k, int N) {
  std::vector<FixedPoint> out;
  if (!k.valid(N)) return out;
  FixedPoint cur;
  cur.blocks.resize(k.n());
  std::function<void(int, std::vector<int>)> rec = [&](int i, std::vector<int> remaining) {
    if (i == k.n()) {
      out.push_back(cur);
      return;
    }
    int size = k.at(i + 1);
    std::vector<bool> mask(remaining.size(), false);
    std::fill(mask.begin(), mask.begin() + size, true);
    do {
      std::vector<int> chosen, rest;
      for (std::size_t t = 0; t < remaining.size(); ++t) (mask[t] ? chosen : rest).push_back(remaining[t]);
      cur.blocks[i] = chosen;
      rec(i + 1, rest);
    } while (std::prev_permutation(mask.begin(), mask.end()));
  };
  std::vector<int> all(N);
  std::iota(all.begin(), all.end(), 1);
  rec(0, all);
  return out;
}

KOperator compose(const KOperator& a, const KOperator& b) {
  if (!(b.target == a.source)) throw Error("operators do not compose: " + to_string(b.target) + " vs " + to_string(a.source));
  return {b.source, a.target, a.matrix * b.matrix};
}

std::vector<YoungDiagram> young_diagrams(int a, int b) {
  std::vector<YoungDiagram> out;
  YoungDiagram cur;
  std::function<void(int)> rec = [&](int max_part) {
    out.push_back(cur);
    if (static_cast<int>(cur.size()) == b) return;
    for (int p = 1; p <= max_part; ++p) {
      cur.push_back(p);
      rec(p);
      cur.pop_back();
    }
  };
  rec(a);
  std::sort(out.begin(), out.end());
  return out;
}

bool pl_less(const YoungTuple& a, const YoungTuple& b) { return a < b; }

std::string to_string(const YoungTuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += "(";
    for (std::size_t j = 0; j < t[i].size(); ++j) s += (j ? "," : "") + std::to_string(t[i][j]);
    s += ")";
  }
  return s + ")";
}

// ---- model ----

FlagModel::FlagModel(int n, int N, const FlagCaps& caps) : n_(n), N_(N) {
  if (n < 2 || N < 1) throw InvalidComposition("need n >= 2 and N >= 1");
  if (n > caps.max_n || N > caps.max_N) {
    throw ResourceCapExceeded("n=" + std::to_string(n) + ", N=" + std::to_string(N) + " exceeds the configured caps");
  }
}

std::vector<Composition> FlagModel::weights() const {
  std::vector<Composition> out;
  std::vector<int> p(n_, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n_ - 1) {
      p[i] = left;
      out.emplace_back(p);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      p[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, N_);
  return out;
}

const std::vector<FixedPoint>& FlagModel::points(const Composition& k) {
  std::lock_guard lock(mu_);
  auto it = points_.find(k);
  if (it == points_.end()) it = points_.emplace(k, fixed_points(k, N_)).first;
  return it->second;
}

KOperator FlagModel::raw_E(int i, int r, const Composition& k) {
  std::lock_guard lock(mu_);
  auto key = std::make_tuple(i, r, k);
  if (auto it = e_cache_.find(key); it != e_cache_.end()) return it->second;
  Composition target = k.raised(i);
  const auto& src = points(k);
  const auto& dst = points(target);
  std::map<FixedPoint, std::size_t> row;
  for (std::size_t q = 0; q < dst.size(); ++q) row.emplace(dst[q], q);
  FracMatrix m(dst.size(), src.size());
  for (std::size_t p = 0; p < src.size(); ++p) {
    const auto& blocks = src[p].blocks;
    for (int a : blocks[i]) {
      // Move the line a from block i+1 to block i. The fibre of W over the
      // pair contributes t_a^r, the normal directions t_a / (t_a - t_b).
      FixedPoint moved = src[p];
      auto& bi = moved.blocks[i - 1];
      auto& bj = moved.blocks[i];
      bi.insert(std::upper_bound(bi.begin(), bi.end(), a), a);
      bj.erase(std::find(bj.begin(), bj.end(), a));
      LocalizedFraction entry(t(a, r + static_cast<int>(blocks[i - 1].size())));
      for (int b : blocks[i - 1]) entry *= LocalizedFraction::inverse_difference(a, b);
      m.at(row.at(moved), p) = entry;
    }
  }
  KOperator op{k, target, std::move(m)};
  e_cache_.emplace(key, op);
  return op;
}

KOperator FlagModel::operator_E(int i, int r, const Composition& k) {
  if (k.n() != n_ || !k.valid(N_)) throw InvalidComposition("weight " + to_string(k) + " is not in C(n, N)");
  if (i < 1 || i >= n_) throw InvalidComposition("vertex " + std::to_string(i) + " out of range");
  return raw_E(i, r, k);
}

std::vector<LocalizedFraction> FlagModel::gram(const Composition& k) {
  std::vector<LocalizedFraction> g;
  for (const auto& p : points(k)) {
    LocalizedFraction e(1);
    for (std::size_t i = 0; i < p.blocks.size(); ++i) {
      for (std::size_t j = i + 1; j < p.blocks.size(); ++j) {
        for (int a : p.blocks[i]) {
          for (int b : p.blocks[j]) {
            // 1 / (1 - t_a/t_b) = t_b / (t_b - t_a)
            e *= LocalizedFraction(t(b)) * LocalizedFraction::inverse_difference(b, a);
          }
        }
      }
    }
    g.push_back(std::move(e));
  }
  return g;
}

FracMatrix FlagModel::euler_gram(const Composition& k) {
  auto g = gram(k);
  FracMatrix m(g.size(), g.size());
  for (std::size_t p = 0; p < g.size(); ++p) m.at(p, p) = g[p];
  return m;
}

namespace {

// lambda_{-1}(T*_p) = prod (1 - t_a/t_b), the inverse of a Gram entry.
LaurentPoly lambda_cotangent(const FixedPoint& p) {
  LaurentPoly e(1);
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < p.blocks.size(); ++j) {
      for (int a : p.blocks[i]) {
        for (int b : p.blocks[j]) e *= LaurentPoly(1) - t(a) * t(b, -1);
      }
    }
  }
  return e;
}

}  // namespace

LocalizedFraction FlagModel::pairing(const Composition& k, const std::vector<LocalizedFraction>& a,
                                     const std::vector<LocalizedFraction>& b) {
  auto g = gram(k);
  if (a.size() != g.size() || b.size() != g.size()) throw Error("pairing: vector size mismatch");
  LocalizedFraction s;
  for (std::size_t p = 0; p < g.size(); ++p) s += a[p].conj() * b[p] * g[p];
  return s;
}

KOperator FlagModel::adjoint(const KOperator& e, Side side) {
  const auto& src = points(e.source);
  auto g_src = gram(e.source);
  auto g_dst = gram(e.target);
  for (const auto& g : g_src) {
    if (g.is_zero()) throw SingularGram("zero Gram entry");
  }
  for (const auto& g : g_dst) {
    if (g.is_zero()) throw SingularGram("zero Gram entry");
  }
  std::size_t S = g_src.size(), T = g_dst.size();
  FracMatrix m(S, T);
  for (std::size_t p = 0; p < S; ++p) {
    LocalizedFraction inv_g(lambda_cotangent(src[p]));
    for (std::size_t q = 0; q < T; ++q) {
      const auto& eqp = e.matrix.at(q, p);
      if (eqp.is_zero()) continue;
      if (side == Side::Right) {
        m.at(p, q) = eqp.conj() * g_dst[q] * inv_g;
      } else {
        m.at(p, q) = (eqp * g_dst[q] * inv_g).conj();
      }
    }
  }
  // Adjunction on basis vectors: <E e_p, e_q> = <e_p, E^R e_q> or
  // <E^L e_q, e_p> = <e_q, E e_p>.
  for (std::size_t p = 0; p < S; ++p) {
    for (std::size_t q = 0; q < T; ++q) {
      bool ok = side == Side::Right ? e.matrix.at(q, p).conj() * g_dst[q] == m.at(p, q) * g_src[p]
                                    : m.at(p, q).conj() * g_src[p] == e.matrix.at(q, p) * g_dst[q];
      if (!ok) throw SingularGram("adjunction identity failed after construction");
    }
  }
  return {e.target, e.source, std::move(m)};
}

KOperator FlagModel::adjoint_E(int i, int s, const Composition& k, Side side) {
  std::lock_guard lock(mu_);
  auto key = std::make_tuple(i, s, k, side == Side::Right ? 1 : 0);
  if (auto it = adj_cache_.find(key); it != adj_cache_.end()) return it->second;
  KOperator a = adjoint(raw_E(i, s, k.lowered(i)), side);
  adj_cache_.emplace(key, a);
  return a;
}

std::vector<LocalizedFraction> FlagModel::structure_sheaf(const Composition& k) {
  return std::vector<LocalizedFraction>(points(k).size(), LocalizedFraction(1));
}

std::vector<CheckRow> FlagModel::verify_action(const VerifyOptions& opts) {
  std::vector<CheckRow> rows;
  auto E = [&](int i, int r, const Composition& k) { return raw_E(i, r, k); };
  auto R = [&](int i, int s, const Composition& k) { return adjoint_E(i, s, k, Side::Right); };
  auto L = [&](int i, int s, const Composition& k) { return adjoint_E(i, s, k, Side::Left); };
  auto record = [&](const std::string& cond, const Composition& k, std::vector<int> params, const FracMatrix& lhs,
                    const FracMatrix& rhs) {
    FracMatrix diff = lhs - rhs;
    std::size_t nz = diff.nonzero_entries();
    rows.push_back({cond, k, std::move(params), nz == 0 ? "pass" : "fail", nz});
  };
  auto skip = [&](const std::string& cond, const Composition& k, std::vector<int> params, const char* status) {
    rows.push_back({cond, k, std::move(params), status, 0});
  };

  for (const auto& k : weights()) {
    for (int i = 1; i < n_; ++i) {
      int width = k.at(i) + k.at(i + 1);
      for (int r = opts.lo; r <= opts.hi; ++r) {
        // (1): adjunction for the generators leaving k.
        for (Side side : {Side::Right, Side::Left}) {
          KOperator e = E(i, r, k);
          KOperator a = adjoint(e, side);
          auto g_src = gram(k), g_dst = gram(e.target);
          std::size_t bad = 0;
          for (std::size_t p = 0; p < g_src.size(); ++p) {
            for (std::size_t q = 0; q < g_dst.size(); ++q) {
              bool ok = side == Side::Right
                            ? e.matrix.at(q, p).conj() * g_dst[q] == a.matrix.at(p, q) * g_src[p]
                            : a.matrix.at(p, q).conj() * g_src[p] == e.matrix.at(q, p) * g_dst[q];
              bad += !ok;
            }
          }
          rows.push_back({side == Side::Right ? "1R" : "1L", k, {i, r}, bad == 0 ? "pass" : "fail", bad});
        }

        // (3)
        FracMatrix id = FracMatrix::identity(points(k).size());
        // At k_i + k_{i+1} = 0 both composites pass through weights outside
        // C(n, N) and vanish, so these rows cannot pass; they are kept.
        FracMatrix lhs_r = compose(E(i, r, k.lowered(i)), R(i, r, k)).matrix +
                           compose(R(i, r - 1, k.raised(i)), E(i, r - 1, k)).matrix;
        record("3R", k, {i, r}, lhs_r, id);
        FracMatrix lhs_l = compose(L(i, r - 1, k.raised(i)), E(i, r - 1, k)).matrix +
                           compose(E(i, r, k.lowered(i)), L(i, r, k)).matrix;
        record("3L", k, {i, r}, lhs_l, id);

        for (int s = opts.lo; s <= opts.hi; ++s) {
          // (2)(a)
          FracMatrix lhs = compose(E(i, r, k.raised(i)), E(i, s, k)).matrix;
          if (r - s == -1) {
            record("2a-zero", k, {i, r, s}, lhs, FracMatrix(lhs.rows(), lhs.cols()));
          } else {
            FracMatrix rhs = compose(E(i, s - 1, k.raised(i)), E(i, r + 1, k)).matrix;
            record("2a", k, {i, r, s}, lhs, opts.tamper_2a_sign ? rhs : -rhs);
          }

          // (4)(a)
          int d = r - s;
          if (1 <= d && d <= width - 1) {
            record("4aR", k, {i, r, s}, compose(E(i, r, k.lowered(i)), R(i, s, k)).matrix,
                   -compose(R(i, s - 1, k.raised(i)), E(i, r - 1, k)).matrix);
          } else {
            skip("4aR", k, {i, r, s}, "untested");
          }
          if (-width + 1 <= d && d <= -1) {
            record("4aL", k, {i, r, s}, compose(E(i, r, k.lowered(i)), L(i, s, k)).matrix,
                   -compose(L(i, s - 1, k.raised(i)), E(i, r - 1, k)).matrix);
          } else {
            skip("4aL", k, {i, r, s}, "untested");
          }

          for (int j = 1; j < n_; ++j) {
            if (j == i) continue;
            if (j == i + 1) {
              // (2)(b)
              FracMatrix lhs2 = compose(E(i, r, k.raised(j)), E(j, s, k)).matrix;
              FracMatrix rhs2 = compose(E(i, r + 1, k.raised(j)), E(j, s - 1, k)).matrix +
                                compose(E(j, s, k.raised(i)), E(i, r, k)).matrix;
              record("2b", k, {i, j, r, s}, lhs2, rhs2);
            }
            if (std::abs(i - j) >= 2) {
              // (2)(c), (4)(c)
              record("2c", k, {i, j, r, s}, compose(E(i, r, k.raised(j)), E(j, s, k)).matrix,
                     compose(E(j, s, k.raised(i)), E(i, r, k)).matrix);
              record("4cR", k, {i, j, r, s}, compose(E(i, r, k.lowered(j)), R(j, s, k)).matrix,
                     compose(R(j, s, k.raised(i)), E(i, r, k)).matrix);
              record("4cL", k, {i, j, r, s}, compose(E(i, r, k.lowered(j)), L(j, s, k)).matrix,
                     compose(L(j, s, k.raised(i)), E(i, r, k)).matrix);
              continue;
            }
            // (4)(b)
            if (j == i + 1) {
              record("4bR+", k, {i, j, r, s}, compose(E(i, r, k.lowered(j)), R(j, s, k)).matrix,
                     -compose(R(j, s + 1, k.raised(i)), E(i, r + 1, k)).matrix);
              record("4bL+", k, {i, j, r, s}, compose(E(i, r, k.lowered(j)), L(j, s, k)).matrix,
                     compose(L(j, s, k.raised(i)), E(i, r, k)).matrix);
            } else {
              record("4bR-", k, {i, j, r, s}, compose(E(i, r, k.lowered(j)), R(j, s, k)).matrix,
                     compose(R(j, s, k.raised(i)), E(i, r, k)).matrix);
              record("4bL-", k, {i, j, r, s}, compose(E(i, r, k.lowered(j)), L(j, s, k)).matrix,
                     -compose(L(j, s + 1, k.raised(i)), E(i, r + 1, k)).matrix);
            }
          }
        }
      }
    }
  }
  return rows;
}

SodReport FlagModel::sod_check(const Composition& k) {
  if (k.n() != n_ || !k.valid(N_)) throw InvalidComposition("weight " + to_string(k) + " is not in C(n, N)");
  SodReport rep;
  rep.k = k;
  rep.fixed_points = points(k).size();

  // lambda(i) in P(k_{i+1}, k_1 + ... + k_i), tuples in product-lex order.
  std::vector<std::vector<YoungDiagram>> factors;
  std::vector<int> rows_allowed;
  int prefix = 0;
  for (int i = 1; i < n_; ++i) {
    prefix += k.at(i);
    rows_allowed.push_back(prefix);
    factors.push_back(young_diagrams(k.at(i + 1), prefix));
  }
  std::function<void(std::size_t, YoungTuple&)> rec = [&](std::size_t i, YoungTuple& cur) {
    if (i == factors.size()) {
      rep.tuples.push_back(cur);
      return;
    }
    for (const auto& d : factors[i]) {
      cur.push_back(d);
      rec(i + 1, cur);
      cur.pop_back();
    }
  };
  YoungTuple cur;
  rec(0, cur);
  std::sort(rep.tuples.begin(), rep.tuples.end(), pl_less);

  std::vector<int> eta(n_, 0);
  eta.back() = N_;
  std::vector<std::vector<LocalizedFraction>> classes;
  for (const auto& tuple : rep.tuples) {
    // E_{1,lambda(1)} ... E_{n-1,lambda(n-1)} 1_eta: the last factor acts
    // first, and within E_{i,lambda} = E_{i,lambda_1} ... E_{i,lambda_b}
    // the part lambda_b acts first. Diagrams are padded with zeros to b parts.
    Composition w{eta};
    std::vector<LocalizedFraction> v{LocalizedFraction(1)};
    for (int i = n_ - 1; i >= 1; --i) {
      std::vector<int> parts = tuple[i - 1];
      parts.resize(rows_allowed[i - 1], 0);
      for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
        KOperator e = raw_E(i, *it, w);
        std::vector<LocalizedFraction> next(e.matrix.rows());
        for (std::size_t q = 0; q < e.matrix.rows(); ++q) {
          for (std::size_t p = 0; p < e.matrix.cols(); ++p) next[q] += e.matrix.at(q, p) * v[p];
        }
        v = std::move(next);
        w = e.target;
      }
    }
    if (!(w == k)) throw Error("SOD composite does not land in weight " + to_string(k));
    classes.push_back(std::move(v));
  }

  rep.pass = true;
  for (std::size_t a = 0; a < rep.tuples.size(); ++a) {
    for (std::size_t b = a; b < rep.tuples.size(); ++b) {
      // <E_lambda 1, E_mu 1> is the single entry of E_lambda^R E_mu on K(Fl_eta).
      LocalizedFraction val = pairing(k, classes[a], classes[b]);
      bool ff = a == b;
      bool ok = ff ? val == LocalizedFraction(1) : val.is_zero();
      rep.pairs.push_back({rep.tuples[a], rep.tuples[b], ff ? "fully-faithful" : "semiorthogonal", val, ok});
      rep.pass = rep.pass && ok;
    }
  }
  rep.full = rep.pass && rep.tuples.size() == rep.fixed_points;
  return rep;
}

nlohmann::json to_json(const CheckRow& r) {
  nlohmann::json j = {{"condition", r.condition},
                      {"weight", r.weight.parts()},
                      {"params", r.params},
                      {"status", r.status},
                      {"lhs_minus_rhs_nonzero_entries", r.nonzero}};
  if (r.status == "pass" || r.status == "fail") {
    j["pass"] = r.status == "pass";
  } else {
    j["pass"] = nullptr;
  }
  return j;
}

nlohmann::json to_json(const SodReport& r) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& p : r.pairs) {
    pairs.push_back({{"lambda", p.lambda}, {"mu", p.mu}, {"kind", p.kind}, {"value", to_string(p.value)}, {"pass", p.pass}});
  }
  return {{"k", r.k.parts()},
          {"blocks", r.tuples.size()},
          {"fixed_points", r.fixed_points},
          {"full", r.full},
          {"pass", r.pass},
          {"pairs", pairs}};
}

}  // namespace kha::flagk
