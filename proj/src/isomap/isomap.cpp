#include "kha/isomap/isomap.hpp"

#include <random>
#include <set>

#include "kha/errors.hpp"

namespace kha::isomap {

using ring::Rational;

Phi::Phi(int n) : n_(n), kernel_(shuffle::QuiverKernel::type_a(n)) {
  if (n < 1) throw Error("phi needs n >= 1");
}

SymLaurent Phi::word(const Word& w) {
  if (w.empty()) return SymLaurent::constant(DimVector::zero(n_));
  if (auto it = memo_.find(w); it != memo_.end()) return it->second;
  const auto& last = w.back();
  if (last.vertex < 1 || last.vertex > n_) throw Error("letter vertex out of range");
  Word prefix(w.begin(), w.end() - 1);
  SymLaurent head = word(prefix);
  SymLaurent result = shuffle::shuffle_mul(head, SymLaurent::degree_one(n_, last.vertex, -last.degree), kernel_);
  return memo_.emplace(w, std::move(result)).first->second;
}

KHAElement Phi::operator()(const UElement& u) {
  KHAElement out(n_);
  for (const auto& [w, c] : u.terms()) out += KHAElement(word(w)) * c;
  return out;
}

KHAElement phi(const UElement& u, int n) {
  Phi p(n);
  return p(u);
}

std::vector<RelationRow> verify_relations(int n, int lo, int hi) {
  Phi phi(n);
  auto e = [&](int i, int r) { return KHAElement(phi.word({{i, r}})); };
  auto mul = [](const KHAElement& a, const KHAElement& b) { return shuffle::shuffle_mul(a, b); };
  std::vector<RelationRow> rows;
  for (int i = 1; i <= n; ++i) {
    for (int r = lo; r <= hi; ++r) {
      rows.push_back({"forced-zero", i, i, r, r + 1, mul(e(i, r), e(i, r + 1)).is_zero()});
      for (int s = lo; s <= hi; ++s) {
        bool ok = (mul(e(i, r), e(i, s)) + mul(e(i, s - 1), e(i, r + 1))).is_zero();
        rows.push_back({"same-vertex", i, i, r, s, ok});
      }
    }
  }
  for (int i = 1; i < n; ++i) {
    for (int r = lo; r <= hi; ++r) {
      for (int s = lo; s <= hi; ++s) {
        KHAElement lhs = mul(e(i + 1, s), e(i, r));
        KHAElement rhs = mul(e(i, r), e(i + 1, s)) - mul(e(i, r + 1), e(i + 1, s - 1));
        rows.push_back({"adjacent", i + 1, i, r, s, lhs == rhs});
      }
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 2; j <= n; ++j) {
      for (int r = lo; r <= hi; ++r) {
        for (int s = lo; s <= hi; ++s) {
          rows.push_back({"distant", i, j, r, s, mul(e(i, r), e(j, s)) == mul(e(j, s), e(i, r))});
        }
      }
    }
  }
  return rows;
}

std::uint64_t partition_count(int d, int m) {
  if (m < 0 || d < 0) return 0;
  // p[k][t] = partitions of t into at most k parts.
  std::vector<std::vector<std::uint64_t>> p(d + 1, std::vector<std::uint64_t>(m + 1, 0));
  p[0][0] = 1;
  for (int k = 1; k <= d; ++k) {
    for (int t = 0; t <= m; ++t) p[k][t] = p[k - 1][t] + (t >= k ? p[k][t - k] : 0);
  }
  return p[d][m];
}

std::uint64_t sector_dimension(const BiGrade& g) {
  if (g.m < 0) throw NegativeDegree("sector_dimension needs m >= 0");
  std::vector<std::uint64_t> acc(g.m + 1, 0);
  acc[0] = 1;
  for (int i = 1; i <= g.alpha.n(); ++i) {
    std::vector<std::uint64_t> next(g.m + 1, 0);
    for (int t = 0; t <= g.m; ++t) {
      for (int mi = 0; mi + t <= g.m; ++mi) next[t + mi] += acc[t] * partition_count(g.alpha.at(i), mi);
    }
    acc = std::move(next);
  }
  return acc[g.m];
}

std::size_t exact_rank(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return 0;
  std::size_t cols = rows.front().size();
  // Clear denominators row by row, then Bareiss elimination over Z.
  std::vector<std::vector<ring::Integer>> a;
  for (const auto& row : rows) {
    ring::Integer l = 1;
    for (const auto& q : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    std::vector<ring::Integer> r;
    for (const auto& q : row) r.push_back(q.get_num() * (l / q.get_den()));
    a.push_back(std::move(r));
  }
  std::size_t rank = 0;
  ring::Integer prev = 1;
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

DimReport graded_rank(const BiGrade& g, const Caps& caps) {
  Phi phi(g.alpha.n());
  return graded_rank(g, phi, caps);
}

DimReport graded_rank(const BiGrade& g, Phi& phi, const Caps& caps) {
  if (g.m < 0) throw NegativeDegree("graded_rank needs m >= 0");
  if (g.alpha.total() > caps.max_alpha_sum || g.m > caps.max_m) {
    throw ResourceCapExceeded("grade " + shuffle::to_string(g.alpha) + ", m=" + std::to_string(g.m) +
                              " exceeds the configured caps");
  }
  DimReport rep;
  rep.grade = g;
  auto basis = uplus::canonical_basis(g);
  rep.basis_size = basis.size();
  rep.formula_dim = sector_dimension(g);

  std::vector<SymLaurent> images;
  std::set<shuffle::OrbitKey> keys;
  rep.in_sector = true;
  for (const auto& w : basis) {
    images.push_back(phi.word(w));
    for (const auto& [key, c] : images.back().terms()) {
      keys.insert(key);
      int total = 0;
      for (const auto& row : key) {
        for (int x : row) {
          total += x;
          if (x > 0) rep.in_sector = false;
        }
      }
      if (total != -g.m) rep.in_sector = false;
    }
    if (keys.size() > caps.max_coordinates) throw ResourceCapExceeded("orbit coordinate space exceeds the cap");
  }
  std::map<shuffle::OrbitKey, std::size_t> col;
  for (const auto& k : keys) col.emplace(k, col.size());
  std::vector<std::vector<Rational>> m(images.size(), std::vector<Rational>(keys.size(), 0));
  for (std::size_t r = 0; r < images.size(); ++r) {
    for (const auto& [key, c] : images[r].terms()) m[r][col.at(key)] = c;
  }
  rep.phi_rank = exact_rank(m);
  rep.pass = rep.basis_size == rep.formula_dim && rep.formula_dim == rep.phi_rank;
  return rep;
}

IntertwineReport intertwine_check(int n, int k, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len(0, 4), vert(1, n), deg(-3, 3);
  Phi phi(n);
  IntertwineReport rep{k, samples, 0};
  for (int t = 0; t < samples; ++t) {
    Word w(len(rng));
    for (auto& l : w) l = {vert(rng), deg(rng)};
    if (!(phi.word(uplus::tau_shift(k, w)) == shuffle::eta_shift(k, phi.word(w)))) ++rep.failures;
  }
  return rep;
}

nlohmann::json to_json(const DimReport& r) {
  return {{"grade", {{"alpha", r.grade.alpha.entries()}, {"m", r.grade.m}}},
          {"basis_size", r.basis_size},
          {"formula_dim", r.formula_dim},
          {"phi_rank", r.phi_rank},
          {"in_sector", r.in_sector},
          {"pass", r.pass}};
}

nlohmann::json to_json(const RelationRow& r) {
  return {{"family", r.family}, {"i", r.i}, {"j", r.j}, {"r", r.r}, {"s", r.s}, {"pass", r.pass}};
}

}  // namespace kha::isomap
