#include "kha/shuffle/shuffle.hpp"

#include <algorithm>
#include <functional>

#include "kha/errors.hpp"
#include "kha/ring/permutation.hpp"

namespace kha::shuffle {

using ring::Monomial;
using ring::VarId;

QuiverKernel QuiverKernel::type_a(int n) {
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 1; i < n; ++i) a[i][i - 1] = 1;  // arrow i+1 -> i
  return QuiverKernel(std::move(a));
}

QuiverKernel::QuiverKernel(std::vector<std::vector<int>> arrows) : arrows_(std::move(arrows)) {
  for (const auto& row : arrows_) {
    if (row.size() != arrows_.size()) throw Error("arrow table must be square");
    for (int c : row) {
      if (c < 0) throw Error("arrow counts must be non-negative");
    }
  }
}

namespace {

// slot_map[i-1][j-1] = image slot of x_{i,j}; visits every element of a
// product of per-vertex permutation families and reports its sign.
using SlotMap = std::vector<std::vector<int>>;

void for_each_combination(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i + 1;
  while (true) {
    fn(c);
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i + 1) --i;
    if (i < 0) return;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

// All shuffles of the f-slots 1..alpha^i with the g-slots alpha^i+1..gamma^i.
void for_each_shuffle(const DimVector& alpha, const DimVector& gamma,
                      const std::function<void(const SlotMap&, int)>& fn) {
  int n = gamma.n();
  std::vector<std::vector<std::vector<int>>> choices(n);
  std::vector<std::vector<int>> parities(n);
  for (int i = 1; i <= n; ++i) {
    int a = alpha.at(i), c = gamma.at(i);
    for_each_combination(c, a, [&](const std::vector<int>& s) {
      std::vector<int> map(c);
      std::vector<bool> used(c + 1, false);
      int parity = 0;
      for (int j = 0; j < a; ++j) {
        map[j] = s[j];
        used[s[j]] = true;
        parity += s[j] - (j + 1);
      }
      int next = 1;
      for (int j = a; j < c; ++j) {
        while (used[next]) ++next;
        map[j] = next++;
      }
      choices[i - 1].push_back(std::move(map));
      parities[i - 1].push_back(parity % 2);
    });
  }
  std::vector<std::size_t> idx(n, 0);
  SlotMap current(n);
  while (true) {
    int parity = 0;
    for (int i = 0; i < n; ++i) {
      current[i] = choices[i][idx[i]];
      parity += parities[i][idx[i]];
    }
    fn(current, parity % 2 == 0 ? 1 : -1);
    int i = 0;
    while (i < n && ++idx[i] == choices[i].size()) idx[i++] = 0;
    if (i == n) return;
  }
}

// Every element of S_alpha, with its sign.
void for_each_permutation(const DimVector& alpha, const std::function<void(const SlotMap&, int)>& fn) {
  int n = alpha.n();
  std::vector<std::vector<std::vector<int>>> perms(n);
  std::vector<std::vector<int>> signs(n);
  for (int i = 0; i < n; ++i) {
    std::vector<int> p(alpha.entries()[i]);
    for (std::size_t j = 0; j < p.size(); ++j) p[j] = static_cast<int>(j) + 1;
    do {
      perms[i].push_back(p);
      int inv = 0;
      for (std::size_t a = 0; a < p.size(); ++a) {
        for (std::size_t b = a + 1; b < p.size(); ++b) inv += p[a] > p[b];
      }
      signs[i].push_back(inv % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  std::vector<std::size_t> idx(n, 0);
  SlotMap current(n);
  while (true) {
    int sign = 1;
    for (int i = 0; i < n; ++i) {
      current[i] = perms[i][idx[i]];
      sign *= signs[i][idx[i]];
    }
    fn(current, sign);
    int i = 0;
    while (i < n && ++idx[i] == perms[i].size()) idx[i++] = 0;
    if (i == n) return;
  }
}

LaurentPoly relabel(const LaurentPoly& p, const SlotMap& m) {
  return p.renamed([&](VarId v) { return VarId{v.vertex, m[v.vertex - 1][v.slot - 1]}; });
}

// Divides by prod_{j<j'} (x_{i,j'} - x_{i,j}) one factor at a time.
LaurentPoly divide_vandermonde(LaurentPoly p, const DimVector& gamma) {
  for (int i = 1; i <= gamma.n(); ++i) {
    for (int j = 1; j <= gamma.at(i); ++j) {
      for (int jp = j + 1; jp <= gamma.at(i); ++jp) {
        p = ring::exact_div_difference(p, {i, jp}, {i, j});
      }
    }
  }
  return p;
}

LaurentPoly vandermonde(const DimVector& alpha) {
  LaurentPoly v(1);
  for (int i = 1; i <= alpha.n(); ++i) {
    for (int j = 1; j <= alpha.at(i); ++j) {
      for (int jp = j + 1; jp <= alpha.at(i); ++jp) v *= LaurentPoly::difference({i, jp}, {i, j});
    }
  }
  return v;
}

SymLaurent to_sym(const LaurentPoly& p, const DimVector& grade) {
  try {
    return SymLaurent::from_laurent(p, grade);
  } catch (const NonPolynomialSymmetrization&) {
    throw;
  } catch (const Error& e) {
    throw NonPolynomialSymmetrization(std::string("symmetrization result: ") + e.what());
  }
}

void check_variables(const LaurentPoly& p, const DimVector& alpha) {
  for (const auto& v : p.variables()) {
    if (v.vertex < 1 || v.vertex > alpha.n() || v.slot > alpha.at(v.vertex)) {
      throw Error("variable outside the slots of grade " + to_string(alpha));
    }
  }
}

}  // namespace

SymLaurent symmetrize(const ring::RationalFunction& f, const DimVector& alpha) {
  check_variables(f.num(), alpha);
  check_variables(f.den(), alpha);
  LaurentPoly vdm = vandermonde(alpha);
  LaurentPoly cofactor;
  bool over_vandermonde = true;
  try {
    cofactor = ring::exact_div(vdm, f.den());
  } catch (const InexactDivision&) {
    over_vandermonde = false;
  }

  if (over_vandermonde) {
    // f = N / V with V alternating, so sum_sigma sigma(f) = (sum sgn * sigma(N)) / V.
    LaurentPoly num = f.num() * cofactor;
    LaurentPoly total;
    for_each_permutation(alpha, [&](const SlotMap& m, int sign) {
      LaurentPoly t = relabel(num, m);
      if (sign < 0) t = -t;
      total += t;
    });
    try {
      return to_sym(divide_vandermonde(total, alpha), alpha);
    } catch (const InexactDivision&) {
      throw NonPolynomialSymmetrization("symmetrization does not clear its denominator");
    }
  }

  ring::RationalFunction total;
  for_each_permutation(alpha, [&](const SlotMap& m, int) {
    total += ring::RationalFunction(relabel(f.num(), m), relabel(f.den(), m));
  });
  if (!total.is_laurent()) throw NonPolynomialSymmetrization("symmetrization does not clear its denominator");
  return to_sym(total.num() * ring::Rational(1 / total.den().constant_term()), alpha);
}

SymLaurent shuffle_mul(const SymLaurent& f, const SymLaurent& g, const QuiverKernel& kernel) {
  const DimVector& alpha = f.grade();
  const DimVector& beta = g.grade();
  int n = alpha.n();
  if (beta.n() != n || kernel.n() != n) throw GradeMismatch("shuffle operands over different quivers");
  DimVector gamma = alpha + beta;
  if (f.is_zero() || g.is_zero()) return SymLaurent(gamma);

  LaurentPoly fg = f.expand() * g.expand().renamed([&](VarId v) {
    return VarId{v.vertex, v.slot + alpha.at(v.vertex)};
  });

  // Same-vertex kernel 1/(1 - x_j/x_j') = x_j'/(x_j' - x_j): the numerators
  // form a monomial, the denominators together with the in-block
  // Vandermonde factors give the full Vandermonde.
  std::vector<Monomial::Entry> mono;
  LaurentPoly blocks(1);
  for (int i = 1; i <= n; ++i) {
    int a = alpha.at(i), c = gamma.at(i);
    for (int jp = a + 1; jp <= c; ++jp) mono.push_back({{i, jp}, a});
    for (int j = 1; j <= a; ++j) {
      for (int jp = j + 1; jp <= a; ++jp) blocks *= LaurentPoly::difference({i, jp}, {i, j});
    }
    for (int j = a + 1; j <= c; ++j) {
      for (int jp = j + 1; jp <= c; ++jp) blocks *= LaurentPoly::difference({i, jp}, {i, j});
    }
  }
  LaurentPoly cross(1);
  for (int i = 1; i <= n; ++i) {
    for (int ip = 1; ip <= n; ++ip) {
      int arrows = kernel.arrows(i, ip);
      if (arrows == 0 || i == ip) continue;
      for (int j = 1; j <= alpha.at(i); ++j) {
        for (int jp = alpha.at(ip) + 1; jp <= gamma.at(ip); ++jp) {
          LaurentPoly factor(1);
          factor.add_term(Monomial::from_entries({{{i, j}, 1}, {{ip, jp}, -1}}), -1);
          cross *= factor.pow(static_cast<unsigned>(arrows));
        }
      }
    }
  }
  LaurentPoly p = (fg * cross).shifted(Monomial::from_entries(std::move(mono))) * blocks;

  LaurentPoly total;
  for_each_shuffle(alpha, gamma, [&](const SlotMap& m, int sign) {
    LaurentPoly t = relabel(p, m);
    if (sign < 0) t = -t;
    total += t;
  });
  try {
    return to_sym(divide_vandermonde(total, gamma), gamma);
  } catch (const InexactDivision&) {
    throw NonPolynomialSymmetrization("shuffle product failed to clear its denominator");
  }
}

SymLaurent shuffle_mul(const SymLaurent& f, const SymLaurent& g) {
  return shuffle_mul(f, g, QuiverKernel::type_a(f.grade().n()));
}

KHAElement shuffle_mul(const KHAElement& f, const KHAElement& g) {
  if (f.n() != g.n() && !f.is_zero() && !g.is_zero()) throw GradeMismatch("shuffle operands over different quivers");
  int n = f.is_zero() ? g.n() : f.n();
  KHAElement out(n);
  if (f.is_zero() || g.is_zero()) return out;
  QuiverKernel kernel = QuiverKernel::type_a(n);
  for (const auto& [da, a] : f.components()) {
    for (const auto& [db, b] : g.components()) out += KHAElement(shuffle_mul(a, b, kernel));
  }
  return out;
}

KHAElement mu_product(const std::vector<SymLaurent>& parts) {
  if (parts.empty()) throw GradeMismatch("mu_product needs at least one part");
  int n = parts.front().grade().n();
  if (static_cast<int>(parts.size()) != n) throw GradeMismatch("mu_product needs one part per vertex");
  KHAElement out = KHAElement::unit(n);
  for (int i = 1; i <= n; ++i) {
    const DimVector& d = parts[i - 1].grade();
    if (d.n() != n) throw GradeMismatch("part has the wrong vertex count");
    for (int j = 1; j <= n; ++j) {
      if (j != i && d.at(j) != 0) throw GradeMismatch("part " + std::to_string(i) + " is not supported at its vertex");
    }
    out = shuffle_mul(out, KHAElement(parts[i - 1]));
  }
  return out;
}

std::vector<PbwTerm> pbw_factors(const SymLaurent& f) {
  int n = f.grade().n();
  std::vector<PbwTerm> out;
  for (const auto& [key, c] : f.terms()) {
    PbwTerm t{c, {}};
    for (int i = 1; i <= n; ++i) {
      std::vector<int> d(n, 0);
      d[i - 1] = f.grade().at(i);
      SymLaurent part{DimVector(d)};
      OrbitKey k(n);
      k[i - 1] = key[i - 1];
      part.add_orbit(std::move(k), 1);
      t.parts.push_back(std::move(part));
    }
    out.push_back(std::move(t));
  }
  return out;
}

SymLaurent eta_shift(int k, const SymLaurent& s) {
  SymLaurent out(s.grade());
  for (const auto& [k0, c] : s.terms()) {
    OrbitKey key = k0;
    for (auto& row : key) {
      for (auto& e : row) e -= k;
    }
    out.add_orbit(std::move(key), c);
  }
  return out;
}

KHAElement eta_shift(int k, const KHAElement& e) {
  KHAElement out(e.n());
  for (const auto& [d, s] : e.components()) out += KHAElement(eta_shift(k, s));
  return out;
}

bool in_negative_sector(const KHAElement& e) {
  for (const auto& [d, s] : e.components()) {
    for (const auto& [key, c] : s.terms()) {
      for (const auto& row : key) {
        for (int x : row) {
          if (x > 0) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace kha::shuffle
