#pragma once

#include <random>

#include "kha/ring/laurent_poly.hpp"

namespace kha::test {

inline ring::LaurentPoly random_poly(std::mt19937& rng, int vertices, int slots, int terms,
                                     int lo = -2, int hi = 2) {
  std::uniform_int_distribution<int> exp(lo, hi), coef(-5, 5), nvar(0, 2);
  std::uniform_int_distribution<int> vert(1, vertices), slot(1, slots);
  ring::LaurentPoly p;
  for (int t = 0; t < terms; ++t) {
    std::vector<ring::Monomial::Entry> es;
    int k = nvar(rng);
    for (int i = 0; i < k; ++i) es.push_back({{vert(rng), slot(rng)}, exp(rng)});
    ring::Rational c(coef(rng), 1 + (t % 3));
    c.canonicalize();
    p.add_term(ring::Monomial::from_entries(es), c);
  }
  return p;
}

inline ring::LaurentPoly x(int i, int j, int e = 1) { return ring::LaurentPoly::variable({i, j}, e); }

}  // namespace kha::test
