#include "kha/ring/rational_function.hpp"

#include "kha/errors.hpp"
#include "kha/ring/permutation.hpp"

namespace kha::ring {

namespace {

LaurentPoly monic(LaurentPoly p) {
  if (p.is_zero()) return p;
  Rational lc = p.leading_term().second;
  return p * Rational(1 / lc);
}

LaurentPoly content_in(const LaurentPoly& p, VarId v);

// Pseudo-remainder of a by b as polynomials in v; the scalar power of
// lc(b) is omitted since the caller takes primitive parts.
LaurentPoly prem(LaurentPoly a, const LaurentPoly& b, VarId v) {
  int db = b.degree_in(v);
  LaurentPoly lcb = b.coefficient_in(v, db);
  while (!a.is_zero() && a.degree_in(v) >= db) {
    int da = a.degree_in(v);
    LaurentPoly lca = a.coefficient_in(v, da);
    a = lcb * a - lca * LaurentPoly::variable(v, da - db) * b;
  }
  return a;
}

LaurentPoly primitive_part(const LaurentPoly& p, VarId v) {
  if (p.degree_in(v) == 0) return LaurentPoly(1);
  return exact_div(p, content_in(p, v));
}

LaurentPoly content_in(const LaurentPoly& p, VarId v) {
  LaurentPoly g;
  for (const auto& [k, c] : p.split_by(v)) {
    (void)k;
    g = poly_gcd(g, c);
    if (g.is_constant()) return LaurentPoly(1);
  }
  return g;
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return LaurentPoly(1);
  if (!a.is_polynomial() || !b.is_polynomial()) throw Error("poly_gcd expects ordinary polynomials");

  auto va = a.variables();
  auto vb = b.variables();
  VarId v = std::max(*va.rbegin(), *vb.rbegin());
  bool in_a = va.count(v) > 0, in_b = vb.count(v) > 0;
  if (!in_a) return poly_gcd(a, content_in(b, v));
  if (!in_b) return poly_gcd(content_in(a, v), b);

  LaurentPoly ca = content_in(a, v), cb = content_in(b, v);
  LaurentPoly gc = poly_gcd(ca, cb);
  LaurentPoly p = exact_div(a, ca), q = exact_div(b, cb);
  if (p.degree_in(v) < q.degree_in(v)) std::swap(p, q);
  while (!q.is_zero()) {
    LaurentPoly r = prem(p, q, v);
    p = std::move(q);
    q = r.is_zero() ? r : primitive_part(r, v);
  }
  return monic(gc * p);
}

RationalFunction::RationalFunction(LaurentPoly num) : num_(std::move(num)) {}

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  Monomial md = den_.min_exponents().inverse();
  den_ = den_.shifted(md);
  num_ = num_.shifted(md);
  if (!den_.is_constant()) {
    Monomial mn = num_.min_exponents();
    LaurentPoly np = num_.shifted(mn.inverse());
    LaurentPoly g = poly_gcd(np, den_);
    if (!g.is_constant()) {
      np = exact_div(np, g);
      den_ = exact_div(den_, g);
    }
    num_ = np.shifted(mn);
  }
  Rational lc = den_.leading_term().second;
  if (lc != 1) {
    Rational inv = 1 / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

bool RationalFunction::is_laurent() const { return den_.is_constant(); }

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    *this = RationalFunction(num_ + o.num_, den_);
  } else {
    *this = RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  *this = RationalFunction(num_ * o.num_, den_ * o.den_);
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

RationalFunction RationalFunction::operator-() const {
  RationalFunction f = *this;
  f.num_ = -f.num_;
  return f;
}

RationalFunction RationalFunction::inverse() const {
  if (num_.is_zero()) throw DivisionByZero("inverse of the zero rational function");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::permuted(const SlotPermutation& sigma) const {
  return RationalFunction(permute_vars(num_, sigma), permute_vars(den_, sigma));
}

RationalFunction RationalFunction::inverted() const {
  return RationalFunction(num_.inverted(), den_.inverted());
}

std::string to_string(const RationalFunction& f) {
  if (f.is_laurent()) return to_string(f.num());
  return "(" + to_string(f.num()) + ") / (" + to_string(f.den()) + ")";
}

}  // namespace kha::ring
