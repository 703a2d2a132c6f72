#include "kha/ring/laurent_poly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "kha/errors.hpp"
#include "kha/ring/permutation.hpp"

namespace kha::ring {

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

LaurentPoly LaurentPoly::variable(VarId v, int exponent) {
  return monomial(Monomial::variable(v, exponent));
}

LaurentPoly LaurentPoly::monomial(const Monomial& m, const Rational& c) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

LaurentPoly LaurentPoly::difference(VarId hi, VarId lo) {
  LaurentPoly p = variable(hi);
  p.add_term(Monomial::variable(lo), -1);
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

bool LaurentPoly::is_polynomial() const {
  for (const auto& t : terms_) {
    for (const auto& e : t.first.entries()) {
      if (e.second < 0) return false;
    }
  }
  return true;
}

Rational LaurentPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::set<VarId> LaurentPoly::variables() const {
  std::set<VarId> vs;
  for (const auto& t : terms_) {
    for (const auto& e : t.first.entries()) vs.insert(e.first);
  }
  return vs;
}

int LaurentPoly::degree_in(VarId v) const {
  int d = std::numeric_limits<int>::min();
  for (const auto& t : terms_) d = std::max(d, t.first.exponent(v));
  return terms_.empty() ? 0 : d;
}

int LaurentPoly::min_degree_in(VarId v) const {
  int d = std::numeric_limits<int>::max();
  for (const auto& t : terms_) d = std::min(d, t.first.exponent(v));
  return terms_.empty() ? 0 : d;
}

Monomial LaurentPoly::min_exponents() const {
  if (terms_.empty()) return {};
  Monomial m = terms_.begin()->first;
  for (const auto& t : terms_) m = m.min_with(t.first);
  return m;
}

const std::pair<const Monomial, Rational>& LaurentPoly::leading_term() const {
  if (terms_.empty()) throw Error("leading term of the zero polynomial");
  return *terms_.rbegin();
}

void LaurentPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result(1), base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::shifted(const Monomial& m) const {
  LaurentPoly p;
  for (const auto& [mm, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), mm * m, c);
  return p;
}

LaurentPoly LaurentPoly::inverted() const {
  LaurentPoly p;
  for (const auto& [m, c] : terms_) p.terms_.emplace(m.inverse(), c);
  return p;
}

LaurentPoly LaurentPoly::renamed(const std::function<VarId(VarId)>& rename) const {
  LaurentPoly p;
  std::vector<Monomial::Entry> buf;
  for (const auto& [m, c] : terms_) {
    buf.clear();
    for (const auto& [v, e] : m.entries()) buf.push_back({rename(v), e});
    p.add_term(Monomial::from_entries(buf), c);
  }
  return p;
}

LaurentPoly LaurentPoly::coefficient_in(VarId v, int k) const {
  LaurentPoly p;
  for (const auto& [m, c] : terms_) {
    if (m.exponent(v) == k) p.terms_.emplace(m * Monomial::variable(v, -k), c);
  }
  return p;
}

std::map<int, LaurentPoly> LaurentPoly::split_by(VarId v) const {
  std::map<int, LaurentPoly> out;
  for (const auto& [m, c] : terms_) {
    int k = m.exponent(v);
    out[k].terms_.emplace(m * Monomial::variable(v, -k), c);
  }
  return out;
}

// ---- text form ----

namespace {

std::string default_var_name(VarId v) {
  return "x[" + std::to_string(v.vertex) + "," + std::to_string(v.slot) + "]";
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  LaurentPoly parse() {
    skip();
    if (eof()) throw ParseError("empty polynomial");
    LaurentPoly p;
    bool first = true;
    while (true) {
      skip();
      int sign = 1;
      if (!first) {
        if (eat('+')) {
        } else if (eat('-')) {
          sign = -1;
        } else {
          fail("expected '+' or '-'");
        }
      }
      p += term() * Rational(sign);
      first = false;
      skip();
      if (eof()) break;
    }
    return p;
  }

 private:
  LaurentPoly term() {
    skip();
    Rational coeff = 1;
    if (eat('-')) coeff = -1;
    else eat('+');
    skip();
    std::vector<Monomial::Entry> entries;
    bool any = false;
    while (true) {
      skip();
      if (peek() == 'x' || peek() == 't') {
        entries.push_back(variable());
      } else if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '-' || peek() == '+') {
        coeff *= rational();
      } else {
        fail("expected a coefficient or a variable");
      }
      any = true;
      skip();
      if (!eat('*')) break;
    }
    if (!any) fail("empty term");
    return LaurentPoly::monomial(Monomial::from_entries(std::move(entries)), coeff);
  }

  Monomial::Entry variable() {
    char name = s_[pos_++];
    skip();
    expect('[');
    VarId v;
    if (name == 'x') {
      v.vertex = integer();
      skip();
      expect(',');
      v.slot = integer();
    } else {
      v.vertex = 1;
      v.slot = integer();
    }
    skip();
    expect(']');
    if (v.vertex < 1 || v.slot < 1) fail("variable indices must be positive");
    skip();
    int e = 1;
    if (eat('^')) {
      skip();
      bool paren = eat('(');
      e = integer();
      if (paren) {
        skip();
        expect(')');
      }
    }
    return {v, e};
  }

  Rational rational() {
    std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '/') {
      ++pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    return parse_rational(s_.substr(start, pos_ - start));
  }

  int integer() {
    skip();
    std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    std::string tok(s_.substr(start, pos_ - start));
    if (tok.empty() || tok == "-" || tok == "+") fail("expected an integer");
    try {
      return std::stoi(tok);
    } catch (const std::exception&) {
      fail("integer out of range");
    }
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  bool eof() const { return pos_ >= s_.size(); }
  void skip() {
    while (!eof() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const LaurentPoly& p) { return to_string(p, default_var_name); }

std::string to_string(const LaurentPoly& p, const std::function<std::string(VarId)>& var_name) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    out += format_rational(c);
    for (const auto& [v, e] : m.entries()) {
      out += " * " + var_name(v) + "^" + std::to_string(e);
    }
  }
  return out;
}

LaurentPoly parse_laurent(std::string_view text) {
  std::string_view t = text;
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
  if (t == "0") return {};
  return Parser(text).parse();
}

LaurentPoly permute_vars(const LaurentPoly& p, const SlotPermutation& sigma) {
  return p.renamed([&](VarId v) { return sigma(v); });
}

// ---- division ----

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero()) throw DivisionByZero("exact_div by zero");
  if (p.is_zero()) return {};
  Monomial mp = p.min_exponents();
  Monomial mq = q.min_exponents();
  LaurentPoly num = p.shifted(mp.inverse());
  LaurentPoly den = q.shifted(mq.inverse());

  auto grlex_max = [](const LaurentPoly& f) {
    auto best = f.terms().begin();
    for (auto it = f.terms().begin(); it != f.terms().end(); ++it) {
      if (grlex_less(best->first, it->first)) best = it;
    }
    return *best;
  };
  const auto [lm_den, lc_den] = grlex_max(den);

  LaurentPoly quot;
  while (!num.is_zero()) {
    const auto [lm, lc] = grlex_max(num);
    if (!lm_den.divides(lm)) throw InexactDivision("exact_div: nonzero remainder");
    LaurentPoly t = LaurentPoly::monomial(lm * lm_den.inverse(), lc / lc_den);
    quot += t;
    num -= t * den;
  }
  return quot.shifted(mp * mq.inverse());
}

LaurentPoly exact_div_difference(const LaurentPoly& p, VarId hi, VarId lo) {
  if (hi == lo) throw DivisionByZero("exact_div_difference with hi == lo");
  if (p.is_zero()) return {};
  auto parts = p.split_by(hi);
  int kmin = parts.begin()->first;
  int kmax = parts.rbegin()->first;
  LaurentPoly x_lo = LaurentPoly::variable(lo);
  LaurentPoly q_k;  // current q_{k}
  LaurentPoly out;
  for (int k = kmax; k > kmin; --k) {
    auto it = parts.find(k);
    LaurentPoly c = it == parts.end() ? LaurentPoly{} : it->second;
    // q_{k-1} = c_k + x_lo * q_k
    LaurentPoly q_prev = c + x_lo * q_k;
    out += q_prev * LaurentPoly::variable(hi, k - 1);
    q_k = std::move(q_prev);
  }
  LaurentPoly rem = parts.begin()->second + x_lo * q_k;
  if (!rem.is_zero()) throw InexactDivision("division by a variable difference is not exact");
  return out;
}

bool divisible_by_difference(const LaurentPoly& p, VarId hi, VarId lo) {
  return p.renamed([&](VarId v) { return v == hi ? lo : v; }).is_zero();
}

}  // namespace kha::ring
