#include "kha/flagk/localized.hpp"

#include "kha/errors.hpp"

namespace kha::flagk {

namespace {

LaurentPoly difference(int a, int b) { return LaurentPoly::difference(tvar(b), tvar(a)); }

}  // namespace

LocalizedFraction::LocalizedFraction(LaurentPoly num) : num_(std::move(num)) {}

LocalizedFraction LocalizedFraction::inverse_difference(int hi, int lo) {
  if (hi == lo) throw DivisionByZero("1/(t_a - t_a)");
  LocalizedFraction f(LaurentPoly(hi > lo ? 1 : -1));
  f.factors_[{std::min(hi, lo), std::max(hi, lo)}] = 1;
  return f;
}

void LocalizedFraction::reduce() {
  if (num_.is_zero()) {
    factors_.clear();
    return;
  }
  for (auto it = factors_.begin(); it != factors_.end();) {
    auto [a, b] = it->first;
    while (it->second > 0 && ring::divisible_by_difference(num_, tvar(b), tvar(a))) {
      num_ = ring::exact_div_difference(num_, tvar(b), tvar(a));
      --it->second;
    }
    it = it->second == 0 ? factors_.erase(it) : std::next(it);
  }
}

LocalizedFraction& LocalizedFraction::operator+=(const LocalizedFraction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  Factors common = factors_;
  for (const auto& [k, m] : o.factors_) common[k] = std::max(common[k], m);
  auto lift = [&](const LocalizedFraction& f) {
    LaurentPoly p = f.num_;
    for (const auto& [k, m] : common) {
      auto it = f.factors_.find(k);
      int have = it == f.factors_.end() ? 0 : it->second;
      if (m > have) p *= difference(k.first, k.second).pow(static_cast<unsigned>(m - have));
    }
    return p;
  };
  num_ = lift(*this) + lift(o);
  factors_ = std::move(common);
  reduce();
  return *this;
}

LocalizedFraction& LocalizedFraction::operator-=(const LocalizedFraction& o) { return *this += -o; }

LocalizedFraction& LocalizedFraction::operator*=(const LocalizedFraction& o) {
  if (is_zero() || o.is_zero()) {
    num_ = LaurentPoly{};
    factors_.clear();
    return *this;
  }
  num_ *= o.num_;
  for (const auto& [k, m] : o.factors_) factors_[k] += m;
  reduce();
  return *this;
}

LocalizedFraction LocalizedFraction::operator-() const {
  LocalizedFraction f = *this;
  f.num_ = -f.num_;
  return f;
}

LocalizedFraction LocalizedFraction::conj() const {
  // 1/(t_b^{-1} - t_a^{-1}) = -t_a t_b / (t_b - t_a).
  LocalizedFraction f;
  f.num_ = num_.inverted();
  int sign = 1;
  for (const auto& [k, m] : factors_) {
    f.num_ = f.num_.shifted(ring::Monomial::from_entries({{tvar(k.first), m}, {tvar(k.second), m}}));
    if (m % 2) sign = -sign;
  }
  if (sign < 0) f.num_ = -f.num_;
  f.factors_ = factors_;
  f.reduce();
  return f;
}

ring::RationalFunction LocalizedFraction::to_rational_function() const {
  LaurentPoly den(1);
  for (const auto& [k, m] : factors_) den *= difference(k.first, k.second).pow(static_cast<unsigned>(m));
  return ring::RationalFunction(num_, den);
}

std::string to_string(const LocalizedFraction& f) {
  auto name = [](ring::VarId v) { return "t[" + std::to_string(v.slot) + "]"; };
  std::string s = ring::to_string(f.num(), name);
  if (f.is_laurent()) return s;
  std::string d;
  for (const auto& [k, m] : f.factors()) {
    if (!d.empty()) d += " * ";
    d += "(t[" + std::to_string(k.second) + "] - t[" + std::to_string(k.first) + "])^" + std::to_string(m);
  }
  return "(" + s + ") / (" + d + ")";
}

FracMatrix FracMatrix::identity(std::size_t n) {
  FracMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = LocalizedFraction(1);
  return m;
}

FracMatrix FracMatrix::operator*(const FracMatrix& o) const {
  if (cols_ != o.rows_) throw Error("matrix shapes do not compose");
  FracMatrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const auto& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const auto& b = o.at(k, j);
        if (!b.is_zero()) out.at(i, j) += a * b;
      }
    }
  }
  return out;
}

FracMatrix FracMatrix::operator+(const FracMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shapes differ");
  FracMatrix out = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] += o.a_[i];
  return out;
}

FracMatrix FracMatrix::operator-(const FracMatrix& o) const { return *this + (-o); }

FracMatrix FracMatrix::operator-() const {
  FracMatrix out = *this;
  for (auto& x : out.a_) x = -x;
  return out;
}

std::size_t FracMatrix::nonzero_entries() const {
  std::size_t c = 0;
  for (const auto& x : a_) c += !x.is_zero();
  return c;
}

}  // namespace kha::flagk
