#include "kha/uplus/uplus.hpp"

#include <cctype>
#include <functional>

#include "kha/errors.hpp"

namespace kha::uplus {

BiGrade bigrade(const Word& w, int n) {
  std::vector<int> a(n, 0);
  int m = 0;
  for (const auto& l : w) {
    if (l.vertex < 1 || l.vertex > n) throw Error("letter vertex " + std::to_string(l.vertex) + " out of range");
    ++a[l.vertex - 1];
    m += l.degree;
  }
  return {DimVector(a), m};
}

UElement::UElement(Word w, const Rational& c) { add_term(w, c); }

void UElement::add_term(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

UElement& UElement::operator+=(const UElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

UElement& UElement::operator-=(const UElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

UElement& UElement::operator*=(const Rational& c) {
  if (c == 0) terms_.clear();
  for (auto& t : terms_) t.second *= c;
  return *this;
}

UElement operator*(const UElement& a, const UElement& b) {
  UElement out;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
    }
  }
  return out;
}

int inversions(const Word& w) {
  int count = 0;
  for (std::size_t a = 0; a < w.size(); ++a) {
    for (std::size_t b = a + 1; b < w.size(); ++b) count += w[a].vertex > w[b].vertex;
  }
  return count;
}

std::pair<int, long long> potential(const Word& w) {
  long long sq = 0;
  for (const auto& l : w) sq += static_cast<long long>(l.degree) * l.degree;
  return {inversions(w), sq};
}

namespace {

bool reducible(const Letter& a, const Letter& b) {
  if (a.vertex == b.vertex) return a.degree < b.degree;
  return a.vertex > b.vertex;
}

// Rewrites the pair (a, b) at position p of w.
UElement rewrite_at(const Word& w, std::size_t p) {
  const Letter a = w[p], b = w[p + 1];
  auto with = [&](Letter x, Letter y) {
    Word out = w;
    out[p] = x;
    out[p + 1] = y;
    return out;
  };
  UElement out;
  if (a.vertex == b.vertex) {
    // e_r e_s with r < s: zero for s = r+1, otherwise -e_{s-1} e_{r+1}.
    if (b.degree != a.degree + 1) {
      out.add_term(with({a.vertex, b.degree - 1}, {a.vertex, a.degree + 1}), -1);
    }
  } else if (a.vertex == b.vertex + 1) {
    // e_{j+1,s} e_{j,r} = e_{j,r} e_{j+1,s} - e_{j,r+1} e_{j+1,s-1}
    out.add_term(with(b, a), 1);
    out.add_term(with({b.vertex, b.degree + 1}, {a.vertex, a.degree - 1}), -1);
  } else {
    out.add_term(with(b, a), 1);
  }
  return out;
}

}  // namespace

bool is_normal(const Word& w) {
  for (std::size_t p = 0; p + 1 < w.size(); ++p) {
    if (reducible(w[p], w[p + 1])) return false;
  }
  return true;
}

std::optional<UElement> rewrite_step(const Word& w, Strategy strategy) {
  if (w.size() < 2) return std::nullopt;
  if (strategy == Strategy::Leftmost) {
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
      if (reducible(w[p], w[p + 1])) return rewrite_at(w, p);
    }
  } else {
    for (std::size_t p = w.size() - 1; p-- > 0;) {
      if (reducible(w[p], w[p + 1])) return rewrite_at(w, p);
    }
  }
  return std::nullopt;
}

namespace {

const UElement& nf_word(const Word& w, Strategy strategy, std::map<Word, UElement>& memo) {
  if (auto it = memo.find(w); it != memo.end()) return it->second;
  UElement result;
  if (auto step = rewrite_step(w, strategy)) {
    for (const auto& [v, c] : step->terms()) result += nf_word(v, strategy, memo) * c;
  } else {
    result = UElement(w);
  }
  return memo.emplace(w, std::move(result)).first->second;
}

}  // namespace

UElement normal_form(const UElement& u, Strategy strategy) {
  std::map<Word, UElement> memo;
  UElement out;
  for (const auto& [w, c] : u.terms()) out += nf_word(w, strategy, memo) * c;
  return out;
}

UElement normal_form(const Word& w, Strategy strategy) { return normal_form(UElement(w), strategy); }

Word tau_shift(int k, const Word& w) {
  Word out = w;
  for (auto& l : out) l.degree += k;
  return out;
}

UElement tau_shift(int k, const UElement& u) {
  UElement out;
  for (const auto& [w, c] : u.terms()) out.add_term(tau_shift(k, w), c);
  return out;
}

std::vector<Word> canonical_basis(const BiGrade& g) {
  if (g.m < 0) throw NegativeDegree("canonical_basis needs m >= 0");
  int n = g.alpha.n();
  // Degree vectors, concatenated vertex-major, enumerated lexicographically
  // largest first: at each slot try the largest admissible value.
  std::vector<std::pair<int, int>> slots;  // (vertex, index within vertex)
  for (int i = 1; i <= n; ++i) {
    for (int j = 0; j < g.alpha.at(i); ++j) slots.push_back({i, j});
  }
  std::vector<Word> out;
  std::vector<int> deg(slots.size());
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int remaining) {
    if (k == slots.size()) {
      if (remaining != 0) return;
      Word w;
      for (std::size_t t = 0; t < slots.size(); ++t) w.push_back({slots[t].first, deg[t]});
      out.push_back(std::move(w));
      return;
    }
    int cap = remaining;
    if (slots[k].second > 0) cap = std::min(cap, deg[k - 1]);
    for (int v = cap; v >= 0; --v) {
      deg[k] = v;
      rec(k + 1, remaining - v);
    }
  };
  if (slots.empty()) {
    if (g.m == 0) out.push_back({});
    return out;
  }
  rec(0, g.m);
  return out;
}

// ---- I/O ----

Word parse_word(std::string_view text) {
  Word w;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) {
    throw ParseError(what + " at offset " + std::to_string(pos) + " in '" + std::string(text) + "'");
  };
  auto integer = [&]() {
    skip();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    std::string tok(text.substr(start, pos - start));
    if (tok.empty() || tok == "-" || tok == "+") fail("expected an integer");
    try {
      return std::stoi(tok);
    } catch (const std::exception&) {
      fail("integer out of range");
    }
    return 0;
  };
  auto expect = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  };
  skip();
  if (pos < text.size() && text.substr(pos) == "1") return w;
  while (true) {
    skip();
    if (pos >= text.size()) break;
    if (text[pos] != 'e') fail("expected 'e'");
    ++pos;
    expect('[');
    int i = integer();
    expect(',');
    int r = integer();
    expect(']');
    if (i < 1) fail("vertex must be positive");
    w.push_back({i, r});
  }
  return w;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (const auto& l : w) {
    if (!s.empty()) s += " ";
    s += "e[" + std::to_string(l.vertex) + "," + std::to_string(l.degree) + "]";
  }
  return s;
}

std::string to_string(const UElement& u) {
  if (u.is_zero()) return "0";
  std::string s;
  for (const auto& [w, c] : u.terms()) {
    if (!s.empty()) s += " + ";
    s += ring::format_rational(c);
    if (!w.empty()) s += " * " + to_string(w);
  }
  return s;
}

nlohmann::json to_json(const UElement& u) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [w, c] : u.terms()) {
    nlohmann::json letters = nlohmann::json::array();
    for (const auto& l : w) letters.push_back({l.vertex, l.degree});
    terms.push_back({{"coeff", ring::format_rational(c)}, {"word", letters}});
  }
  return {{"terms", terms}};
}

UElement uelement_from_json(const nlohmann::json& j) {
  try {
    UElement u;
    for (const auto& t : j.at("terms")) {
      Word w;
      for (const auto& l : t.at("word")) {
        auto pair = l.get<std::vector<int>>();
        if (pair.size() != 2) throw ParseError("letters are [vertex, degree] pairs");
        if (pair[0] < 1) throw ParseError("vertex must be positive");
        w.push_back({pair[0], pair[1]});
      }
      u.add_term(w, ring::parse_rational(t.at("coeff").get<std::string>()));
    }
    return u;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed word JSON: ") + e.what());
  }
}

}  // namespace kha::uplus
