#include "kha/shuffle/serialize.hpp"

#include <algorithm>

#include "kha/errors.hpp"

namespace kha::shuffle {

nlohmann::json to_json(const KHAElement& e) {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& [d, s] : e.components()) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [key, c] : s.terms()) {
      terms.push_back({{"coeff", ring::format_rational(c)}, {"orbit", key}});
    }
    comps.push_back({{"grade", d.entries()}, {"terms", terms}});
  }
  return {{"n", e.n()}, {"components", comps}};
}

KHAElement kha_from_json(const nlohmann::json& j) {
  try {
    int n = j.at("n").get<int>();
    if (n < 1) throw ParseError("n must be positive");
    KHAElement out(n);
    for (const auto& comp : j.at("components")) {
      auto grade_v = comp.at("grade").get<std::vector<int>>();
      if (static_cast<int>(grade_v.size()) != n) throw ParseError("grade length differs from n");
      DimVector grade(grade_v);
      SymLaurent s(grade);
      for (const auto& t : comp.at("terms")) {
        auto key = t.at("orbit").get<OrbitKey>();
        if (static_cast<int>(key.size()) != n) throw ParseError("orbit has the wrong vertex count");
        for (int i = 0; i < n; ++i) {
          if (static_cast<int>(key[i].size()) != grade_v[i]) throw ParseError("orbit length does not match grade");
          if (!std::is_sorted(key[i].begin(), key[i].end(), std::greater<>())) {
            throw ParseError("orbit entries must be weakly decreasing");
          }
        }
        s.add_orbit(std::move(key), ring::parse_rational(t.at("coeff").get<std::string>()));
      }
      out += KHAElement(s);
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed KHA element JSON: ") + e.what());
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

}  // namespace kha::shuffle
