#include "kha/cli/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "kha/errors.hpp"
#include "kha/flagk/flagk.hpp"
#include "kha/isomap/isomap.hpp"
#include "kha/shuffle/serialize.hpp"
#include "kha/shuffle/shuffle.hpp"
#include "kha/uplus/uplus.hpp"

namespace kha::cli {

namespace {

using nlohmann::json;

struct Config {
  int n = 2;
  int N = 2;
  std::string window = "-3:3";
  std::string format = "text";
  unsigned long long seed = kDefaultSeed;
  isomap::Caps caps;
  flagk::FlagCaps flag_caps;
};

std::pair<int, int> parse_window(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw ParseError("window must be lo:hi, got '" + s + "'");
  try {
    std::size_t used = 0;
    int lo = std::stoi(s.substr(0, colon), &used);
    if (used != colon) throw ParseError("bad window '" + s + "'");
    std::string rest = s.substr(colon + 1);
    int hi = std::stoi(rest, &used);
    if (used != rest.size()) throw ParseError("bad window '" + s + "'");
    if (lo > hi) throw ParseError("empty window '" + s + "'");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw ParseError("bad window '" + s + "'");
  }
}

std::vector<int> parse_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw ParseError("bad integer '" + item + "'");
    } catch (const std::logic_error&) {
      throw ParseError("bad integer list '" + s + "'");
    }
  }
  if (out.empty()) throw ParseError("empty integer list");
  return out;
}

std::string slurp(const std::string& path, std::istream& in) {
  std::stringstream ss;
  if (path == "-") {
    ss << in.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open '" + path + "'");
    ss << f.rdbuf();
  }
  return ss.str();
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

/// Accepts the word grammar or UElement JSON.
uplus::UElement read_uelement(const std::string& text) {
  auto start = text.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && text[start] == '{') return uplus::uelement_from_json(parse_json(text));
  return uplus::UElement(uplus::parse_word(text));
}

void check_vertices(const uplus::UElement& u, int n) {
  for (const auto& [w, c] : u.terms()) {
    for (const auto& l : w) {
      if (l.vertex < 1 || l.vertex > n) {
        throw ParseError("vertex " + std::to_string(l.vertex) + " outside 1.." + std::to_string(n));
      }
    }
  }
}

bool json_mode(const Config& c) { return c.format == "json"; }

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int cmd_shuffle_mul(const Config& c, const std::string& lhs, const std::string& rhs, std::istream& in,
                    std::ostream& out) {
  if (lhs == "-" && rhs == "-") throw ParseError("at most one operand may be read from stdin");
  auto a = shuffle::kha_from_json(parse_json(slurp(lhs, in)));
  auto b = shuffle::kha_from_json(parse_json(slurp(rhs, in)));
  if (a.n() != c.n || b.n() != c.n) throw GradeMismatch("operands do not live over A_" + std::to_string(c.n));
  auto p = shuffle::shuffle_mul(a, b);
  if (json_mode(c)) {
    emit(out, shuffle::to_json(p));
  } else {
    out << shuffle::to_string(p) << "\n";
  }
  return kOk;
}

int cmd_nf(const Config& c, const std::string& word, std::ostream& out) {
  auto u = uplus::normal_form(read_uelement(word));
  if (json_mode(c)) {
    emit(out, uplus::to_json(u));
  } else {
    out << uplus::to_string(u) << "\n";
  }
  return kOk;
}

int cmd_phi(const Config& c, const std::string& word, std::ostream& out) {
  auto u = read_uelement(word);
  check_vertices(u, c.n);
  auto p = isomap::phi(u, c.n);
  if (json_mode(c)) {
    emit(out, shuffle::to_json(p));
  } else {
    out << shuffle::to_string(p) << "\n";
  }
  return kOk;
}

int cmd_dims(const Config& c, const std::string& alpha_text, int m_max, std::ostream& out) {
  auto alpha = parse_list(alpha_text);
  if (static_cast<int>(alpha.size()) != c.n) throw ParseError("alpha needs " + std::to_string(c.n) + " entries");
  for (int a : alpha) {
    if (a < 0) throw ParseError("alpha entries must be non-negative");
  }
  if (m_max < 0) throw ParseError("m-max must be non-negative");
  uplus::BiGrade g{shuffle::DimVector(alpha), 0};
  if (g.alpha.total() > c.caps.max_alpha_sum) throw ResourceCapExceeded("|alpha| exceeds max-alpha-sum");
  if (m_max > c.caps.max_m) throw ResourceCapExceeded("m-max exceeds max-m");
  isomap::Phi phi(c.n);
  std::vector<isomap::DimReport> reports;
  bool pass = true;
  for (int m = 0; m <= m_max; ++m) {
    g.m = m;
    reports.push_back(isomap::graded_rank(g, phi, c.caps));
    pass = pass && reports.back().pass;
  }
  if (json_mode(c)) {
    json rows = json::array();
    for (const auto& r : reports) rows.push_back(isomap::to_json(r));
    emit(out, {{"reports", rows}, {"pass", pass}});
  } else {
    out << "alpha=" << shuffle::to_string(g.alpha) << "  basis/formula/rank\n";
    for (const auto& r : reports) {
      out << "m=" << r.grade.m << "  " << r.basis_size << "/" << r.formula_dim << "/" << r.phi_rank << "  "
          << (r.pass ? "pass" : "FAIL") << "\n";
    }
  }
  return pass ? kOk : kVerificationFailed;
}

int cmd_verify_iso(const Config& c, std::ostream& out) {
  auto [lo, hi] = parse_window(c.window);
  auto rows = isomap::verify_relations(c.n, lo, hi);
  std::vector<isomap::IntertwineReport> tw;
  for (int k = lo; k <= hi; ++k) tw.push_back(isomap::intertwine_check(c.n, k, 10, c.seed));
  bool pass = true;
  for (const auto& r : rows) pass = pass && r.pass;
  for (const auto& t : tw) pass = pass && t.pass();
  if (json_mode(c)) {
    json rel = json::array();
    for (const auto& r : rows) rel.push_back(isomap::to_json(r));
    json inter = json::array();
    for (const auto& t : tw) {
      inter.push_back({{"k", t.k}, {"samples", t.samples}, {"failures", t.failures}, {"pass", t.pass()}});
    }
    emit(out, {{"n", c.n}, {"window", {lo, hi}}, {"seed", c.seed}, {"relations", rel}, {"intertwining", inter},
               {"pass", pass}});
  } else {
    std::map<std::string, std::pair<int, int>> tally;  // family -> (passed, total)
    for (const auto& r : rows) {
      auto& [p, t] = tally[r.family];
      p += r.pass;
      ++t;
    }
    for (const auto& [fam, pt] : tally) out << fam << "  " << pt.first << "/" << pt.second << "\n";
    for (const auto& r : rows) {
      if (!r.pass) out << "FAIL " << r.family << " i=" << r.i << " j=" << r.j << " r=" << r.r << " s=" << r.s << "\n";
    }
    int tw_fail = 0;
    for (const auto& t : tw) tw_fail += t.failures;
    out << "intertwining  " << (tw_fail == 0 ? "pass" : "FAIL") << "\n";
    out << (pass ? "pass" : "FAIL") << "\n";
  }
  return pass ? kOk : kVerificationFailed;
}

int cmd_flagk_verify(const Config& c, std::ostream& out) {
  auto [lo, hi] = parse_window(c.window);
  flagk::FlagModel model(c.n, c.N, c.flag_caps);
  auto rows = model.verify_action({lo, hi, false});
  bool pass = true;
  for (const auto& r : rows) pass = pass && r.status != "fail";
  if (json_mode(c)) {
    json arr = json::array();
    for (const auto& r : rows) arr.push_back(flagk::to_json(r));
    emit(out, {{"n", c.n}, {"N", c.N}, {"window", {lo, hi}}, {"rows", arr}, {"pass", pass}});
  } else {
    std::map<std::string, std::map<std::string, int>> tally;
    for (const auto& r : rows) ++tally[r.condition][r.status];
    for (const auto& [cond, st] : tally) {
      out << cond;
      for (const auto& [s, count] : st) out << "  " << s << "=" << count;
      out << "\n";
    }
    for (const auto& r : rows) {
      if (r.status != "fail") continue;
      out << "FAIL " << r.condition << " k=" << flagk::to_string(r.weight);
      for (int p : r.params) out << " " << p;
      out << "\n";
    }
    out << (pass ? "pass" : "FAIL") << "\n";
  }
  return pass ? kOk : kVerificationFailed;
}

int cmd_flagk_sod(const Config& c, const std::string& k_text, std::ostream& out) {
  auto k = parse_list(k_text);
  // The last entry may be left implicit: it is N minus the others.
  if (static_cast<int>(k.size()) == c.n - 1) {
    int rest = c.N;
    for (int v : k) rest -= v;
    k.push_back(rest);
  }
  if (static_cast<int>(k.size()) != c.n) throw ParseError("k needs " + std::to_string(c.n) + " entries");
  flagk::FlagModel model(c.n, c.N, c.flag_caps);
  auto rep = model.sod_check(flagk::Composition(k));
  bool ok = rep.pass && rep.full;
  if (json_mode(c)) {
    emit(out, flagk::to_json(rep));
  } else {
    out << "k=" << flagk::to_string(rep.k) << "  blocks=" << rep.tuples.size() << "  fixed_points=" << rep.fixed_points
        << "  " << (rep.full ? "full" : "not full") << "\n";
    for (const auto& t : rep.tuples) out << "  " << flagk::to_string(t) << "\n";
    for (const auto& p : rep.pairs) {
      if (!p.pass) {
        out << "FAIL " << p.kind << " " << flagk::to_string(p.lambda) << " " << flagk::to_string(p.mu) << " = "
            << flagk::to_string(p.value) << "\n";
      }
    }
    out << (ok ? "pass" : "FAIL") << "\n";
  }
  return ok ? kOk : kVerificationFailed;
}

int cmd_poly(const Config& c, const std::string& expr, std::ostream& out) {
  auto p = ring::parse_laurent(expr);
  if (json_mode(c)) {
    emit(out, {{"poly", ring::to_string(p)}});
  } else {
    out << ring::to_string(p) << "\n";
  }
  return kOk;
}

void add_format(CLI::App* app, Config& c) {
  app->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Shuffle algebras of type A quivers and flag-variety K-theory"};
  app.require_subcommand(1);
  app.add_option("--seed", c.seed, "seed for randomized checks")->capture_default_str();
  app.add_option("--max-alpha-sum", c.caps.max_alpha_sum, "cap on |alpha|")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--max-m", c.caps.max_m, "cap on the degree m")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--max-n", c.flag_caps.max_n, "cap on n for flagk")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--max-N", c.flag_caps.max_N, "cap on N for flagk")->capture_default_str()->check(CLI::PositiveNumber);
  add_format(&app, c);
  app.fallthrough();

  std::string lhs, rhs, word, alpha, k_text, expr;
  int m_max = 0;
  int code = kOk;

  auto* sm = app.add_subcommand("shuffle-mul", "shuffle product of two KHA elements (JSON)");
  sm->add_option("--n", c.n)->required()->check(CLI::PositiveNumber);
  sm->add_option("--lhs", lhs)->required();
  sm->add_option("--rhs", rhs)->required();

  auto* nf = app.add_subcommand("nf", "normal form in U+");
  nf->add_option("--word", word)->required();

  auto* ph = app.add_subcommand("phi", "image of a U+ element in the shuffle algebra");
  ph->add_option("--n", c.n)->check(CLI::PositiveNumber);
  ph->add_option("--word", word)->required();

  auto* dims = app.add_subcommand("dims", "graded dimension certificate");
  dims->add_option("--n", c.n)->required()->check(CLI::PositiveNumber);
  dims->add_option("--alpha", alpha)->required();
  dims->add_option("--m-max", m_max)->required();

  auto* vi = app.add_subcommand("verify-iso", "defining relations under phi");
  vi->add_option("--n", c.n)->required()->check(CLI::PositiveNumber);
  vi->add_option("--window", c.window)->capture_default_str();

  auto* fk = app.add_subcommand("flagk", "fixed-point model of flag varieties");
  fk->require_subcommand(1);
  auto* fv = fk->add_subcommand("verify", "check the action relations");
  fv->add_option("--n", c.n)->required();
  fv->add_option("--N", c.N)->required();
  fv->add_option("--window", c.window)->capture_default_str();
  auto* fs = fk->add_subcommand("sod", "check the semiorthogonal decomposition");
  fs->add_option("--n", c.n)->required();
  fs->add_option("--N", c.N)->required();
  fs->add_option("--k", k_text)->required();
  auto* po = app.add_subcommand("poly", "canonical form of a Laurent polynomial");
  po->add_option("--expr", expr)->required();
  po->fallthrough();
  fk->fallthrough();
  fv->fallthrough();
  fs->fallthrough();
  for (auto* sub : {sm, nf, ph, dims, vi}) sub->fallthrough();

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*sm) code = cmd_shuffle_mul(c, lhs, rhs, in, out);
    else if (*nf) code = cmd_nf(c, word, out);
    else if (*ph) code = cmd_phi(c, word, out);
    else if (*dims) code = cmd_dims(c, alpha, m_max, out);
    else if (*vi) code = cmd_verify_iso(c, out);
    else if (*fv) code = cmd_flagk_verify(c, out);
    else if (*fs) code = cmd_flagk_sod(c, k_text, out);
    else if (*po) code = cmd_poly(c, expr, out);
  } catch (const ResourceCapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return code;
}

}  // namespace kha::cli
