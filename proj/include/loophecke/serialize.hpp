#pragma once

// Text and JSON plumbing for the command-line frontend: rational and element
// parsing, report serialization with sorted keys, and the on-disk cache for
// completed rewriting systems (schema-versioned, written atomically).

#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "loophecke/rewrite.hpp"
#include "loophecke/structure.hpp"

namespace lh {

using Json = nlohmann::json;

inline constexpr const char* kCacheSchemaVersion = "1";
inline constexpr const char* kCodeVersion = "0.1.0";

inline Rational parse_rational(const std::string& text) {
  try {
    mpq_class q(text);
    q.canonicalize();
    return Rational(q);
  } catch (const std::invalid_argument&) {
    throw WordParseError("not a rational number: '" + text + "'");
  }
}

// Element grammar: terms joined by '+'/'-', each term an optional rational
// coefficient (with optional '*') followed by generator tokens, e.g.
// "s2 s1 - s2 r1 - r2 s1 + r2 r1" or "2*s1 + 7/5".
inline AlgebraElement<Rational> parse_element(const std::string& text) {
  std::string padded;
  for (char c : text) {
    if (c == '+' || c == '-' || c == '*') {
      padded += ' ';
      padded += c;
      padded += ' ';
    } else {
      padded += c;
    }
  }
  std::istringstream in(padded);
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);

  AlgebraElement<Rational> out;
  size_t i = 0;
  bool first = true;
  while (i < tokens.size()) {
    Rational sign(1);
    if (tokens[i] == "+" || tokens[i] == "-") {
      if (tokens[i] == "-") sign = Rational(-1);
      ++i;
    } else if (!first) {
      throw WordParseError("expected '+' or '-' before '" + tokens[i] + "'");
    }
    first = false;
    if (i >= tokens.size())
      throw WordParseError("dangling sign in element: '" + text + "'");
    Rational coeff(1);
    if (std::isdigit(static_cast<unsigned char>(tokens[i][0]))) {
      coeff = parse_rational(tokens[i]);
      ++i;
      if (i < tokens.size() && tokens[i] == "*") ++i;
    }
    MWord w;
    while (i < tokens.size() && (tokens[i][0] == 's' || tokens[i][0] == 'r')) {
      GWord g = parse_gword(tokens[i]);
      if (g.size() != 1 || g[0].kind == GenKind::sigma_inv)
        throw WordParseError("relator words use plain generators: '" +
                             tokens[i] + "'");
      w += to_mword(g);
      ++i;
    }
    out.add_term(w, coeff * sign);
  }
  return out;
}

inline std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[size_t(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

// Canonical fingerprint of a presentation instance: every relator rendered
// at the specialized parameter, plus the degree budget.
inline std::string relation_hash(const std::vector<Relation<Rational>>& rels,
                                 int max_degree) {
  std::string blob = "budget=" + std::to_string(max_degree) + ";";
  for (const auto& rel : rels)
    blob += rel.label + "=" + rel.relator().str() + ";";
  return hex64(fnv1a64(blob));
}

inline Json element_json(const AlgebraElement<Rational>& e) {
  Json terms = Json::array();
  for (const auto& [w, c] : e.terms())
    terms.push_back(Json::array({mword_str(w), c.str()}));
  return terms;
}

inline AlgebraElement<Rational> element_from_json(const Json& j) {
  AlgebraElement<Rational> out;
  for (const auto& term : j)
    out.add_term(to_mword(parse_gword(term.at(0).get<std::string>())),
                 parse_rational(term.at(1).get<std::string>()));
  return out;
}

inline std::string status_str(const RewriteSystem<Rational>& sys) {
  if (sys.is_complete()) return "complete";
  return "truncated_at_degree_" + std::to_string(sys.complete_up_to());
}

inline Json system_json(const RewriteSystem<Rational>& sys,
                        const std::string& rhash) {
  Json rules = Json::array();
  for (const auto& [lead, tail] : sys.rule_map())
    rules.push_back(
        Json{{"lead", mword_str(lead)}, {"tail", element_json(tail)}});
  return Json{{"schema_version", kCacheSchemaVersion},
              {"code_version", kCodeVersion},
              {"n", sys.n()},
              {"t", sys.t().str()},
              {"max_degree", sys.complete_up_to()},
              {"relation_hash", rhash},
              {"status", sys.is_complete() ? "complete" : "truncated"},
              {"rules", rules}};
}

inline std::filesystem::path cache_file(const std::filesystem::path& dir,
                                        int n, const std::string& rhash) {
  return dir / ("lhdim-" + std::to_string(n) + "-" + rhash + ".json");
}

inline std::optional<RewriteSystem<Rational>> cache_load(
    const std::filesystem::path& dir, int n, const Rational& t,
    int max_degree, const std::string& rhash) {
  std::ifstream in(cache_file(dir, n, rhash));
  if (!in) return std::nullopt;
  Json j;
  try {
    in >> j;
    if (j.value("schema_version", "") != kCacheSchemaVersion ||
        j.value("code_version", "") != kCodeVersion ||
        j.value("relation_hash", "") != rhash ||
        j.value("n", -1) != n || j.value("t", "") != t.str() ||
        j.value("max_degree", -1) != max_degree)
      return std::nullopt;
    std::vector<RewriteRule<Rational>> rules;
    for (const auto& r : j.at("rules"))
      rules.push_back({to_mword(parse_gword(r.at("lead").get<std::string>())),
                       element_from_json(r.at("tail"))});
    ConfluenceStatus status = j.at("status").get<std::string>() == "complete"
                                  ? ConfluenceStatus::complete
                                  : ConfluenceStatus::truncated;
    return RewriteSystem<Rational>::restore(n, t, max_degree, status, rules);
  } catch (const Json::exception&) {
    return std::nullopt;
  } catch (const ScalarError&) {
    return std::nullopt;
  }
}

inline void cache_store(const std::filesystem::path& dir,
                        const RewriteSystem<Rational>& sys,
                        const std::string& rhash) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return;
  auto target = cache_file(dir, sys.n(), rhash);
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << system_json(sys, rhash).dump(2) << "\n";
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

inline Json verify_json(const std::string& rep_name, int n,
                        const std::string& t_str, const VerifyReport& report) {
  Json results = Json::array();
  for (const auto& [label, ok] : report.results)
    results.push_back(Json{{"relation", label}, {"pass", ok}});
  return Json{{"command", "verify"},
              {"rep", rep_name},
              {"n", n},
              {"t", t_str},
              {"results", results},
              {"all_pass", report.all_pass}};
}

inline Json structure_json(const StructureReport& report) {
  Json checks = Json::object();
  for (const auto& [label, ok] : report.checks) checks[label] = ok;
  return Json{{"command", "sp-structure"},
              {"n", report.n},
              {"t", report.t_str},
              {"field", report.field},
              {"dim", report.dim},
              {"radical_dim", report.radical_dim},
              {"ss_dim", report.ss_dim},
              {"block_dims", report.block_dims},
              {"irrep_dims", report.irrep_dims},
              {"cartan", report.cartan},
              {"dim_grid", report.dim_grid},
              {"checks", checks},
              {"all_pass", report.all_checks_pass()}};
}

}  // namespace lh
