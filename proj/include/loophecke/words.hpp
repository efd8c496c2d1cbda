#pragma once

// Words in the generators sigma_i / rho_i and finitely supported linear
// combinations of words. Two word forms coexist: GWord is a group word that
// may contain inverse letters (used by the Burau / Alexander layer); MWord
// is a monoid word over {sigma_i, rho_i} packed one letter per byte, the
// form consumed by representations and the rewriting engine.

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "loophecke/scalars.hpp"

namespace lh {

struct IndexOutOfRange : ScalarError {
  using ScalarError::ScalarError;
};
struct WordParseError : ScalarError {
  using ScalarError::ScalarError;
};

enum class GenKind { sigma, rho, sigma_inv };

struct Generator {
  GenKind kind;
  int index;  // 1-based

  bool operator==(const Generator& o) const = default;

  std::string str() const {
    std::string s = (kind == GenKind::rho) ? "r" : "s";
    s += std::to_string(index);
    if (kind == GenKind::sigma_inv) s += "^-1";
    return s;
  }
};

using GWord = std::vector<Generator>;

inline std::string gword_str(const GWord& w) {
  std::string out;
  for (const auto& g : w) {
    if (!out.empty()) out += " ";
    out += g.str();
  }
  return out;
}

inline GWord parse_gword(const std::string& text) {
  GWord w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2 || (tok[0] != 's' && tok[0] != 'r'))
      throw WordParseError("bad generator token '" + tok + "'");
    GenKind kind = tok[0] == 's' ? GenKind::sigma : GenKind::rho;
    std::string rest = tok.substr(1);
    auto caret = rest.find('^');
    if (caret != std::string::npos) {
      std::string exp = rest.substr(caret + 1);
      rest = rest.substr(0, caret);
      if (exp != "-1") throw WordParseError("bad exponent in '" + tok + "'");
      if (kind == GenKind::rho)
        kind = GenKind::rho;  // rho is an involution: r^-1 = r
      else
        kind = GenKind::sigma_inv;
    }
    int idx = 0;
    try {
      idx = std::stoi(rest);
    } catch (...) {
      throw WordParseError("bad index in '" + tok + "'");
    }
    if (idx < 1) throw WordParseError("index must be >= 1 in '" + tok + "'");
    w.push_back({kind, idx});
  }
  return w;
}

// ---------------------------------------------------------------------------
// MWord: free-monoid word over sigma/rho letters with the term-order letter
// ranks sigma_1 < rho_1 < sigma_2 < rho_2 < ... baked into the byte codes.

using MWord = std::string;

inline char sigma_code(int i) { return char(2 * (i - 1)); }
inline char rho_code(int i) { return char(2 * (i - 1) + 1); }
inline bool code_is_sigma(char c) { return (c & 1) == 0; }
inline int code_index(char c) { return int(c) / 2 + 1; }

inline MWord mword(std::initializer_list<char> letters) { return MWord(letters); }

inline int max_index(const MWord& w) {
  int m = 0;
  for (char c : w) m = std::max(m, code_index(c));
  return m;
}

inline MWord translate(const MWord& w, int k) {
  MWord out;
  out.reserve(w.size());
  for (char c : w) {
    int idx = code_index(c) + k;
    if (idx < 1) throw IndexOutOfRange("translate: index below 1");
    out.push_back(code_is_sigma(c) ? sigma_code(idx) : rho_code(idx));
  }
  return out;
}

inline GWord to_gword(const MWord& w) {
  GWord out;
  for (char c : w)
    out.push_back({code_is_sigma(c) ? GenKind::sigma : GenKind::rho, code_index(c)});
  return out;
}

// Rejects inverse letters: monoid words live downstream of inverse
// elimination.
inline MWord to_mword(const GWord& w) {
  MWord out;
  for (const auto& g : w) {
    if (g.kind == GenKind::sigma_inv)
      throw WordParseError("monoid word cannot contain sigma inverses");
    out.push_back(g.kind == GenKind::sigma ? sigma_code(g.index) : rho_code(g.index));
  }
  return out;
}

inline std::string mword_str(const MWord& w) { return gword_str(to_gword(w)); }

// Degree-lexicographic order: by length, then byte-wise by letter rank.
struct DegLexLess {
  bool operator()(const MWord& a, const MWord& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

inline int deglex_compare(const MWord& a, const MWord& b) {
  DegLexLess lt;
  if (lt(a, b)) return -1;
  if (lt(b, a)) return 1;
  return 0;
}

// ---------------------------------------------------------------------------
// AlgebraElement: finitely supported map MWord -> coefficient.

template <class K>
class AlgebraElement {
 public:
  using Terms = std::map<MWord, K, DegLexLess>;

  AlgebraElement() = default;

  static AlgebraElement monomial(const MWord& w, const K& c) {
    AlgebraElement e;
    if (!c.is_zero()) e.terms_.emplace(w, c);
    return e;
  }
  static AlgebraElement unit(const K& proto) {
    return monomial(MWord(), proto.make(1));
  }
  static AlgebraElement generator(const Generator& g, const K& proto) {
    return monomial(to_mword({g}), proto.make(1));
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  const MWord& leading_word() const {
    if (is_zero()) throw ScalarError("AlgebraElement: leading word of zero");
    return terms_.rbegin()->first;
  }
  const K& leading_coeff() const {
    if (is_zero()) throw ScalarError("AlgebraElement: leading coeff of zero");
    return terms_.rbegin()->second;
  }
  K coeff(const MWord& w, const K& proto) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? proto.make(0) : it->second;
  }

  void add_term(const MWord& w, const K& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      terms_.emplace(w, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  AlgebraElement operator+(const AlgebraElement& o) const {
    AlgebraElement r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
  }
  AlgebraElement operator-(const AlgebraElement& o) const {
    AlgebraElement r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
    return r;
  }
  AlgebraElement operator-() const {
    AlgebraElement r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
  }
  AlgebraElement scaled(const K& s) const {
    AlgebraElement r;
    if (s.is_zero()) return r;
    for (const auto& [w, c] : terms_) {
      K sc = c * s;
      if (!sc.is_zero()) r.terms_.emplace(w, sc);
    }
    return r;
  }
  AlgebraElement operator*(const AlgebraElement& o) const {
    AlgebraElement r;
    for (const auto& [wa, ca] : terms_)
      for (const auto& [wb, cb] : o.terms_) r.add_term(wa + wb, ca * cb);
    return r;
  }

  bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

  AlgebraElement translated(int k) const {
    AlgebraElement r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(translate(w, k), c);
    return r;
  }

  int max_generator_index() const {
    int m = 0;
    for (const auto& [w, c] : terms_) m = std::max(m, max_index(w));
    return m;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!out.empty()) out += " + ";
      out += "(" + it->second.str() + ")";
      if (!it->first.empty()) out += "*" + mword_str(it->first);
    }
    return out;
  }

 private:
  Terms terms_;
};

}  // namespace lh
