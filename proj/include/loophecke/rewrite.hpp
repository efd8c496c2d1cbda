#pragma once

// Completion of the loop-Hecke relations at a specialized parameter into a
// rewriting system on monoid words, with normal forms, basis enumeration,
// left-regular matrices, and quotient/variant experiments. Words compare by
// degree-lexicographic order (length first, then letter codes), every rule
// replaces its lead word by strictly smaller terms, and completion resolves
// overlap and containment ambiguities until no new rules appear or the lead
// degree budget is exceeded.

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "loophecke/presentations.hpp"
#include "loophecke/reps.hpp"
#include "loophecke/words.hpp"

namespace lh {

struct NotComplete : ScalarError {
  using ScalarError::ScalarError;
};
struct DegreeBudgetExceeded : ScalarError {
  using ScalarError::ScalarError;
};

enum class ConfluenceStatus { complete, truncated };

template <class K>
struct RewriteRule {
  MWord lead;
  AlgebraElement<K> tail;  // lead rewrites to tail; every tail word < lead
};

template <class K>
class RewriteSystem;

template <class K>
RewriteSystem<K> complete(const std::vector<Relation<K>>& relations, int n,
                          const K& t, int max_degree = 0);

template <class K>
class RewriteSystem {
 public:
  using RuleMap = std::map<MWord, AlgebraElement<K>, DegLexLess>;

  RewriteSystem(int n, const K& t, int max_degree)
      : n_(n), t_(t), complete_up_to_(max_degree) {}

  // Rebuilds a system from stored rules (e.g. a cache entry); trusts the
  // caller's confluence status.
  static RewriteSystem restore(int n, const K& t, int max_degree,
                               ConfluenceStatus status,
                               const std::vector<RewriteRule<K>>& rules) {
    RewriteSystem sys(n, t, max_degree);
    for (const auto& r : rules) sys.rules_[r.lead] = r.tail;
    sys.refresh_lead_bounds();
    sys.status_ = status;
    return sys;
  }

  int n() const { return n_; }
  const K& t() const { return t_; }
  int complete_up_to() const { return complete_up_to_; }
  ConfluenceStatus status() const { return status_; }
  bool is_complete() const { return status_ == ConfluenceStatus::complete; }

  const RuleMap& rule_map() const { return rules_; }
  size_t rule_count() const { return rules_.size(); }

  std::vector<RewriteRule<K>> rules() const {
    std::vector<RewriteRule<K>> out;
    out.reserve(rules_.size());
    for (const auto& [lead, tail] : rules_) out.push_back({lead, tail});
    return out;
  }

  bool word_is_reducible(const MWord& w) const {
    return find_leftmost_match(w).first >= 0;
  }

  // Deterministic normal form: repeatedly takes the largest unprocessed word
  // and rewrites its leftmost reducible factor (shortest lead on ties).
  AlgebraElement<K> normal_form(const AlgebraElement<K>& x) const {
    typename AlgebraElement<K>::Terms work(x.terms().begin(), x.terms().end());
    AlgebraElement<K> out;
    while (!work.empty()) {
      auto it = std::prev(work.end());
      MWord w = it->first;
      K c = it->second;
      work.erase(it);
      if (c.is_zero()) continue;
      auto [pos, lead_len] = find_leftmost_match(w);
      if (pos < 0) {
        out.add_term(w, c);
        continue;
      }
      add_rewritten(work, w, c, pos, lead_len);
    }
    return out;
  }

  // Randomized strategy: rewrites a uniformly random reducible factor of a
  // uniformly random term. Agrees with the deterministic strategy exactly
  // when the system is complete.
  AlgebraElement<K> normal_form(const AlgebraElement<K>& x,
                                std::mt19937_64& rng) const {
    typename AlgebraElement<K>::Terms work(x.terms().begin(), x.terms().end());
    AlgebraElement<K> out;
    while (!work.empty()) {
      size_t pick =
          std::uniform_int_distribution<size_t>(0, work.size() - 1)(rng);
      auto it = std::next(work.begin(), long(pick));
      MWord w = it->first;
      K c = it->second;
      work.erase(it);
      if (c.is_zero()) continue;
      auto matches = find_all_matches(w);
      if (matches.empty()) {
        out.add_term(w, c);
        continue;
      }
      size_t m =
          std::uniform_int_distribution<size_t>(0, matches.size() - 1)(rng);
      add_rewritten(work, w, c, matches[m].first, matches[m].second);
    }
    return out;
  }

  // Mints rational coefficients into this system's scalar kind, then reduces.
  AlgebraElement<K> normal_form_rational(
      const AlgebraElement<Rational>& e) const {
    AlgebraElement<K> x;
    for (const auto& [w, c] : e.terms()) x.add_term(w, t_.make_rational(c));
    return normal_form(x);
  }

 private:
  int n_;
  K t_;
  int complete_up_to_;
  ConfluenceStatus status_ = ConfluenceStatus::complete;
  RuleMap rules_;
  size_t min_lead_ = 0;
  size_t max_lead_ = 0;

  void insert_rule(const MWord& lead, const AlgebraElement<K>& tail) {
    rules_[lead] = tail;
    refresh_lead_bounds();
  }
  void erase_rule(const MWord& lead) {
    rules_.erase(lead);
    refresh_lead_bounds();
  }
  void refresh_lead_bounds() {
    min_lead_ = 0;
    max_lead_ = 0;
    for (const auto& [lead, tail] : rules_) {
      if (min_lead_ == 0 || lead.size() < min_lead_) min_lead_ = lead.size();
      max_lead_ = std::max(max_lead_, lead.size());
    }
  }

  // Returns (position, lead length) of the leftmost rule match in w, with the
  // shortest lead winning at equal positions; (-1, 0) if w is irreducible.
  std::pair<long, size_t> find_leftmost_match(const MWord& w) const {
    if (min_lead_ == 0 || w.size() < min_lead_) return {-1, 0};
    for (size_t s = 0; s + min_lead_ <= w.size(); ++s)
      for (size_t len = min_lead_; len <= max_lead_ && s + len <= w.size();
           ++len)
        if (rules_.count(w.substr(s, len))) return {long(s), len};
    return {-1, 0};
  }

  std::vector<std::pair<long, size_t>> find_all_matches(const MWord& w) const {
    std::vector<std::pair<long, size_t>> out;
    if (min_lead_ == 0 || w.size() < min_lead_) return out;
    for (size_t s = 0; s + min_lead_ <= w.size(); ++s)
      for (size_t len = min_lead_; len <= max_lead_ && s + len <= w.size();
           ++len)
        if (rules_.count(w.substr(s, len))) out.push_back({long(s), len});
    return out;
  }

  void add_rewritten(typename AlgebraElement<K>::Terms& work, const MWord& w,
                     const K& c, long pos, size_t lead_len) const {
    MWord prefix = w.substr(0, size_t(pos));
    MWord suffix = w.substr(size_t(pos) + lead_len);
    const AlgebraElement<K>& tail = rules_.at(w.substr(size_t(pos), lead_len));
    for (const auto& [tw, tc] : tail.terms()) {
      MWord nw = prefix + tw + suffix;
      K nc = c * tc;
      auto [it, fresh] = work.emplace(nw, nc);
      if (!fresh) {
        it->second += nc;
        if (it->second.is_zero()) work.erase(it);
      }
    }
  }

  template <class K2>
  friend RewriteSystem<K2> complete(const std::vector<Relation<K2>>&, int,
                                    const K2&, int);
};

// Splits a reduced relator into (lead word, tail element) with the tail on
// the small side of the order.
template <class K>
RewriteRule<K> orient_relator(const AlgebraElement<K>& p) {
  const MWord& lead = p.leading_word();
  K c = p.leading_coeff();
  AlgebraElement<K> tail =
      (AlgebraElement<K>::monomial(lead, c) - p).scaled(c.inverse());
  return {lead, tail};
}

// Knuth-Bendix style completion: orient the relators, then resolve every
// overlap and containment ambiguity (processed by overlap-word degree, then
// discovery order) until a fixpoint, interreducing between rounds. A rule
// whose lead would exceed max_degree truncates the system instead.
template <class K>
RewriteSystem<K> complete(const std::vector<Relation<K>>& relations, int n,
                          const K& t, int max_degree) {
  if (max_degree <= 0) max_degree = 2 * n + 4;
  RewriteSystem<K> sys(n, t, max_degree);
  bool exceeded = false;

  auto add_poly = [&](const AlgebraElement<K>& p) {
    AlgebraElement<K> q = sys.normal_form(p);
    if (q.is_zero()) return false;
    RewriteRule<K> rule = orient_relator(q);
    if (long(rule.lead.size()) > max_degree) {
      exceeded = true;
      return false;
    }
    sys.insert_rule(rule.lead, rule.tail);
    return true;
  };

  auto interreduce = [&] {
    bool again = true;
    while (again && !exceeded) {
      again = false;
      std::vector<MWord> leads;
      for (const auto& [lead, tail] : sys.rules_) leads.push_back(lead);
      for (const MWord& lead : leads) {
        auto it = sys.rules_.find(lead);
        if (it == sys.rules_.end()) continue;
        AlgebraElement<K> tail = it->second;
        sys.erase_rule(lead);
        AlgebraElement<K> p =
            AlgebraElement<K>::monomial(lead, t.make(1)) - tail;
        AlgebraElement<K> q = sys.normal_form(p);
        if (q == p) {
          sys.insert_rule(lead, tail);
        } else {
          again = true;
          if (!q.is_zero() && !add_poly(q)) {
            if (exceeded) return;
          }
        }
      }
    }
  };

  for (const auto& rel : relations) {
    add_poly(rel.relator());
    if (exceeded) break;
  }

  bool changed = true;
  while (changed && !exceeded) {
    changed = false;
    interreduce();
    if (exceeded) break;

    std::vector<MWord> leads;
    for (const auto& [lead, tail] : sys.rules_) leads.push_back(lead);
    struct Candidate {
      size_t degree;
      AlgebraElement<K> spoly;
    };
    std::vector<Candidate> cands;
    for (const MWord& a : leads) {
      const AlgebraElement<K>& ta = sys.rules_.at(a);
      for (const MWord& b : leads) {
        const AlgebraElement<K>& tb = sys.rules_.at(b);
        size_t kmax = std::min(a.size(), b.size()) - 1;
        for (size_t k = 1; k <= kmax; ++k) {
          if (a.compare(a.size() - k, k, b, 0, k) != 0) continue;
          MWord head = a.substr(0, a.size() - k);
          MWord rest = b.substr(k);
          AlgebraElement<K> left =
              ta * AlgebraElement<K>::monomial(rest, t.make(1));
          AlgebraElement<K> right =
              AlgebraElement<K>::monomial(head, t.make(1)) * tb;
          cands.push_back({a.size() + rest.size(), left - right});
        }
        if (b.size() < a.size()) {
          for (size_t s = 0; s + b.size() <= a.size(); ++s) {
            if (a.compare(s, b.size(), b) != 0) continue;
            AlgebraElement<K> mid =
                AlgebraElement<K>::monomial(a.substr(0, s), t.make(1)) * tb *
                AlgebraElement<K>::monomial(a.substr(s + b.size()), t.make(1));
            cands.push_back({a.size(), ta - mid});
          }
        }
      }
    }
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Candidate& x, const Candidate& y) {
                       return x.degree < y.degree;
                     });
    for (const auto& c : cands) {
      if (add_poly(c.spoly)) changed = true;
      if (exceeded) break;
    }
  }

  if (exceeded) {
    sys.status_ = ConfluenceStatus::truncated;
  } else {
    sys.status_ = ConfluenceStatus::complete;
  }
  return sys;
}

template <class K>
RewriteSystem<K> complete_lh(int n, const K& t, int max_degree = 0) {
  return complete(lh_relations(n, t), n, t, max_degree);
}

struct BasisEnumeration {
  std::vector<MWord> words;       // irreducible words in degree-then-lex order
  std::vector<long> level_sizes;  // count per degree, starting at degree 0
  bool capped = false;            // degree cap hit while levels still growing

  long dim() const { return long(words.size()); }
};

// Breadth-first irreducible words: a child w+a is irreducible iff no suffix
// of it is a rule lead, since every proper prefix is already irreducible.
// Terminates at the first empty degree level.
template <class K>
BasisEnumeration enumerate_basis(const RewriteSystem<K>& sys,
                                 int degree_cap = 0) {
  if (!sys.is_complete())
    throw NotComplete("enumerate_basis: system truncated at degree " +
                      std::to_string(sys.complete_up_to()));
  if (degree_cap <= 0) degree_cap = 4 * sys.n() + 8;
  int nletters = 2 * (sys.n() - 1);
  const auto& rules = sys.rule_map();
  BasisEnumeration out;
  out.words.push_back(MWord());
  out.level_sizes.push_back(1);
  std::vector<MWord> level{MWord()};
  for (int d = 1; !level.empty() && d <= degree_cap; ++d) {
    std::vector<MWord> next;
    for (const MWord& w : level) {
      for (int a = 0; a < nletters; ++a) {
        MWord w2 = w + char(a);
        bool reducible = false;
        for (size_t k = 1; k <= w2.size() && !reducible; ++k)
          if (rules.count(w2.substr(w2.size() - k))) reducible = true;
        if (!reducible) next.push_back(w2);
      }
    }
    if (!next.empty()) out.level_sizes.push_back(long(next.size()));
    out.words.insert(out.words.end(), next.begin(), next.end());
    level = std::move(next);
  }
  out.capped = !level.empty();
  return out;
}

// Left-multiplication matrices on the normal-form basis: column j of the
// image of g holds the coordinates of normal_form(g * basis[j]).
template <class K>
GeneratorAssignment<K> regular_representation(const RewriteSystem<K>& sys) {
  BasisEnumeration basis = enumerate_basis(sys);
  if (basis.capped)
    throw NotComplete("regular_representation: basis enumeration hit cap");
  std::map<MWord, long, DegLexLess> index;
  for (long j = 0; j < basis.dim(); ++j) index.emplace(basis.words[j], j);

  GeneratorAssignment<K> rep;
  rep.name = "regular";
  rep.n = sys.n();
  rep.dim = basis.dim();
  rep.t = sys.t();
  for (int a = 0; a < 2 * (sys.n() - 1); ++a) {
    Matrix<K> m(rep.dim, rep.dim, sys.t().make(0));
    for (long j = 0; j < rep.dim; ++j) {
      AlgebraElement<K> gx = sys.normal_form(AlgebraElement<K>::monomial(
          MWord(1, char(a)) + basis.words[size_t(j)], sys.t().make(1)));
      for (const auto& [w, c] : gx.terms()) {
        auto it = index.find(w);
        if (it == index.end())
          throw ScalarError("regular_representation: word escapes basis");
        m.at(it->second, j) = c;
      }
    }
    rep.images.emplace(char(a), std::move(m));
  }
  return rep;
}

// Dimension after adjoining extra relators to a completed system and
// re-completing. The reduced rules of the base system stand in for its
// original relation set.
template <class K>
long quotient_experiment(const RewriteSystem<K>& sys,
                         const std::vector<AlgebraElement<K>>& extra,
                         int max_degree = 0) {
  if (!sys.is_complete())
    throw NotComplete("quotient_experiment: base system truncated");
  std::vector<Relation<K>> rels;
  for (const auto& [lead, tail] : sys.rule_map())
    rels.push_back({AlgebraElement<K>::monomial(lead, sys.t().make(1)), tail,
                    "base_rule"});
  for (size_t i = 0; i < extra.size(); ++i)
    rels.push_back(
        {extra[i], AlgebraElement<K>(), "extra_" + std::to_string(i)});
  RewriteSystem<K> quo = complete(rels, sys.n(), sys.t(), max_degree);
  if (!quo.is_complete())
    throw DegreeBudgetExceeded("quotient_experiment: completion truncated");
  BasisEnumeration basis = enumerate_basis(quo);
  if (basis.capped)
    throw DegreeBudgetExceeded("quotient_experiment: enumeration hit cap");
  return basis.dim();
}

struct RegularStructure {
  long dim = 0;
  long radical_dim = 0;
  long ss_dim = 0;
};

// Radical of the abstract algebra from the trace form of its left-regular
// action: over the rationals the regular module is faithful, so the Gram
// kernel of x,y -> trace(left-mult by xy) is exactly the radical.
inline RegularStructure regular_structure(const RewriteSystem<Rational>& sys) {
  BasisEnumeration basis = enumerate_basis(sys);
  if (basis.capped)
    throw NotComplete("regular_structure: basis enumeration hit cap");
  long dim = basis.dim();
  std::map<MWord, long, DegLexLess> index;
  for (long j = 0; j < dim; ++j) index.emplace(basis.words[size_t(j)], j);
  Rational one(1);
  auto product_nf = [&](long i, long j) {
    return sys.normal_form(AlgebraElement<Rational>::monomial(
        basis.words[size_t(i)] + basis.words[size_t(j)], one));
  };
  std::vector<Rational> left_trace(size_t(dim), Rational(0));
  for (long i = 0; i < dim; ++i) {
    Rational tr(0);
    for (long j = 0; j < dim; ++j)
      tr += product_nf(i, j).coeff(basis.words[size_t(j)], one);
    left_trace[size_t(i)] = tr;
  }
  Matrix<Rational> gram(dim, dim, Rational(0));
  for (long i = 0; i < dim; ++i)
    for (long j = 0; j < dim; ++j) {
      Rational g(0);
      AlgebraElement<Rational> p = product_nf(i, j);
      for (const auto& [w, c] : p.terms())
        g += c * left_trace[size_t(index.at(w))];
      gram.at(i, j) = g;
    }
  RegularStructure out;
  out.dim = dim;
  out.radical_dim = long(kernel_basis(gram).size());
  out.ss_dim = dim - out.radical_dim;
  return out;
}

enum class DropRelation { none, r1i, r1ii };

struct VariantOutcome {
  bool budget_exceeded = false;
  long dim = 0;  // meaningful only when budget_exceeded is false
  std::vector<long> level_sizes;
};

// Completion with one straightening relation dropped; a truncated completion
// or a still-growing enumeration reports budget-exceeded as a value.
template <class K>
VariantOutcome variant_relations_experiment(int n, const K& t,
                                            DropRelation drop,
                                            int max_degree = 0) {
  auto rels = lh_relations(n, t, drop == DropRelation::r1i,
                           drop == DropRelation::r1ii);
  RewriteSystem<K> sys = complete(rels, n, t, max_degree);
  VariantOutcome out;
  if (!sys.is_complete()) {
    out.budget_exceeded = true;
    return out;
  }
  BasisEnumeration basis = enumerate_basis(sys);
  out.level_sizes = basis.level_sizes;
  if (basis.capped) {
    out.budget_exceeded = true;
    return out;
  }
  out.dim = basis.dim();
  return out;
}

}  // namespace lh
