#pragma once

// The defining relation sets: loop braid relations (braid relations for the
// sigma family and the rho family, rho involutivity, the two mixed
// relations, and all distant commutators) plus the three loop-Hecke
// straightening relations with the parameter t substituted. Relation labels
// are stable public API.

#include <string>
#include <vector>

#include "loophecke/words.hpp"

namespace lh {

template <class K>
struct Relation {
  AlgebraElement<K> lhs, rhs;
  std::string label;

  AlgebraElement<K> relator() const { return lhs - rhs; }
};

namespace detail {

template <class K>
AlgebraElement<K> word_elem(std::initializer_list<char> letters, const K& proto) {
  return AlgebraElement<K>::monomial(MWord(letters), proto.make(1));
}

}  // namespace detail

// The complete loop braid relation list for rank n, with stable labels:
//   braid_s_i : s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}
//   braid_r_i : r_i r_{i+1} r_i = r_{i+1} r_i r_{i+1}
//   rho_sq_i  : r_i r_i = 1
//   mixed1_i  : r_i r_{i+1} s_i = s_{i+1} r_i r_{i+1}
//   mixed2_i  : r_i s_{i+1} s_i = s_{i+1} s_i r_{i+1}
//   distant_xy_i_j (|i-j| >= 2, x,y in {s,r}): x_i y_j = y_j x_i
template <class K>
std::vector<Relation<K>> loop_braid_relations(int n, const K& proto) {
  using detail::word_elem;
  std::vector<Relation<K>> rel;
  for (int i = 1; i + 1 <= n - 1; ++i) {
    char si = sigma_code(i), si1 = sigma_code(i + 1);
    char ri = rho_code(i), ri1 = rho_code(i + 1);
    rel.push_back({word_elem({si, si1, si}, proto), word_elem({si1, si, si1}, proto),
                   "braid_s_" + std::to_string(i)});
    rel.push_back({word_elem({ri, ri1, ri}, proto), word_elem({ri1, ri, ri1}, proto),
                   "braid_r_" + std::to_string(i)});
    rel.push_back({word_elem({ri, ri1, si}, proto), word_elem({si1, ri, ri1}, proto),
                   "mixed1_" + std::to_string(i)});
    rel.push_back({word_elem({ri, si1, si}, proto), word_elem({si1, si, ri1}, proto),
                   "mixed2_" + std::to_string(i)});
  }
  for (int i = 1; i <= n - 1; ++i) {
    char ri = rho_code(i);
    rel.push_back({word_elem({ri, ri}, proto), AlgebraElement<K>::unit(proto),
                   "rho_sq_" + std::to_string(i)});
  }
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j) {
      auto tag = std::to_string(i) + "_" + std::to_string(j);
      char si = sigma_code(i), sj = sigma_code(j);
      char ri = rho_code(i), rj = rho_code(j);
      rel.push_back({word_elem({si, sj}, proto), word_elem({sj, si}, proto),
                     "distant_ss_" + tag});
      rel.push_back({word_elem({ri, rj}, proto), word_elem({rj, ri}, proto),
                     "distant_rr_" + tag});
      rel.push_back({word_elem({si, rj}, proto), word_elem({rj, si}, proto),
                     "distant_sr_" + tag});
      rel.push_back({word_elem({ri, sj}, proto), word_elem({sj, ri}, proto),
                     "distant_rs_" + tag});
    }
  return rel;
}

// The three straightening relations at parameter t:
//   r1_i   : s_i s_i = (1-t) s_i + t
//   r1i_i  : r_i s_i = -t r_i + s_i + t
//   r1ii_i : s_i r_i = -s_i + r_i + 1
template <class K>
std::vector<Relation<K>> straightening_relations(int n, const K& t,
                                                 bool drop_r1i = false,
                                                 bool drop_r1ii = false) {
  using detail::word_elem;
  K one = t.make(1);
  std::vector<Relation<K>> rel;
  for (int i = 1; i <= n - 1; ++i) {
    char si = sigma_code(i), ri = rho_code(i);
    auto s = word_elem({si}, t), r = word_elem({ri}, t);
    auto unit = AlgebraElement<K>::unit(t);
    rel.push_back({word_elem({si, si}, t), s.scaled(one - t) + unit.scaled(t),
                   "r1_" + std::to_string(i)});
    if (!drop_r1i)
      rel.push_back({word_elem({ri, si}, t), r.scaled(-t) + s + unit.scaled(t),
                     "r1i_" + std::to_string(i)});
    if (!drop_r1ii)
      rel.push_back({word_elem({si, ri}, t), -s + r + unit,
                     "r1ii_" + std::to_string(i)});
  }
  return rel;
}

// Full loop-Hecke relation set: loop braid relations plus straightening.
template <class K>
std::vector<Relation<K>> lh_relations(int n, const K& t, bool drop_r1i = false,
                                      bool drop_r1ii = false) {
  auto rel = loop_braid_relations(n, t);
  auto str = straightening_relations(n, t, drop_r1i, drop_r1ii);
  rel.insert(rel.end(), str.begin(), str.end());
  return rel;
}

// Derived consequence of the loop braid relations (must hold wherever they
// hold): s_i r_{i+1} r_i = r_{i+1} r_i s_{i+1}.
template <class K>
Relation<K> derived_mixed1_reversal(int i, const K& proto) {
  using detail::word_elem;
  char si = sigma_code(i), si1 = sigma_code(i + 1);
  char ri = rho_code(i), ri1 = rho_code(i + 1);
  return {word_elem({si, ri1, ri}, proto), word_elem({ri1, ri, si1}, proto),
          "qm0r_" + std::to_string(i)};
}

// The reversed-order second mixed relation, which deliberately does NOT
// follow from the loop braid relations: s_i s_{i+1} r_i = r_{i+1} s_i s_{i+1}.
template <class K>
Relation<K> reversed_mixed2(int i, const K& proto) {
  using detail::word_elem;
  char si = sigma_code(i), si1 = sigma_code(i + 1);
  char ri = rho_code(i), ri1 = rho_code(i + 1);
  return {word_elem({si, si1, ri}, proto), word_elem({ri1, si, si1}, proto),
          "mixed2_reversed_" + std::to_string(i)};
}

// Applies the index reversal i -> n-i to every letter of a relation.
template <class K>
Relation<K> index_reversal(const Relation<K>& rel, int n) {
  auto map_elem = [&](const AlgebraElement<K>& e) {
    AlgebraElement<K> out;
    for (const auto& [w, c] : e.terms()) {
      MWord m;
      for (char ch : w) {
        int idx = n - code_index(ch);
        if (idx < 1 || idx > n - 1) throw IndexOutOfRange("index_reversal");
        m.push_back(code_is_sigma(ch) ? sigma_code(idx) : rho_code(idx));
      }
      out.add_term(m, c);
    }
    return out;
  };
  return {map_elem(rel.lhs), map_elem(rel.rhs), rel.label + "_reversed"};
}

}  // namespace lh
