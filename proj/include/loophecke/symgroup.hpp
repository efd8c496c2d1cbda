#pragma once

// Symmetric-group machinery: permutations with deterministic reduced words,
// group-algebra arithmetic over the rationals, full (anti)symmetrizers, their
// Hecke deformations, hook-partition idempotents, and the push-forward of a
// word-sum element into a matrix representation.

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "loophecke/linalg.hpp"
#include "loophecke/reps.hpp"
#include "loophecke/scalars.hpp"
#include "loophecke/words.hpp"

namespace lh {

struct NonInvertibleT : ScalarError {
  using ScalarError::ScalarError;
};
struct DegenerateScaling : ScalarError {
  using ScalarError::ScalarError;
};
struct RankMismatch : ScalarError {
  using ScalarError::ScalarError;
};

// ---------------------------------------------------------------------------
// Permutations in one-line notation over {1..m}.

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> line) : line_(std::move(line)) {
    std::vector<bool> seen(line_.size(), false);
    for (int v : line_) {
      if (v < 1 || v > int(line_.size()) || seen[v - 1])
        throw IndexOutOfRange("Permutation: not a bijection on {1..m}");
      seen[v - 1] = true;
    }
  }

  static Permutation identity(int m) {
    std::vector<int> line(m);
    std::iota(line.begin(), line.end(), 1);
    return Permutation(std::move(line));
  }

  // Adjacent transposition s_i swapping i and i+1, 1 <= i <= m-1.
  static Permutation transposition(int m, int i) {
    if (i < 1 || i > m - 1) throw IndexOutOfRange("Permutation: bad transposition index");
    Permutation p = identity(m);
    std::swap(p.line_[i - 1], p.line_[i]);
    return p;
  }

  int size() const { return int(line_.size()); }
  int apply(int x) const { return line_[x - 1]; }
  const std::vector<int>& line() const { return line_; }

  // Function composition: (this * o)(x) = this(o(x)).
  Permutation operator*(const Permutation& o) const {
    if (size() != o.size()) throw DimensionMismatch("Permutation: size mismatch");
    std::vector<int> line(line_.size());
    for (size_t i = 0; i < line.size(); ++i) line[i] = line_[o.line_[i] - 1];
    Permutation p;
    p.line_ = std::move(line);
    return p;
  }

  Permutation inverse() const {
    std::vector<int> line(line_.size());
    for (size_t i = 0; i < line.size(); ++i) line[line_[i] - 1] = int(i) + 1;
    Permutation p;
    p.line_ = std::move(line);
    return p;
  }

  // Coxeter length = inversion count.
  int length() const {
    int inv = 0;
    for (size_t a = 0; a < line_.size(); ++a)
      for (size_t b = a + 1; b < line_.size(); ++b)
        if (line_[a] > line_[b]) ++inv;
    return inv;
  }

  int sign() const { return length() % 2 == 0 ? 1 : -1; }

  bool operator==(const Permutation& o) const { return line_ == o.line_; }
  bool operator<(const Permutation& o) const { return line_ < o.line_; }

  std::string str() const {
    std::string s = "[";
    for (size_t i = 0; i < line_.size(); ++i) {
      if (i) s += " ";
      s += std::to_string(line_[i]);
    }
    return s + "]";
  }

 private:
  std::vector<int> line_;
};

inline std::vector<Permutation> all_permutations(int m) {
  std::vector<int> line(m);
  std::iota(line.begin(), line.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(line));
  } while (std::next_permutation(line.begin(), line.end()));
  return out;
}

// Deterministic reduced word: bubble-sort the one-line notation to the
// identity (each swap is a right factor), then reverse, so that the
// left-to-right product s_{w[0]} s_{w[1]} ... equals the permutation.
inline std::vector<int> reduced_word(const Permutation& p) {
  std::vector<int> line = p.line();
  std::vector<int> word;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t j = 0; j + 1 < line.size(); ++j) {
      if (line[j] > line[j + 1]) {
        std::swap(line[j], line[j + 1]);
        word.push_back(int(j) + 1);
        changed = true;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

// Permutation matrix with P e_j = e_{p(j)}, so P(u v) = P(u) P(v).
template <class K>
Matrix<K> permutation_matrix(const Permutation& p, const K& proto) {
  Matrix<K> m(p.size(), p.size(), proto.make(0));
  for (int j = 1; j <= p.size(); ++j) m.at(p.apply(j) - 1, j - 1) = proto.make(1);
  return m;
}

// ---------------------------------------------------------------------------
// Rational group algebra of S_m.

class GroupAlgebra {
 public:
  using Terms = std::map<Permutation, Rational>;

  GroupAlgebra() = default;
  static GroupAlgebra monomial(const Permutation& p, const Rational& c) {
    GroupAlgebra g;
    g.add_term(p, c);
    return g;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Permutation& p, const Rational& c) {
    auto it = terms_.find(p);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_.emplace(p, c);
      return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  GroupAlgebra operator+(const GroupAlgebra& o) const {
    GroupAlgebra g = *this;
    for (const auto& [p, c] : o.terms_) g.add_term(p, c);
    return g;
  }

  GroupAlgebra operator*(const GroupAlgebra& o) const {
    GroupAlgebra g;
    for (const auto& [p, c] : terms_)
      for (const auto& [q, d] : o.terms_) g.add_term(p * q, c * d);
    return g;
  }

  GroupAlgebra scaled(const Rational& s) const {
    GroupAlgebra g;
    if (s.is_zero()) return g;
    for (const auto& [p, c] : terms_) g.terms_.emplace(p, c * s);
    return g;
  }

  bool operator==(const GroupAlgebra& o) const { return terms_ == o.terms_; }

  // Rendering into generator words: each permutation becomes its reduced
  // rho-word (product of involutions, so the image is well defined).
  AlgebraElement<Rational> to_rho_words() const {
    AlgebraElement<Rational> e;
    for (const auto& [p, c] : terms_) {
      MWord w;
      for (int i : reduced_word(p)) w.push_back(rho_code(i));
      e.add_term(w, c);
    }
    return e;
  }

 private:
  Terms terms_;
};

// Sum over all permutations of the subset `points` of {1..m} (fixing the
// rest), with coefficient 1 (plus) or sign (minus).
inline GroupAlgebra subset_symmetrizer(const std::vector<int>& points, int m, int sign) {
  std::vector<int> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> arrangement = sorted;
  GroupAlgebra out;
  do {
    std::vector<int> line(m);
    std::iota(line.begin(), line.end(), 1);
    for (size_t k = 0; k < sorted.size(); ++k) line[sorted[k] - 1] = arrangement[k];
    Permutation p(std::move(line));
    out.add_term(p, Rational(sign > 0 ? 1 : p.sign()));
  } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  return out;
}

// Y_+^m / Y_-^m as group-algebra elements of S_m.
inline GroupAlgebra young_symmetrizer_group(int m, int sign) {
  std::vector<int> pts(m);
  std::iota(pts.begin(), pts.end(), 1);
  return subset_symmetrizer(pts, m, sign);
}

// Y_+^m / Y_-^m rendered in rho-letters.
inline AlgebraElement<Rational> young_symmetrizer(int m, int sign) {
  return young_symmetrizer_group(m, sign).to_rho_words();
}

// Hecke symmetrizer X_±^m = sum_g c^len(g) T_g in sigma-letters, where the
// plus version has c = t^{-1} (so t must be invertible) and the minus
// version has c = -1.
template <class K>
AlgebraElement<K> hecke_symmetrizer(int m, int sign, const K& t) {
  K c = t.make(-1);
  if (sign > 0) {
    if (t.is_zero()) throw NonInvertibleT("hecke_symmetrizer: t = 0");
    c = t.inverse();
  }
  AlgebraElement<K> e;
  for (const auto& p : all_permutations(m)) {
    MWord w;
    K coeff = t.make(1);
    for (int i : reduced_word(p)) {
      w.push_back(sigma_code(i));
      coeff = coeff * c;
    }
    e.add_term(w, coeff);
  }
  return e;
}

// ---------------------------------------------------------------------------
// Hook partitions (n - i, 1^i) with arm 0 <= i <= n-1, and their idempotents
// e = (1/kappa) * (row symmetrizer on {1..n-i}) * (signed column symmetrizer
// on {1, n-i+1, ..., n}), with kappa read off from e_unscaled^2.

struct HookPartition {
  int n;
  int arm;  // lambda = (n - arm, 1^arm)

  HookPartition(int n_, int arm_) : n(n_), arm(arm_) {
    if (n < 1 || arm < 0 || arm > n - 1)
      throw IndexOutOfRange("HookPartition: need 0 <= arm <= n-1");
  }

  std::string str() const {
    std::string s = "(" + std::to_string(n - arm);
    if (arm > 0) s += ",1^" + std::to_string(arm);
    return s + ")";
  }
};

inline GroupAlgebra hook_idempotent_group(const HookPartition& lam) {
  int n = lam.n, i = lam.arm;
  std::vector<int> row_pts;
  for (int k = 1; k <= n - i; ++k) row_pts.push_back(k);
  std::vector<int> col_pts = {1};
  for (int k = n - i + 1; k <= n; ++k) col_pts.push_back(k);

  GroupAlgebra e = subset_symmetrizer(row_pts, n, +1) * subset_symmetrizer(col_pts, n, -1);
  GroupAlgebra esq = e * e;
  const auto& [p0, c0] = *e.terms().begin();
  Rational kappa = Rational(0);
  auto it = esq.terms().find(p0);
  if (it != esq.terms().end()) kappa = it->second / c0;
  if (kappa.is_zero()) throw DegenerateScaling("hook_idempotent: kappa = 0");
  GroupAlgebra scaled = e.scaled(kappa.inverse());
  if (!(scaled * scaled == scaled))
    throw DegenerateScaling("hook_idempotent: square is not proportional");
  return scaled;
}

inline AlgebraElement<Rational> hook_idempotent(const HookPartition& lam) {
  return hook_idempotent_group(lam).to_rho_words();
}

// ---------------------------------------------------------------------------
// The displayed length-4 column products used in the vanishing experiments
// (the two-row partition (2,2) of S_4, which is not a hook). Both are free
// word-sum expansions in rho-letters.

inline AlgebraElement<Rational> rho_plus_one(int i) {
  return AlgebraElement<Rational>::generator({GenKind::rho, i}, Rational(0)) +
         AlgebraElement<Rational>::unit(Rational(0));
}

inline AlgebraElement<Rational> rho_minus_one(int i) {
  return AlgebraElement<Rational>::generator({GenKind::rho, i}, Rational(0)) -
         AlgebraElement<Rational>::unit(Rational(0));
}

// (rho1+1)(rho3+1) rho2 (rho1-1)(rho3-1)
inline AlgebraElement<Rational> two_two_prefix() {
  auto r2 = AlgebraElement<Rational>::generator({GenKind::rho, 2}, Rational(0));
  return rho_plus_one(1) * rho_plus_one(3) * r2 * rho_minus_one(1) * rho_minus_one(3);
}

// (rho1+1)(rho3+1) rho2 (rho1-1)(rho3-1) rho2 (rho1+1)(rho3+1)
inline AlgebraElement<Rational> two_two_product() {
  auto r2 = AlgebraElement<Rational>::generator({GenKind::rho, 2}, Rational(0));
  return two_two_prefix() * r2 * rho_plus_one(1) * rho_plus_one(3);
}

// ---------------------------------------------------------------------------
// Push-forward of a rational word-sum into a matrix representation.

template <class K>
Matrix<K> psi_apply(const AlgebraElement<Rational>& e, const GeneratorAssignment<K>& rep) {
  if (e.max_generator_index() > rep.n - 1)
    throw RankMismatch("psi_apply: element uses generator index " +
                       std::to_string(e.max_generator_index()) +
                       " but representation has rank " + std::to_string(rep.n - 1));
  return rep.evaluate_rational_element(e);
}

}  // namespace lh
