#pragma once

// Explicit matrix representations: the n-dimensional extended Burau
// assignment, the 2^n-dimensional tensor assignment built from the 4x4
// super block, the deliberately broken "naive" extension, the
// Temperley-Lieb Yang-Baxter block, and exact relation verification.
//
// Basis convention: the displayed 4x4 blocks (m_block / m_prime_block) are
// stated in the pair-basis order 11, 21, 12, 22. All tensor embeddings in
// this artifact use the standard Kronecker product, whose pair order is
// 11, 12, 21, 22; the conversion between the two is conjugation by the
// middle-swap permutation, applied once when a displayed block is turned
// into a Kronecker factor (fe_gate below). All identities are verified in
// this fixed convention.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "loophecke/linalg.hpp"
#include "loophecke/presentations.hpp"
#include "loophecke/words.hpp"

namespace lh {

struct NonInvertibleTau : ScalarError {
  using ScalarError::ScalarError;
};

template <class K>
struct GeneratorAssignment {
  std::string name;
  int n = 0;
  long dim = 0;
  K t;
  std::map<char, Matrix<K>> images;  // monoid letter code -> image

  const Matrix<K>& image(char code) const {
    auto it = images.find(code);
    if (it == images.end())
      throw IndexOutOfRange("assignment: no image for letter index " +
                            std::to_string(code_index(code)));
    return it->second;
  }

  Matrix<K> image_of_generator(const Generator& g) const {
    if (g.kind == GenKind::rho) return image(rho_code(g.index));
    const Matrix<K>& s = image(sigma_code(g.index));
    if (g.kind == GenKind::sigma) return s;
    return inverse(s);
  }

  Matrix<K> image_of_word(const GWord& w) const {
    Matrix<K> m = Matrix<K>::identity(dim, t.make(0));
    for (const auto& g : w) m = m * image_of_generator(g);
    return m;
  }

  Matrix<K> image_of_mword(const MWord& w) const {
    Matrix<K> m = Matrix<K>::identity(dim, t.make(0));
    for (char c : w) m = m * image(c);
    return m;
  }

  Matrix<K> image_of_element(const AlgebraElement<K>& e) const {
    Matrix<K> acc(dim, dim, t.make(0));
    for (const auto& [w, c] : e.terms()) acc = acc + image_of_mword(w).scaled(c);
    return acc;
  }

  // Evaluates an element with rational coefficients (e.g. a symmetric-group
  // idempotent) by minting coefficients into this assignment's scalar kind.
  Matrix<K> evaluate_rational_element(const AlgebraElement<Rational>& e) const {
    Matrix<K> acc(dim, dim, t.make(0));
    for (const auto& [w, c] : e.terms())
      acc = acc + image_of_mword(w).scaled(t.make_rational(c));
    return acc;
  }
};

// ---------------------------------------------------------------------------
// Extended Burau: n-dimensional, sigma_i with the 2x2 t-block and rho_i the
// plain transposition at slot (i, i+1).

template <class K>
GeneratorAssignment<K> burau_gb(int n, const K& t) {
  GeneratorAssignment<K> rep;
  rep.name = "burau";
  rep.n = n;
  rep.dim = n;
  rep.t = t;
  K one = t.make(1), zero = t.make(0);
  for (int i = 1; i <= n - 1; ++i) {
    Matrix<K> s = Matrix<K>::identity(n, zero);
    s.at(i - 1, i - 1) = one - t;
    s.at(i - 1, i) = t;
    s.at(i, i - 1) = one;
    s.at(i, i) = zero;
    rep.images.emplace(sigma_code(i), std::move(s));

    Matrix<K> r = Matrix<K>::identity(n, zero);
    r.at(i - 1, i - 1) = zero;
    r.at(i - 1, i) = one;
    r.at(i, i - 1) = one;
    r.at(i, i) = zero;
    rep.images.emplace(rho_code(i), std::move(r));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// The displayed 4x4 blocks, in the pair-basis order 11, 21, 12, 22:
// m_block(t)       = diag-block(1, [[1-t, t], [1, 0]], 1)
// m_prime_block(t) = diag-block(1, [[1-t, t], [1, 0]], -t)

template <class K>
Matrix<K> m_block(const K& t) {
  K one = t.make(1), zero = t.make(0);
  Matrix<K> m = Matrix<K>::identity(4, zero);
  m.at(1, 1) = one - t;
  m.at(1, 2) = t;
  m.at(2, 1) = one;
  m.at(2, 2) = zero;
  return m;
}

template <class K>
Matrix<K> m_prime_block(const K& t) {
  Matrix<K> m = m_block(t);
  m.at(3, 3) = -t;
  return m;
}

// The factor-exchange permutation on a 2x2 tensor square; identical in both
// pair-basis orders.
template <class K>
Matrix<K> swap_block(const K& proto) {
  return Matrix<K>::from_ints(
      {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}, proto);
}

// A displayed pair-basis block converted to a standard-Kronecker factor.
template <class K>
Matrix<K> to_kron_basis(const Matrix<K>& pair_basis_block) {
  auto s = swap_block(pair_basis_block.proto());
  return s * pair_basis_block * s;
}

// The super block as a standard-Kronecker gate:
// [[1,0,0,0],[0,0,1,0],[0,t,1-t,0],[0,0,0,-t]].
template <class K>
Matrix<K> fe_gate(const K& t) {
  return to_kron_basis(m_prime_block(t));
}

// I_{2^(i-1)} (x) gate (x) I_{2^(n-i-1)} under the standard Kronecker product.
template <class K>
Matrix<K> embed_gate(const Matrix<K>& gate, int n, int i) {
  K zero = gate.proto();
  Matrix<K> m = kronecker(Matrix<K>::identity(1L << (i - 1), zero), gate);
  return kronecker(m, Matrix<K>::identity(1L << (n - i - 1), zero));
}

// The 2^n-dimensional tensor assignment: sigma_i from the super block at
// parameter t, rho_i from the same block at parameter 1.
template <class K>
GeneratorAssignment<K> fe_rep(int n, const K& t) {
  GeneratorAssignment<K> rep;
  rep.name = "fe";
  rep.n = n;
  rep.dim = 1L << n;
  rep.t = t;
  Matrix<K> sigma_gate = fe_gate(t);
  Matrix<K> rho_gate = fe_gate(t.make(1));
  for (int i = 1; i <= n - 1; ++i) {
    rep.images.emplace(sigma_code(i), embed_gate(sigma_gate, n, i));
    rep.images.emplace(rho_code(i), embed_gate(rho_gate, n, i));
  }
  return rep;
}

// The naive extension: sigma_i from the non-super block, rho_i the plain
// factor transposition. Satisfies the braid relations but fails the second
// mixed relation.
template <class K>
GeneratorAssignment<K> naive_rep(int n, const K& t) {
  GeneratorAssignment<K> rep;
  rep.name = "naive";
  rep.n = n;
  rep.dim = 1L << n;
  rep.t = t;
  Matrix<K> sigma_gate = to_kron_basis(m_block(t));
  Matrix<K> rho_gate = swap_block(t.make(0));
  for (int i = 1; i <= n - 1; ++i) {
    rep.images.emplace(sigma_code(i), embed_gate(sigma_gate, n, i));
    rep.images.emplace(rho_code(i), embed_gate(rho_gate, n, i));
  }
  return rep;
}

template <class K>
GeneratorAssignment<K> make_rep(const std::string& name, int n, const K& t) {
  if (name == "burau") return burau_gb(n, t);
  if (name == "fe") return fe_rep(n, t);
  if (name == "naive") return naive_rep(n, t);
  throw ScalarError("unknown representation '" + name + "'");
}

// ---------------------------------------------------------------------------
// Relation verification by exact matrix evaluation.

struct VerifyReport {
  std::vector<std::pair<std::string, bool>> results;
  bool all_pass = true;

  void add(const std::string& label, bool pass) {
    results.emplace_back(label, pass);
    all_pass = all_pass && pass;
  }
};

template <class K>
VerifyReport verify_assignment(const GeneratorAssignment<K>& rep,
                               const std::vector<Relation<K>>& relations) {
  VerifyReport report;
  for (const auto& rel : relations) {
    Matrix<K> diff = rep.image_of_element(rel.lhs) - rep.image_of_element(rel.rhs);
    report.add(rel.label, diff.is_zero());
  }
  return report;
}

// ---------------------------------------------------------------------------
// Mixed-parameter identity on the 8x8 tensor cube. With E_i(x) the super
// gate at parameter x embedded at site i of a 3-fold tensor space, the two
// checks are
//   tts: E2(t) E1(t) E2(s) = E1(s) E2(t) E1(t)
//   tss: E2(t) E1(s) E2(s) = E1(s) E2(s) E1(t)
// The first holds for all (t, s); the second only for s in {1, t}.

template <class K>
std::pair<bool, bool> mixed_parameter_check(const K& t, const K& s) {
  auto E = [&](int site, const K& x) { return embed_gate(fe_gate(x), 3, site); };
  bool tts = E(2, t) * E(1, t) * E(2, s) == E(1, s) * E(2, t) * E(1, t);
  bool tss = E(2, t) * E(1, s) * E(2, s) == E(1, s) * E(2, s) * E(1, t);
  return {tts, tss};
}

// ---------------------------------------------------------------------------
// Temperley-Lieb Yang-Baxter block (pair-basis display):
// diag-block(1, [[1-tau^4, -tau^2], [-tau^2, 0]], 1); spectrum {1, -tau^4}.

template <class K>
Matrix<K> tl_yb_matrix(const K& tau) {
  if (tau.is_zero()) throw NonInvertibleTau("tl_yb_matrix: tau = 0");
  K one = tau.make(1), zero = tau.make(0);
  K t2 = tau * tau;
  K t4 = t2 * t2;
  Matrix<K> m = Matrix<K>::identity(4, zero);
  m.at(1, 1) = one - t4;
  m.at(1, 2) = -t2;
  m.at(2, 1) = -t2;
  m.at(2, 2) = zero;
  return m;
}

// ---------------------------------------------------------------------------
// Charge grading of the 2^n tensor basis: sector k = number of 2-letters in
// the basis word (so charge #1 - #2 = n - 2k); within a sector, basis
// elements keep ascending index order.

inline Grading charge_grading(int n) {
  long dim = 1L << n;
  std::vector<int> sector(dim);
  for (long b = 0; b < dim; ++b) sector[b] = int(__builtin_popcountll(b));
  return Grading::from_sectors(std::move(sector), n + 1);
}

// The documented diagonalizer for the chi_1 image: conjugating the image of
// chi_1 = (sigma_1 - rho_1)/(1-t) by this matrix yields diag(0,1) (x) I.
template <class K>
Matrix<K> chi_basis_change(int n, const K& proto) {
  Matrix<K> p = Matrix<K>::from_ints(
      {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 0, 1}}, proto);
  if (n == 2) return p;
  return kronecker(p, Matrix<K>::identity(1L << (n - 2), proto.make(0)));
}

}  // namespace lh
