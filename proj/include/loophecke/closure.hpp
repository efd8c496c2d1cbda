#pragma once

// Linear closure of the matrix algebra generated by a representation, kept
// as charge-graded block matrices with deterministic word witnesses; chi
// elements and chains; corner and two-sided-ideal dimensions; and the
// closed-form expected values (dimensions, block sizes, Cartan pattern) the
// computed structure is compared against.

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "loophecke/linalg.hpp"
#include "loophecke/reps.hpp"
#include "loophecke/words.hpp"

namespace lh {

struct ForbiddenParameter : ScalarError {
  using ScalarError::ScalarError;
};
struct CharacteristicNotZero : ScalarError {
  using ScalarError::ScalarError;
};

template <class K>
K trace_of_product(const BlockMatrix<K>& a, const BlockMatrix<K>& b) {
  K s = a.block(0).proto();
  for (int sec = 0; sec < a.grading().nsectors; ++sec)
    s += trace_of_product(a.block(sec), b.block(sec));
  return s;
}

template <class K>
SpanBasis<K> trace_form_radical(const std::vector<BlockMatrix<K>>& basis) {
  if (basis.empty()) throw EmptyBasis("trace_form_radical: empty basis");
  long m = long(basis.size());
  K proto = basis[0].block(0).proto();
  Matrix<K> gram(m, m, proto);
  for (long i = 0; i < m; ++i)
    for (long j = i; j < m; ++j) {
      K tij = trace_of_product(basis[i], basis[j]);
      gram.at(i, j) = tij;
      gram.at(j, i) = tij;
    }
  SpanBasis<K> rad(m);
  for (auto& v : kernel_basis(gram)) rad.insert(std::move(v));
  return rad;
}

// ---------------------------------------------------------------------------
// chi elements: chi_i = (sigma_i - rho_i)/(1-t), and unnormalized chains
// prod_k (sigma_{x_k} - rho_{x_k}).

template <class K>
AlgebraElement<K> sigma_minus_rho(int i, const K& proto) {
  return AlgebraElement<K>::generator({GenKind::sigma, i}, proto) -
         AlgebraElement<K>::generator({GenKind::rho, i}, proto);
}

template <class K>
AlgebraElement<K> chi_element(int i, const K& t) {
  K denom = t.make(1) - t;
  if (denom.is_zero()) throw ForbiddenParameter("chi_element: t = 1");
  return sigma_minus_rho(i, t).scaled(denom.inverse());
}

template <class K>
AlgebraElement<K> chi_chain(const std::vector<int>& xs, const K& t) {
  if ((t.make(1) - t).is_zero()) throw ForbiddenParameter("chi_chain: t = 1");
  AlgebraElement<K> e = AlgebraElement<K>::unit(t.make(0));
  for (int x : xs) e = e * sigma_minus_rho(x, t);
  return e;
}

// ---------------------------------------------------------------------------
// Worklist closure. Seeded with the identity, the basis is extended by
// right-multiplying each kept element with every generator image, in
// generator-letter order; every basis element is the exact image of its
// witness word. The resulting span contains the image of every word, so it
// is the full (two-sided) image algebra.

template <class K>
struct ClosedAlgebra {
  GeneratorAssignment<K> rep;
  std::shared_ptr<const Grading> grading;
  std::vector<BlockMatrix<K>> elements;
  std::vector<MWord> witnesses;
  SpanBasis<K> span;

  ClosedAlgebra(GeneratorAssignment<K> r, std::shared_ptr<const Grading> g)
      : rep(std::move(r)), grading(std::move(g)), span(grading->packed_len) {}

  long dim() const { return long(elements.size()); }

  BlockMatrix<K> to_block(const Matrix<K>& m) const {
    return BlockMatrix<K>::from_dense(m, grading);
  }

  BlockMatrix<K> image_of_element(const AlgebraElement<K>& e) const {
    return to_block(rep.image_of_element(e));
  }

  BlockMatrix<K> psi_image(const AlgebraElement<Rational>& e) const {
    if (e.max_generator_index() > rep.n - 1)
      throw DimensionMismatch("psi_image: element rank exceeds representation rank");
    return to_block(rep.evaluate_rational_element(e));
  }
};

template <class K>
std::shared_ptr<const Grading> default_grading(const GeneratorAssignment<K>& rep) {
  if (rep.dim == (1L << rep.n))
    return std::make_shared<Grading>(charge_grading(rep.n));
  return std::make_shared<Grading>(Grading::trivial(rep.dim));
}

template <class K>
ClosedAlgebra<K> close(const GeneratorAssignment<K>& rep,
                       std::shared_ptr<const Grading> grading) {
  ClosedAlgebra<K> alg(rep, std::move(grading));
  std::vector<std::pair<char, BlockMatrix<K>>> gens;
  for (const auto& [code, m] : rep.images)
    gens.emplace_back(code, alg.to_block(m));

  auto ident = alg.to_block(Matrix<K>::identity(rep.dim, rep.t.make(0)));
  alg.span.insert(ident.flatten_packed());
  alg.elements.push_back(std::move(ident));
  alg.witnesses.emplace_back();

  for (size_t qi = 0; qi < alg.elements.size(); ++qi) {
    for (const auto& [code, g] : gens) {
      BlockMatrix<K> cand = alg.elements[qi] * g;
      if (alg.span.insert(cand.flatten_packed())) {
        alg.witnesses.push_back(alg.witnesses[qi] + code);
        alg.elements.push_back(std::move(cand));
      }
    }
  }
  return alg;
}

template <class K>
ClosedAlgebra<K> close(const GeneratorAssignment<K>& rep) {
  return close(rep, default_grading(rep));
}

// One extra full pass: no product of a basis element with a generator (on
// either side) leaves the span.
template <class K>
bool closure_is_fixpoint(const ClosedAlgebra<K>& alg) {
  std::vector<BlockMatrix<K>> gens;
  for (const auto& [code, m] : alg.rep.images) gens.push_back(alg.to_block(m));
  for (const auto& e : alg.elements)
    for (const auto& g : gens) {
      if (!alg.span.contains((e * g).flatten_packed())) return false;
      if (!alg.span.contains((g * e).flatten_packed())) return false;
    }
  return true;
}

// dim span{ f * b * f' : b basis }.
template <class K>
long corner_dimension(const ClosedAlgebra<K>& alg, const BlockMatrix<K>& f,
                      const BlockMatrix<K>& fprime) {
  SpanBasis<K> span(alg.grading->packed_len);
  for (const auto& b : alg.elements) span.insert((f * b * fprime).flatten_packed());
  return span.dim();
}

template <class K>
long corner_dimension(const ClosedAlgebra<K>& alg, const BlockMatrix<K>& f) {
  return corner_dimension(alg, f, f);
}

// dim of the two-sided ideal generated by the seed, by a worklist closing
// under multiplication by generator images on both sides.
template <class K>
long ideal_dimension(const ClosedAlgebra<K>& alg, const BlockMatrix<K>& seed) {
  std::vector<BlockMatrix<K>> gens;
  for (const auto& [code, m] : alg.rep.images) gens.push_back(alg.to_block(m));
  SpanBasis<K> span(alg.grading->packed_len);
  std::vector<BlockMatrix<K>> work;
  if (span.insert(seed.flatten_packed())) work.push_back(seed);
  for (size_t qi = 0; qi < work.size(); ++qi) {
    for (const auto& g : gens) {
      for (BlockMatrix<K> cand : {work[qi] * g, g * work[qi]}) {
        if (span.insert(cand.flatten_packed())) work.push_back(std::move(cand));
      }
    }
  }
  return span.dim();
}

// ---------------------------------------------------------------------------
// Localisation checks: the chi_1 corner reproduces the rank-(n-1) algebra
// and the two-sided chi_1 ideal has codimension 1.

struct LocalisationReport {
  long corner_dim = 0;
  long expected_corner = 0;
  long ideal_dim = 0;
  long algebra_dim = 0;
  bool corner_matches = false;
  bool ideal_matches = false;
};

template <class K>
LocalisationReport localisation_checks(const ClosedAlgebra<K>& alg) {
  LocalisationReport rep;
  auto chi = alg.image_of_element(chi_element(1, alg.rep.t));
  rep.corner_dim = corner_dimension(alg, chi);
  rep.ideal_dim = ideal_dimension(alg, chi);
  rep.algebra_dim = alg.dim();
  rep.expected_corner = close(fe_rep(alg.rep.n - 1, alg.rep.t)).dim();
  rep.corner_matches = rep.corner_dim == rep.expected_corner;
  rep.ideal_matches = rep.ideal_dim == rep.algebra_dim - 1;
  return rep;
}

// ---------------------------------------------------------------------------
// Closed-form expectations.

inline long binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

struct PascalExpectations {
  long dim;                               // C(2n-1, n-1)
  long dim_t_one;                         // C(2n-2, n-1)
  std::vector<long> block_dims;           // C(n, k), k = 0..n
  std::vector<long> irrep_dims;           // C(n-1, i), i = 0..n-1
  std::vector<std::vector<long>> cartan;  // lower bidiagonal of ones
  long lh_dim_t_minus_one;                // (4^(n-1) + C(2n-2, n-1)) / 2
};

inline PascalExpectations pascal_expectations(int n) {
  if (n < 1) throw IndexOutOfRange("pascal_expectations: need n >= 1");
  PascalExpectations e;
  e.dim = binomial(2 * n - 1, n - 1);
  e.dim_t_one = binomial(2 * n - 2, n - 1);
  for (int k = 0; k <= n; ++k) e.block_dims.push_back(binomial(n, k));
  for (int i = 0; i <= n - 1; ++i) e.irrep_dims.push_back(binomial(n - 1, i));
  e.cartan.assign(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) {
    e.cartan[i][i] = 1;
    if (i > 0) e.cartan[i][i - 1] = 1;
  }
  e.lh_dim_t_minus_one = ((1L << (2 * (n - 1))) + binomial(2 * n - 2, n - 1)) / 2;
  return e;
}

}  // namespace lh
