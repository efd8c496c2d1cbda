#pragma once

// Alexander polynomial of a braid closure via the reduced Burau
// representation: change basis to {e_1 - e_2, ..., e_{n-1} - e_n, sum e_i},
// take the induced (n-1)-dimensional block, and evaluate
// det(reduced(b) - I) / (1 + t + ... + t^{n-1}), normalized to the
// representative with no negative powers and positive constant term.

#include <string>
#include <vector>

#include "loophecke/linalg.hpp"
#include "loophecke/reps.hpp"
#include "loophecke/scalars.hpp"
#include "loophecke/words.hpp"

namespace lh {

// Basis-change matrix with columns e_1-e_2, ..., e_{n-1}-e_n, (1,...,1)^T.
inline Matrix<RatFunc> burau_reduction_basis(int n) {
  RatFunc zero;
  Matrix<RatFunc> m(n, n, zero);
  RatFunc one = zero.make(1);
  for (int j = 0; j + 1 < n; ++j) {
    m.at(j, j) = one;
    m.at(j + 1, j) = -one;
  }
  for (int i = 0; i < n; ++i) m.at(i, n - 1) = one;
  return m;
}

// The (n-1)x(n-1) reduced Burau image of a sigma-only braid word. The
// all-ones vector is fixed by every sigma image, so in the changed basis the
// last column above the diagonal vanishes and the leading block carries the
// quotient action.
inline Matrix<RatFunc> reduced_burau_image(const GWord& braid, int n) {
  for (const auto& g : braid) {
    if (g.kind == GenKind::rho)
      throw WordParseError("alexander: braid must use only sigma letters");
    if (g.index < 1 || g.index > n - 1)
      throw IndexOutOfRange("alexander: letter index " + std::to_string(g.index) +
                            " out of range for n = " + std::to_string(n));
  }
  RatFunc t = RatFunc::t();
  auto rep = burau_gb(n, t);
  Matrix<RatFunc> a = rep.image_of_word(braid);
  Matrix<RatFunc> basis = burau_reduction_basis(n);
  Matrix<RatFunc> r = inverse(basis) * a * basis;
  for (int i = 0; i + 1 < n; ++i) {
    if (!r.at(i, n - 1).is_zero())
      throw ScalarError("alexander: fixed-vector block failed to split");
  }
  Matrix<RatFunc> reduced(n - 1, n - 1, t.make(0));
  for (int i = 0; i + 1 < n; ++i)
    for (int j = 0; j + 1 < n; ++j) reduced.at(i, j) = r.at(i, j);
  return reduced;
}

inline RatFunc determinant(const Matrix<RatFunc>& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant: not square");
  long n = m.rows();
  Matrix<RatFunc> a = m;
  RatFunc det = a.proto().make(1);
  for (long col = 0; col < n; ++col) {
    long pivot = -1;
    for (long r = col; r < n; ++r)
      if (!a.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return a.proto().make(0);
    if (pivot != col) {
      for (long j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
      det = -det;
    }
    det = det * a.at(col, col);
    RatFunc inv = a.at(col, col).inverse();
    for (long r = col + 1; r < n; ++r) {
      if (a.at(r, col).is_zero()) continue;
      RatFunc f = a.at(r, col) * inv;
      for (long j = col; j < n; ++j) a.at(r, j) = a.at(r, j) - f * a.at(col, j);
    }
  }
  return det;
}

// Normalizes a determinant ratio to the unit-free Alexander representative:
// the denominator must be a monomial (the formula clears it), negative powers
// are stripped, and the constant term is made positive.
inline RatFunc normalize_alexander(const RatFunc& raw) {
  if (raw.is_zero()) return raw;
  const Poly& den = raw.den();
  for (int i = 0; i + 1 <= den.degree(); ++i) {
    if (!den.coeff(i).is_zero())
      throw ScalarError("alexander: non-monomial unit denominator");
  }
  Poly num = raw.num();
  int v = 0;
  while (num.coeff(v).is_zero()) ++v;
  std::vector<Rational> shifted;
  for (int i = v; i <= num.degree(); ++i) shifted.push_back(num.coeff(i));
  Poly p(shifted);
  if (p.coeff(0) < Rational(0)) p = p.scaled(Rational(-1));
  return RatFunc(p, Poly::constant(1));
}

inline RatFunc alexander_polynomial(const GWord& braid, int n) {
  if (n < 2) throw IndexOutOfRange("alexander: need n >= 2");
  Matrix<RatFunc> reduced = reduced_burau_image(braid, n);
  Matrix<RatFunc> diff = reduced - Matrix<RatFunc>::identity(n - 1, RatFunc());
  RatFunc det = determinant(diff);
  std::vector<Rational> ones(n, Rational(1));
  RatFunc divisor(Poly(ones), Poly::constant(1));
  return normalize_alexander(det * divisor.inverse());
}

inline RatFunc alexander_polynomial(const std::string& braid_word, int n) {
  return alexander_polynomial(parse_gword(braid_word), n);
}

}  // namespace lh
