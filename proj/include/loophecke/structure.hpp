#pragma once

// Structure of a closed matrix algebra over the rationals: trace-form
// radical, charge block dimensions, hook-idempotent Cartan data, the
// dimension grid they generate, and the chi-calculus checks. Dimension-only
// runs over prime fields (with two-prime agreement) are provided separately.

#include <string>
#include <utility>
#include <vector>

#include "loophecke/closure.hpp"
#include "loophecke/symgroup.hpp"

namespace lh {

struct StructureReport {
  int n = 0;
  std::string t_str;
  std::string field;
  long dim = 0;
  long radical_dim = 0;
  long ss_dim = 0;
  std::vector<long> block_dims;
  std::vector<long> irrep_dims;
  std::vector<std::vector<long>> cartan;
  std::vector<std::vector<long>> dim_grid;
  std::vector<std::pair<std::string, bool>> checks;

  bool all_checks_pass() const {
    for (const auto& [label, ok] : checks)
      if (!ok) return false;
    return true;
  }
};

namespace detail {

template <class K>
BlockMatrix<K> combine(const std::vector<BlockMatrix<K>>& mats,
                       const std::vector<K>& coords) {
  BlockMatrix<K> acc = mats.at(0).scaled(coords.at(0));
  for (size_t k = 1; k < mats.size(); ++k)
    if (!coords[k].is_zero()) acc = acc + mats[k].scaled(coords[k]);
  return acc;
}

template <class K>
long left_module_dim(long packed_len, const std::vector<BlockMatrix<K>>& mats,
                     const BlockMatrix<K>& f) {
  SpanBasis<K> sp(packed_len);
  for (const auto& b : mats) sp.insert((b * f).flatten_packed());
  return sp.dim();
}

}  // namespace detail

// Full structural report over the rationals. The chi- and hook-based
// sections require 1 - t invertible and are skipped at t = 1.
inline StructureReport structure(const ClosedAlgebra<Rational>& alg) {
  StructureReport r;
  r.n = alg.rep.n;
  r.t_str = alg.rep.t.str();
  r.field = "Q";
  r.dim = alg.dim();
  for (const auto& members : alg.grading->members)
    r.block_dims.push_back(long(members.size()));

  bool generic = !(alg.rep.t.make(1) - alg.rep.t).is_zero();
  auto expect = pascal_expectations(r.n);
  long expected_dim = generic ? expect.dim : expect.dim_t_one;
  r.checks.emplace_back("dim_closed_form", r.dim == expected_dim);
  r.checks.emplace_back("block_dims_binomial", r.block_dims == expect.block_dims);

  SpanBasis<Rational> rad = trace_form_radical(alg.elements);
  r.radical_dim = rad.dim();
  r.ss_dim = r.dim - r.radical_dim;

  std::vector<BlockMatrix<Rational>> radmats;
  for (const auto& coords : rad.rows())
    radmats.push_back(detail::combine(alg.elements, coords));
  bool rad_square_zero = true;
  for (const auto& a : radmats)
    for (const auto& b : radmats)
      if (!(a * b).is_zero()) rad_square_zero = false;
  r.checks.emplace_back("radical_square_zero", rad_square_zero);

  if (!generic) return r;

  std::vector<BlockMatrix<Rational>> fs;
  for (int arm = 0; arm <= r.n - 1; ++arm)
    fs.push_back(alg.psi_image(hook_idempotent(HookPartition(r.n, arm))));

  r.cartan.assign(r.n, std::vector<long>(r.n, 0));
  for (int i = 0; i < r.n; ++i)
    for (int j = 0; j < r.n; ++j)
      r.cartan[i][j] = corner_dimension(alg, fs[j], fs[i]);
  r.checks.emplace_back("cartan_expected_pattern", r.cartan == expect.cartan);

  long packed = alg.grading->packed_len;
  for (int i = 0; i < r.n; ++i) {
    long full = detail::left_module_dim(packed, alg.elements, fs[i]);
    long inside_radical =
        radmats.empty() ? 0 : detail::left_module_dim(packed, radmats, fs[i]);
    r.irrep_dims.push_back(full - inside_radical);
  }
  r.checks.emplace_back("irrep_dims_binomial", r.irrep_dims == expect.irrep_dims);

  r.dim_grid.assign(r.n, std::vector<long>(r.n, 0));
  long grid_diag = 0, grid_total = 0;
  for (int i = 0; i < r.n; ++i)
    for (int j = 0; j < r.n; ++j) {
      r.dim_grid[i][j] = r.irrep_dims[i] * r.irrep_dims[j] * r.cartan[i][j];
      grid_total += r.dim_grid[i][j];
      if (i == j) grid_diag += r.dim_grid[i][j];
    }
  r.checks.emplace_back("grid_diagonal_matches_semisimple", grid_diag == r.ss_dim);
  r.checks.emplace_back("grid_total_matches_dimension", grid_total == r.dim);

  r.checks.emplace_back(
      "symmetrizer_line_ideal",
      detail::left_module_dim(packed, alg.elements, fs[0]) == 1);

  if (r.n >= 2) {
    auto chi = alg.image_of_element(chi_element(1, alg.rep.t));
    r.checks.emplace_back("chi_idempotent", chi * chi == chi);

    auto p = chi_basis_change(r.n, alg.rep.t);
    auto conj = inverse(p) * alg.rep.image_of_element(chi_element(1, alg.rep.t)) * p;
    auto diag01 =
        Matrix<Rational>::from_ints({{0, 0}, {0, 1}}, alg.rep.t.make(0));
    auto projector = kronecker(
        diag01, Matrix<Rational>::identity(1L << (r.n - 1), alg.rep.t.make(0)));
    r.checks.emplace_back("chi_diagonalizer", conj == projector);
  }

  if (r.n >= 3) {
    Rational t = alg.rep.t;
    Rational unit_sq = (Rational(1) - t) * (Rational(1) - t);
    auto decr = alg.image_of_element(chi_chain({2, 1}, t));
    r.checks.emplace_back("chain_decreasing_quasi_idempotent",
                          decr * decr == decr.scaled(unit_sq));

    auto incr = alg.image_of_element(chi_chain({1, 2}, t));
    auto incr_sq = incr * incr;
    SpanBasis<Rational> pair_span(alg.grading->packed_len);
    pair_span.insert(incr.flatten_packed());
    pair_span.insert(incr_sq.flatten_packed());
    r.checks.emplace_back("chain_increasing_not_scalar_multiple",
                          !incr_sq.is_zero() && pair_span.dim() == 2);

    auto f0_chain_dim_zero = corner_dimension(alg, fs[0], decr) == 0;
    r.checks.emplace_back("symmetrizer_kills_decreasing_chain", f0_chain_dim_zero);
  }

  return r;
}

// Dimension of the closed algebra over GF(p) at two independent primes,
// requiring agreement; t is mapped into each field as a residue ratio.
inline long closure_dimension_two_primes(int n, const Rational& t) {
  auto run = [&](unsigned long p) {
    GFp proto = GFp::from_long(0, p);
    return close(fe_rep(n, proto.make_rational(t))).dim();
  };
  long a = run(kPrimeA);
  long b = run(kPrimeB);
  if (a != b)
    throw ScalarError("closure dimension disagrees between primes: " +
                      std::to_string(a) + " vs " + std::to_string(b));
  return a;
}

}  // namespace lh
