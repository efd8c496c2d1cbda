#pragma once

// Dense exact linear algebra over any of the scalar kinds: matrices,
// incremental RREF span maintenance, Kronecker products, kernels,
// trace-form radicals, and a block-diagonal (graded) matrix form used to
// speed up algebra closures that preserve a grading of the ambient space.

#include <algorithm>
#include <memory>
#include <utility>
#include <vector>

#include "loophecke/scalars.hpp"

namespace lh {

struct DimensionMismatch : ScalarError {
  using ScalarError::ScalarError;
};
struct EmptyBasis : ScalarError {
  using ScalarError::ScalarError;
};

template <class K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(long rows, long cols, const K& fill)
      : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  static Matrix identity(long n, const K& proto) {
    Matrix m(n, n, proto.make(0));
    for (long i = 0; i < n; ++i) m.at(i, i) = proto.make(1);
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<K>>& rows) {
    if (rows.empty()) throw DimensionMismatch("Matrix: no rows");
    Matrix m(long(rows.size()), long(rows[0].size()), rows[0][0].make(0));
    for (long i = 0; i < m.rows_; ++i) {
      if (long(rows[i].size()) != m.cols_)
        throw DimensionMismatch("Matrix: ragged rows");
      for (long j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }
  // Builds a matrix of small integers, minting scalars from the proto.
  static Matrix from_ints(const std::vector<std::vector<long>>& rows, const K& proto) {
    Matrix m(long(rows.size()), long(rows[0].size()), proto.make(0));
    for (long i = 0; i < m.rows_; ++i)
      for (long j = 0; j < m.cols_; ++j) m.at(i, j) = proto.make(rows[i][j]);
    return m;
  }

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  K& at(long i, long j) { return a_[i * cols_ + j]; }
  const K& at(long i, long j) const { return a_[i * cols_ + j]; }
  const std::vector<K>& flat() const { return a_; }
  K proto() const {
    if (a_.empty()) throw DimensionMismatch("Matrix: empty");
    return a_[0].make(0);
  }

  Matrix operator+(const Matrix& o) const {
    check_same_shape(o);
    Matrix r = *this;
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    check_same_shape(o);
    Matrix r = *this;
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
    return r;
  }
  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("Matrix: product shapes");
    Matrix r(rows_, o.cols_, proto());
    for (long i = 0; i < rows_; ++i)
      for (long k = 0; k < cols_; ++k) {
        const K& aik = at(i, k);
        if (aik.is_zero()) continue;
        for (long j = 0; j < o.cols_; ++j) {
          const K& bkj = o.at(k, j);
          if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
        }
      }
    return r;
  }
  Matrix scaled(const K& s) const {
    Matrix r = *this;
    for (auto& x : r.a_) x *= s;
    return r;
  }
  Matrix operator-() const { return scaled(proto().make(-1)); }
  Matrix transpose() const {
    Matrix r(cols_, rows_, proto());
    for (long i = 0; i < rows_; ++i)
      for (long j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const K& x) { return x.is_zero(); });
  }

  K trace() const {
    K s = proto();
    for (long i = 0; i < rows_; ++i) s += at(i, i);
    return s;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DimensionMismatch("Matrix: shape mismatch");
  }
  long rows_ = 0, cols_ = 0;
  std::vector<K> a_;
};

// tr(A*B) without forming the product.
template <class K>
K trace_of_product(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols())
    throw DimensionMismatch("trace_of_product: shapes");
  K s = a.proto();
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j) {
      const K& x = a.at(i, j);
      if (!x.is_zero()) s += x * b.at(j, i);
    }
  return s;
}

// Standard Kronecker product: (a⊗b)[(i*rb+k), (j*cb+l)] = a[i,j] * b[k,l].
template <class K>
Matrix<K> kronecker(const Matrix<K>& a, const Matrix<K>& b) {
  Matrix<K> r(a.rows() * b.rows(), a.cols() * b.cols(), a.proto());
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j) {
      const K& aij = a.at(i, j);
      if (aij.is_zero()) continue;
      for (long k = 0; k < b.rows(); ++k)
        for (long l = 0; l < b.cols(); ++l) {
          const K& bkl = b.at(k, l);
          if (!bkl.is_zero()) r.at(i * b.rows() + k, j * b.cols() + l) = aij * bkl;
        }
    }
  return r;
}

// Gauss-Jordan inverse; throws if singular.
template <class K>
Matrix<K> inverse(const Matrix<K>& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse: not square");
  long n = m.rows();
  Matrix<K> a = m;
  Matrix<K> inv = Matrix<K>::identity(n, m.proto());
  for (long col = 0; col < n; ++col) {
    long piv = -1;
    for (long i = col; i < n; ++i)
      if (!a.at(i, col).is_zero()) { piv = i; break; }
    if (piv < 0) throw ScalarError("inverse: singular matrix");
    if (piv != col)
      for (long j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    K f = a.at(col, col).inverse();
    for (long j = 0; j < n; ++j) {
      a.at(col, j) *= f;
      inv.at(col, j) *= f;
    }
    for (long i = 0; i < n; ++i) {
      if (i == col || a.at(i, col).is_zero()) continue;
      K c = a.at(i, col);
      for (long j = 0; j < n; ++j) {
        a.at(i, j) -= c * a.at(col, j);
        inv.at(i, j) -= c * inv.at(col, j);
      }
    }
  }
  return inv;
}

// Characteristic polynomial coefficients c_0..c_n (monic, c_n = 1) via
// Faddeev-LeVerrier; requires characteristic 0 (or p > n).
template <class K>
std::vector<K> char_poly(const Matrix<K>& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("char_poly: not square");
  long n = m.rows();
  K one = m.proto().make(1);
  std::vector<K> c(n + 1, m.proto().make(0));
  c[n] = one;
  Matrix<K> mk = Matrix<K>::identity(n, one);  // M_0 = I
  for (long k = 1; k <= n; ++k) {
    mk = m * mk;
    K ck = -(mk.trace()) * one.make(k).inverse();
    c[n - k] = ck;
    for (long i = 0; i < n; ++i) mk.at(i, i) += ck;
  }
  return c;
}

template <class K>
K eval_poly(const std::vector<K>& coeffs, const K& x) {
  K acc = x.make(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// ---------------------------------------------------------------------------
// SpanBasis: incremental reduced-row-echelon span of vectors.

template <class K>
class SpanBasis {
 public:
  explicit SpanBasis(long ambient) : ambient_(ambient) {}

  long ambient() const { return ambient_; }
  long dim() const { return long(rows_.size()); }
  const std::vector<std::vector<K>>& rows() const { return rows_; }
  const std::vector<long>& pivots() const { return pivots_; }

  // Reduces v against the basis in place.
  void reduce(std::vector<K>& v) const {
    for (size_t k = 0; k < rows_.size(); ++k) {
      const K& c = v[pivots_[k]];
      if (c.is_zero()) continue;
      K f = c;  // pivot entries are 1
      const std::vector<K>& r = rows_[k];
      for (long j = pivots_[k]; j < ambient_; ++j)
        if (!r[j].is_zero()) v[j] -= f * r[j];
    }
  }

  bool contains(std::vector<K> v) const {
    check(v);
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](const K& x) { return x.is_zero(); });
  }

  // Inserts v if independent; keeps the basis in RREF. Returns whether the
  // span grew.
  bool insert(std::vector<K> v) {
    check(v);
    reduce(v);
    long piv = -1;
    for (long j = 0; j < ambient_; ++j)
      if (!v[j].is_zero()) { piv = j; break; }
    if (piv < 0) return false;
    K f = v[piv].inverse();
    for (long j = piv; j < ambient_; ++j)
      if (!v[j].is_zero()) v[j] *= f;
    for (size_t k = 0; k < rows_.size(); ++k) {
      K c = rows_[k][piv];
      if (c.is_zero()) continue;
      std::vector<K>& r = rows_[k];
      for (long j = piv; j < ambient_; ++j)
        if (!v[j].is_zero()) r[j] -= c * v[j];
    }
    auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), piv);
    size_t idx = size_t(pos - pivots_.begin());
    pivots_.insert(pos, piv);
    rows_.insert(rows_.begin() + idx, std::move(v));
    return true;
  }

 private:
  void check(const std::vector<K>& v) const {
    if (long(v.size()) != ambient_)
      throw DimensionMismatch("SpanBasis: vector length");
  }
  long ambient_;
  std::vector<std::vector<K>> rows_;
  std::vector<long> pivots_;
};

template <class K>
long rank(const Matrix<K>& m) {
  SpanBasis<K> span(m.cols());
  for (long i = 0; i < m.rows(); ++i) {
    std::vector<K> row(m.cols(), m.proto());
    for (long j = 0; j < m.cols(); ++j) row[j] = m.at(i, j);
    span.insert(std::move(row));
  }
  return span.dim();
}

// RREF basis of the right kernel {x : m x = 0}.
template <class K>
std::vector<std::vector<K>> kernel_basis(const Matrix<K>& m) {
  SpanBasis<K> row_span(m.cols());
  for (long i = 0; i < m.rows(); ++i) {
    std::vector<K> row(m.cols(), m.proto());
    for (long j = 0; j < m.cols(); ++j) row[j] = m.at(i, j);
    row_span.insert(std::move(row));
  }
  std::vector<bool> is_pivot(m.cols(), false);
  for (long p : row_span.pivots()) is_pivot[p] = true;
  std::vector<std::vector<K>> out;
  K zero = m.proto();
  for (long f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<K> x(m.cols(), zero);
    x[f] = zero.make(1);
    for (long k = 0; k < row_span.dim(); ++k)
      x[row_span.pivots()[k]] = -row_span.rows()[k][f];
    out.push_back(std::move(x));
  }
  return out;
}

// ---------------------------------------------------------------------------
// trace_form_radical: radical of the trace form tr(xy) on a spanned matrix
// algebra, returned in the coordinates of the given basis. Over a field of
// characteristic 0 this is the Jacobson radical.

template <class K>
SpanBasis<K> trace_form_radical(const std::vector<Matrix<K>>& basis) {
  if (basis.empty()) throw EmptyBasis("trace_form_radical: empty basis");
  long m = long(basis.size());
  K proto = basis[0].proto();
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

template <class K>
std::vector<K> flatten(const Matrix<K>& m) {
  return m.flat();
}

// dim span{ e * b * f : b in basis }.
template <class K>
long subspace_product_dim(const Matrix<K>& e, const std::vector<Matrix<K>>& basis,
                          const Matrix<K>& f) {
  if (basis.empty()) throw EmptyBasis("subspace_product_dim: empty basis");
  SpanBasis<K> span(e.rows() * f.cols());
  for (const auto& b : basis) span.insert(flatten(e * b * f));
  return span.dim();
}

// ---------------------------------------------------------------------------
// Grading of the ambient space into sectors preserved by all operators of
// interest; a graded operator is stored block-per-sector, and flattens to a
// packed vector whose length is the sum of squared sector sizes.

struct Grading {
  long ambient = 0;
  int nsectors = 0;
  std::vector<int> sector;                 // ambient index -> sector
  std::vector<std::vector<long>> members;  // sector -> ascending ambient indices
  std::vector<long> offset;                // sector -> offset into packed vector
  long packed_len = 0;

  static Grading from_sectors(std::vector<int> sector_of_index, int nsectors) {
    Grading g;
    g.ambient = long(sector_of_index.size());
    g.nsectors = nsectors;
    g.sector = std::move(sector_of_index);
    g.members.resize(nsectors);
    for (long i = 0; i < g.ambient; ++i) g.members[g.sector[i]].push_back(i);
    g.offset.resize(nsectors);
    long off = 0;
    for (int s = 0; s < nsectors; ++s) {
      g.offset[s] = off;
      off += long(g.members[s].size()) * long(g.members[s].size());
    }
    g.packed_len = off;
    return g;
  }

  static Grading trivial(long dim) {
    return from_sectors(std::vector<int>(dim, 0), 1);
  }
};

struct GradingViolation : ScalarError {
  using ScalarError::ScalarError;
};

template <class K>
class BlockMatrix {
 public:
  BlockMatrix() = default;
  BlockMatrix(std::shared_ptr<const Grading> g, std::vector<Matrix<K>> blocks)
      : g_(std::move(g)), blocks_(std::move(blocks)) {}

  // Splits a dense matrix along the grading; throws if any entry falls
  // outside the diagonal blocks.
  static BlockMatrix from_dense(const Matrix<K>& m,
                                std::shared_ptr<const Grading> g) {
    if (m.rows() != g->ambient || m.cols() != g->ambient)
      throw DimensionMismatch("BlockMatrix: shape vs grading");
    K zero = m.proto();
    std::vector<Matrix<K>> blocks;
    blocks.reserve(g->nsectors);
    for (int s = 0; s < g->nsectors; ++s) {
      const auto& idx = g->members[s];
      Matrix<K> b(long(idx.size()), long(idx.size()), zero);
      for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = 0; j < idx.size(); ++j) b.at(long(i), long(j)) = m.at(idx[i], idx[j]);
      blocks.push_back(std::move(b));
    }
    for (long i = 0; i < m.rows(); ++i)
      for (long j = 0; j < m.cols(); ++j)
        if (g->sector[i] != g->sector[j] && !m.at(i, j).is_zero())
          throw GradingViolation("BlockMatrix: entry outside blocks at (" +
                                 std::to_string(i) + "," + std::to_string(j) + ")");
    return BlockMatrix(std::move(g), std::move(blocks));
  }

  const Grading& grading() const { return *g_; }
  std::shared_ptr<const Grading> grading_ptr() const { return g_; }
  const Matrix<K>& block(int s) const { return blocks_[s]; }

  BlockMatrix operator*(const BlockMatrix& o) const {
    std::vector<Matrix<K>> blocks;
    blocks.reserve(blocks_.size());
    for (size_t s = 0; s < blocks_.size(); ++s)
      blocks.push_back(blocks_[s] * o.blocks_[s]);
    return BlockMatrix(g_, std::move(blocks));
  }
  BlockMatrix operator+(const BlockMatrix& o) const {
    std::vector<Matrix<K>> blocks;
    for (size_t s = 0; s < blocks_.size(); ++s)
      blocks.push_back(blocks_[s] + o.blocks_[s]);
    return BlockMatrix(g_, std::move(blocks));
  }
  BlockMatrix operator-(const BlockMatrix& o) const {
    std::vector<Matrix<K>> blocks;
    for (size_t s = 0; s < blocks_.size(); ++s)
      blocks.push_back(blocks_[s] - o.blocks_[s]);
    return BlockMatrix(g_, std::move(blocks));
  }
  BlockMatrix scaled(const K& c) const {
    std::vector<Matrix<K>> blocks;
    for (size_t s = 0; s < blocks_.size(); ++s) blocks.push_back(blocks_[s].scaled(c));
    return BlockMatrix(g_, std::move(blocks));
  }

  K trace() const {
    K s = blocks_.at(0).proto();
    for (const auto& b : blocks_) s += b.trace();
    return s;
  }
  bool is_zero() const {
    return std::all_of(blocks_.begin(), blocks_.end(),
                       [](const Matrix<K>& b) { return b.is_zero(); });
  }
  bool operator==(const BlockMatrix& o) const { return blocks_ == o.blocks_; }

  std::vector<K> flatten_packed() const {
    std::vector<K> out;
    out.reserve(g_->packed_len);
    for (const auto& b : blocks_)
      out.insert(out.end(), b.flat().begin(), b.flat().end());
    return out;
  }

  Matrix<K> to_dense() const {
    K zero = blocks_.at(0).proto();
    Matrix<K> m(g_->ambient, g_->ambient, zero);
    for (int s = 0; s < g_->nsectors; ++s) {
      const auto& idx = g_->members[s];
      for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = 0; j < idx.size(); ++j)
          m.at(idx[i], idx[j]) = blocks_[s].at(long(i), long(j));
    }
    return m;
  }

 private:
  std::shared_ptr<const Grading> g_;
  std::vector<Matrix<K>> blocks_;
};

}  // namespace lh
