#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qrep {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

inline u32 fp_add(u32 a, u32 b, u32 p) { u32 s = a + b; return s >= p ? s - p : s; }
inline u32 fp_sub(u32 a, u32 b, u32 p) { return a >= b ? a - b : a + p - b; }
inline u32 fp_neg(u32 a, u32 p) { return a == 0 ? 0 : p - a; }
inline u32 fp_mul(u32 a, u32 b, u32 p) { return static_cast<u32>((static_cast<u64>(a) * b) % p); }

inline u32 fp_pow(u32 a, u64 e, u32 p) {
  u32 r = 1 % p;
  u32 base = a % p;
  while (e) {
    if (e & 1) r = fp_mul(r, base, p);
    base = fp_mul(base, base, p);
    e >>= 1;
  }
  return r;
}

inline u32 fp_inv(u32 a, u32 p) {
  if (a % p == 0) throw std::domain_error("fp_inv: zero has no inverse");
  return fp_pow(a, p - 2, p);
}

// Dense matrix over F_p. The modulus travels with the matrix so that the
// 0-column and 0-row edge cases still know their field.
class Matrix {
public:
  Matrix() = default;
  Matrix(u32 rows, u32 cols, u32 p) : rows_(rows), cols_(cols), p_(p), a_(static_cast<size_t>(rows) * cols, 0) {
    if (p < 2) throw std::invalid_argument("Matrix: modulus must be >= 2");
  }

  static Matrix identity(u32 n, u32 p) {
    Matrix m(n, n, p);
    for (u32 i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<u32>>& rows, u32 p) {
    u32 r = static_cast<u32>(rows.size());
    u32 c = r ? static_cast<u32>(rows[0].size()) : 0;
    Matrix m(r, c, p);
    for (u32 i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("from_rows: ragged rows");
      for (u32 j = 0; j < c; ++j) m.at(i, j) = rows[i][j] % p;
    }
    return m;
  }

  u32 rows() const { return rows_; }
  u32 cols() const { return cols_; }
  u32 prime() const { return p_; }

  u32& at(u32 i, u32 j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  u32 at(u32 i, u32 j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  bool is_zero() const {
    for (u32 v : a_)
      if (v) return false;
    return true;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && a_ == o.a_;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, p_);
    for (u32 i = 0; i < rows_; ++i)
      for (u32 j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    check_prime(o);
    if (cols_ != o.rows_) throw std::invalid_argument("Matrix mul: shape mismatch");
    Matrix r(rows_, o.cols_, p_);
    for (u32 i = 0; i < rows_; ++i)
      for (u32 k = 0; k < cols_; ++k) {
        u32 v = at(i, k);
        if (!v) continue;
        for (u32 j = 0; j < o.cols_; ++j)
          r.at(i, j) = fp_add(r.at(i, j), fp_mul(v, o.at(k, j), p_), p_);
      }
    return r;
  }

  Matrix operator+(const Matrix& o) const {
    check_shape(o);
    Matrix r(rows_, cols_, p_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = fp_add(a_[i], o.a_[i], p_);
    return r;
  }

  Matrix operator-(const Matrix& o) const {
    check_shape(o);
    Matrix r(rows_, cols_, p_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = fp_sub(a_[i], o.a_[i], p_);
    return r;
  }

  Matrix scaled(u32 c) const {
    Matrix r(rows_, cols_, p_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = fp_mul(a_[i], c, p_);
    return r;
  }

  std::vector<u32> apply(const std::vector<u32>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("Matrix apply: length mismatch");
    std::vector<u32> r(rows_, 0);
    for (u32 i = 0; i < rows_; ++i)
      for (u32 j = 0; j < cols_; ++j) r[i] = fp_add(r[i], fp_mul(at(i, j), v[j], p_), p_);
    return r;
  }

  // Stack o to the right of *this.
  Matrix hstack(const Matrix& o) const {
    check_prime(o);
    if (rows_ != o.rows_) throw std::invalid_argument("hstack: row mismatch");
    Matrix r(rows_, cols_ + o.cols_, p_);
    for (u32 i = 0; i < rows_; ++i) {
      for (u32 j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
      for (u32 j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
  }

  // Stack o below *this.
  Matrix vstack(const Matrix& o) const {
    check_prime(o);
    if (cols_ != o.cols_) throw std::invalid_argument("vstack: col mismatch");
    Matrix r(rows_ + o.rows_, cols_, p_);
    for (u32 i = 0; i < rows_; ++i)
      for (u32 j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (u32 i = 0; i < o.rows_; ++i)
      for (u32 j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
    return r;
  }

  Matrix column(u32 j) const {
    Matrix c(rows_, 1, p_);
    for (u32 i = 0; i < rows_; ++i) c.at(i, 0) = at(i, j);
    return c;
  }

  std::vector<u32> column_vec(u32 j) const {
    std::vector<u32> c(rows_);
    for (u32 i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
  }

private:
  void check_prime(const Matrix& o) const {
    if (p_ != o.p_) throw std::logic_error("Matrix: mixed moduli");
  }
  void check_shape(const Matrix& o) const {
    check_prime(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch");
  }

  u32 rows_ = 0, cols_ = 0, p_ = 2;
  std::vector<u32> a_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<u32> pivots;  // pivot column of each nonzero row, ascending
  u32 rank = 0;
};

// Reduced row echelon form with deterministic first-nonzero pivot selection.
inline RrefResult rref(const Matrix& m) {
  RrefResult res{m, {}, 0};
  Matrix& a = res.reduced;
  u32 p = m.prime();
  u32 r = 0;
  for (u32 c = 0; c < m.cols() && r < m.rows(); ++c) {
    u32 pivot_row = r;
    while (pivot_row < m.rows() && a.at(pivot_row, c) == 0) ++pivot_row;
    if (pivot_row == m.rows()) continue;
    if (pivot_row != r)
      for (u32 j = 0; j < m.cols(); ++j) std::swap(a.at(pivot_row, j), a.at(r, j));
    u32 inv = fp_inv(a.at(r, c), p);
    for (u32 j = c; j < m.cols(); ++j) a.at(r, j) = fp_mul(a.at(r, j), inv, p);
    for (u32 i = 0; i < m.rows(); ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      u32 f = a.at(i, c);
      for (u32 j = c; j < m.cols(); ++j)
        a.at(i, j) = fp_sub(a.at(i, j), fp_mul(f, a.at(r, j), p), p);
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

inline u32 rank(const Matrix& m) { return rref(m).rank; }

// Columns form a basis of the null space {x : m x = 0}; one column per free
// variable, in ascending free-column order, with the free coordinate set to 1.
inline Matrix kernel_basis(const Matrix& m) {
  RrefResult rr = rref(m);
  u32 p = m.prime();
  std::vector<bool> is_pivot(m.cols(), false);
  for (u32 c : rr.pivots) is_pivot[c] = true;
  std::vector<u32> free_cols;
  for (u32 c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix k(m.cols(), static_cast<u32>(free_cols.size()), p);
  for (u32 fi = 0; fi < free_cols.size(); ++fi) {
    u32 f = free_cols[fi];
    k.at(f, fi) = 1;
    for (u32 row = 0; row < rr.rank; ++row)
      k.at(rr.pivots[row], fi) = fp_neg(rr.reduced.at(row, f), p);
  }
  return k;
}

// Particular solution of m x = b, free variables set to 0; nullopt if none.
inline std::optional<std::vector<u32>> solve(const Matrix& m, const std::vector<u32>& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
  u32 p = m.prime();
  Matrix rhs(m.rows(), 1, p);
  for (u32 i = 0; i < m.rows(); ++i) rhs.at(i, 0) = b[i] % p;
  RrefResult rr = rref(m.hstack(rhs));
  for (u32 c : rr.pivots)
    if (c == m.cols()) return std::nullopt;
  std::vector<u32> x(m.cols(), 0);
  for (u32 row = 0; row < rr.rank; ++row) x[rr.pivots[row]] = rr.reduced.at(row, m.cols());
  return x;
}

// Solve m X = B columnwise; nullopt if any column is inconsistent.
inline std::optional<Matrix> solve_matrix(const Matrix& m, const Matrix& b) {
  if (b.rows() != m.rows()) throw std::invalid_argument("solve_matrix: shape mismatch");
  Matrix x(m.cols(), b.cols(), m.prime());
  for (u32 j = 0; j < b.cols(); ++j) {
    auto col = solve(m, b.column_vec(j));
    if (!col) return std::nullopt;
    for (u32 i = 0; i < m.cols(); ++i) x.at(i, j) = (*col)[i];
  }
  return x;
}

struct QuotientBasis {
  // projection: q x ambient, coset_reps: ambient x q, with
  // projection * coset_reps = I_q and projection * subspace = 0.
  Matrix projection;
  Matrix coset_reps;
};

// Quotient of F_p^ambient by the column span of `subspace` (ambient x k).
inline QuotientBasis quotient_basis(const Matrix& subspace, u32 ambient_dim) {
  if (subspace.rows() != ambient_dim)
    throw std::invalid_argument("quotient_basis: subspace rows must equal ambient dim");
  u32 p = subspace.prime();
  RrefResult rr = rref(subspace.transpose());
  std::vector<bool> is_pivot(ambient_dim, false);
  for (u32 c : rr.pivots) is_pivot[c] = true;
  std::vector<u32> free_coords;
  for (u32 c = 0; c < ambient_dim; ++c)
    if (!is_pivot[c]) free_coords.push_back(c);
  u32 q = static_cast<u32>(free_coords.size());
  QuotientBasis out{Matrix(q, ambient_dim, p), Matrix(ambient_dim, q, p)};
  for (u32 fi = 0; fi < q; ++fi) out.coset_reps.at(free_coords[fi], fi) = 1;
  for (u32 fi = 0; fi < q; ++fi) out.projection.at(fi, free_coords[fi]) = 1;
  // A pivot coordinate e_c is congruent, modulo the subspace, to minus the
  // free part of its (reduced) echelon row.
  for (u32 row = 0; row < rr.rank; ++row) {
    u32 c = rr.pivots[row];
    for (u32 fi = 0; fi < q; ++fi)
      out.projection.at(fi, c) = fp_neg(rr.reduced.at(row, free_coords[fi]), p);
  }
  return out;
}

// Column-space basis as a matrix whose columns are the independent columns of
// m, selected deterministically (first-nonzero pivot order).
inline Matrix column_space_basis(const Matrix& m) {
  RrefResult rr = rref(m);
  Matrix b(m.rows(), rr.rank, m.prime());
  for (u32 k = 0; k < rr.rank; ++k)
    for (u32 i = 0; i < m.rows(); ++i) b.at(i, k) = m.at(i, rr.pivots[k]);
  return b;
}

inline bool is_invertible(const Matrix& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

inline Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
  RrefResult rr = rref(m.hstack(Matrix::identity(m.rows(), m.prime())));
  if (rr.rank != m.rows()) throw std::domain_error("inverse: singular matrix");
  Matrix inv(m.rows(), m.rows(), m.prime());
  for (u32 i = 0; i < m.rows(); ++i)
    for (u32 j = 0; j < m.rows(); ++j) inv.at(i, j) = rr.reduced.at(i, m.cols() + j);
  return inv;
}

}  // namespace qrep
