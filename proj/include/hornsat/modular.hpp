#pragma once

// Exact dense linear algebra over a prime field Z/p. Matrices are small
// (a few dozen rows at most), so everything is plain row-major storage and
// Gauss-Jordan elimination.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hornsat/errors.hpp"

namespace hornsat {

using Rng = std::mt19937_64;

class PrimeField {
 public:
  static constexpr std::uint32_t kDefaultPrime = 32003;

  explicit PrimeField(std::uint32_t p = kDefaultPrime) : p_(p) {
    if (!is_prime(p)) throw InvalidArgument("modulus " + std::to_string(p) + " is not prime");
    if (p >= (1u << 31)) throw InvalidArgument("modulus too large for single-word arithmetic");
  }

  static bool is_prime(std::uint64_t p) noexcept {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

  std::uint32_t modulus() const noexcept { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept {
    std::uint32_t r = 1 % p_;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::uint32_t inv(std::uint32_t a) const {
    if (a % p_ == 0) throw InvalidArgument("division by zero in Z/p");
    return pow(a, p_ - 2);
  }
  std::uint32_t reduce(std::int64_t x) const noexcept {
    const auto m = static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(((x % m) + m) % m);
  }

  std::uint32_t random(Rng& rng) const { return std::uniform_int_distribution<std::uint32_t>(0, p_ - 1)(rng); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

/// Dense matrix over Z/p; entries are reduced residues.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {
    if (rows < 0 || cols < 0) throw InvalidArgument("negative matrix dimension");
  }

  static Matrix identity(int m) {
    Matrix I(m, m);
    for (int i = 0; i < m; ++i) I(i, i) = 1;
    return I;
  }

  static Matrix from_rows(const std::vector<std::vector<std::uint32_t>>& rows) {
    Matrix M(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows.front().size()));
    for (int i = 0; i < M.rows(); ++i)
      for (int j = 0; j < M.cols(); ++j) M(i, j) = rows[static_cast<std::size_t>(i)].at(static_cast<std::size_t>(j));
    return M;
  }

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  std::uint32_t& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  std::uint32_t operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  bool is_zero() const noexcept {
    for (auto x : data_)
      if (x) return false;
    return true;
  }

  /// Columns [first, first + count).
  Matrix columns(int first, int count) const {
    Matrix out(rows_, count);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < count; ++j) out(i, j) = (*this)(i, first + j);
    return out;
  }

  Matrix column(int j) const { return columns(j, 1); }

  /// Rows [first, first + count).
  Matrix row_block(int first, int count) const {
    Matrix out(count, cols_);
    for (int i = 0; i < count; ++i)
      for (int j = 0; j < cols_; ++j) out(i, j) = (*this)(first + i, j);
    return out;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint32_t> data_;
};

inline Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw InvalidArgument("hstack: row mismatch");
  Matrix out(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (int j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

inline Matrix multiply(const Matrix& a, const Matrix& b, const PrimeField& f) {
  if (a.cols() != b.rows()) throw InvalidArgument("multiply: inner dimension mismatch");
  Matrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const std::uint32_t x = a(i, k);
      if (!x) continue;
      for (int j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(x, b(k, j)));
    }
  return out;
}

/// In-place reduced row echelon form; returns the pivot column of each
/// nonzero row.
inline std::vector<int> rref(Matrix& m, const PrimeField& f) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int sel = -1;
    for (int i = row; i < m.rows(); ++i)
      if (m(i, col)) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
    const std::uint32_t inv = f.inv(m(row, col));
    for (int j = col; j < m.cols(); ++j) m(row, j) = f.mul(m(row, j), inv);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || !m(i, col)) continue;
      const std::uint32_t factor = m(i, col);
      for (int j = col; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline int rank(Matrix m, const PrimeField& f) { return static_cast<int>(rref(m, f).size()); }

/// Basis of {x : m x = 0} as the columns of a cols x k matrix.
inline Matrix nullspace(Matrix m, const PrimeField& f) {
  const auto pivots = rref(m, f);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  const int k = m.cols() - static_cast<int>(pivots.size());
  Matrix basis(m.cols(), k);
  int col = 0;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis(free, col) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], col) = f.neg(m(static_cast<int>(r), free));
    ++col;
  }
  return basis;
}

/// Columns of m forming a basis of its column space (first independent ones).
inline Matrix column_basis(const Matrix& m, const PrimeField& f) {
  Matrix work = m;
  const auto pivots = rref(work, f);
  Matrix out(m.rows(), static_cast<int>(pivots.size()));
  for (std::size_t k = 0; k < pivots.size(); ++k)
    for (int i = 0; i < m.rows(); ++i) out(i, static_cast<int>(k)) = m(i, pivots[k]);
  return out;
}

inline Matrix inverse(const Matrix& m, const PrimeField& f) {
  if (m.rows() != m.cols()) throw InvalidArgument("inverse of a non-square matrix");
  Matrix aug = hstack(m, Matrix::identity(m.rows()));
  const auto pivots = rref(aug, f);
  if (static_cast<int>(pivots.size()) < m.rows() || (m.rows() > 0 && pivots.back() >= m.rows()))
    throw InvalidArgument("matrix is singular");
  return aug.columns(m.cols(), m.rows());
}

/// Whether colspace(sub) is contained in colspace(space).
inline bool column_space_contains(const Matrix& space, const Matrix& sub, const PrimeField& f) {
  if (sub.cols() == 0) return true;
  return rank(hstack(space, sub), f) == rank(space, f);
}

/// Coordinates x with basis * x = vectors, for vectors inside colspace(basis)
/// and basis of full column rank.
inline Matrix solve_in_basis(const Matrix& basis, const Matrix& vectors, const PrimeField& f) {
  Matrix aug = hstack(basis, vectors);
  const auto pivots = rref(aug, f);
  const int k = basis.cols();
  for (std::size_t r = 0; r < pivots.size(); ++r)
    if (pivots[r] >= k) throw InvalidArgument("vector outside the column space");
  if (static_cast<int>(pivots.size()) != k) throw InvalidArgument("basis is not of full column rank");
  Matrix x(k, vectors.cols());
  for (int r = 0; r < k; ++r)
    for (int j = 0; j < vectors.cols(); ++j) x(r, j) = aug(r, k + j);
  return x;
}

/// Basis of colspace(a) intersected with colspace(b), as vectors of the
/// ambient space; a and b must have full column rank.
inline Matrix intersect_column_spaces(const Matrix& a, const Matrix& b, const PrimeField& f) {
  if (a.cols() == 0 || b.cols() == 0) return Matrix(a.rows(), 0);
  Matrix combo = hstack(a, b);
  const Matrix null = nullspace(combo, f);
  return column_basis(multiply(a, null.row_block(0, a.cols()), f), f);
}

inline Matrix random_matrix(int rows, int cols, const PrimeField& f, Rng& rng) {
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = f.random(rng);
  return m;
}

/// Uniform over GL_m(Z/p) by rejection.
inline Matrix random_invertible(int m, const PrimeField& f, Rng& rng) {
  while (true) {
    Matrix g = random_matrix(m, m, f, rng);
    if (rank(g, f) == m) return g;
  }
}

}  // namespace hornsat
