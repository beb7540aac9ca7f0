#pragma once

#include <cstddef>
#include <vector>

#include "ccx/gaussian.hpp"

namespace ccx {

struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Dense matrix over Q(i), column-vector convention (y = M x).
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}

  static Matrix identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  GaussianRational& at(size_t r, size_t c) { return e_[r * cols_ + c]; }
  const GaussianRational& at(size_t r, size_t c) const { return e_[r * cols_ + c]; }

  bool is_zero() const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-() const;
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

  std::vector<GaussianRational> apply(const std::vector<GaussianRational>& x) const;

  /// Stack the columns of `o` to the right.
  Matrix hcat(const Matrix& o) const;
  /// Stack `o` below.
  Matrix vcat(const Matrix& o) const;
  Matrix submatrix(size_t r0, size_t c0, size_t nrows, size_t ncols) const;

  /// In-place reduced row echelon form, pivoting on the leftmost nonzero
  /// column with pivots scaled to 1. Returns pivot column indices.
  std::vector<size_t> rref();

  std::string str() const;

 private:
  size_t rows_, cols_;
  std::vector<GaussianRational> e_;
};

size_t rank(const Matrix& m);

/// Basis of the right null space {x : Mx = 0}, as columns.
Matrix kernel(const Matrix& m);

/// Column space basis in canonical (echelon) form, as columns.
Matrix image(const Matrix& m);

/// Independent rank oracle for small matrices: largest k with a nonzero
/// k x k minor, by exhaustive enumeration. Test/diagnostic use.
size_t rank_by_minors(const Matrix& m);

}  // namespace ccx
