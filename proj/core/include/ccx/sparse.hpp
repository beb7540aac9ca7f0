#pragma once

#include <map>
#include <vector>

#include "ccx/gaussian.hpp"
#include "ccx/matrix.hpp"

namespace ccx {

/// Sparse column: sorted (row, value) pairs, values nonzero.
using SparseCol = std::vector<std::pair<int, GaussianRational>>;

/// Triplet-format sparse matrix. Storage for the big total-complex
/// differentials where dense entries would be wasteful; converted to
/// dense per-bidegree blocks everywhere sizes are moderate.
struct SparseMat {
  int rows = 0, cols = 0;
  std::vector<SparseCol> col;  // size cols

  SparseMat() = default;
  SparseMat(int r, int c) : rows(r), cols(c), col(size_t(c)) {}

  void add(int r, int c, const GaussianRational& v);
  Matrix dense() const;
  static SparseMat from_dense(const Matrix& m);
  size_t nnz() const;
};

/// Incremental exact column reducer: feeds columns one at a time and
/// maintains an echelonized generating set keyed by leading row.
/// rank(M), rank([M|F]) - rank(M) style queries come out of one pass.
class ColumnReducer {
 public:
  explicit ColumnReducer(int rows) : rows_(rows) {}

  /// Reduce and insert; returns true when the column was independent.
  bool insert(SparseCol v);
  size_t rank() const { return echelon_.size(); }
  int rows() const { return rows_; }
  const std::map<int, SparseCol>& echelon() const { return echelon_; }

 private:
  int rows_;
  std::map<int, SparseCol> echelon_;  // leading row -> normalized column
};

size_t sparse_rank(const SparseMat& m);

}  // namespace ccx
