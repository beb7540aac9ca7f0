#include "ccx/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace ccx {

Matrix Matrix::identity(size_t n) {
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const GaussianRational& g) { return g.is_zero(); });
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DimensionError("matrix product dimension mismatch");
  Matrix p(rows_, o.cols_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t k = 0; k < cols_; ++k) {
      const GaussianRational& a = at(r, k);
      if (a.is_zero()) continue;
      for (size_t c = 0; c < o.cols_; ++c) {
        const GaussianRational& b = o.at(k, c);
        if (!b.is_zero()) p.at(r, c) += a * b;
      }
    }
  return p;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum dimension mismatch");
  Matrix s(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) s.e_[i] = e_[i] + o.e_[i];
  return s;
}

Matrix Matrix::operator-() const {
  Matrix s(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) s.e_[i] = -e_[i];
  return s;
}

std::vector<GaussianRational> Matrix::apply(const std::vector<GaussianRational>& x) const {
  if (x.size() != cols_) throw DimensionError("matrix apply dimension mismatch");
  std::vector<GaussianRational> y(rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c)
      if (!at(r, c).is_zero() && !x[c].is_zero()) y[r] += at(r, c) * x[c];
  return y;
}

Matrix Matrix::hcat(const Matrix& o) const {
  if (rows_ != o.rows_) throw DimensionError("hcat row mismatch");
  Matrix m(rows_, cols_ + o.cols_);
  for (size_t r = 0; r < rows_; ++r) {
    for (size_t c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
    for (size_t c = 0; c < o.cols_; ++c) m.at(r, cols_ + c) = o.at(r, c);
  }
  return m;
}

Matrix Matrix::vcat(const Matrix& o) const {
  if (cols_ != o.cols_) throw DimensionError("vcat column mismatch");
  Matrix m(rows_ + o.rows_, cols_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
  for (size_t r = 0; r < o.rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) m.at(rows_ + r, c) = o.at(r, c);
  return m;
}

Matrix Matrix::submatrix(size_t r0, size_t c0, size_t nrows, size_t ncols) const {
  Matrix m(nrows, ncols);
  for (size_t r = 0; r < nrows; ++r)
    for (size_t c = 0; c < ncols; ++c) m.at(r, c) = at(r0 + r, c0 + c);
  return m;
}

std::vector<size_t> Matrix::rref() {
  std::vector<size_t> pivots;
  size_t lead = 0;
  for (size_t col = 0; col < cols_ && lead < rows_; ++col) {
    // RREF is unique, so among the rows available for this column we may
    // pick the cheapest entry (small limbs) as pivot.
    size_t pr = rows_;
    for (size_t r = lead; r < rows_; ++r) {
      if (at(r, col).is_zero()) continue;
      if (pr == rows_ || (at(r, col).is_small() && !at(pr, col).is_small())) pr = r;
    }
    if (pr == rows_) continue;
    if (pr != lead)
      for (size_t c = 0; c < cols_; ++c) std::swap(at(pr, c), at(lead, c));
    GaussianRational inv = at(lead, col).inverse();
    for (size_t c = col; c < cols_; ++c)
      if (!at(lead, c).is_zero()) at(lead, c) *= inv;
    for (size_t r = 0; r < rows_; ++r) {
      if (r == lead || at(r, col).is_zero()) continue;
      GaussianRational f = at(r, col);
      for (size_t c = col; c < cols_; ++c)
        if (!at(lead, c).is_zero()) at(r, c) -= f * at(lead, c);
    }
    pivots.push_back(col);
    ++lead;
  }
  return pivots;
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (size_t r = 0; r < rows_; ++r) {
    os << "[";
    for (size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << at(r, c);
    os << "]\n";
  }
  return os.str();
}

size_t rank(const Matrix& m) {
  Matrix w = m;
  return w.rref().size();
}

Matrix kernel(const Matrix& m) {
  Matrix w = m;
  std::vector<size_t> pivots = w.rref();
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t p : pivots) is_pivot[p] = true;
  std::vector<size_t> free_cols;
  for (size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  Matrix k(m.cols(), free_cols.size());
  for (size_t j = 0; j < free_cols.size(); ++j) {
    size_t fc = free_cols[j];
    k.at(fc, j) = GaussianRational(1);
    for (size_t i = 0; i < pivots.size(); ++i) k.at(pivots[i], j) = -w.at(i, fc);
  }
  return k;
}

Matrix image(const Matrix& m) {
  Matrix w = m.transpose();
  std::vector<size_t> pivots = w.rref();
  Matrix b(m.rows(), pivots.size());
  for (size_t j = 0; j < pivots.size(); ++j)
    for (size_t r = 0; r < m.rows(); ++r) b.at(r, j) = w.at(j, r);
  return b;
}

namespace {

GaussianRational det_recursive(const Matrix& m, std::vector<size_t>& rows, std::vector<size_t>& cols,
                               size_t depth) {
  if (depth == rows.size()) return GaussianRational(1);
  GaussianRational acc;
  size_t r = rows[depth];
  for (size_t j = depth; j < cols.size(); ++j) {
    std::swap(cols[depth], cols[j]);
    const GaussianRational& e = m.at(r, cols[depth]);
    if (!e.is_zero()) {
      GaussianRational sub = det_recursive(m, rows, cols, depth + 1);
      GaussianRational term = e * sub;
      if ((j - depth) % 2) term = -term;
      acc += term;
    }
    std::swap(cols[depth], cols[j]);
  }
  return acc;
}

// next k-subset of {0..n-1} in lexicographic order; false when exhausted
bool next_subset(std::vector<size_t>& idx, size_t n) {
  size_t k = idx.size();
  for (size_t i = k; i-- > 0;) {
    if (idx[i] + (k - i) < n) {
      ++idx[i];
      for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

bool has_nonzero_minor(const Matrix& m, size_t k) {
  std::vector<size_t> ridx(k);
  for (size_t i = 0; i < k; ++i) ridx[i] = i;
  do {
    std::vector<size_t> cidx(k);
    for (size_t i = 0; i < k; ++i) cidx[i] = i;
    do {
      std::vector<size_t> rows(ridx), cols(cidx);
      if (!det_recursive(m, rows, cols, 0).is_zero()) return true;
    } while (next_subset(cidx, m.cols()));
  } while (next_subset(ridx, m.rows()));
  return false;
}

}  // namespace

size_t rank_by_minors(const Matrix& m) {
  size_t kmax = std::min(m.rows(), m.cols());
  size_t r = 0;
  for (size_t k = 1; k <= kmax; ++k) {
    if (has_nonzero_minor(m, k))
      r = k;
    else
      break;
  }
  return r;
}

}  // namespace ccx
