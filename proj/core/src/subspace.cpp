#include "ccx/subspace.hpp"

namespace ccx {

Subspace Subspace::span_rows(const Matrix& vectors) {
  Matrix w = vectors;
  std::vector<size_t> pivots = w.rref();
  Subspace s(vectors.cols());
  s.basis_ = w.submatrix(0, 0, pivots.size(), vectors.cols());
  return s;
}

Subspace Subspace::span_columns(const Matrix& vectors) { return span_rows(vectors.transpose()); }

bool Subspace::contains(const std::vector<GaussianRational>& v) const {
  if (v.size() != ambient_) throw DimensionError("ambient mismatch in contains");
  // reduce v against the echelon basis
  std::vector<GaussianRational> w = v;
  for (size_t r = 0; r < basis_.rows(); ++r) {
    size_t lead = 0;
    while (lead < ambient_ && basis_.at(r, lead).is_zero()) ++lead;
    if (lead == ambient_) continue;
    if (!w[lead].is_zero()) {
      GaussianRational f = w[lead];
      for (size_t c = lead; c < ambient_; ++c)
        if (!basis_.at(r, c).is_zero()) w[c] -= f * basis_.at(r, c);
    }
  }
  for (const auto& x : w)
    if (!x.is_zero()) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("ambient mismatch in contains");
  for (size_t r = 0; r < other.basis_.rows(); ++r) {
    std::vector<GaussianRational> v(ambient_);
    for (size_t c = 0; c < ambient_; ++c) v[c] = other.basis_.at(r, c);
    if (!contains(v)) return false;
  }
  return true;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("ambient mismatch in sum");
  return Subspace::span_rows(a.basis_rows().vcat(b.basis_rows()));
}

Subspace intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("ambient mismatch in intersection");
  // Zassenhaus: x in both spans iff some combo of a-basis equals a combo
  // of b-basis; solve [A^T | -B^T] y = 0 and read off the A-part.
  Matrix at = a.basis_columns();
  Matrix bt = b.basis_columns();
  Matrix sys = at.hcat(-bt);
  Matrix k = kernel(sys);
  Matrix vecs(a.ambient_dim(), k.cols());
  for (size_t j = 0; j < k.cols(); ++j) {
    for (size_t i = 0; i < at.cols(); ++i) {
      if (k.at(i, j).is_zero()) continue;
      for (size_t r = 0; r < a.ambient_dim(); ++r) vecs.at(r, j) += at.at(r, i) * k.at(i, j);
    }
  }
  return Subspace::span_columns(vecs);
}

Subspace preimage(const Matrix& m, const Subspace& s) {
  if (m.rows() != s.ambient_dim()) throw DimensionError("ambient mismatch in preimage");
  // x with Mx in span(B): solve [M | -B^T] and project to the x block.
  Matrix bt = s.basis_columns();
  Matrix sys = m.hcat(-bt);
  Matrix k = kernel(sys);
  Matrix xs(m.cols(), k.cols());
  for (size_t j = 0; j < k.cols(); ++j)
    for (size_t i = 0; i < m.cols(); ++i) xs.at(i, j) = k.at(i, j);
  return Subspace::span_columns(xs);
}

size_t quotient_dim(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("ambient mismatch in quotient_dim");
  if (!a.contains(b)) throw DimensionError("quotient by a non-subspace");
  return a.dim() - b.dim();
}

Subspace apply(const Matrix& m, const Subspace& s) {
  if (m.cols() != s.ambient_dim()) throw DimensionError("ambient mismatch in apply");
  return Subspace::span_columns(m * s.basis_columns());
}

}  // namespace ccx
