#pragma once

#include "ccx/matrix.hpp"

namespace ccx {

/// Linear subspace of Q(i)^ambient. The basis is stored in reduced row
/// echelon form (one basis vector per row), so equal subspaces have
/// identical representations.
class Subspace {
 public:
  Subspace() : ambient_(0) {}
  explicit Subspace(size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  /// Span of the columns of `vectors`.
  static Subspace span_columns(const Matrix& vectors);
  /// Span of the rows of `vectors`.
  static Subspace span_rows(const Matrix& vectors);
  static Subspace zero(size_t ambient) { return Subspace(ambient); }
  static Subspace full(size_t ambient) { return span_rows(Matrix::identity(ambient)); }

  size_t ambient_dim() const { return ambient_; }
  size_t dim() const { return basis_.rows(); }
  /// Canonical basis, one vector per row.
  const Matrix& basis_rows() const { return basis_; }
  Matrix basis_columns() const { return basis_.transpose(); }

  bool contains(const std::vector<GaussianRational>& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

  std::string str() const { return basis_.str(); }

 private:
  size_t ambient_;
  Matrix basis_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);
/// {x : Mx in s}
Subspace preimage(const Matrix& m, const Subspace& s);
/// dim(a / b); requires b to be a subspace of a.
size_t quotient_dim(const Subspace& a, const Subspace& b);
/// Image of subspace s under M.
Subspace apply(const Matrix& m, const Subspace& s);

}  // namespace ccx
