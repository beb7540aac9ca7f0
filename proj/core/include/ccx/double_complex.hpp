#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ccx/sparse.hpp"

namespace ccx {

struct ComplexError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Finite double complex supported in [0,n]^2 with anticommuting
/// differentials del (bidegree (1,0)) and delbar (bidegree (0,1)).
/// The grade n is part of the data; duality reflects through it.
class DoubleComplex {
 public:
  DoubleComplex() = default;
  explicit DoubleComplex(int n);

  int n = 0;
  bool geometric = false;          // arises from structure equations / geometric catalog data
  bool has_real_structure = false; // invariants conjugation-symmetric by construction
  std::string name;

  int dim_at(int p, int q) const;
  /// Set the dimension of one bidegree. Call finalize_shapes() once all
  /// dimensions are in place, before touching the differentials.
  void set_dim(int p, int q, int d);
  void finalize_shapes();

  /// del[(p,q)]: matrix (p,q) -> (p+1,q); empty when either side is 0-dim.
  SparseMat& del(int p, int q);
  const SparseMat& del(int p, int q) const;
  SparseMat& delbar(int p, int q);
  const SparseMat& delbar(int p, int q) const;

  int total_dim() const;
  int total_dim_degree(int k) const;

  /// Offsets of the bidegree blocks inside Tot^k, ordered by ascending p.
  /// Returns list of (p, offset) pairs; block (p, k-p) spans
  /// [offset, offset + dim_at(p, k-p)).
  std::vector<std::pair<int, int>> degree_blocks(int k) const;

  /// Total differential Tot^k -> Tot^{k+1} (del + delbar on blocks).
  SparseMat total_differential(int k) const;

  /// Checks del^2 = delbar^2 = del delbar + delbar del = 0 and dimension
  /// consistency; throws ComplexError on violation.
  void validate() const;

 private:
  std::vector<int> dims_;
  std::vector<SparseMat> del_, delbar_;
  size_t idx(int p, int q) const { return size_t(p) * size_t(n + 1) + size_t(q); }
};

DoubleComplex tensor(const DoubleComplex& a, const DoubleComplex& b);
DoubleComplex dual(const DoubleComplex& a);
DoubleComplex conjugate(const DoubleComplex& a);
DoubleComplex direct_sum(const DoubleComplex& a, const DoubleComplex& b);

/// Single C in bidegree (0,0), grade 0.
DoubleComplex point_complex();

}  // namespace ccx
