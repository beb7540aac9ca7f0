#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "ccx/double_complex.hpp"

namespace ccx {

struct InternalCheckError : std::logic_error {
  using std::logic_error::logic_error;
};

/// (n+1) x (n+1) integer table indexed by bidegree.
class Table {
 public:
  Table() : n_(-1) {}
  explicit Table(int n) : n_(n), v_(size_t(n + 1) * size_t(n + 1), 0) {}
  int n() const { return n_; }
  int at(int p, int q) const {
    if (p < 0 || q < 0 || p > n_ || q > n_) return 0;
    return v_[size_t(p) * size_t(n_ + 1) + size_t(q)];
  }
  void set(int p, int q, int x) { v_[size_t(p) * size_t(n_ + 1) + size_t(q)] = x; }
  void add(int p, int q, int x) { v_[size_t(p) * size_t(n_ + 1) + size_t(q)] += x; }
  int total() const {
    int t = 0;
    for (int x : v_) t += x;
    return t;
  }
  Table transpose() const {
    Table t(n_);
    for (int p = 0; p <= n_; ++p)
      for (int q = 0; q <= n_; ++q) t.set(q, p, at(p, q));
    return t;
  }
  friend bool operator==(const Table&, const Table&) = default;

 private:
  int n_;
  std::vector<int> v_;
};

struct PageData {
  Table e;       // e_r^{p,q}
  Table rank_d;  // rank of d_r leaving (p,q)
};

enum class Orientation { Column, Row };

struct InvariantReport {
  int n = 0;
  std::string name;
  Table hodge;      // h_delbar^{p,q}
  Table hodge_row;  // h_del^{p,q}
  Table bc;         // Bott-Chern
  Table aeppli;
  std::vector<int> betti;            // b_0..b_{2n}
  std::vector<PageData> col_pages;   // pages 1..n+1 (index r-1)
  std::vector<PageData> row_pages;
  std::map<std::tuple<int, int, int>, int> refined;  // (k,p,q) -> b_k^{p,q}, nonzero only
  int r_max = 1;  // first column page equal to all later ones

  int e_col(int r, int p, int q) const;
  int e_row(int r, int p, int q) const;
  int rank_d_col(int r, int p, int q) const;
  int rank_d_row(int r, int p, int q) const;
  int refined_betti(int k, int p, int q) const {
    auto it = refined.find({k, p, q});
    return it == refined.end() ? 0 : it->second;
  }
  int betti_at(int k) const {
    return (k < 0 || size_t(k) >= betti.size()) ? 0 : betti[size_t(k)];
  }
};

Table dolbeault(const DoubleComplex& a);
Table dolbeault_row(const DoubleComplex& a);
Table bott_chern(const DoubleComplex& a);
Table aeppli(const DoubleComplex& a);
std::vector<int> de_rham(const DoubleComplex& a);

/// One page of the spectral sequence of the column (or row) filtration,
/// via the standard Z_r/B_r subquotients of the total complex.
PageData frolicher_page(const DoubleComplex& a, int r, Orientation o);

/// All nonzero refined Betti numbers b_k^{p,q}.
std::map<std::tuple<int, int, int>, int> refined_betti(const DoubleComplex& a);

/// Single refined Betti number, computed sparsely; usable on complexes too
/// large for the full table.
int refined_betti_entry(const DoubleComplex& a, int k, int p, int q);

/// dim(im del  ∩  Lambda^{p,0}) = rank of del: (p-1,0) -> (p,0).
int del_image_dim_row0(const DoubleComplex& a, int p);

/// Everything at once, cross-checked against the structural identities
/// (rank-nullity page recursion, convergence to de Rham, refined-Betti
/// totals, filtration compatibility); throws InternalCheckError on any
/// violation. Geometric complexes additionally get the conjugation/Serre
/// symmetry and boundary-vanishing assertions.
InvariantReport full_report(const DoubleComplex& a);

}  // namespace ccx
