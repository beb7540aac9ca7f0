#include "ccx/invariants.hpp"

#include <algorithm>
#include <sstream>

#include "ccx/matrix.hpp"
#include "ccx/subspace.hpp"

namespace ccx {

namespace {

Matrix compose_dense(const SparseMat& g, const SparseMat& f) {
  return g.dense() * f.dense();
}

// dense differentials with correct shapes even outside the support grid
Matrix del_dense(const DoubleComplex& a, int p, int q) {
  if (p < 0 || q < 0 || p > a.n || q > a.n)
    return Matrix(size_t(a.dim_at(p + 1, q)), size_t(a.dim_at(p, q)));
  return a.del(p, q).dense();
}
Matrix delbar_dense(const DoubleComplex& a, int p, int q) {
  if (p < 0 || q < 0 || p > a.n || q > a.n)
    return Matrix(size_t(a.dim_at(p, q + 1)), size_t(a.dim_at(p, q)));
  return a.delbar(p, q).dense();
}

}  // namespace

int InvariantReport::e_col(int r, int p, int q) const {
  if (r < 1) throw InternalCheckError("page index must be >= 1");
  size_t i = std::min(size_t(r - 1), col_pages.size() - 1);
  return col_pages[i].e.at(p, q);
}
int InvariantReport::e_row(int r, int p, int q) const {
  if (r < 1) throw InternalCheckError("page index must be >= 1");
  size_t i = std::min(size_t(r - 1), row_pages.size() - 1);
  return row_pages[i].e.at(p, q);
}
int InvariantReport::rank_d_col(int r, int p, int q) const {
  if (r < 1 || size_t(r - 1) >= col_pages.size()) return 0;
  return col_pages[size_t(r - 1)].rank_d.at(p, q);
}
int InvariantReport::rank_d_row(int r, int p, int q) const {
  if (r < 1 || size_t(r - 1) >= row_pages.size()) return 0;
  return row_pages[size_t(r - 1)].rank_d.at(p, q);
}

Table dolbeault(const DoubleComplex& a) {
  Table t(a.n);
  for (int p = 0; p <= a.n; ++p)
    for (int q = 0; q <= a.n; ++q) {
      if (a.dim_at(p, q) == 0) continue;
      size_t krank = size_t(a.dim_at(p, q)) - rank(a.delbar(p, q).dense());
      size_t irank = rank(delbar_dense(a, p, q - 1));
      t.set(p, q, int(krank - irank));
    }
  return t;
}

Table dolbeault_row(const DoubleComplex& a) {
  Table t(a.n);
  for (int p = 0; p <= a.n; ++p)
    for (int q = 0; q <= a.n; ++q) {
      if (a.dim_at(p, q) == 0) continue;
      size_t krank = size_t(a.dim_at(p, q)) - rank(a.del(p, q).dense());
      size_t irank = rank(del_dense(a, p - 1, q));
      t.set(p, q, int(krank - irank));
    }
  return t;
}

Table bott_chern(const DoubleComplex& a) {
  Table t(a.n);
  for (int p = 0; p <= a.n; ++p)
    for (int q = 0; q <= a.n; ++q) {
      int d = a.dim_at(p, q);
      if (d == 0) continue;
      Matrix stacked = a.del(p, q).dense().vcat(a.delbar(p, q).dense());
      size_t kerdim = size_t(d) - rank(stacked);
      size_t im = 0;
      if (a.dim_at(p - 1, q - 1) > 0)
        im = rank(compose_dense(a.del(p - 1, q), a.delbar(p - 1, q - 1)));
      t.set(p, q, int(kerdim - im));
    }
  return t;
}

Table aeppli(const DoubleComplex& a) {
  Table t(a.n);
  for (int p = 0; p <= a.n; ++p)
    for (int q = 0; q <= a.n; ++q) {
      int d = a.dim_at(p, q);
      if (d == 0) continue;
      size_t kerdim;
      if (a.dim_at(p + 1, q + 1) > 0) {
        Matrix dd = compose_dense(a.del(p, q + 1), a.delbar(p, q));
        kerdim = size_t(d) - rank(dd);
      } else {
        kerdim = size_t(d);
      }
      Matrix im_h = del_dense(a, p - 1, q);
      Matrix im_v = delbar_dense(a, p, q - 1);
      size_t imdim = rank(im_h.hcat(im_v));
      t.set(p, q, int(kerdim - imdim));
    }
  return t;
}

std::vector<int> de_rham(const DoubleComplex& a) {
  std::vector<int> b(size_t(2 * a.n + 1), 0);
  std::vector<size_t> ranks(size_t(2 * a.n + 2), 0);
  for (int k = 0; k <= 2 * a.n; ++k)
    ranks[size_t(k + 1)] = rank(a.total_differential(k).dense());
  for (int k = 0; k <= 2 * a.n; ++k)
    b[size_t(k)] = a.total_dim_degree(k) - int(ranks[size_t(k + 1)]) - int(ranks[size_t(k)]);
  return b;
}

namespace {

/// Column-filtration machinery on the total complex. F^p Tot^k is the
/// coordinate suffix of the blocks with column index >= p.
struct TotalComplex {
  const DoubleComplex& a;
  std::vector<Matrix> T;                         // T[k]: Tot^k -> Tot^{k+1}
  std::vector<std::vector<std::pair<int, int>>> blocks;
  mutable std::map<std::tuple<int, int, int>, Subspace> zcache;

  explicit TotalComplex(const DoubleComplex& dc) : a(dc) {
    int top = 2 * a.n;
    T.reserve(size_t(top + 1));
    blocks.reserve(size_t(top + 1));
    for (int k = 0; k <= top; ++k) {
      T.push_back(a.total_differential(k).dense());
      blocks.push_back(a.degree_blocks(k));
    }
  }

  int dim(int k) const {
    return (k < 0 || k > 2 * a.n) ? 0 : a.total_dim_degree(k);
  }

  /// Offset of F^p inside Tot^k (start of the suffix), clamped.
  int f_offset(int k, int p) const {
    if (k < 0 || k > 2 * a.n) return 0;
    int off = dim(k);
    for (auto& [bp, boff] : blocks[size_t(k)])
      if (bp >= p) {
        off = boff;
        break;
      }
    return off;
  }

  /// Z_r^{p,q} = {x in F^p Tot^{p+q} : dx in F^{p+r}} as a subspace of
  /// Tot^{p+q}. Z_0 = F^p by convention.
  const Subspace& Z(int r, int p, int q) const {
    if (r < 0) r = 0;
    auto it = zcache.find({r, p, q});
    if (it != zcache.end()) return it->second;
    Subspace z = compute_Z(r, p, q);
    return zcache.emplace(std::make_tuple(r, p, q), std::move(z)).first->second;
  }

  Subspace compute_Z(int r, int p, int q) const {
    int k = p + q;
    int dk = dim(k);
    if (dk == 0) return Subspace::zero(size_t(std::max(dk, 0)));
    int off = f_offset(k, p);
    int fdim = dk - off;
    if (fdim <= 0) return Subspace::zero(size_t(dk));
    if (r <= 0 || k == 2 * a.n) {
      // whole suffix F^p
      Matrix rows(static_cast<size_t>(fdim), static_cast<size_t>(dk));
      for (int i = 0; i < fdim; ++i) rows.at(size_t(i), size_t(off + i)) = GaussianRational(1);
      return Subspace::span_rows(rows);
    }
    // rows of T_k landing in blocks < p + r, columns in F^p
    int rcut = f_offset(k + 1, p + r);
    Matrix sub = T[size_t(k)].submatrix(0, size_t(off), size_t(rcut), size_t(fdim));
    Matrix ker = kernel(sub);  // columns in F^p coordinates
    Matrix emb(size_t(dk), ker.cols());
    for (size_t j = 0; j < ker.cols(); ++j)
      for (int i = 0; i < fdim; ++i) emb.at(size_t(off + i), j) = ker.at(size_t(i), j);
    return Subspace::span_columns(emb);
  }

  Subspace apply_T(int k, const Subspace& s) const {
    if (k < 0 || k >= int(T.size())) return Subspace::zero(size_t(dim(k + 1)));
    return apply(T[size_t(k)], s);
  }
};

}  // namespace

PageData frolicher_page(const DoubleComplex& a, int r, Orientation o) {
  if (o == Orientation::Row) {
    PageData pd = frolicher_page(conjugate(a), r, Orientation::Column);
    return PageData{pd.e.transpose(), pd.rank_d.transpose()};
  }
  TotalComplex tc(a);
  PageData pd{Table(a.n), Table(a.n)};
  for (int p = 0; p <= a.n; ++p)
    for (int q = 0; q <= a.n; ++q) {
      Subspace z = tc.Z(r, p, q);
      if (z.dim() == 0) continue;
      Subspace den = sum(tc.apply_T(p + q - 1, tc.Z(r - 1, p - r + 1, q + r - 2)),
                         tc.Z(r - 1, p + 1, q - 1));
      pd.e.set(p, q, int(z.dim() - den.dim()));
      Subspace img = tc.apply_T(p + q, z);
      Subspace den_t = sum(tc.apply_T(p + q, tc.Z(r - 1, p + 1, q - 1)),
                           tc.Z(r - 1, p + r + 1, q - r));
      pd.rank_d.set(p, q, int(sum(img, den_t).dim() - den_t.dim()));
    }
  return pd;
}

namespace {

// denominator of E_r^{p,q}: d Z_{r-1}^{p-r+1, q+r-2} + Z_{r-1}^{p+1, q-1}
Subspace page_denominator(const TotalComplex& tc, int r, int p, int q) {
  return sum(tc.apply_T(p + q - 1, tc.Z(r - 1, p - r + 1, q + r - 2)),
             tc.Z(r - 1, p + 1, q - 1));
}

std::vector<PageData> all_pages(const DoubleComplex& a, const TotalComplex& tc) {
  std::vector<PageData> pages;
  int rmax = a.n + 1;
  for (int r = 1; r <= rmax; ++r) {
    PageData pd{Table(a.n), Table(a.n)};
    for (int p = 0; p <= a.n; ++p)
      for (int q = 0; q <= a.n; ++q) {
        if (p + q > 2 * a.n) continue;
        Subspace z = tc.Z(r, p, q);
        if (z.dim() == 0) continue;
        Subspace den = page_denominator(tc, r, p, q);
        int e = int(z.dim() - den.dim());
        pd.e.set(p, q, e);
        if (e == 0) continue;
        Subspace img = tc.apply_T(p + q, z);
        Subspace den_t = page_denominator(tc, r, p + r, q - r + 1);
        pd.rank_d.set(p, q, int(sum(img, den_t).dim() - den_t.dim()));
      }
    pages.push_back(std::move(pd));
  }
  return pages;
}

}  // namespace

std::map<std::tuple<int, int, int>, int> refined_betti(const DoubleComplex& a) {
  std::map<std::tuple<int, int, int>, int> out;
  TotalComplex tc(a);
  for (int k = 0; k <= 2 * a.n; ++k) {
    int dk = tc.dim(k);
    if (dk == 0) continue;
    Subspace B = k > 0 ? Subspace::span_columns(tc.T[size_t(k - 1)]) : Subspace::zero(size_t(dk));
    size_t dB = B.dim();

    // K ∩ F^a (suffix columns) and K ∩ Fbar^b (prefix columns)
    auto ker_suffix = [&](int acol) {
      int off = tc.f_offset(k, acol);
      int fdim = dk - off;
      if (fdim <= 0) return Subspace::zero(size_t(dk));
      Matrix sub = tc.T[size_t(k)].submatrix(0, size_t(off), tc.T[size_t(k)].rows(), size_t(fdim));
      Matrix kerm = kernel(sub);
      Matrix emb(size_t(dk), kerm.cols());
      for (size_t j = 0; j < kerm.cols(); ++j)
        for (int i = 0; i < fdim; ++i) emb.at(size_t(off + i), j) = kerm.at(size_t(i), j);
      return Subspace::span_columns(emb);
    };
    auto ker_prefix = [&](int brow) {
      // Fbar^b = blocks with q = k - p >= b, i.e. p <= k - b: prefix
      int cut = tc.f_offset(k, k - brow + 1);
      if (cut <= 0) return Subspace::zero(size_t(dk));
      Matrix sub = tc.T[size_t(k)].submatrix(0, 0, tc.T[size_t(k)].rows(), size_t(cut));
      Matrix kerm = kernel(sub);
      Matrix emb(size_t(dk), kerm.cols());
      for (size_t j = 0; j < kerm.cols(); ++j)
        for (int i = 0; i < cut; ++i) emb.at(size_t(i), j) = kerm.at(size_t(i), j);
      return Subspace::span_columns(emb);
    };

    int amax = std::min(k, a.n) + 1;
    std::vector<Subspace> KF, KFb;
    for (int i = 0; i <= amax; ++i) {
      KF.push_back(ker_suffix(i));
      KFb.push_back(ker_prefix(i));
    }
    std::vector<size_t> u(size_t(amax + 1)), v(size_t(amax + 1));
    for (int i = 0; i <= amax; ++i) {
      u[size_t(i)] = sum(KF[size_t(i)], B).dim();
      v[size_t(i)] = sum(KFb[size_t(i)], B).dim();
    }
    auto g = [&](int aa, int bb) -> long {
      if (aa > amax) aa = amax;
      if (bb > amax) bb = amax;
      size_t w = sum(sum(KF[size_t(aa)], KFb[size_t(bb)]), B).dim();
      return long(u[size_t(aa)]) + long(v[size_t(bb)]) - long(w) - long(dB);
    };
    for (int p = 0; p <= std::min(k, a.n); ++p)
      for (int q = 0; q <= std::min(k, a.n); ++q) {
        long b = g(p, q) - g(p + 1, q) - g(p, q + 1) + g(p + 1, q + 1);
        if (b != 0) out[{k, p, q}] = int(b);
      }
  }
  return out;
}

int del_image_dim_row0(const DoubleComplex& a, int p) {
  return int(rank(a.del(p - 1, 0).dense()));
}

int refined_betti_entry(const DoubleComplex& a, int k, int p, int q) {
  SparseMat Tk = a.total_differential(k);
  SparseMat Tkm1 = k > 0 ? a.total_differential(k - 1) : SparseMat(a.total_dim_degree(0), 0);
  int dk = a.total_dim_degree(k);
  if (dk == 0) return 0;

  auto blocks = a.degree_blocks(k);
  auto f_offset = [&](int col) {
    int off = dk;
    for (auto& [bp, boff] : blocks)
      if (bp >= col) {
        off = boff;
        break;
      }
    return off;
  };

  // kernel vectors of Tk restricted to a contiguous column range
  auto kernel_range = [&](int begin, int end) {
    std::vector<SparseCol> out;
    if (begin >= end) return out;
    ColumnReducer red(Tk.rows + (end - begin));
    for (int c = begin; c < end; ++c) {
      SparseCol v = Tk.col[size_t(c)];
      int tag = Tk.rows + (c - begin);
      v.emplace_back(tag, GaussianRational(1));
      red.insert(std::move(v));
    }
    // echelon vectors with lead in the tag block are kernel combinations
    for (const auto& [lead, vec] : red.echelon()) {
      if (lead < Tk.rows) continue;
      SparseCol kv;
      for (const auto& [r, val] : vec)
        if (r >= Tk.rows) kv.emplace_back(begin + (r - Tk.rows), val);
      out.push_back(std::move(kv));
    }
    return out;
  };

  std::vector<SparseCol> bdry;
  for (const auto& c : Tkm1.col)
    if (!c.empty()) bdry.push_back(c);

  auto rank_with = [&](const std::vector<const std::vector<SparseCol>*>& families) {
    ColumnReducer red(dk);
    for (const auto& c : bdry) red.insert(c);
    size_t dB = red.rank();
    for (auto* fam : families)
      for (const auto& c : *fam) red.insert(c);
    return std::pair<size_t, size_t>(dB, red.rank());
  };

  auto suffix_kernel = [&](int aa) { return kernel_range(f_offset(aa), dk); };
  auto prefix_kernel = [&](int bb) { return kernel_range(0, f_offset(k - bb + 1)); };

  std::map<int, std::vector<SparseCol>> KF, KFb;
  for (int aa : {p, p + 1}) KF[aa] = suffix_kernel(aa);
  for (int bb : {q, q + 1}) KFb[bb] = prefix_kernel(bb);

  size_t dB = 0;
  std::map<int, long> u, v;
  for (int aa : {p, p + 1}) {
    auto [b0, r] = rank_with({&KF[aa]});
    dB = b0;
    u[aa] = long(r);
  }
  for (int bb : {q, q + 1}) {
    auto [b0, r] = rank_with({&KFb[bb]});
    v[bb] = long(r);
  }
  auto g = [&](int aa, int bb) -> long {
    auto [b0, w] = rank_with({&KF[aa], &KFb[bb]});
    return u[aa] + v[bb] - long(w) - long(b0);
  };
  return int(g(p, q) - g(p + 1, q) - g(p, q + 1) + g(p + 1, q + 1));
}

InvariantReport full_report(const DoubleComplex& a) {
  InvariantReport rep;
  rep.n = a.n;
  rep.name = a.name;
  rep.hodge = dolbeault(a);
  rep.hodge_row = dolbeault_row(a);
  rep.bc = bott_chern(a);
  rep.aeppli = aeppli(a);
  rep.betti = de_rham(a);

  TotalComplex tc(a);
  rep.col_pages = all_pages(a, tc);
  DoubleComplex cj = conjugate(a);
  TotalComplex tcj(cj);
  auto rowp = all_pages(cj, tcj);
  for (auto& pd : rowp) rep.row_pages.push_back(PageData{pd.e.transpose(), pd.rank_d.transpose()});
  rep.refined = refined_betti(a);

  // first stabilized page
  rep.r_max = a.n + 1;
  for (int r = a.n; r >= 1; --r) {
    if (rep.col_pages[size_t(r - 1)].e == rep.col_pages[size_t(r)].e &&
        rep.col_pages[size_t(r - 1)].rank_d.total() == 0)
      rep.r_max = r;
    else
      break;
  }

  // ---- structural cross-checks (always) ----
  auto fail = [&](const std::string& what) {
    throw InternalCheckError("invariant cross-check failed (" +
                             (a.name.empty() ? std::string("complex") : a.name) + "): " + what);
  };

  // e_1 = Dolbeault / row-Dolbeault
  if (!(rep.col_pages[0].e == rep.hodge)) fail("E_1 != Dolbeault");
  if (!(rep.row_pages[0].e == rep.hodge_row)) fail("row E_1 != H_del");

  // rank-nullity page recursion
  for (int r = 1; r <= a.n; ++r)
    for (int p = 0; p <= a.n; ++p)
      for (int q = 0; q <= a.n; ++q) {
        int expect = rep.e_col(r, p, q) - rep.rank_d_col(r, p, q) -
                     rep.rank_d_col(r, p - r, q + r - 1);
        if (rep.e_col(r + 1, p, q) != expect) fail("rank-nullity recursion (column)");
        int expect_row = rep.e_row(r, p, q) - rep.rank_d_row(r, p, q) -
                         rep.rank_d_row(r, p + r - 1, q - r);
        if (rep.e_row(r + 1, p, q) != expect_row) fail("rank-nullity recursion (row)");
      }

  // convergence: antidiagonal sums of E_infty equal Betti numbers
  for (int k = 0; k <= 2 * a.n; ++k) {
    int s = 0, srow = 0;
    for (int p = 0; p <= a.n; ++p) {
      s += rep.e_col(a.n + 1, p, k - p);
      srow += rep.e_row(a.n + 1, p, k - p);
    }
    if (s != rep.betti_at(k)) fail("column E_infty does not converge to de Rham");
    if (srow != rep.betti_at(k)) fail("row E_infty does not converge to de Rham");
  }

  // refined Betti totals and support
  std::vector<int> refined_total(size_t(2 * a.n + 1), 0);
  for (auto& [key, val] : rep.refined) {
    auto [k, p, q] = key;
    if (p < 0 || q < 0 || p > k || q > k) fail("refined Betti outside (B1) support");
    refined_total[size_t(k)] += val;
    if (val < 0) fail("negative refined Betti number");
  }
  for (int k = 0; k <= 2 * a.n; ++k)
    if (refined_total[size_t(k)] != rep.betti_at(k)) fail("refined Betti does not sum to b_k");

  // Hodge filtration graded pieces agree with column E_infty
  {
    std::map<std::pair<int, int>, int> grf;  // (k,p) -> dim gr_F^p H^k
    for (auto& [key, val] : rep.refined) {
      auto [k, p, q] = key;
      grf[{k, p}] += val;
    }
    for (int k = 0; k <= 2 * a.n; ++k)
      for (int p = 0; p <= a.n; ++p) {
        auto it = grf.find({k, p});
        int lhs = it == grf.end() ? 0 : it->second;
        if (lhs != rep.e_col(a.n + 1, p, k - p)) fail("gr_F mismatch with E_infty");
      }
  }

  // Euler characteristic is page-independent
  {
    long chi = 0;
    for (int k = 0; k <= 2 * a.n; ++k) chi += (k % 2 ? -1 : 1) * rep.betti_at(k);
    for (int r = 1; r <= a.n + 1; ++r) {
      long s = 0;
      for (int p = 0; p <= a.n; ++p)
        for (int q = 0; q <= a.n; ++q) s += ((p + q) % 2 ? -1 : 1) * rep.e_col(r, p, q);
      if (s != chi) fail("Euler characteristic not page-invariant");
    }
  }

  // ---- geometric assertions ----
  if (a.has_real_structure) {
    for (int p = 0; p <= a.n; ++p)
      for (int q = 0; q <= a.n; ++q) {
        if (rep.hodge.at(p, q) != rep.hodge_row.at(q, p)) fail("conjugation symmetry (Hodge)");
        for (auto& [key, val] : rep.refined) {
          auto [k, pp, qq] = key;
          if (rep.refined_betti(k, qq, pp) != val) fail("conjugation symmetry (B2)");
        }
      }
  }
  if (a.geometric) {
    // Serre symmetry of every page and of refined Betti numbers
    for (int r = 1; r <= a.n + 1; ++r)
      for (int p = 0; p <= a.n; ++p)
        for (int q = 0; q <= a.n; ++q)
          if (rep.e_col(r, p, q) != rep.e_col(r, a.n - p, a.n - q))
            fail("Serre symmetry of pages");
    for (auto& [key, val] : rep.refined) {
      auto [k, p, q] = key;
      if (rep.refined_betti(2 * a.n - k, a.n - p, a.n - q) != val) fail("Serre symmetry (B3)");
    }
    if (rep.refined_betti(1, 1, 1) != 0) fail("boundary vanishing (B4): b_1^{1,1} != 0");
    for (int p = 1; p <= a.n; ++p)
      if (rep.refined_betti(a.n, a.n, p) != 0) fail("boundary vanishing (B4): b_n^{n,p} != 0");
    // (F1),(F3),(F4): corner entries never change
    for (int r = 1; r <= a.n + 1; ++r) {
      if (rep.e_col(r, 0, 0) != rep.hodge.at(0, 0)) fail("(F4) corner (0,0) not constant");
      if (rep.e_col(r, a.n, 0) != rep.hodge.at(a.n, 0)) fail("(F3) corner (n,0) not constant");
    }
    // (F5): degeneration at page n
    if (a.n >= 1 && !(rep.col_pages[size_t(a.n - 1)].e == rep.col_pages[size_t(a.n)].e))
      fail("(F5) page n not stable");
    // (F6): degeneration at page 1 for n <= 2
    if (a.n <= 2 && rep.r_max > 1) fail("(F6) n<=2 must degenerate at E_1");
    // Bott-Chern / Aeppli duality
    for (int p = 0; p <= a.n; ++p)
      for (int q = 0; q <= a.n; ++q)
        if (rep.bc.at(p, q) != rep.aeppli.at(a.n - p, a.n - q)) fail("BC/Aeppli duality");
  }
  return rep;
}

}  // namespace ccx
