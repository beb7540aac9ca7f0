#include "ccx/double_complex.hpp"

#include <algorithm>

namespace ccx {

DoubleComplex::DoubleComplex(int n_) : n(n_) {
  size_t cells = size_t(n + 1) * size_t(n + 1);
  dims_.assign(cells, 0);
  del_.assign(cells, SparseMat());
  delbar_.assign(cells, SparseMat());
}

int DoubleComplex::dim_at(int p, int q) const {
  if (p < 0 || q < 0 || p > n || q > n) return 0;
  return dims_[idx(p, q)];
}

void DoubleComplex::set_dim(int p, int q, int d) { dims_[idx(p, q)] = d; }

void DoubleComplex::finalize_shapes() {
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      del_[idx(p, q)] = SparseMat(dim_at(p + 1, q), dim_at(p, q));
      delbar_[idx(p, q)] = SparseMat(dim_at(p, q + 1), dim_at(p, q));
    }
}

namespace {
const SparseMat kEmpty{};
}

SparseMat& DoubleComplex::del(int p, int q) { return del_[idx(p, q)]; }
const SparseMat& DoubleComplex::del(int p, int q) const {
  if (p < 0 || q < 0 || p > n || q > n) return kEmpty;
  return del_[idx(p, q)];
}
SparseMat& DoubleComplex::delbar(int p, int q) { return delbar_[idx(p, q)]; }
const SparseMat& DoubleComplex::delbar(int p, int q) const {
  if (p < 0 || q < 0 || p > n || q > n) return kEmpty;
  return delbar_[idx(p, q)];
}

int DoubleComplex::total_dim() const {
  int t = 0;
  for (int d : dims_) t += d;
  return t;
}

int DoubleComplex::total_dim_degree(int k) const {
  int t = 0;
  for (int p = std::max(0, k - n); p <= std::min(k, n); ++p) t += dim_at(p, k - p);
  return t;
}

std::vector<std::pair<int, int>> DoubleComplex::degree_blocks(int k) const {
  std::vector<std::pair<int, int>> blocks;
  int off = 0;
  for (int p = std::max(0, k - n); p <= std::min(k, n); ++p) {
    blocks.emplace_back(p, off);
    off += dim_at(p, k - p);
  }
  return blocks;
}

SparseMat DoubleComplex::total_differential(int k) const {
  SparseMat d(total_dim_degree(k + 1), total_dim_degree(k));
  auto src = degree_blocks(k);
  auto dst = degree_blocks(k + 1);
  auto dst_off = [&](int p) -> int {
    for (auto& [bp, off] : dst)
      if (bp == p) return off;
    return -1;
  };
  for (auto& [p, soff] : src) {
    int q = k - p;
    const SparseMat& h = del(p, q);
    int ho = dst_off(p + 1);
    if (ho >= 0)
      for (int c = 0; c < h.cols; ++c)
        for (auto& [r, v] : h.col[size_t(c)]) d.col[size_t(soff + c)].emplace_back(ho + r, v);
    const SparseMat& vme = delbar(p, q);
    int vo = dst_off(p);
    if (vo >= 0)
      for (int c = 0; c < vme.cols; ++c)
        for (auto& [r, v] : vme.col[size_t(c)]) d.col[size_t(soff + c)].emplace_back(vo + r, v);
  }
  for (auto& c : d.col)
    std::sort(c.begin(), c.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return d;
}

namespace {

SparseMat compose(const SparseMat& g, const SparseMat& f) {
  // g after f
  SparseMat out(g.rows, f.cols);
  for (int c = 0; c < f.cols; ++c) {
    for (auto& [k, fv] : f.col[size_t(c)]) {
      if (k >= g.cols) throw ComplexError("composition dimension mismatch");
      for (auto& [r, gv] : g.col[size_t(k)]) out.add(r, c, gv * fv);
    }
  }
  return out;
}

}  // namespace

void DoubleComplex::validate() const {
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      if (dim_at(p, q) == 0) continue;
      if (dim_at(p + 1, q) > 0 && dim_at(p + 2, q) > 0) {
        if (compose(del(p + 1, q), del(p, q)).nnz() != 0)
          throw ComplexError("del*del != 0");
      }
      if (dim_at(p, q + 1) > 0 && dim_at(p, q + 2) > 0) {
        if (compose(delbar(p, q + 1), delbar(p, q)).nnz() != 0)
          throw ComplexError("delbar*delbar != 0");
      }
      if (dim_at(p + 1, q + 1) > 0) {
        SparseMat anti = compose(del(p, q + 1), delbar(p, q));
        SparseMat other = compose(delbar(p + 1, q), del(p, q));
        for (int c = 0; c < other.cols; ++c)
          for (auto& [r, v] : other.col[size_t(c)]) anti.add(r, c, v);
        if (anti.nnz() != 0) throw ComplexError("del delbar + delbar del != 0");
      }
    }
}

DoubleComplex tensor(const DoubleComplex& a, const DoubleComplex& b) {
  DoubleComplex t(a.n + b.n);
  t.geometric = a.geometric && b.geometric;
  t.has_real_structure = a.has_real_structure && b.has_real_structure;
  t.name = a.name.empty() || b.name.empty() ? "" : a.name + "*" + b.name;

  // block layout of (p,q): pairs (p1,q1) ordered lexicographically
  auto blocks = [&](int p, int q) {
    std::vector<std::tuple<int, int, int>> out;  // (p1, q1, offset)
    int off = 0;
    for (int p1 = std::max(0, p - b.n); p1 <= std::min(p, a.n); ++p1)
      for (int q1 = std::max(0, q - b.n); q1 <= std::min(q, a.n); ++q1) {
        int d = a.dim_at(p1, q1) * b.dim_at(p - p1, q - q1);
        if (d > 0) {
          out.emplace_back(p1, q1, off);
          off += d;
        }
      }
    return out;
  };

  for (int p = 0; p <= t.n; ++p)
    for (int q = 0; q <= t.n; ++q) {
      int d = 0;
      for (auto& [p1, q1, off] : blocks(p, q)) d += a.dim_at(p1, q1) * b.dim_at(p - p1, q - q1);
      t.set_dim(p, q, d);
    }
  t.finalize_shapes();

  auto find_off = [](const std::vector<std::tuple<int, int, int>>& bl, int p1, int q1) -> int {
    for (auto& [bp, bq, off] : bl)
      if (bp == p1 && bq == q1) return off;
    return -1;
  };

  for (int p = 0; p <= t.n; ++p)
    for (int q = 0; q <= t.n; ++q) {
      if (t.dim_at(p, q) == 0) continue;
      auto src = blocks(p, q);
      auto dsth = blocks(p + 1, q);
      auto dstv = blocks(p, q + 1);
      for (auto& [p1, q1, soff] : src) {
        int p2 = p - p1, q2 = q - q1;
        int da2 = a.dim_at(p1, q1), db2 = b.dim_at(p2, q2);
        int sign = (p1 + q1) % 2 ? -1 : 1;
        // index (i,j) within block -> soff + i*db2 + j
        // del(x (x) y) = del_a x (x) y + (-1)^{|x|} x (x) del_b y
        if (a.dim_at(p1 + 1, q1) > 0 && t.dim_at(p + 1, q) > 0) {
          int off = find_off(dsth, p1 + 1, q1);
          if (off >= 0) {
            const SparseMat& m = a.del(p1, q1);
            int dbn = db2;
            for (int c = 0; c < m.cols; ++c)
              for (auto& [r, v] : m.col[size_t(c)])
                for (int j = 0; j < dbn; ++j)
                  t.del(p, q).add(off + r * dbn + j, soff + c * dbn + j, v);
          }
        }
        if (b.dim_at(p2 + 1, q2) > 0 && t.dim_at(p + 1, q) > 0) {
          int off = find_off(dsth, p1, q1);
          if (off >= 0) {
            const SparseMat& m = b.del(p2, q2);
            int dbn2 = b.dim_at(p2 + 1, q2);
            for (int c = 0; c < m.cols; ++c)
              for (auto& [r, v] : m.col[size_t(c)]) {
                GaussianRational sv = sign < 0 ? -v : v;
                for (int i = 0; i < da2; ++i)
                  t.del(p, q).add(off + i * dbn2 + r, soff + i * db2 + c, sv);
              }
          }
        }
        if (a.dim_at(p1, q1 + 1) > 0 && t.dim_at(p, q + 1) > 0) {
          int off = find_off(dstv, p1, q1 + 1);
          if (off >= 0) {
            const SparseMat& m = a.delbar(p1, q1);
            for (int c = 0; c < m.cols; ++c)
              for (auto& [r, v] : m.col[size_t(c)])
                for (int j = 0; j < db2; ++j)
                  t.delbar(p, q).add(off + r * db2 + j, soff + c * db2 + j, v);
          }
        }
        if (b.dim_at(p2, q2 + 1) > 0 && t.dim_at(p, q + 1) > 0) {
          int off = find_off(dstv, p1, q1);
          if (off >= 0) {
            const SparseMat& m = b.delbar(p2, q2);
            int dbn2 = b.dim_at(p2, q2 + 1);
            for (int c = 0; c < m.cols; ++c)
              for (auto& [r, v] : m.col[size_t(c)]) {
                GaussianRational sv = sign < 0 ? -v : v;
                for (int i = 0; i < da2; ++i)
                  t.delbar(p, q).add(off + i * dbn2 + r, soff + i * db2 + c, sv);
              }
          }
        }
      }
    }
  return t;
}

DoubleComplex dual(const DoubleComplex& a) {
  DoubleComplex d(a.n);
  d.geometric = false;
  d.name = a.name.empty() ? "" : "dual(" + a.name + ")";
  for (int p = 0; p <= a.n; ++p)
    for (int q = 0; q <= a.n; ++q) d.set_dim(p, q, a.dim_at(a.n - p, a.n - q));
  d.finalize_shapes();
  for (int p = 0; p <= a.n; ++p)
    for (int q = 0; q <= a.n; ++q) {
      if (d.dim_at(p, q) == 0) continue;
      // (D del)^{p,q} = (-1)^{p+q+1} (del^{n-p-1, n-q})^T, same factor for delbar
      bool negate = (p + q + 1) % 2 != 0;
      const SparseMat& sd = a.del(a.n - p - 1, a.n - q);
      for (int c = 0; c < sd.cols; ++c)
        for (auto& [r, v] : sd.col[size_t(c)]) d.del(p, q).add(c, r, negate ? -v : v);
      const SparseMat& sb = a.delbar(a.n - p, a.n - q - 1);
      for (int c = 0; c < sb.cols; ++c)
        for (auto& [r, v] : sb.col[size_t(c)]) d.delbar(p, q).add(c, r, negate ? -v : v);
    }
  for (int p = 0; p <= a.n; ++p)
    for (int q = 0; q <= a.n; ++q) {
      for (auto& c : d.del(p, q).col)
        std::sort(c.begin(), c.end(), [](auto& x, auto& y) { return x.first < y.first; });
      for (auto& c : d.delbar(p, q).col)
        std::sort(c.begin(), c.end(), [](auto& x, auto& y) { return x.first < y.first; });
    }
  return d;
}

DoubleComplex conjugate(const DoubleComplex& a) {
  DoubleComplex c(a.n);
  c.geometric = a.geometric;
  c.has_real_structure = a.has_real_structure;
  c.name = a.name.empty() ? "" : "conj(" + a.name + ")";
  for (int p = 0; p <= a.n; ++p)
    for (int q = 0; q <= a.n; ++q) c.set_dim(p, q, a.dim_at(q, p));
  c.finalize_shapes();
  for (int p = 0; p <= a.n; ++p)
    for (int q = 0; q <= a.n; ++q) {
      if (c.dim_at(p, q) == 0) continue;
      const SparseMat& v = a.delbar(q, p);  // (q,p) -> (q,p+1): transposed roles
      for (int col = 0; col < v.cols; ++col)
        for (auto& [r, val] : v.col[size_t(col)]) c.del(p, q).add(r, col, val.conj());
      const SparseMat& h = a.del(q, p);
      for (int col = 0; col < h.cols; ++col)
        for (auto& [r, val] : h.col[size_t(col)]) c.delbar(p, q).add(r, col, val.conj());
    }
  return c;
}

DoubleComplex direct_sum(const DoubleComplex& a, const DoubleComplex& b) {
  if (a.n != b.n) throw ComplexError("direct sum needs equal grades");
  DoubleComplex s(a.n);
  s.geometric = a.geometric && b.geometric;
  for (int p = 0; p <= s.n; ++p)
    for (int q = 0; q <= s.n; ++q) s.set_dim(p, q, a.dim_at(p, q) + b.dim_at(p, q));
  s.finalize_shapes();
  for (int p = 0; p <= s.n; ++p)
    for (int q = 0; q <= s.n; ++q) {
      const SparseMat& ad = a.del(p, q);
      for (int c = 0; c < ad.cols; ++c)
        for (auto& [r, v] : ad.col[size_t(c)]) s.del(p, q).add(r, c, v);
      const SparseMat& bd = b.del(p, q);
      for (int c = 0; c < bd.cols; ++c)
        for (auto& [r, v] : bd.col[size_t(c)])
          s.del(p, q).add(a.dim_at(p + 1, q) + r, a.dim_at(p, q) + c, v);
      const SparseMat& ab = a.delbar(p, q);
      for (int c = 0; c < ab.cols; ++c)
        for (auto& [r, v] : ab.col[size_t(c)]) s.delbar(p, q).add(r, c, v);
      const SparseMat& bb = b.delbar(p, q);
      for (int c = 0; c < bb.cols; ++c)
        for (auto& [r, v] : bb.col[size_t(c)])
          s.delbar(p, q).add(a.dim_at(p, q + 1) + r, a.dim_at(p, q) + c, v);
    }
  return s;
}

DoubleComplex point_complex() {
  DoubleComplex p(0);
  p.set_dim(0, 0, 1);
  p.finalize_shapes();
  p.geometric = true;
  p.has_real_structure = true;
  p.name = "point";
  return p;
}

}  // namespace ccx
