#include "ccx/intlinalg.hpp"

#include <algorithm>

namespace ccx {

namespace {

struct ColumnHermite {
  ZMatrix h;                      // column echelon form A * U
  ZMatrix u;                      // unimodular, cols x cols
  std::vector<std::pair<size_t, size_t>> pivots;  // (row, col) in h

  explicit ColumnHermite(const ZMatrix& a) : h(a), u(a.cols, a.cols) {
    for (size_t i = 0; i < a.cols; ++i) u.at(i, i) = 1;
    size_t pc = 0;  // next pivot column
    for (size_t r = 0; r < h.rows && pc < h.cols; ++r) {
      // gcd-eliminate row r across columns >= pc
      while (true) {
        size_t best = h.cols;
        for (size_t j = pc; j < h.cols; ++j) {
          if (h.at(r, j) == 0) continue;
          if (best == h.cols || cmp(abs(h.at(r, j)), abs(h.at(r, best))) < 0) best = j;
        }
        if (best == h.cols) break;  // row r clear
        bool reduced_any = false;
        for (size_t j = pc; j < h.cols; ++j) {
          if (j == best || h.at(r, j) == 0) continue;
          mpz_class q;
          mpz_fdiv_q(q.get_mpz_t(), h.at(r, j).get_mpz_t(), h.at(r, best).get_mpz_t());
          if (q != 0) {
            for (size_t i = 0; i < h.rows; ++i) h.at(i, j) -= q * h.at(i, best);
            for (size_t i = 0; i < u.cols; ++i) u.at(i, j) -= q * u.at(i, best);
          }
          if (h.at(r, j) != 0) reduced_any = true;
        }
        if (!reduced_any) {
          // single nonzero entry in the row: promote to pivot
          if (best != pc) {
            for (size_t i = 0; i < h.rows; ++i) std::swap(h.at(i, best), h.at(i, pc));
            for (size_t i = 0; i < u.cols; ++i) std::swap(u.at(i, best), u.at(i, pc));
          }
          if (h.at(r, pc) < 0) {
            for (size_t i = 0; i < h.rows; ++i) h.at(i, pc) = -h.at(i, pc);
            for (size_t i = 0; i < u.cols; ++i) u.at(i, pc) = -u.at(i, pc);
          }
          pivots.emplace_back(r, pc);
          ++pc;
          break;
        }
      }
    }
  }
};

}  // namespace

size_t zrank(const ZMatrix& a) { return ColumnHermite(a).pivots.size(); }

struct ZSolver::Impl {
  ColumnHermite ch;
  size_t rows, cols;
  explicit Impl(const ZMatrix& a) : ch(a), rows(a.rows), cols(a.cols) {}
};

ZSolver::ZSolver(const ZMatrix& a) : impl_(new Impl(a)) {}
ZSolver::~ZSolver() { delete impl_; }
size_t ZSolver::rank() const { return impl_->ch.pivots.size(); }

ZSolveResult ZSolver::solve(const std::vector<mpz_class>& b) const {
  const ColumnHermite& ch = impl_->ch;
  size_t rows = impl_->rows, cols = impl_->cols;
  ZSolveResult res;
  std::vector<mpz_class> residual = b;
  std::vector<mpz_class> y(cols, 0);
  size_t pi = 0;
  for (size_t r = 0; r < rows; ++r) {
    if (pi < ch.pivots.size() && ch.pivots[pi].first == r) {
      size_t c = ch.pivots[pi].second;
      const mpz_class& piv = ch.h.at(r, c);
      if (residual[r] % piv != 0) {
        res.obstruction = "pivot " + piv.get_str() + " at row " + std::to_string(r) +
                          " does not divide " + residual[r].get_str();
        return res;
      }
      mpz_class q = residual[r] / piv;
      if (q != 0)
        for (size_t i = r; i < rows; ++i) residual[i] -= q * ch.h.at(i, c);
      y[c] = q;
      ++pi;
    } else if (residual[r] != 0) {
      res.obstruction = "row " + std::to_string(r) + " outside the column lattice";
      return res;
    }
  }
  res.solvable = true;
  res.x.assign(cols, 0);
  for (size_t i = 0; i < cols; ++i)
    for (size_t j = 0; j < cols; ++j)
      if (ch.u.at(i, j) != 0 && y[j] != 0) res.x[i] += ch.u.at(i, j) * y[j];
  return res;
}

ZSolveResult zsolve(const ZMatrix& a, const std::vector<mpz_class>& b) {
  return ZSolver(a).solve(b);
}

ZMatrix zkernel(const ZMatrix& a) {
  ColumnHermite ch(a);
  size_t pc = ch.pivots.size();
  ZMatrix k(a.cols, a.cols - pc);
  for (size_t j = pc; j < a.cols; ++j)
    for (size_t i = 0; i < a.cols; ++i) k.at(i, j - pc) = ch.u.at(i, j);
  return k;
}

QSolveResult qsolve(const ZMatrix& a, const std::vector<mpz_class>& b) {
  // fraction-free elimination on [A | b]
  size_t R = a.rows, C = a.cols;
  std::vector<std::vector<mpq_class>> m(R, std::vector<mpq_class>(C + 1));
  for (size_t r = 0; r < R; ++r) {
    for (size_t c = 0; c < C; ++c) m[r][c] = mpq_class(a.at(r, c));
    m[r][C] = mpq_class(b[r]);
  }
  std::vector<size_t> pivot_col;
  size_t lead = 0;
  for (size_t c = 0; c < C && lead < R; ++c) {
    size_t pr = lead;
    while (pr < R && m[pr][c] == 0) ++pr;
    if (pr == R) continue;
    std::swap(m[pr], m[lead]);
    mpq_class inv = 1 / m[lead][c];
    for (size_t j = c; j <= C; ++j) m[lead][j] *= inv;
    for (size_t r = 0; r < R; ++r) {
      if (r == lead || m[r][c] == 0) continue;
      mpq_class f = m[r][c];
      for (size_t j = c; j <= C; ++j) m[r][j] -= f * m[lead][j];
    }
    pivot_col.push_back(c);
    ++lead;
  }
  QSolveResult res;
  for (size_t r = lead; r < R; ++r)
    if (m[r][C] != 0) {
      res.obstruction = "inconsistent system over Q";
      return res;
    }
  std::vector<mpq_class> x(C, 0);
  for (size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = m[i][C];
  mpz_class den = 1;
  for (auto& v : x) den = lcm(den, v.get_den());
  res.solvable = true;
  res.den = den;
  res.num.resize(C);
  for (size_t i = 0; i < C; ++i) res.num[i] = mpz_class(x[i] * den);
  return res;
}

}  // namespace ccx
