#include "ccx/sparse.hpp"

#include <algorithm>

namespace ccx {

void SparseMat::add(int r, int c, const GaussianRational& v) {
  if (v.is_zero()) return;
  auto& cc = col[size_t(c)];
  for (auto& [row, val] : cc) {
    if (row == r) {
      val += v;
      if (val.is_zero()) {
        cc.erase(std::remove_if(cc.begin(), cc.end(),
                                [&](const auto& p) { return p.second.is_zero(); }),
                 cc.end());
      }
      return;
    }
  }
  cc.emplace_back(r, v);
  std::sort(cc.begin(), cc.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
}

Matrix SparseMat::dense() const {
  Matrix m(static_cast<size_t>(rows), static_cast<size_t>(cols));
  for (int c = 0; c < cols; ++c)
    for (const auto& [r, v] : col[size_t(c)]) m.at(size_t(r), size_t(c)) = v;
  return m;
}

SparseMat SparseMat::from_dense(const Matrix& m) {
  SparseMat s(int(m.rows()), int(m.cols()));
  for (size_t c = 0; c < m.cols(); ++c)
    for (size_t r = 0; r < m.rows(); ++r)
      if (!m.at(r, c).is_zero()) s.col[c].emplace_back(int(r), m.at(r, c));
  return s;
}

size_t SparseMat::nnz() const {
  size_t n = 0;
  for (const auto& c : col) n += c.size();
  return n;
}

namespace {

// v -= f * u, both sorted by row
void axpy(SparseCol& v, const GaussianRational& f, const SparseCol& u) {
  SparseCol out;
  out.reserve(v.size() + u.size());
  size_t i = 0, j = 0;
  while (i < v.size() || j < u.size()) {
    if (j == u.size() || (i < v.size() && v[i].first < u[j].first)) {
      out.push_back(v[i++]);
    } else if (i == v.size() || u[j].first < v[i].first) {
      out.emplace_back(u[j].first, -(f * u[j].second));
      ++j;
    } else {
      GaussianRational nv = v[i].second - f * u[j].second;
      if (!nv.is_zero()) out.emplace_back(v[i].first, nv);
      ++i;
      ++j;
    }
  }
  v = std::move(out);
}

}  // namespace

bool ColumnReducer::insert(SparseCol v) {
  while (!v.empty()) {
    int lead = v.front().first;
    auto it = echelon_.find(lead);
    if (it == echelon_.end()) {
      GaussianRational inv = v.front().second.inverse();
      for (auto& [r, val] : v) val *= inv;
      echelon_.emplace(lead, std::move(v));
      return true;
    }
    axpy(v, v.front().second, it->second);
  }
  return false;
}

size_t sparse_rank(const SparseMat& m) {
  ColumnReducer red(m.rows);
  for (const auto& c : m.col)
    if (!c.empty()) red.insert(c);
  return red.rank();
}

}  // namespace ccx
