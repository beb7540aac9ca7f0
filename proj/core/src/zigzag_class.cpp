#include "ccx/zigzag_class.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ccx {

int ZigzagClass::length() const {
  if (kind != Kind::Odd) return 2 * k;
  return 2 * std::abs(k - p - q) + 1;
}

bool ZigzagClass::well_formed() const {
  if (kind != Kind::Odd) return k >= 1 && p >= 0 && q >= 0;
  if (p < 0 || q < 0) return false;
  if (k >= p + q) return true;            // dot or sources-heavy shape
  return k >= p && k >= q;                // targets-heavy shape needs k >= max(p,q)
}

std::vector<std::pair<int, int>> ZigzagClass::support() const {
  std::vector<std::pair<int, int>> s;
  if (kind == Kind::Odd) {
    if (k >= p + q) {
      // m+1 sources on degree k from (p, k-p) to (k-q, q), m = k-p-q
      int m = k - p - q;
      for (int i = 0; i <= m; ++i) s.emplace_back(p + i, k - p - i);
      for (int i = 1; i <= m; ++i) s.emplace_back(p + i, k - p - i + 1);
    } else {
      // m+1 targets on degree k from (k-q, q) to (p, k-p), m = p+q-k
      int m = p + q - k;
      for (int i = 0; i <= m; ++i) s.emplace_back(k - q + i, q - i);
      for (int i = 0; i < m; ++i) s.emplace_back(k - q + i, q - i - 1);
    }
  } else if (kind == Kind::EvenCol) {
    for (int i = 0; i < k; ++i) {
      s.emplace_back(p + i, q - i);
      s.emplace_back(p + i + 1, q - i);
    }
  } else {
    for (int i = 0; i < k; ++i) {
      s.emplace_back(p - i, q + i);
      s.emplace_back(p - i, q + i + 1);
    }
  }
  std::sort(s.begin(), s.end());
  return s;
}

bool ZigzagClass::support_in_grid(int n) const {
  if (!well_formed()) return false;
  for (auto& [a, b] : support())
    if (a < 0 || b < 0 || a > n || b > n) return false;
  return true;
}

ZigzagClass ZigzagClass::tau() const {
  switch (kind) {
    case Kind::Odd:
      return odd(k, q, p);
    case Kind::EvenCol:
      return even_row(k, q, p);
    case Kind::EvenRow:
      return even_col(k, q, p);
  }
  return *this;
}

ZigzagClass ZigzagClass::sigma(int n) const {
  switch (kind) {
    case Kind::Odd:
      return odd(2 * n - k, n - p, n - q);
    case Kind::EvenCol:
      return even_col(k, n - p - k, n - q + k - 1);
    case Kind::EvenRow:
      return even_row(k, n - p + k - 1, n - q - k);
  }
  return *this;
}

ZigzagClass ZigzagClass::shifted(int dp, int dq) const {
  if (kind == Kind::Odd) return odd(k + dp + dq, p + dp, q + dq);
  return {kind, k, p + dp, q + dq};
}

std::string ZigzagClass::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Odd:
      os << "S[" << k << "; " << p << "," << q << "]";
      break;
    case Kind::EvenCol:
      os << "S1[" << k << "; " << p << "," << q << "]";
      break;
    case Kind::EvenRow:
      os << "S2[" << k << "; " << p << "," << q << "]";
      break;
  }
  return os.str();
}

DoubleComplex zigzag_model(const ZigzagClass& z, int n) {
  if (!z.support_in_grid(n))
    throw ComplexError("zigzag " + z.str() + " does not fit in [0," + std::to_string(n) + "]^2");
  DoubleComplex dc(n);
  auto supp = z.support();
  for (auto& [p, q] : supp) dc.set_dim(p, q, 1);
  dc.finalize_shapes();
  std::set<std::pair<int, int>> in_supp(supp.begin(), supp.end());
  // identity arrows: for each support point, the right / up neighbor arrow
  // present in the staircase. Sources are the points of lower total degree.
  auto deg_lo = [&]() {
    int lo = INT_MAX;
    for (auto& [p, q] : supp) lo = std::min(lo, p + q);
    return lo;
  }();
  for (auto& [p, q] : supp) {
    if (p + q != deg_lo) continue;  // arrows leave sources only
    if (in_supp.count({p + 1, q})) dc.del(p, q).add(0, 0, GaussianRational(1));
    if (in_supp.count({p, q + 1})) dc.delbar(p, q).add(0, 0, GaussianRational(1));
  }
  dc.validate();
  dc.name = z.str();
  return dc;
}

std::vector<ZigzagClass> sym_orbit(const ZigzagClass& z, int n) {
  std::set<ZigzagClass> orbit{z, z.tau(), z.sigma(n), z.tau().sigma(n)};
  return {orbit.begin(), orbit.end()};
}

}  // namespace ccx
