#include "ccx/zigzag_ring.hpp"

#include <algorithm>
#include <set>
#include <mutex>
#include <shared_mutex>
#include <sstream>

namespace ccx {

void ZigzagSum::add(const ZigzagClass& z, long m) {
  if (m == 0) return;
  auto [it, inserted] = mults.emplace(z, m);
  if (!inserted) {
    it->second += m;
    if (it->second == 0) mults.erase(it);
  }
}

ZigzagSum& ZigzagSum::operator+=(const ZigzagSum& o) {
  if (o.n != n) throw ComplexError("grade mismatch in zigzag sum");
  for (auto& [z, m] : o.mults) add(z, m);
  return *this;
}

ZigzagSum& ZigzagSum::operator-=(const ZigzagSum& o) {
  if (o.n != n) throw ComplexError("grade mismatch in zigzag sum");
  for (auto& [z, m] : o.mults) add(z, -m);
  return *this;
}

ZigzagSum ZigzagSum::without_dots() const {
  ZigzagSum s;
  s.n = n;
  for (auto& [z, m] : mults)
    if (!z.is_dot()) s.mults.emplace(z, m);
  return s;
}

long ZigzagSum::even_count() const {
  long c = 0;
  for (auto& [z, m] : mults)
    if (z.is_even()) c += m;
  return c;
}

std::string ZigzagSum::str() const {
  std::ostringstream os;
  for (auto& [z, m] : mults) os << m << " * " << z.str() << " @ " << n << "\n";
  return os.str();
}

ZigzagSum regrade(const ZigzagSum& s, int n) {
  ZigzagSum out;
  out.n = n;
  for (auto& [z, m] : s.mults) {
    if (!z.support_in_grid(n))
      throw ComplexError("class " + z.str() + " does not fit grade " + std::to_string(n));
    out.mults.emplace(z, m);
  }
  return out;
}

ZigzagSum sym_class(const ZigzagClass& z, int n) {
  ZigzagSum s;
  s.n = n;
  for (const ZigzagClass& w : sym_orbit(z, n)) s.add(w, 1);
  return s;
}

ZigzagSum decompose_unchecked(const InvariantReport& rep) {
  ZigzagSum s;
  s.n = rep.n;
  for (auto& [key, val] : rep.refined) {
    auto [k, p, q] = key;
    s.add(ZigzagClass::odd(k, p, q), val);
  }
  for (int r = 1; r <= rep.n; ++r)
    for (int p = 0; p <= rep.n; ++p)
      for (int q = 0; q <= rep.n; ++q) {
        int rc = rep.rank_d_col(r, p, q);
        if (rc > 0) s.add(ZigzagClass::even_col(r, p, q), rc);
        int rr = rep.rank_d_row(r, p, q);
        if (rr > 0) s.add(ZigzagClass::even_row(r, p, q), rr);
      }
  return s;
}

InvariantReport report_of_sum(const ZigzagSum& s) {
  DoubleComplex acc(s.n);
  acc.finalize_shapes();
  bool first = true;
  for (auto& [z, m] : s.mults) {
    if (m < 0) throw ComplexError("report_of_sum needs nonnegative multiplicities");
    DoubleComplex model = zigzag_model(z, s.n);
    for (long i = 0; i < m; ++i) {
      if (first) {
        acc = model;
        first = false;
      } else {
        acc = direct_sum(acc, model);
      }
    }
  }
  acc.geometric = false;
  acc.has_real_structure = false;
  return full_report(acc);
}

namespace {

bool reports_equal(const InvariantReport& a, const InvariantReport& b) {
  if (a.n != b.n) return false;
  if (!(a.hodge == b.hodge) || !(a.hodge_row == b.hodge_row)) return false;
  if (!(a.bc == b.bc) || !(a.aeppli == b.aeppli)) return false;
  if (a.betti != b.betti) return false;
  if (a.refined != b.refined) return false;
  for (int r = 1; r <= a.n + 1; ++r)
    for (int p = 0; p <= a.n; ++p)
      for (int q = 0; q <= a.n; ++q) {
        if (a.e_col(r, p, q) != b.e_col(r, p, q)) return false;
        if (a.e_row(r, p, q) != b.e_row(r, p, q)) return false;
        if (a.rank_d_col(r, p, q) != b.rank_d_col(r, p, q)) return false;
        if (a.rank_d_row(r, p, q) != b.rank_d_row(r, p, q)) return false;
      }
  return true;
}

}  // namespace

ZigzagSum decompose(const DoubleComplex& a, const InvariantReport& rep) {
  ZigzagSum s = decompose_unchecked(rep);
  InvariantReport rebuilt = report_of_sum(s);
  if (!reports_equal(rep, rebuilt))
    throw ReconstructionError("zigzag reconstruction gate failed for " +
                              (a.name.empty() ? std::string("complex") : a.name));
  return s;
}

ZigzagSum decompose(const DoubleComplex& a) { return decompose(a, full_report(a)); }

namespace {

std::shared_mutex g_mul_mutex;
std::map<std::pair<ZigzagClass, ZigzagClass>, ZigzagSum> g_mul_memo;

ZigzagSum class_product(const ZigzagClass& z, const ZigzagClass& w) {
  std::pair<ZigzagClass, ZigzagClass> key = std::minmax(z, w);
  {
    std::shared_lock lock(g_mul_mutex);
    auto it = g_mul_memo.find(key);
    if (it != g_mul_memo.end()) return it->second;
  }
  // model each factor at its minimal grade, tensor, decompose
  auto min_grade = [](const ZigzagClass& c) {
    int m = 0;
    for (auto& [p, q] : c.support()) m = std::max({m, p, q});
    return m;
  };
  int na = min_grade(key.first), nb = min_grade(key.second);
  DoubleComplex t = tensor(zigzag_model(key.first, na), zigzag_model(key.second, nb));
  ZigzagSum prod = decompose(t);
  {
    std::unique_lock lock(g_mul_mutex);
    g_mul_memo.emplace(key, prod);
  }
  return prod;
}

}  // namespace

ZigzagSum uring_mul(const ZigzagSum& x, const ZigzagSum& y) {
  ZigzagSum out;
  out.n = x.n + y.n;
  for (auto& [z, mz] : x.mults)
    for (auto& [w, mw] : y.mults) {
      ZigzagSum prod = class_product(z, w);
      for (auto& [c, m] : prod.mults) out.add(c, m * mz * mw);
    }
  // supports must fit the combined grade
  for (auto& [c, m] : out.mults)
    if (!c.support_in_grid(out.n))
      throw ComplexError("product class " + c.str() + " escapes grade " + std::to_string(out.n));
  return out;
}

namespace {

/// (U3): a class other than a dot whose orbit touches a corner is banned.
bool orbit_touches_corner(const ZigzagClass& z, int n) {
  if (z.is_dot()) return false;
  for (const ZigzagClass& w : sym_orbit(z, n))
    for (auto& [p, q] : w.support())
      if ((p == 0 && q == 0) || (p == n && q == 0)) return true;
  return false;
}

}  // namespace

UformCheck is_in_Uform(const ZigzagSum& x) {
  UformCheck c;
  bool u1 = true, u2 = true, u3 = true, u4 = true;
  for (auto& [z, m] : x.mults) {
    if (!z.support_in_grid(x.n)) u1 = false;
    for (const ZigzagClass& w : sym_orbit(z, x.n))
      if (x.mult(w) != m) u2 = false;
    if (orbit_touches_corner(z, x.n) && m != 0) u3 = false;
    if (x.n <= 2 && z.is_even() && m != 0) u4 = false;
  }
  if (!u1) c.violations.push_back("U1");
  if (!u2) c.violations.push_back("U2");
  if (!u3) c.violations.push_back("U3");
  if (!u4) c.violations.push_back("U4");
  c.ok = c.violations.empty();
  return c;
}

std::string SymOrbit::str() const {
  std::ostringstream os;
  os << "Sym(" << rep.str() << ") @ " << n;
  return os.str();
}

std::vector<SymOrbit> sym_basis_Uform(int n) {
  std::vector<ZigzagClass> all;
  // odd classes: S[k; p,q] with 0 <= p,q <= k <= n + min(p,q)
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q)
      for (int k = std::max(p, q); k <= n + std::min(p, q); ++k) {
        ZigzagClass z = ZigzagClass::odd(k, p, q);
        if (z.well_formed() && z.support_in_grid(n)) all.push_back(z);
      }
  // even classes
  if (n > 2)
    for (int r = 1; r <= n; ++r)
      for (int p = 0; p + r <= n; ++p)
        for (int q = r - 1; q <= n; ++q) {
          all.push_back(ZigzagClass::even_col(r, p, q));
          all.push_back(ZigzagClass::even_row(r, q, p));
        }

  std::set<ZigzagClass> seen;
  std::vector<SymOrbit> basis;
  std::sort(all.begin(), all.end());
  for (const ZigzagClass& z : all) {
    if (seen.count(z)) continue;
    auto orbit = sym_orbit(z, n);
    for (const ZigzagClass& w : orbit) seen.insert(w);
    if (orbit_touches_corner(z, n)) continue;
    SymOrbit o;
    o.rep = orbit.front();
    o.n = n;
    o.members = orbit;
    basis.push_back(std::move(o));
  }
  return basis;
}

std::vector<SymOrbit> quotient_basis_mod_C(int n) {
  auto all = sym_basis_Uform(n);
  std::vector<SymOrbit> basis;
  for (const SymOrbit& o : all) {
    bool keep = false;
    for (const ZigzagClass& z : o.members) {
      for (auto& [p, q] : z.support())
        if (p == 0 || q == 0 || p == n || q == n) keep = true;  // (a)
      if (z.length() >= 2) {
        for (auto& [p, q] : z.support()) {
          if (p == 1 && q == 1) keep = true;          // (b)
          if (p == n - 1 && q == 1) keep = true;      // (c)
        }
      }
      if (n == 4 && z == ZigzagClass::even_col(1, 1, 2)) keep = true;  // (d)
    }
    if (keep) basis.push_back(o);
  }

  // cross-check: multiplication by C is injective with image spanned by
  // the complementary orbits, so the counts must tile exactly
  size_t lower = n >= 2 ? sym_basis_Uform(n - 2).size() : 0;
  if (basis.size() + lower != all.size())
    throw InternalCheckError("quotient basis count mismatch at degree " + std::to_string(n));
  if (n >= 2) {
    // the image of *C is the set of (1,1)-shifted lower orbits; verify via
    // the actual ring product that each lands outside the kept basis
    ZigzagSum c2 = sym_class(ZigzagClass::dot(1, 1), 2);
    std::set<ZigzagClass> kept;
    for (const SymOrbit& o : basis)
      for (const ZigzagClass& z : o.members) kept.insert(z);
    for (const SymOrbit& o : sym_basis_Uform(n - 2)) {
      ZigzagSum s;
      s.n = n - 2;
      for (const ZigzagClass& z : o.members) s.add(z, 1);
      ZigzagSum img = uring_mul(s, c2);
      for (auto& [z, m] : img.mults)
        if (kept.count(z))
          throw InternalCheckError("multiplication by C hits the quotient basis at degree " +
                                   std::to_string(n));
    }
  }
  return basis;
}

ZigzagSum blowup_delta(const ZigzagSum& z, int ambient_dim, int codim) {
  if (codim < 2) throw ComplexError("blow-up center must have codimension >= 2");
  if (z.n != ambient_dim - codim)
    throw ComplexError("center grade must be ambient_dim - codim");
  ZigzagSum out;
  out.n = ambient_dim;
  for (int i = 1; i <= codim - 1; ++i)
    for (auto& [c, m] : z.mults) out.add(c.shifted(i, i), m);
  for (auto& [c, m] : out.mults)
    if (!c.support_in_grid(ambient_dim))
      throw ComplexError("blow-up class escapes the ambient grade");
  return out;
}

}  // namespace ccx
