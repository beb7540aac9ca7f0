#pragma once

#include <map>
#include <string>
#include <vector>

#include "ccx/invariants.hpp"
#include "ccx/zigzag_class.hpp"

namespace ccx {

struct ReconstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Formal Z-linear combination of zigzag classes with a dimension grade n.
struct ZigzagSum {
  int n = 0;
  std::map<ZigzagClass, long> mults;  // nonzero entries only

  static ZigzagSum unit() {
    ZigzagSum s;
    s.n = 0;
    s.mults[ZigzagClass::dot(0, 0)] = 1;
    return s;
  }

  void add(const ZigzagClass& z, long m);
  long mult(const ZigzagClass& z) const {
    auto it = mults.find(z);
    return it == mults.end() ? 0 : it->second;
  }
  bool operator==(const ZigzagSum&) const = default;

  ZigzagSum& operator+=(const ZigzagSum& o);
  ZigzagSum& operator-=(const ZigzagSum& o);
  friend ZigzagSum operator+(ZigzagSum a, const ZigzagSum& b) { return a += b; }
  friend ZigzagSum operator-(ZigzagSum a, const ZigzagSum& b) { return a -= b; }

  /// Drop all length-one classes.
  ZigzagSum without_dots() const;
  /// Total multiplicity of even-length classes.
  long even_count() const;

  /// Lines `mult * S[k; p,q] @ n`, sorted canonically.
  std::string str() const;
};

/// Regrade a sum: same classes, new ambient grade (supports must fit).
ZigzagSum regrade(const ZigzagSum& s, int n);

/// Formal sum over the sigma/tau-orbit of z at grade n, multiplicity 1 each.
ZigzagSum sym_class(const ZigzagClass& z, int n);

/// E_1-isomorphism class of a complex: odd multiplicities from the refined
/// Betti numbers, even multiplicities from the column/row page differential
/// ranks. The result is certified by rebuilding the direct sum of the
/// corresponding models and reproducing every invariant table exactly;
/// throws ReconstructionError when the rebuilt tables disagree.
ZigzagSum decompose(const DoubleComplex& a);
ZigzagSum decompose(const DoubleComplex& a, const InvariantReport& rep);

/// Decomposition without the reconstruction gate (used by the gate itself).
ZigzagSum decompose_unchecked(const InvariantReport& rep);

/// Invariant tables of a formal sum: multiplicty-weighted tables of the
/// zigzag models.
InvariantReport report_of_sum(const ZigzagSum& s);

/// Product in the universal ring: bilinear extension of
/// [Z]*[W] = decompose(model(Z) (x) model(W)). Class-pair products are
/// memoized process-wide (concurrent reads, synchronized writes).
ZigzagSum uring_mul(const ZigzagSum& x, const ZigzagSum& y);

struct UformCheck {
  bool ok = true;
  std::vector<std::string> violations;  // subset of {"U1","U2","U3","U4"}
};

/// (U1) bounded support, (U2) orbit-constant multiplicities, (U3) only
/// dots may touch the corners (0,0),(n,0) (and their orbit images),
/// (U4) no even zigzags in grade <= 2.
UformCheck is_in_Uform(const ZigzagSum& x);

struct SymOrbit {
  ZigzagClass rep;  // canonical (smallest) orbit member
  int n = 0;
  std::vector<ZigzagClass> members;
  std::string str() const;
};

/// All admissible orbits at grade n (basis of the degree-n part of the
/// formal universal ring), deterministically ordered.
std::vector<SymOrbit> sym_basis_Uform(int n);

/// Basis of degree n of the quotient by the principal ideal (C),
/// C = Sym of the dot at (1,1) in grade 2. Cross-validated against the
/// exact rank of multiplication by C from degree n-2; throws on mismatch.
std::vector<SymOrbit> quotient_basis_mod_C(int n);

/// Structural blow-up increment: for a center with class z of grade
/// ambient_dim - r (codimension r >= 2), the sum of the (i,i)-shifted
/// copies of z for i = 1..r-1, regraded to ambient_dim.
ZigzagSum blowup_delta(const ZigzagSum& z, int ambient_dim, int codim);

}  // namespace ccx
