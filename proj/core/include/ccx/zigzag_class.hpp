#pragma once

#include <string>
#include <vector>

#include "ccx/double_complex.hpp"

namespace ccx {

/// Isomorphism class of an indecomposable zigzag.
///
/// Odd zigzags are labeled S[k; p,q]: the unique nonzero refined Betti
/// number sits at b_k^{p,q}. Dots are the case k = p+q. Even zigzags of
/// length 2r carry a single spectral-sequence differential: S1[r; p,q]
/// has the column-page differential d_r: E_r^{p,q} -> E_r^{p+r,q-r+1},
/// S2[r; p,q] is its transpose partner seen only by the row filtration.
struct ZigzagClass {
  enum class Kind { Odd, EvenCol, EvenRow };
  Kind kind = Kind::Odd;
  int k = 0;  // odd: refined Betti degree; even: page r
  int p = 0, q = 0;

  static ZigzagClass odd(int k, int p, int q) { return {Kind::Odd, k, p, q}; }
  static ZigzagClass dot(int p, int q) { return {Kind::Odd, p + q, p, q}; }
  static ZigzagClass even_col(int r, int p, int q) { return {Kind::EvenCol, r, p, q}; }
  static ZigzagClass even_row(int r, int p, int q) { return {Kind::EvenRow, r, p, q}; }

  bool is_dot() const { return kind == Kind::Odd && k == p + q; }
  bool is_even() const { return kind != Kind::Odd; }
  int length() const;

  /// Does a zigzag with this label exist at all (any grid)?
  bool well_formed() const;

  /// Support bidegrees, sorted.
  std::vector<std::pair<int, int>> support() const;
  bool support_in_grid(int n) const;

  ZigzagClass tau() const;          // conjugation flip
  ZigzagClass sigma(int n) const;   // Serre flip at grade n
  ZigzagClass shifted(int dp, int dq) const;

  std::string str() const;  // S[k; p,q] / S1[r; p,q] / S2[r; p,q]

  friend auto operator<=>(const ZigzagClass&, const ZigzagClass&) = default;
};

/// Minimal double complex with one-dimensional spaces on the support and
/// identity arrows, at grade n.
DoubleComplex zigzag_model(const ZigzagClass& z, int n);

/// sigma/tau-orbit of a class at grade n, deduplicated and sorted.
std::vector<ZigzagClass> sym_orbit(const ZigzagClass& z, int n);

}  // namespace ccx
