#pragma once

#include "ccx/intlinalg.hpp"
#include "ccx/invariants.hpp"
#include "ccx/poly.hpp"

namespace ccx {
namespace rings {

// ---- morphisms ----
// phi:  Z[A,B,C,D] -> Z[x,y,z]      A->(1+xy)z, B->(x+y)z, C->xyz^2, D->(x+xy^2)z^2
// psi:  Z[A,B,C,D] -> Z[t,z]        the de Rham specialization, psi = s.phi
// Phi:  Z[A,B,C,L,M] -> Z[x,y,h,z]  refined Betti images
// s:    Z[x,y,z] -> Z[t,z]          x,y -> t
// p_mod_xy: Z[x,y,z] -> Z[x,y,z]    kill monomials divisible by xy
// chi, chi_star, sigma, h00 on Z[x,y,z]; chi, b0 on Z[t,z]
GradedPoly apply_morphism(const std::string& name, const GradedPoly& x);

/// Frolicher defect FD(h, dR) = s(h) - dR.
GradedPoly frolicher_defect(const GradedPoly& h, const GradedPoly& dR);

// ---- named elements ----
GradedPoly gen4(const std::string& v);           // A,B,C,D
GradedPoly gen5(const std::string& v);           // A,B,C,L,M
GradedPoly elem_G();                             // D^2 - ABD + C(A^2+B^2-4C)
std::vector<GradedPoly> ideal_J();               // A^2C-D^2, AB-2D, B^2-4C, BD-2AC
GradedPoly elem_Q();                             // A^2C - D^2
GradedPoly elem_R();                             // BD - 2AC
GradedPoly elem_S();                             // B^2 - 4C
GradedPoly elem_T();                             // AB - 2D
GradedPoly elem_dtil();                          // (x+2xy+xy^2)z^2
GradedPoly elem_etil();                          // (x^2+x^2y+xy^2+xy^3)z^3
GradedPoly elem_d();                             // (t+2t^2+t^3)z^2
GradedPoly elem_e();                             // (t^2+2t^3+t^4)z^3
GradedPoly rb_quartic();                         // AML - L^2 - CM^2 - CA^2 + 4C^2

/// Symmetrized monomial Sym_k^{p,q}(n) in Z[x,y,h,z]: the orbit sum of
/// x^p y^q h^k z^n under (p,q)->(q,p) and (p,q,k)->(n-p,n-q,2n-k).
GradedPoly sym_kpq(int k, int p, int q, int n);
GradedPoly elem_Ln(int n);  // Sym_{n-1}^{0,0}(n)
GradedPoly elem_Mn(int n);  // Sym_{n-1}^{n-1,n-1}(n)

enum class SubringSpec { Hform, DRform, HDRform, RBprime, RBform };

/// Deterministic basis of the degree-n slice. HDRform lives in a product;
/// use hdrform_basis for it.
std::vector<GradedPoly> formal_basis(SubringSpec spec, int n);
std::vector<std::pair<GradedPoly, GradedPoly>> hdrform_basis(int n);

long rbprime_rank_formula(int n);  // floor((2n^3+9n^2+16n+12)/12)

// ---- membership ----
struct Membership {
  bool member = false;
  std::string certificate;  // explicit integer combination when member
  std::string refusal;      // obstruction otherwise
};

/// Is `target` an integer (or rational) combination of the degree-matched
/// products of `gens`? Generators are (name, homogeneous element) pairs in
/// the target's ring.
Membership membership_in_generated(const std::vector<std::pair<std::string, GradedPoly>>& gens,
                                   const GradedPoly& target, bool rational = false);

/// Is `target` in the degree-n slice of the formal subring? Refusals name
/// the violated defining condition.
Membership membership_in_spec(SubringSpec spec, const GradedPoly& target, int n);

// ---- theorem verification ----
struct PresentationReport {
  bool ok = false;
  int degree = 0;
  std::string morphism;
  long source_rank = 0, ideal_rank = 0, target_rank = 0;
  std::string detail;
};

/// Degreewise check that `relations` generate the kernel of the named
/// morphism: relations map to zero, rank(source_n) - rank(ideal_n) equals
/// the formal target rank, and the formal basis has integer preimages.
PresentationReport verify_presentation(const std::string& morphism,
                                       const std::vector<GradedPoly>& relations, int degree);

bool verify_identity(const GradedPoly& lhs, const GradedPoly& rhs);

struct GeneratorsReport {
  bool ok = true;
  std::vector<std::string> lines;
};

/// Degreewise verification that A, B, C, L, Sym_2^{2,1}(3), Sym_3^{1,1}(3)
/// and the L_m, M_m generate RBform up to degree n_max, and that L_n, M_n
/// are not generated in degrees < n.
GeneratorsReport rbform_generators_check(int n_max);

/// The 2n monomials z^n, xz^n, yz^n, ..., (x^n+y^n)z^n of the bimeromorphic
/// quotient; degreewise rank certificate for ker p = (C) included.
std::vector<GradedPoly> bimero_basis(int n);
bool bimero_kernel_rank_check(int n);

struct ManifoldPolys {
  GradedPoly h;                    // Hodge polynomial in Z[x,y,z]
  GradedPoly dR;                   // Poincare polynomial in Z[t,z]
  GradedPoly rb;                   // refined Betti polynomial in Z[x,y,h,z]
  std::vector<GradedPoly> pages;   // r-th Frolicher polynomials, r = 1..n+1
};

/// Bridge from the engine: polynomials of a report, checked against the
/// HDRform membership conditions and the page relations (connected
/// components, Euler characteristics, stable corners, late degeneration).
/// Throws InternalCheckError on violation; call on geometric reports.
ManifoldPolys manifold_polynomials(const InvariantReport& rep);

}  // namespace rings
}  // namespace ccx
