#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ccx/double_complex.hpp"
#include "ccx/forms.hpp"

namespace ccx {

/// Structure equations of a (nilpotent) Lie algebra with complex structure:
/// n generators phi^1..phi^n and their differentials, each a sum of (2,0)
/// and (1,1) wedge terms. The absence of (0,2) terms is integrability.
struct StructureEquations {
  int n = 0;
  std::vector<Form> d_hol;  // d phi^{j+1} for j = 0..n-1
  std::string name;

  /// Lower central series of the underlying complex Lie algebra does not
  /// terminate: the geometric nilpotency hypothesis fails, the double
  /// complex machinery still applies.
  bool non_nilpotent_warning = false;

  Form d_generator_hol(int j) const { return d_hol[size_t(j)]; }
  Form d_generator_ahol(int j) const { return d_hol[size_t(j)].conj(); }

  /// Exterior differential on an arbitrary form by the anti-derivation rule.
  Form d(const Form& f) const;
};

/// Parse the structure-equation DSL:
///   n = <int>
///   d phi<j> = <term> (+|- <term>)*
/// with `#` line comments; term = [<scalar> *] w(<±i>,<±j>).
/// Throws ParseError carrying line/column on malformed input, out-of-range
/// indices, or a (0,2)-type (non-integrable) term.
StructureEquations parse_structure_equations(const std::string& text);

struct DSquaredViolation {
  int generator;     // 1-based phi index
  Form residue;      // the nonzero 3-form d(d phi)
  std::string pretty;
};

/// Extends d by the Leibniz rule and checks d(d phi^j) = 0 for every
/// generator. Returns the first violation, or nullopt when d^2 = 0.
std::optional<DSquaredViolation> validate_d_squared(const StructureEquations& s);

/// Build the finite double complex of left-invariant forms. Requires
/// validate_d_squared to have passed (throws ComplexError otherwise).
DoubleComplex build_double_complex(const StructureEquations& s);

/// Basis of Lambda^{p,q}: all (I, J) multi-index pairs in lexicographic
/// order of index tuples, I before J.
std::vector<FormKey> bigraded_basis(int n, int p, int q);

/// Verifies that the lower central series of the complexified Lie algebra
/// recovered from d terminates. Used for the nilpotency warning flag.
bool lower_central_series_terminates(const StructureEquations& s);

}  // namespace ccx
