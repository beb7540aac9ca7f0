#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ccx/structure_equations.hpp"
#include "ccx/zigzag_ring.hpp"

namespace ccx {

struct UnknownEntry : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Provenance { Paper, Trivial, Derived };
std::string provenance_str(Provenance p);

/// One shipped model. Entries carry either a finite double complex or, when
/// no finite model ships (OT classes), a zigzag class only; operations that
/// need an actual complex must reject class-only entries.
struct CatalogEntry {
  std::string name;
  Provenance provenance = Provenance::Derived;
  std::optional<DoubleComplex> complex;
  std::optional<ZigzagSum> zclass;
  std::string description;

  bool has_complex() const { return complex.has_value(); }
  const DoubleComplex& require_complex() const;
};

/// Stable CLI-visible identifiers: point, cp1, cp2, cpn:<n>, torus:<n>,
/// iwasawa, threefold-N, xn:<m>, hopf, ot:<n>.
CatalogEntry catalog_get(const std::string& name);

/// The concrete small instances the verification suites run over.
std::vector<std::string> catalog_names();

/// Structure-equation text of the parameterized families (exposed so tests
/// and docs can show the exact inputs).
std::string iwasawa_equations();
std::string threefold_N_equations();
std::string xn_equations(int m);
std::string torus_equations(int n);

}  // namespace ccx
