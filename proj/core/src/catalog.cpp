#include "ccx/catalog.hpp"

#include <sstream>

namespace ccx {

std::string provenance_str(Provenance p) {
  switch (p) {
    case Provenance::Paper: return "paper";
    case Provenance::Trivial: return "trivial";
    case Provenance::Derived: return "derived";
  }
  return "?";
}

const DoubleComplex& CatalogEntry::require_complex() const {
  if (!complex)
    throw UnknownEntry("catalog entry '" + name + "' ships a zigzag class only, no finite model");
  return *complex;
}

std::string iwasawa_equations() { return "n = 3\nd phi3 = w(1,2)\n"; }

std::string threefold_N_equations() { return "n = 3\nd phi3 = w(1,2) - w(1,-2)\n"; }

std::string xn_equations(int m) {
  std::ostringstream os;
  int n = 2 * m + 1;
  os << "n = " << n << "\n";
  os << "d phi" << n << " =";
  for (int l = 1; l <= m; ++l) os << (l == 1 ? " -" : " - ") << "w(" << 2 * l - 1 << "," << 2 * l << ")";
  for (int l = 1; l <= m; ++l) os << " + i*w(" << 2 * l - 1 << ",-" << 2 * l - 1 << ")";
  os << "\n";
  return os.str();
}

std::string torus_equations(int n) {
  std::ostringstream os;
  os << "n = " << n << "\n";
  return os.str();
}

namespace {

DoubleComplex from_equations(const std::string& text, const std::string& name) {
  StructureEquations s = parse_structure_equations(text);
  s.name = name;
  return build_double_complex(s);
}

DoubleComplex dots_complex(const std::vector<std::pair<int, int>>& dots, int n,
                           const std::string& name) {
  DoubleComplex dc(n);
  for (auto& [p, q] : dots) dc.set_dim(p, q, dc.dim_at(p, q) + 1);
  dc.finalize_shapes();
  dc.geometric = true;
  dc.has_real_structure = true;
  dc.name = name;
  return dc;
}

DoubleComplex cpn_complex(int n) {
  std::vector<std::pair<int, int>> dots;
  for (int p = 0; p <= n; ++p) dots.emplace_back(p, p);
  return dots_complex(dots, n, n == 1 ? "cp1" : (n == 2 ? "cp2" : "cpn:" + std::to_string(n)));
}

/// Explicit small model with the Hopf-surface invariants: dots at (0,0) and
/// (2,2) plus the two length-three zigzags of the Sym orbit of S[1; 0,0].
DoubleComplex hopf_complex() {
  DoubleComplex h = direct_sum(
      direct_sum(zigzag_model(ZigzagClass::dot(0, 0), 2), zigzag_model(ZigzagClass::dot(2, 2), 2)),
      direct_sum(zigzag_model(ZigzagClass::odd(1, 0, 0), 2),
                 zigzag_model(ZigzagClass::odd(3, 2, 2), 2)));
  h.geometric = true;
  h.has_real_structure = true;
  h.name = "hopf";
  return h;
}

ZigzagSum ot_class(int n) {
  // refined Poincare class of an OT manifold of type (n-1, 1):
  // sum of binom(n-1, k) * Sym of S[k; 0,0] over k = 0..n-1
  ZigzagSum s;
  s.n = n;
  mpz_class binom = 1;
  for (int k = 0; k <= n - 1; ++k) {
    if (k > 0) binom = binom * (n - k) / k;
    long b = binom.get_si();
    for (const ZigzagClass& z : sym_orbit(ZigzagClass::odd(k, 0, 0), n)) s.add(z, b);
  }
  return s;
}

}  // namespace

CatalogEntry catalog_get(const std::string& name) {
  CatalogEntry e;
  e.name = name;
  auto param = [&](const std::string& prefix) -> std::optional<int> {
    if (name.rfind(prefix, 0) != 0) return std::nullopt;
    try {
      size_t used = 0;
      int v = std::stoi(name.substr(prefix.size()), &used);
      if (used != name.size() - prefix.size() || v < 0) return std::nullopt;
      return v;
    } catch (...) {
      return std::nullopt;
    }
  };

  if (name == "point") {
    e.provenance = Provenance::Trivial;
    e.complex = point_complex();
    e.description = "single C in bidegree (0,0)";
    return e;
  }
  if (name == "cp1" || name == "cp2") {
    e.provenance = Provenance::Trivial;
    e.complex = cpn_complex(name == "cp1" ? 1 : 2);
    e.description = "complex projective space (diagonal dots)";
    return e;
  }
  if (auto n = param("cpn:")) {
    if (*n < 1) throw UnknownEntry("cpn:<n> needs n >= 1");
    e.provenance = Provenance::Trivial;
    e.complex = cpn_complex(*n);
    e.description = "complex projective space (diagonal dots)";
    return e;
  }
  if (auto n = param("torus:")) {
    if (*n < 1) throw UnknownEntry("torus:<n> needs n >= 1");
    e.provenance = Provenance::Trivial;
    e.complex = from_equations(torus_equations(*n), name);
    e.description = "complex torus: all structure constants zero";
    return e;
  }
  if (name == "iwasawa") {
    e.provenance = Provenance::Paper;
    e.complex = from_equations(iwasawa_equations(), name);
    e.description = "Iwasawa threefold: d phi3 = phi1 ^ phi2";
    return e;
  }
  if (name == "threefold-N") {
    e.provenance = Provenance::Paper;
    e.complex = from_equations(threefold_N_equations(), name);
    e.description = "threefold with d phi3 = phi1^phi2 - phi1^conj(phi2)";
    return e;
  }
  if (auto m = param("xn:")) {
    if (*m < 1) throw UnknownEntry("xn:<m> needs m >= 1");
    e.provenance = Provenance::Paper;
    e.complex = from_equations(xn_equations(*m), name);
    e.description = "odd-dimensional family with a unique holomorphic-antiholomorphic class";
    return e;
  }
  if (name == "hopf") {
    e.provenance = Provenance::Derived;
    e.complex = hopf_complex();
    e.description = "small model with the Hopf-surface invariants";
    return e;
  }
  if (auto n = param("ot:")) {
    if (*n < 2) throw UnknownEntry("ot:<n> needs n >= 2");
    e.provenance = Provenance::Paper;
    e.zclass = ot_class(*n);
    e.description = "class of an Oeljeklaus-Toma manifold of type (n-1,1); no finite model";
    return e;
  }
  throw UnknownEntry("unknown catalog entry '" + name + "'");
}

std::vector<std::string> catalog_names() {
  return {"point",  "cp1",         "cp2",  "cpn:3", "torus:1", "torus:2", "torus:3",
          "iwasawa", "threefold-N", "xn:1", "hopf",  "ot:3",    "ot:4",    "ot:5"};
}

}  // namespace ccx
