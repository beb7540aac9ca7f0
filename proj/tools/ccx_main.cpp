#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ccx/catalog.hpp"
#include "ccx/report_io.hpp"
#include "ccx/rings.hpp"
#include "ccx/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;

struct ResolvedInput {
  std::optional<ccx::DoubleComplex> complex;
  std::optional<ccx::ZigzagSum> zclass;
  std::string name;
};

ResolvedInput resolve_input(const std::string& spec) {
  ResolvedInput out;
  if (std::filesystem::exists(spec) || spec.ends_with(".ccx")) {
    std::ifstream in(spec);
    if (!in) throw ccx::ParseError("cannot open '" + spec + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    ccx::StructureEquations s = ccx::parse_structure_equations(buf.str());
    s.name = std::filesystem::path(spec).stem().string();
    if (auto v = ccx::validate_d_squared(s))
      throw ccx::ComplexError("structure equations fail d^2 = 0: " + v->pretty);
    if (s.non_nilpotent_warning)
      std::cerr << "warning: lower central series does not terminate; "
                   "the nilmanifold interpretation needs nilpotency\n";
    out.complex = ccx::build_double_complex(s);
    out.name = s.name;
    return out;
  }
  ccx::CatalogEntry e = ccx::catalog_get(spec);
  out.name = e.name;
  if (e.has_complex())
    out.complex = *e.complex;
  else
    out.zclass = e.zclass;
  return out;
}

int cmd_analyze(const std::string& input, bool zigzags, int pages, const std::string& json_path) {
  ResolvedInput in = resolve_input(input);
  ccx::InvariantReport rep;
  std::optional<ccx::ZigzagSum> cls;
  if (in.complex) {
    rep = ccx::full_report(*in.complex);
    if (zigzags) cls = ccx::decompose(*in.complex, rep);
  } else {
    rep = ccx::report_of_sum(*in.zclass);
    rep.name = in.name;
    if (zigzags) cls = in.zclass;
  }
  if (pages > 0) {
    if (size_t(pages) < rep.col_pages.size()) rep.col_pages.resize(size_t(pages));
    if (size_t(pages) < rep.row_pages.size()) rep.row_pages.resize(size_t(pages));
  }
  if (rep.name.empty()) rep.name = in.name;
  std::cout << ccx::report_to_text(rep, cls);
  if (!json_path.empty()) {
    std::ofstream jf(json_path);
    jf << ccx::report_to_json(rep, cls);
  }
  return kExitOk;
}

int cmd_product(const std::string& a_spec, const std::string& b_spec) {
  ResolvedInput ia = resolve_input(a_spec), ib = resolve_input(b_spec);
  if (!ia.complex || !ib.complex)
    throw ccx::UnknownEntry("product needs finite models on both sides");
  const ccx::DoubleComplex &a = *ia.complex, &b = *ib.complex;
  ccx::DoubleComplex t = ccx::tensor(a, b);
  t.name = ia.name + "*" + ib.name;
  ccx::InvariantReport ra = ccx::full_report(a), rb = ccx::full_report(b),
                       rt = ccx::full_report(t);
  std::cout << ccx::report_to_text(rt);

  bool ok = true;
  // factor convolution cross-checks: Betti, Hodge, pages, refined
  for (int k = 0; k <= 2 * t.n; ++k) {
    int s = 0;
    for (int i = 0; i <= k; ++i) s += ra.betti_at(i) * rb.betti_at(k - i);
    if (s != rt.betti_at(k)) ok = false;
  }
  for (int r = 1; r <= t.n + 1; ++r)
    for (int p = 0; p <= t.n; ++p)
      for (int q = 0; q <= t.n; ++q) {
        int s = 0;
        for (int p1 = 0; p1 <= std::min(p, a.n); ++p1)
          for (int q1 = 0; q1 <= std::min(q, a.n); ++q1)
            s += ra.e_col(r, p1, q1) * rb.e_col(r, p - p1, q - q1);
        if (s != rt.e_col(r, p, q)) ok = false;
      }
  std::map<std::tuple<int, int, int>, int> conv;
  for (auto& [ka, va] : ra.refined)
    for (auto& [kb, vb] : rb.refined) {
      auto [k1, p1, q1] = ka;
      auto [k2, p2, q2] = kb;
      conv[{k1 + k2, p1 + p2, q1 + q2}] += va * vb;
    }
  std::erase_if(conv, [](auto& kv) { return kv.second == 0; });
  if (conv != rt.refined) ok = false;
  std::cout << "\nkuenneth-cross-check: " << (ok ? "pass" : "FAIL") << "\n";
  return ok ? kExitOk : kExitMismatch;
}

// ---- identity DSL over named ring elements ----

using SymbolTable = std::map<std::string, ccx::GradedPoly>;

SymbolTable hodge_symbols() {
  using namespace ccx::rings;
  SymbolTable t;
  t["A"] = apply_morphism("phi", gen4("A"));
  t["B"] = apply_morphism("phi", gen4("B"));
  t["C"] = apply_morphism("phi", gen4("C"));
  t["D"] = apply_morphism("phi", gen4("D"));
  t["Q"] = apply_morphism("phi", elem_Q());
  t["R"] = apply_morphism("phi", elem_R());
  t["S"] = apply_morphism("phi", elem_S());
  t["T"] = apply_morphism("phi", elem_T());
  t["d"] = elem_dtil();
  t["e"] = elem_etil();
  t["dtil"] = elem_dtil();
  t["etil"] = elem_etil();
  return t;
}

SymbolTable dr_symbols() {
  using namespace ccx::rings;
  SymbolTable t;
  t["A"] = apply_morphism("psi", gen4("A"));
  t["B"] = apply_morphism("psi", gen4("B"));
  t["C"] = apply_morphism("psi", gen4("C"));
  t["D"] = apply_morphism("psi", gen4("D"));
  t["d"] = elem_d();
  t["e"] = elem_e();
  return t;
}

struct ExprParser {
  const std::string& s;
  size_t pos = 0;
  const SymbolTable& sym;
  ccx::RingId ring;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool accept(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }

  ccx::GradedPoly atom() {
    skip();
    if (accept('(')) {
      ccx::GradedPoly p = sum();
      if (!accept(')')) throw ccx::RingError("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      return ccx::GradedPoly::constant(ring, mpz_class(s.substr(start, pos - start)));
    }
    // longest symbol match
    size_t best = 0;
    for (auto& [name, val] : sym)
      if (s.compare(pos, name.size(), name) == 0 && name.size() > best) best = name.size();
    if (best == 0) throw ccx::RingError("unknown symbol at '" + s.substr(pos, 8) + "'");
    std::string name = s.substr(pos, best);
    pos += best;
    return sym.at(name);
  }

  ccx::GradedPoly power() {
    ccx::GradedPoly b = atom();
    if (accept('^')) {
      skip();
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == start) throw ccx::RingError("expected exponent");
      return b.pow(std::stoi(s.substr(start, pos - start)));
    }
    return b;
  }

  ccx::GradedPoly product() {
    ccx::GradedPoly p = power();
    while (true) {
      skip();
      char c = peek();
      if (c == '*') {
        accept('*');
        p = p * power();
      } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '(') {
        p = p * power();
      } else {
        break;
      }
    }
    return p;
  }

  ccx::GradedPoly sum() {
    ccx::GradedPoly acc(ring);
    int sign = 1;
    if (accept('-'))
      sign = -1;
    else
      accept('+');
    while (true) {
      ccx::GradedPoly t = product();
      acc += sign < 0 ? -t : t;
      skip();
      if (accept('+'))
        sign = 1;
      else if (accept('-'))
        sign = -1;
      else
        break;
    }
    return acc;
  }
};

int cmd_ring_identity(const std::string& check, const std::string& ring_kind) {
  SymbolTable sym = ring_kind == "dr" ? dr_symbols() : hodge_symbols();
  ccx::RingId ring = ring_kind == "dr" ? ccx::RingId::DR : ccx::RingId::HXY;
  size_t eq = check.find('=');
  if (eq == std::string::npos) throw ccx::RingError("identity must contain '='");
  std::string lhs_text = check.substr(0, eq), rhs_text = check.substr(eq + 1);
  ExprParser lp{lhs_text, 0, sym, ring}, rp{rhs_text, 0, sym, ring};
  ccx::GradedPoly lhs = lp.sum(), rhs = rp.sum();
  bool ok = ccx::rings::verify_identity(lhs, rhs);
  std::cout << (ok ? "pass" : "FAIL") << ": " << check << "\n";
  if (!ok) {
    std::cout << "  lhs = " << lhs.str() << "\n";
    std::cout << "  rhs = " << rhs.str() << "\n";
  }
  return ok ? kExitOk : kExitMismatch;
}

ccx::rings::SubringSpec spec_from_name(const std::string& name) {
  using ccx::rings::SubringSpec;
  if (name == "hform") return SubringSpec::Hform;
  if (name == "drform") return SubringSpec::DRform;
  if (name == "hdrform") return SubringSpec::HDRform;
  if (name == "rbprime") return SubringSpec::RBprime;
  if (name == "rbform") return SubringSpec::RBform;
  throw ccx::RingError("unknown subring '" + name + "' (hform/drform/hdrform/rbprime/rbform)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cohomological invariants of finite double complexes"};
  app.require_subcommand(1);

  // analyze
  std::string an_input, an_json;
  bool an_zigzags = false;
  int an_pages = 0;
  auto* analyze = app.add_subcommand("analyze", "invariant report for a catalog entry or .ccx file");
  analyze->add_option("input", an_input, "catalog name or structure-equation file")->required();
  analyze->add_flag("--zigzags", an_zigzags, "include the zigzag decomposition");
  analyze->add_option("--pages", an_pages, "print spectral-sequence pages up to this page");
  analyze->add_option("--json", an_json, "also write the report as JSON to this path");

  // product
  std::string pr_a, pr_b;
  auto* product = app.add_subcommand("product", "tensor-product analysis with Kuenneth cross-check");
  product->add_option("a", pr_a)->required();
  product->add_option("b", pr_b)->required();

  // ring
  auto* ring = app.add_subcommand("ring", "graded-ring computations");
  ring->require_subcommand(1);

  std::string rk_spec;
  int rk_degree = 0;
  auto* rrank = ring->add_subcommand("rank", "rank of a formal subring slice");
  rrank->add_option("spec", rk_spec, "hform|drform|rbprime|rbform|uform")->required();
  rrank->add_option("--degree", rk_degree)->required();

  std::string rb_spec;
  int rb_degree = 0;
  auto* rbasis = ring->add_subcommand("basis", "deterministic basis of a formal subring slice");
  rbasis->add_option("spec", rb_spec, "hform|drform|hdrform|rbprime|rbform|uform")->required();
  rbasis->add_option("--degree", rb_degree)->required();

  std::string mb_gens, mb_target, mb_spec;
  bool mb_rational = false;
  auto* rmember = ring->add_subcommand("member", "membership certificate / refusal");
  rmember->add_option("--gens", mb_gens, "generator set: phi-ABCD or Phi-ABCLM");
  rmember->add_option("--spec", mb_spec, "formal subring: hform|drform|rbprime|rbform");
  rmember->add_option("--target", mb_target, "polynomial literal in the matching ring")->required();
  rmember->add_flag("--rational", mb_rational, "solve over Q instead of Z");

  std::string id_check, id_ring = "h";
  auto* rident = ring->add_subcommand("identity", "check a named-element identity");
  rident->add_option("--check", id_check, "e.g. R=2e-Bd")->required();
  rident->add_option("--ring", id_ring, "h (Hodge, default) or dr");

  std::string pm_name;
  int pm_degree = 0;
  auto* rpres = ring->add_subcommand("presentation", "degreewise kernel certification");
  rpres->add_option("morphism", pm_name, "phi|psi|Phi")->required();
  rpres->add_option("--degree", pm_degree)->required();

  int bb_degree = 0;
  auto* rbim = ring->add_subcommand("bimero-basis", "basis of the bimeromorphic quotient");
  rbim->add_option("--degree", bb_degree)->required();

  int qc_degree = 0;
  auto* rquot = ring->add_subcommand("quotient-mod-C", "orbit basis of the quotient by (C)");
  rquot->add_option("--degree", qc_degree)->required();

  // verify
  std::string vf_suite;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", vf_suite, "suite id or 'all'")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kExitInput : kExitOk;
  }

  try {
    if (*analyze) return cmd_analyze(an_input, an_zigzags, an_pages, an_json);
    if (*product) return cmd_product(pr_a, pr_b);
    if (*rrank) {
      if (rk_spec == "uform")
        std::cout << ccx::sym_basis_Uform(rk_degree).size() << "\n";
      else
        std::cout << ccx::rings::formal_basis(spec_from_name(rk_spec), rk_degree).size() << "\n";
      return kExitOk;
    }
    if (*rbasis) {
      if (rb_spec == "uform") {
        for (const auto& o : ccx::sym_basis_Uform(rb_degree)) std::cout << o.str() << "\n";
      } else if (rb_spec == "hdrform") {
        for (const auto& [a, b] : ccx::rings::hdrform_basis(rb_degree))
          std::cout << "(" << a.str() << " ; " << b.str() << ")\n";
      } else {
        for (const auto& p : ccx::rings::formal_basis(spec_from_name(rb_spec), rb_degree))
          std::cout << p.str() << "\n";
      }
      return kExitOk;
    }
    if (*rmember) {
      using namespace ccx::rings;
      Membership res;
      if (!mb_gens.empty()) {
        std::vector<std::pair<std::string, ccx::GradedPoly>> gens;
        ccx::RingId ring_id;
        if (mb_gens == "phi-ABCD") {
          ring_id = ccx::RingId::HXY;
          for (const char* g : {"A", "B", "C", "D"})
            gens.emplace_back(g, apply_morphism("phi", gen4(g)));
        } else if (mb_gens == "Phi-ABCLM") {
          ring_id = ccx::RingId::RB;
          for (const char* g : {"A", "B", "C", "L", "M"})
            gens.emplace_back(g, apply_morphism("Phi", gen5(g)));
        } else {
          throw ccx::RingError("unknown generator set '" + mb_gens + "'");
        }
        res = membership_in_generated(gens, ccx::GradedPoly::parse(ring_id, mb_target),
                                      mb_rational);
      } else if (!mb_spec.empty()) {
        auto spec = spec_from_name(mb_spec);
        ccx::RingId ring_id = spec == SubringSpec::DRform
                                  ? ccx::RingId::DR
                                  : (spec == SubringSpec::Hform ? ccx::RingId::HXY : ccx::RingId::RB);
        ccx::GradedPoly target = ccx::GradedPoly::parse(ring_id, mb_target);
        res = membership_in_spec(spec, target, target.degree());
      } else {
        throw ccx::RingError("member needs --gens or --spec");
      }
      if (res.member)
        std::cout << "member: = " << res.certificate << "\n";
      else
        std::cout << "not a member: " << res.refusal << "\n";
      return res.member ? kExitOk : kExitMismatch;
    }
    if (*rident) return cmd_ring_identity(id_check, id_ring);
    if (*rpres) {
      std::vector<ccx::GradedPoly> rels;
      if (pm_name == "phi")
        rels = {ccx::rings::elem_G()};
      else if (pm_name == "psi")
        rels = ccx::rings::ideal_J();
      else if (pm_name == "Phi")
        rels = {ccx::rings::rb_quartic()};
      else
        throw ccx::RingError("morphism must be phi, psi or Phi");
      auto rep = ccx::rings::verify_presentation(pm_name, rels, pm_degree);
      std::cout << (rep.ok ? "pass" : "FAIL") << ": " << pm_name << " degree " << rep.degree
                << " source " << rep.source_rank << " ideal " << rep.ideal_rank << " target "
                << rep.target_rank << " (" << rep.detail << ")\n";
      return rep.ok ? kExitOk : kExitMismatch;
    }
    if (*rbim) {
      for (const auto& p : ccx::rings::bimero_basis(bb_degree)) std::cout << p.str() << "\n";
      std::cout << (ccx::rings::bimero_kernel_rank_check(bb_degree) ? "pass" : "FAIL")
                << ": ker p = (C) rank certificate\n";
      return ccx::rings::bimero_kernel_rank_check(bb_degree) ? kExitOk : kExitMismatch;
    }
    if (*rquot) {
      auto basis = ccx::quotient_basis_mod_C(qc_degree);
      auto all = ccx::sym_basis_Uform(qc_degree);
      for (const auto& o : basis) std::cout << o.str() << "\n";
      std::cout << "# excluded:\n";
      for (const auto& o : all) {
        bool kept = false;
        for (const auto& b : basis)
          if (b.rep == o.rep) kept = true;
        if (!kept) std::cout << "# " << o.str() << "\n";
      }
      return kExitOk;
    }
    if (*verify) {
      std::vector<ccx::SuiteResult> results;
      if (vf_suite == "all")
        results = ccx::run_all();
      else
        results.push_back(ccx::run_suite(vf_suite));
      bool ok = true;
      for (const auto& r : results) {
        std::cout << ccx::format_suite(r);
        ok = ok && r.pass();
      }
      return ok ? kExitOk : kExitMismatch;
    }
  } catch (const ccx::ParseError& e) {
    std::cerr << "input error: " << e.what();
    if (e.line) std::cerr << " (line " << e.line << ", column " << e.column << ")";
    std::cerr << "\n";
    return kExitInput;
  } catch (const ccx::UnknownEntry& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ccx::RingError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitInput;
}
