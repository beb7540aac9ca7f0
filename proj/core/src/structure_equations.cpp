#include "ccx/structure_equations.hpp"

#include <algorithm>
#include <sstream>

#include "ccx/subspace.hpp"

namespace ccx {

namespace {

struct SignedTerm {
  int sign;
  std::string text;
  int line, col;
};

// split "t1 + t2 - t3" at top-level +/- (outside any parentheses)
std::vector<SignedTerm> split_terms(const std::string& rhs, int line, int col0) {
  std::vector<SignedTerm> out;
  int depth = 0;
  int sign = 1;
  std::string cur;
  int curcol = col0;
  auto flush = [&](int nextsign) {
    std::string t = cur;
    size_t a = t.find_first_not_of(" \t");
    if (a == std::string::npos) throw ParseError("empty term", line, curcol);
    out.push_back({sign, t, line, curcol});
    cur.clear();
    sign = nextsign;
  };
  for (size_t i = 0; i < rhs.size(); ++i) {
    char c = rhs[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && (c == '+' || c == '-')) {
      if (cur.find_first_not_of(" \t") == std::string::npos && out.empty()) {
        // leading sign
        sign = (c == '-') ? -1 : 1;
        curcol = col0 + int(i) + 1;
        continue;
      }
      flush(c == '-' ? -1 : 1);
      curcol = col0 + int(i) + 1;
      continue;
    }
    cur += c;
  }
  if (cur.find_first_not_of(" \t") == std::string::npos)
    throw ParseError("trailing operator in equation", line, col0 + int(rhs.size()));
  out.push_back({sign, cur, line, curcol});
  return out;
}

struct WedgeTerm {
  GaussianRational coeff;
  int a, b;  // signed generator indices
};

WedgeTerm parse_term(const SignedTerm& st, int n) {
  const std::string& t = st.text;
  size_t wpos = std::string::npos;
  int depth = 0;
  for (size_t i = 0; i + 1 < t.size(); ++i) {
    if (t[i] == '(') ++depth;
    if (t[i] == ')') --depth;
    if (depth == 0 && t[i] == 'w' && t[i + 1] == '(') {
      wpos = i;
      break;
    }
  }
  if (wpos == std::string::npos)
    throw ParseError("expected wedge term w(a,b)", st.line, st.col);

  GaussianRational coeff(1);
  std::string pre = t.substr(0, wpos);
  size_t last = pre.find_last_not_of(" \t");
  if (last != std::string::npos) {
    if (pre[last] != '*')
      throw ParseError("expected '*' between scalar and w(...)", st.line, st.col + int(last));
    std::string scalar = pre.substr(0, last);
    size_t a = scalar.find_first_not_of(" \t");
    size_t b = scalar.find_last_not_of(" \t");
    if (a == std::string::npos) throw ParseError("empty scalar", st.line, st.col);
    scalar = scalar.substr(a, b - a + 1);
    if (scalar.size() >= 2 && scalar.front() == '(' && scalar.back() == ')')
      scalar = scalar.substr(1, scalar.size() - 2);
    try {
      coeff = GaussianRational::parse(scalar);
    } catch (const ParseError& e) {
      throw ParseError(std::string("bad scalar '") + scalar + "': " + e.what(), st.line, st.col);
    }
  }
  if (st.sign < 0) coeff = -coeff;

  std::istringstream in(t.substr(wpos));
  char w, lp, comma, rp;
  int a, b;
  in >> w >> lp >> a >> comma >> b >> rp;
  if (!in || w != 'w' || lp != '(' || comma != ',' || rp != ')')
    throw ParseError("malformed wedge term, expected w(<±i>,<±j>)", st.line, st.col);
  std::string rest;
  in >> rest;
  if (!rest.empty()) throw ParseError("unexpected trailing text '" + rest + "'", st.line, st.col);
  if (a == 0 || b == 0 || std::abs(a) > n || std::abs(b) > n)
    throw ParseError("generator index out of range 1..n", st.line, st.col);
  if (a < 0 && b < 0)
    throw ParseError("term w(" + std::to_string(a) + "," + std::to_string(b) +
                         ") has type (0,2): structure is not integrable",
                     st.line, st.col);
  return {coeff, a, b};
}

}  // namespace

StructureEquations parse_structure_equations(const std::string& text) {
  StructureEquations s;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool have_n = false;
  std::vector<bool> defined;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    size_t b = line.find_last_not_of(" \t\r");
    line = line.substr(a, b - a + 1);

    size_t eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected '=' in statement", lineno, 1);
    std::string lhs = line.substr(0, eq);
    std::string rhs = line.substr(eq + 1);
    std::istringstream lin(lhs);
    std::string tok;
    lin >> tok;

    if (tok == "n") {
      std::string extra;
      if (lin >> extra) throw ParseError("malformed declaration of n", lineno, 1);
      if (have_n) throw ParseError("duplicate declaration of n", lineno, 1);
      std::istringstream rin(rhs);
      if (!(rin >> s.n) || s.n < 1 || s.n > 31)
        throw ParseError("n must be an integer in 1..31", lineno, int(eq) + 2);
      std::string rest;
      if (rin >> rest) throw ParseError("unexpected text after n", lineno, int(eq) + 2);
      have_n = true;
      s.d_hol.assign(size_t(s.n), Form());
      defined.assign(size_t(s.n), false);
      continue;
    }

    if (tok != "d") throw ParseError("expected 'n = ...' or 'd phi<j> = ...'", lineno, 1);
    if (!have_n) throw ParseError("n must be declared before equations", lineno, 1);
    std::string gen;
    lin >> gen;
    std::string extra;
    if (lin >> extra) throw ParseError("malformed left-hand side", lineno, 1);
    if (gen.rfind("phi", 0) != 0)
      throw ParseError("expected generator phi<j> on left-hand side", lineno, 3);
    int j = 0;
    try {
      size_t used = 0;
      j = std::stoi(gen.substr(3), &used);
      if (used != gen.size() - 3) throw std::invalid_argument("");
    } catch (...) {
      throw ParseError("bad generator name '" + gen + "'", lineno, 3);
    }
    if (j < 1 || j > s.n) throw ParseError("generator index out of range 1..n", lineno, 3);
    if (defined[size_t(j - 1)])
      throw ParseError("duplicate equation for phi" + std::to_string(j), lineno, 1);
    defined[size_t(j - 1)] = true;

    Form f;
    for (const SignedTerm& st : split_terms(rhs, lineno, int(eq) + 2)) {
      WedgeTerm wt = parse_term(st, s.n);
      int x = wt.a, y = wt.b;
      GaussianRational c = wt.coeff;
      if (x == y) continue;  // phi ^ phi = 0
      FormKey k;
      if (x > 0 && y > 0) {
        if (x > y) {
          std::swap(x, y);
          c = -c;
        }
        k.hol = (1u << x) | (1u << y);
      } else {
        if (x < 0) {  // w(-b, a) = -w(a, -b)
          std::swap(x, y);
          c = -c;
        }
        k.hol = 1u << x;
        k.ahol = 1u << (-y);
      }
      f.add(k, c);
    }
    s.d_hol[size_t(j - 1)] = f;
  }
  if (!have_n) throw ParseError("missing declaration 'n = <int>'", lineno, 1);
  s.non_nilpotent_warning = !lower_central_series_terminates(s);
  return s;
}

Form StructureEquations::d(const Form& f) const {
  Form out;
  for (const auto& [key, c] : f.terms()) {
    int p = popcount(key.hol);
    int pos = 0;
    for (int j = 1; j <= n; ++j) {
      if (!(key.hol & (1u << j))) continue;
      ++pos;  // 1-based position of phi^j in the monomial
      GaussianRational sgn = (pos - 1) % 2 ? -c : c;
      Form rest = Form::monomial(FormKey{key.hol & ~(1u << j), key.ahol});
      out += wedge(d_generator_hol(j - 1), rest) * sgn;
    }
    pos = 0;
    for (int j = 1; j <= n; ++j) {
      if (!(key.ahol & (1u << j))) continue;
      ++pos;
      GaussianRational sgn = (p + pos - 1) % 2 ? -c : c;
      Form rest = Form::monomial(FormKey{key.hol, key.ahol & ~(1u << j)});
      out += wedge(d_generator_ahol(j - 1), rest) * sgn;
    }
  }
  return out;
}

std::optional<DSquaredViolation> validate_d_squared(const StructureEquations& s) {
  for (int j = 1; j <= s.n; ++j) {
    Form dd = s.d(s.d_generator_hol(j - 1));
    if (!dd.is_zero()) {
      DSquaredViolation v;
      v.generator = j;
      v.residue = dd;
      v.pretty = "d^2 phi" + std::to_string(j) + " = " + dd.str(s.n);
      return v;
    }
  }
  return std::nullopt;
}

std::vector<FormKey> bigraded_basis(int n, int p, int q) {
  auto combos = [n](int k) {
    std::vector<uint32_t> out;
    if (k < 0 || k > n) return out;
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[size_t(i)] = i + 1;
    while (true) {
      uint32_t m = 0;
      for (int v : idx) m |= 1u << v;
      out.push_back(m);
      int i = k - 1;
      while (i >= 0 && idx[size_t(i)] == n - (k - 1 - i)) --i;
      if (i < 0) break;
      ++idx[size_t(i)];
      for (int j2 = i + 1; j2 < k; ++j2) idx[size_t(j2)] = idx[size_t(j2 - 1)] + 1;
    }
    return out;
  };
  std::vector<FormKey> basis;
  for (uint32_t I : combos(p))
    for (uint32_t J : combos(q)) basis.push_back(FormKey{I, J});
  return basis;
}

DoubleComplex build_double_complex(const StructureEquations& s) {
  if (auto v = validate_d_squared(s))
    throw ComplexError("d^2 != 0: " + v->pretty);

  DoubleComplex dc(s.n);
  dc.geometric = true;
  dc.has_real_structure = true;
  dc.name = s.name;
  std::vector<std::vector<std::vector<FormKey>>> bases(size_t(s.n + 1));
  std::vector<std::vector<std::map<FormKey, int>>> index(size_t(s.n + 1));
  for (int p = 0; p <= s.n; ++p) {
    bases[size_t(p)].resize(size_t(s.n + 1));
    index[size_t(p)].resize(size_t(s.n + 1));
    for (int q = 0; q <= s.n; ++q) {
      auto b = bigraded_basis(s.n, p, q);
      for (size_t i = 0; i < b.size(); ++i) index[size_t(p)][size_t(q)][b[i]] = int(i);
      bases[size_t(p)][size_t(q)] = std::move(b);
      dc.set_dim(p, q, int(bases[size_t(p)][size_t(q)].size()));
    }
  }
  dc.finalize_shapes();

  for (int p = 0; p <= s.n; ++p)
    for (int q = 0; q <= s.n; ++q) {
      const auto& basis = bases[size_t(p)][size_t(q)];
      for (size_t c = 0; c < basis.size(); ++c) {
        Form df = s.d(Form::monomial(basis[c]));
        for (const auto& [k, v] : df.terms()) {
          int kp = popcount(k.hol), kq = popcount(k.ahol);
          if (kp == p + 1 && kq == q) {
            dc.del(p, q).add(index[size_t(kp)][size_t(kq)].at(k), int(c), v);
          } else if (kp == p && kq == q + 1) {
            dc.delbar(p, q).add(index[size_t(kp)][size_t(kq)].at(k), int(c), v);
          } else {
            throw ComplexError("differential left bidegrees (p+1,q),(p,q+1)");
          }
        }
      }
    }
  dc.validate();
  return dc;
}

bool lower_central_series_terminates(const StructureEquations& s) {
  // generators e_0..e_{2n-1} dual to phi^1..phi^n, phibar^1..phibar^n
  int m = 2 * s.n;
  auto gen_bit = [&](int g) -> std::pair<uint32_t, uint32_t> {
    if (g < s.n) return {1u << (g + 1), 0u};
    return {0u, 1u << (g - s.n + 1)};
  };
  // bracket of basis vectors: [e_x, e_y] = -sum_k <d(gen_k), e_x ^ e_y> gen_k^dual
  auto bracket = [&](int x, int y) {
    std::vector<GaussianRational> v(static_cast<size_t>(m));
    auto [hx, ax] = gen_bit(x);
    auto [hy, ay] = gen_bit(y);
    FormKey pair{hx | hy, ax | ay};
    // evaluation of the canonical monomial on (e_x, e_y): +1 if (x,y) is in
    // canonical order, -1 otherwise
    bool canonical = x < y;
    for (int k = 0; k < m; ++k) {
      Form dk = k < s.n ? s.d_generator_hol(k) : s.d_generator_ahol(k - s.n);
      auto it = dk.terms().find(pair);
      if (it == dk.terms().end()) continue;
      GaussianRational c = it->second;
      v[size_t(k)] = canonical ? -c : c;
    }
    return v;
  };

  // V_1 = [g, g], V_{i+1} = [g, V_i]
  std::vector<std::vector<GaussianRational>> gens;
  for (int x = 0; x < m; ++x)
    for (int y = x + 1; y < m; ++y) gens.push_back(bracket(x, y));
  auto to_subspace = [&](const std::vector<std::vector<GaussianRational>>& vs) {
    Matrix mat(vs.size(), size_t(m));
    for (size_t r = 0; r < vs.size(); ++r)
      for (int c = 0; c < m; ++c) mat.at(r, size_t(c)) = vs[r][size_t(c)];
    return Subspace::span_rows(mat);
  };
  Subspace v = to_subspace(gens);
  for (int iter = 0; iter < m + 1; ++iter) {
    if (v.dim() == 0) return true;
    // [g, V]: brackets of generators with V-basis vectors expand bilinearly
    std::vector<std::vector<GaussianRational>> next;
    const Matrix& basis = v.basis_rows();
    for (int x = 0; x < m; ++x)
      for (size_t r = 0; r < basis.rows(); ++r) {
        std::vector<GaussianRational> acc(static_cast<size_t>(m));
        for (int y = 0; y < m; ++y) {
          if (basis.at(r, size_t(y)).is_zero() || x == y) continue;
          auto br = bracket(std::min(x, y), std::max(x, y));
          GaussianRational f = basis.at(r, size_t(y));
          if (x > y) f = -f;
          for (int k = 0; k < m; ++k) acc[size_t(k)] += br[size_t(k)] * f;
        }
        next.push_back(std::move(acc));
      }
    Subspace w = to_subspace(next);
    if (w.dim() == v.dim() && v.contains(w)) return false;  // stalled, nonzero
    v = w;
  }
  return v.dim() == 0;
}

}  // namespace ccx
