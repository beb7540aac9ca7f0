#include "ccx/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ccx {

namespace {

const std::vector<std::string> kVarsHXY{"x", "y", "z"};
const std::vector<std::string> kVarsDR{"t", "z"};
const std::vector<std::string> kVarsRB{"x", "y", "h", "z"};
const std::vector<std::string> kVarsG4{"A", "B", "C", "D"};
const std::vector<std::string> kVarsG5{"A", "B", "C", "L", "M"};

const std::vector<int> kWHXY{0, 0, 1};
const std::vector<int> kWDR{0, 1};
const std::vector<int> kWRB{0, 0, 0, 1};
const std::vector<int> kWG4{1, 1, 2, 2};
const std::vector<int> kWG5{1, 1, 2, 2, 1};

}  // namespace

const std::vector<std::string>& ring_vars(RingId r) {
  switch (r) {
    case RingId::HXY: return kVarsHXY;
    case RingId::DR: return kVarsDR;
    case RingId::RB: return kVarsRB;
    case RingId::GEN4: return kVarsG4;
    case RingId::GEN5: return kVarsG5;
  }
  throw RingError("unknown ring");
}

const std::vector<int>& ring_weights(RingId r) {
  switch (r) {
    case RingId::HXY: return kWHXY;
    case RingId::DR: return kWDR;
    case RingId::RB: return kWRB;
    case RingId::GEN4: return kWG4;
    case RingId::GEN5: return kWG5;
  }
  throw RingError("unknown ring");
}

std::string ring_name(RingId r) {
  switch (r) {
    case RingId::HXY: return "Z[x,y,z]";
    case RingId::DR: return "Z[t,z]";
    case RingId::RB: return "Z[x,y,h,z]";
    case RingId::GEN4: return "Z[A,B,C,D]";
    case RingId::GEN5: return "Z[A,B,C,L,M]";
  }
  return "?";
}

GradedPoly GradedPoly::constant(RingId r, const mpz_class& c) {
  GradedPoly p(r);
  p.add_term(std::vector<int>(ring_vars(r).size(), 0), c);
  return p;
}

GradedPoly GradedPoly::var(RingId r, const std::string& name, int exp) {
  const auto& vars = ring_vars(r);
  for (size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) {
      std::vector<int> e(vars.size(), 0);
      e[i] = exp;
      return monomial(r, e);
    }
  throw RingError("no variable '" + name + "' in " + ring_name(r));
}

GradedPoly GradedPoly::monomial(RingId r, const std::vector<int>& exps, const mpz_class& c) {
  GradedPoly p(r);
  p.add_term(exps, c);
  return p;
}

mpz_class GradedPoly::coeff(const std::vector<int>& exps) const {
  auto it = coeffs_.find(exps);
  return it == coeffs_.end() ? mpz_class(0) : it->second;
}

void GradedPoly::add_term(const std::vector<int>& exps, const mpz_class& c) {
  if (exps.size() != ring_vars(ring_).size()) throw RingError("bad exponent vector length");
  if (c == 0) return;
  auto [it, inserted] = coeffs_.emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

GradedPoly GradedPoly::operator-() const {
  GradedPoly p(ring_);
  for (auto& [e, c] : coeffs_) p.coeffs_.emplace(e, -c);
  return p;
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) {
  if (o.ring_ != ring_) throw RingError("ring mismatch in sum");
  for (auto& [e, c] : o.coeffs_) add_term(e, c);
  return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& o) {
  if (o.ring_ != ring_) throw RingError("ring mismatch in difference");
  for (auto& [e, c] : o.coeffs_) add_term(e, -c);
  return *this;
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
  if (a.ring_ != b.ring_) throw RingError("ring mismatch in product");
  GradedPoly p(a.ring_);
  for (auto& [ea, ca] : a.coeffs_)
    for (auto& [eb, cb] : b.coeffs_) {
      std::vector<int> e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      p.add_term(e, ca * cb);
    }
  return p;
}

GradedPoly GradedPoly::operator*(const mpz_class& c) const {
  GradedPoly p(ring_);
  if (c == 0) return p;
  for (auto& [e, v] : coeffs_) p.coeffs_.emplace(e, v * c);
  return p;
}

GradedPoly GradedPoly::pow(int e) const {
  if (e < 0) throw RingError("negative exponent");
  GradedPoly acc = constant(ring_, 1);
  for (int i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

int GradedPoly::monomial_degree(const std::vector<int>& exps) const {
  const auto& w = ring_weights(ring_);
  int d = 0;
  for (size_t i = 0; i < exps.size(); ++i) d += w[i] * exps[i];
  return d;
}

bool GradedPoly::homogeneous() const {
  if (coeffs_.empty()) return true;
  int d = monomial_degree(coeffs_.begin()->first);
  for (auto& [e, c] : coeffs_)
    if (monomial_degree(e) != d) return false;
  return true;
}

int GradedPoly::degree() const {
  if (coeffs_.empty()) return 0;
  if (!homogeneous()) throw RingError("degree of a non-homogeneous element");
  return monomial_degree(coeffs_.begin()->first);
}

GradedPoly GradedPoly::substitute(RingId target, const std::vector<GradedPoly>& images) const {
  if (images.size() != ring_vars(ring_).size()) throw RingError("bad substitution arity");
  GradedPoly out(target);
  for (auto& [e, c] : coeffs_) {
    GradedPoly term = constant(target, c);
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) term = term * images[i].pow(e[i]);
    out += term;
  }
  return out;
}

namespace {

// grlex with the ring's variable order (x > y > t > h > ... as listed)
bool grlex_less(const std::vector<int>& a, const std::vector<int>& b) {
  int ta = 0, tb = 0;
  for (int v : a) ta += v;
  for (int v : b) tb += v;
  if (ta != tb) return ta < tb;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

std::string GradedPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::vector<const std::pair<const std::vector<int>, mpz_class>*> terms;
  for (auto& kv : coeffs_) terms.push_back(&kv);
  std::sort(terms.begin(), terms.end(),
            [](auto* a, auto* b) { return grlex_less(b->first, a->first); });
  const auto& vars = ring_vars(ring_);
  std::ostringstream os;
  bool first = true;
  for (auto* kv : terms) {
    const mpz_class& c = kv->second;
    mpz_class a = abs(c);
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    bool any_var = std::any_of(kv->first.begin(), kv->first.end(), [](int e) { return e != 0; });
    if (a != 1 || !any_var) os << a;
    bool started = (a != 1 || !any_var);
    for (size_t i = 0; i < vars.size(); ++i) {
      int e = kv->first[i];
      if (e == 0) continue;
      if (started) os << "*";
      os << vars[i];
      if (e > 1) os << "^" << e;
      started = true;
    }
  }
  return os.str();
}

namespace {

struct PolyLexer {
  const std::string& s;
  size_t pos = 0;
  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip();
    return pos >= s.size();
  }
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
};

GradedPoly parse_sum(RingId r, PolyLexer& lx);

GradedPoly parse_atom(RingId r, PolyLexer& lx) {
  lx.skip();
  if (lx.accept('(')) {
    GradedPoly p = parse_sum(r, lx);
    if (!lx.accept(')')) throw RingError("expected ')'");
    return p;
  }
  if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
    size_t start = lx.pos;
    while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos]))) ++lx.pos;
    return GradedPoly::constant(r, mpz_class(lx.s.substr(start, lx.pos - start)));
  }
  if (std::isalpha(static_cast<unsigned char>(lx.peek()))) {
    size_t start = lx.pos;
    while (lx.pos < lx.s.size() &&
           std::isalnum(static_cast<unsigned char>(lx.s[lx.pos])))
      ++lx.pos;
    std::string name = lx.s.substr(start, lx.pos - start);
    return GradedPoly::var(r, name);
  }
  throw RingError("unexpected character in polynomial literal");
}

GradedPoly parse_power(RingId r, PolyLexer& lx) {
  GradedPoly base = parse_atom(r, lx);
  if (lx.accept('^')) {
    lx.skip();
    size_t start = lx.pos;
    while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos]))) ++lx.pos;
    if (lx.pos == start) throw RingError("expected exponent after '^'");
    return base.pow(std::stoi(lx.s.substr(start, lx.pos - start)));
  }
  return base;
}

GradedPoly parse_product(RingId r, PolyLexer& lx) {
  GradedPoly p = parse_power(r, lx);
  while (true) {
    lx.skip();
    char c = lx.peek();
    if (c == '*') {
      lx.accept('*');
      p = p * parse_power(r, lx);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '(') {
      p = p * parse_power(r, lx);  // implicit product
    } else {
      break;
    }
  }
  return p;
}

GradedPoly parse_sum(RingId r, PolyLexer& lx) {
  GradedPoly acc(r);
  int sign = 1;
  if (lx.accept('-'))
    sign = -1;
  else
    lx.accept('+');
  while (true) {
    GradedPoly t = parse_product(r, lx);
    acc += sign < 0 ? -t : t;
    lx.skip();
    if (lx.accept('+'))
      sign = 1;
    else if (lx.accept('-'))
      sign = -1;
    else
      break;
  }
  return acc;
}

}  // namespace

GradedPoly GradedPoly::parse(RingId r, const std::string& text) {
  PolyLexer lx{text};
  GradedPoly p = parse_sum(r, lx);
  if (!lx.eof()) throw RingError("trailing characters in polynomial literal");
  return p;
}

}  // namespace ccx
