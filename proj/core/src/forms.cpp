#include "ccx/forms.hpp"

#include <bit>
#include <sstream>

namespace ccx {

int popcount(uint32_t m) { return std::popcount(m); }

int shuffle_sign(uint32_t a, uint32_t b) {
  // count pairs (x in a, y in b) with x > y
  int inv = 0;
  for (uint32_t bb = b; bb; bb &= bb - 1) {
    uint32_t y = bb & ~(bb - 1);
    inv += std::popcount(a & ~(y | (y - 1)));
  }
  return inv % 2 ? -1 : 1;
}

Form Form::monomial(FormKey k, GaussianRational c) {
  Form f;
  f.add(k, c);
  return f;
}

void Form::add(FormKey k, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Form& Form::operator+=(const Form& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

Form& Form::operator-=(const Form& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

Form Form::operator*(const GaussianRational& c) const {
  Form f;
  if (c.is_zero()) return f;
  for (const auto& [k, v] : terms_) f.add(k, v * c);
  return f;
}

Form Form::conj() const {
  Form f;
  for (const auto& [k, c] : terms_) {
    int p = popcount(k.hol), q = popcount(k.ahol);
    GaussianRational v = c.conj();
    if ((p * q) % 2) v = -v;
    f.add(FormKey{k.ahol, k.hol}, v);
  }
  return f;
}

Form wedge(const Form& a, const Form& b) {
  Form out;
  for (const auto& [ka, ca] : a.terms()) {
    int qa = popcount(ka.ahol);
    for (const auto& [kb, cb] : b.terms()) {
      if ((ka.hol & kb.hol) || (ka.ahol & kb.ahol)) continue;
      int pb = popcount(kb.hol);
      int sign = shuffle_sign(ka.hol, kb.hol) * shuffle_sign(ka.ahol, kb.ahol);
      if ((qa * pb) % 2) sign = -sign;
      GaussianRational c = ca * cb;
      if (sign < 0) c = -c;
      out.add(FormKey{ka.hol | kb.hol, ka.ahol | kb.ahol}, c);
    }
  }
  return out;
}

std::string Form::str(int n) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    for (int j = 1; j <= n; ++j)
      if (k.hol & (1u << j)) os << "*phi" << j;
    for (int j = 1; j <= n; ++j)
      if (k.ahol & (1u << j)) os << "*phibar" << j;
  }
  return os.str();
}

}  // namespace ccx
