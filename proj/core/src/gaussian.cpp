#include "ccx/gaussian.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace ccx {

bool GaussianRational::is_small() const {
  return mpz_size(re_.get_num_mpz_t()) <= 1 && mpz_size(re_.get_den_mpz_t()) <= 1 &&
         mpz_size(im_.get_num_mpz_t()) <= 1 && mpz_size(im_.get_den_mpz_t()) <= 1;
}

namespace {

struct ScalarLexer {
  const std::string& s;
  size_t pos = 0;
  explicit ScalarLexer(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  mpz_class integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError("expected integer in scalar literal", 0, int(pos) + 1);
    return mpz_class(s.substr(start, pos - start));
  }
};

// term := [sign] ( 'i' | rational ['*' 'i'] ), rational := int ['/' int]
GaussianRational parse_term(ScalarLexer& lx, int sign) {
  if (lx.accept('i')) {
    return GaussianRational(mpq_class(0), mpq_class(sign));
  }
  mpz_class num = lx.integer();
  mpz_class den = 1;
  if (lx.accept('/')) {
    den = lx.integer();
    if (den == 0) throw ParseError("zero denominator in scalar literal");
  }
  mpq_class q(num * sign, den);
  q.canonicalize();
  if (lx.accept('*')) {
    if (!lx.accept('i')) throw ParseError("expected 'i' after '*' in scalar literal");
    return GaussianRational(mpq_class(0), q);
  }
  return GaussianRational(q, mpq_class(0));
}

}  // namespace

GaussianRational GaussianRational::parse(const std::string& text) {
  ScalarLexer lx(text);
  GaussianRational out;
  bool first = true;
  while (!lx.eof()) {
    int sign = 1;
    if (lx.accept('+')) {
      sign = 1;
    } else if (lx.accept('-')) {
      sign = -1;
    } else if (!first) {
      throw ParseError("expected '+' or '-' between scalar terms");
    }
    out += parse_term(lx, sign);
    first = false;
  }
  if (first) throw ParseError("empty scalar literal");
  return out;
}

std::string GaussianRational::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& g) {
  auto put_im = [&os](const mpq_class& v, bool with_sign) {
    mpq_class a = v < 0 ? mpq_class(-v) : v;
    if (with_sign)
      os << (v < 0 ? "-" : "+");
    else if (v < 0)
      os << "-";
    if (a == 1)
      os << "i";
    else
      os << a << "*i";
  };
  if (g.is_zero()) return os << "0";
  if (g.im() == 0) return os << g.re();
  if (g.re() == 0) {
    put_im(g.im(), false);
    return os;
  }
  os << g.re();
  put_im(g.im(), true);
  return os;
}

}  // namespace ccx
