#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace ccx {

struct RingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The ambient polynomial rings of the graded-ring layer.
///  HXY  = Z[x,y,z]        (Hodge polynomials; |z|=1)
///  DR   = Z[t,z]          (Poincare polynomials)
///  RB   = Z[x,y,h,z]      (refined Betti polynomials)
///  GEN4 = Z[A,B,C,D]      (|A|=|B|=1, |C|=|D|=2)
///  GEN5 = Z[A,B,C,L,M]    (|A|=|B|=|M|=1, |C|=|L|=2)
enum class RingId { HXY, DR, RB, GEN4, GEN5 };

const std::vector<std::string>& ring_vars(RingId r);
const std::vector<int>& ring_weights(RingId r);
std::string ring_name(RingId r);

/// Element of one of the fixed multigraded integer polynomial rings.
class GradedPoly {
 public:
  GradedPoly() : ring_(RingId::HXY) {}
  explicit GradedPoly(RingId r) : ring_(r) {}

  static GradedPoly constant(RingId r, const mpz_class& c);
  static GradedPoly var(RingId r, const std::string& name, int exp = 1);
  static GradedPoly monomial(RingId r, const std::vector<int>& exps,
                             const mpz_class& c = mpz_class(1));

  RingId ring() const { return ring_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<std::vector<int>, mpz_class>& terms() const { return coeffs_; }
  mpz_class coeff(const std::vector<int>& exps) const;

  void add_term(const std::vector<int>& exps, const mpz_class& c);

  GradedPoly operator-() const;
  GradedPoly& operator+=(const GradedPoly& o);
  GradedPoly& operator-=(const GradedPoly& o);
  friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
  friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
  friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
  GradedPoly operator*(const mpz_class& c) const;
  GradedPoly pow(int e) const;
  bool operator==(const GradedPoly&) const = default;

  /// Weighted degree of a monomial / the element. Mixed sums report
  /// homogeneous() == false; degree() then throws.
  int monomial_degree(const std::vector<int>& exps) const;
  bool homogeneous() const;
  int degree() const;

  /// Substitute per-variable polynomials (in the target ring).
  GradedPoly substitute(RingId target, const std::vector<GradedPoly>& images) const;

  /// `3*x^2*y*z^4 - h*z^2` style literals over the ring's variables.
  static GradedPoly parse(RingId r, const std::string& text);
  std::string str() const;

 private:
  RingId ring_;
  std::map<std::vector<int>, mpz_class> coeffs_;
};

}  // namespace ccx
