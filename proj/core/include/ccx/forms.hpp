#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ccx/gaussian.hpp"

namespace ccx {

/// Basis monomial of the exterior algebra on phi^1..phi^n, phibar^1..phibar^n:
/// the wedge of the holomorphic indices in `hol` (ascending) followed by the
/// conjugate indices in `ahol` (ascending). Indices are 1-based bits.
struct FormKey {
  uint32_t hol = 0;
  uint32_t ahol = 0;
  friend auto operator<=>(const FormKey&, const FormKey&) = default;
};

int popcount(uint32_t m);

/// Sign of sorting the concatenation (A, B) of two disjoint ascending index
/// sets into one ascending list.
int shuffle_sign(uint32_t a, uint32_t b);

/// Exterior form with Gaussian-rational coefficients, stored per monomial.
class Form {
 public:
  Form() = default;

  static Form monomial(FormKey k, GaussianRational c = GaussianRational(1));

  bool is_zero() const { return terms_.empty(); }
  const std::map<FormKey, GaussianRational>& terms() const { return terms_; }

  void add(FormKey k, const GaussianRational& c);
  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  Form operator*(const GaussianRational& c) const;
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend bool operator==(const Form& a, const Form& b) { return a.terms_ == b.terms_; }

  /// Complex conjugation: swaps holomorphic and antiholomorphic factors.
  Form conj() const;

  std::string str(int n) const;

 private:
  std::map<FormKey, GaussianRational> terms_;
};

Form wedge(const Form& a, const Form& b);

}  // namespace ccx
