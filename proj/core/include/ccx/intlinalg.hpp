#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace ccx {

/// Dense integer matrix for the Z-linear algebra behind the ring layer.
struct ZMatrix {
  size_t rows = 0, cols = 0;
  std::vector<mpz_class> e;
  ZMatrix() = default;
  ZMatrix(size_t r, size_t c) : rows(r), cols(c), e(r * c) {}
  mpz_class& at(size_t r, size_t c) { return e[r * cols + c]; }
  const mpz_class& at(size_t r, size_t c) const { return e[r * cols + c]; }
};

size_t zrank(const ZMatrix& a);

struct ZSolveResult {
  bool solvable = false;
  std::vector<mpz_class> x;
  std::string obstruction;  // set when not solvable
};

/// Reusable column-Hermite solver: factor once, solve many right-hand sides.
class ZSolver {
 public:
  explicit ZSolver(const ZMatrix& a);
  ~ZSolver();
  ZSolver(const ZSolver&) = delete;
  ZSolver& operator=(const ZSolver&) = delete;
  size_t rank() const;
  ZSolveResult solve(const std::vector<mpz_class>& b) const;

 private:
  struct Impl;
  Impl* impl_;
};

/// Integer solution of A x = b via column Hermite reduction; the refusal
/// names the failing pivot divisibility or rank obstruction.
ZSolveResult zsolve(const ZMatrix& a, const std::vector<mpz_class>& b);

/// Basis of the full integer kernel lattice {x : Ax = 0}, as columns.
ZMatrix zkernel(const ZMatrix& a);

/// Rational solvability of A x = b (x rational). x is returned scaled to a
/// common denominator as (numerators, denominator).
struct QSolveResult {
  bool solvable = false;
  std::vector<mpz_class> num;
  mpz_class den = 1;
  std::string obstruction;
};
QSolveResult qsolve(const ZMatrix& a, const std::vector<mpz_class>& b);

}  // namespace ccx
