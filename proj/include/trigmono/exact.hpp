#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace trigmono {

using Int = mpz_class;

/// Dense matrix of exact integers, row-major.
struct IntMat {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static IntMat identity(int n);

  IntMat operator*(const IntMat& o) const;
  bool operator==(const IntMat& o) const = default;
};

// Invariant factors d1 | d2 | ... | dr of M (r = rank), each >= 1.
std::vector<Int> smithNormalForm(IntMat m);

/// Finitely generated abelian group in canonical form:
/// Z^free_rank + Z/d1 + Z/d2 + ... with d1 | d2 | ..., each di >= 2.
struct FinAbGroup {
  int free_rank = 0;
  std::vector<Int> invariant_factors;

  bool operator==(const FinAbGroup& o) const = default;
  bool trivial() const { return free_rank == 0 && invariant_factors.empty(); }
  bool finite() const { return free_rank == 0; }
  Int order() const;  // finite groups only
  std::string str() const;
};

// Z^ngens modulo the row span of `relations` (relations.cols == ngens).
FinAbGroup cokernel(const IntMat& relations, int ngens);

/// Sublattice of Z^2 in column Hermite normal form.
/// rank 2: columns (p, q), (0, s) with p, s > 0 and 0 <= q < s;
/// rank 1: single column (p, q), p > 0 or (p == 0 and q > 0); rank 0: zero.
struct Lattice2 {
  int rank = 0;
  Int p = 0, q = 0, s = 0;

  static Lattice2 zero() { return {}; }
  static Lattice2 full();
  // Lattice generated by the given column vectors.
  static Lattice2 fromColumns(const std::vector<std::pair<Int, Int>>& cols);

  bool contains(const Int& x, const Int& y) const;
  bool operator==(const Lattice2& o) const = default;
};

Lattice2 latticeSum(const std::vector<Lattice2>& ls);
FinAbGroup quotientOf(const Lattice2& l);

/// Laurent polynomial over Z: finitely supported map exponent -> coefficient.
struct LaurentPoly {
  std::map<int, Int> c;  // no zero coefficients stored

  static LaurentPoly zero() { return {}; }
  static LaurentPoly constant(Int v);
  static LaurentPoly t(int exp = 1, Int coeff = 1);

  bool isZero() const { return c.empty(); }
  Int coeff(int e) const;
  int lowExp() const;   // zero poly: 0
  int highExp() const;  // zero poly: 0

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& o) const = default;

  Int evaluate(const Int& x) const;  // requires lowExp() >= 0 or x = +-1

  // Representative with lowest exponent 0 and positive leading coefficient.
  LaurentPoly normalized() const;
  std::string str() const;
};

// gcd over Q of the inputs via primitive-part gcd over Z, normalized;
// all-zero input list gives 0. Requires a nonempty list.
LaurentPoly laurentGcd(const std::vector<LaurentPoly>& ps);

// Whether d divides p over Q[t, t^-1] (d nonzero).
bool laurentDivides(const LaurentPoly& d, const LaurentPoly& p);

// Exact quotient p / d; throws if the division is not exact over Z.
LaurentPoly laurentExactDiv(const LaurentPoly& p, const LaurentPoly& d);

LaurentPoly cyclotomic(int m);

}  // namespace trigmono
