#pragma once

#include "trigmono/exact.hpp"

namespace trigmono {

/// Element of SL(2,Z): [[a, b], [c, d]] with ad - bc = 1.
/// Acts on column vectors of H = Z a + Z b from the left.
struct ModularMatrix {
  Int a = 1, b = 0, c = 0, d = 1;

  ModularMatrix() = default;
  ModularMatrix(Int a_, Int b_, Int c_, Int d_);

  static ModularMatrix identity() { return {}; }
  static ModularMatrix X() { return {-1, 1, -1, 0}; }   // order 3
  static ModularMatrix Y() { return {0, -1, 1, 0}; }    // Y^2 = -id
  static ModularMatrix T() { return {1, 1, 0, 1}; }     // = X*Y, image of s1

  ModularMatrix operator*(const ModularMatrix& o) const;
  ModularMatrix inverse() const { return {d, -b, -c, a}; }
  ModularMatrix operator-() const { return neg(); }
  ModularMatrix neg() const;
  ModularMatrix pow(int k) const;
  Int trace() const { return a + d; }

  bool operator==(const ModularMatrix& o) const = default;
  bool equalsUpToSign(const ModularMatrix& o) const { return *this == o || neg() == o; }
  std::string str() const;
};

enum class MatClass {
  identity,
  minus_identity,
  elliptic,
  parabolic_unipotent,
  parabolic_negative,
  hyperbolic,
};

MatClass classify(const ModularMatrix& g);

// Membership in the congruence subgroup of matrices == [1 *; 0 1] mod n
// with b == 0 mod m. Requires m | n.
bool congruenceMember(const ModularMatrix& g, int m, int n);

// PSL-level membership: g or -g passes congruenceMember.
bool congruenceMemberPSL(const ModularMatrix& g, int m, int n);

// Column span of g - id in Hermite form.
Lattice2 imageLattice(const ModularMatrix& g);

/// Normal form in PSL(2,Z) = <X | X^3> * <Y | Y^2>, with an SL sign.
/// Letters alternate between the two factors; values 1, 2 are X, X^2
/// and 0 is Y.
struct ModularWord {
  int sign = 1;
  std::vector<int> letters;

  bool operator==(const ModularWord& o) const = default;
  std::string str() const;
};

ModularMatrix wordToMatrix(const ModularWord& w);
ModularWord matrixToWord(const ModularMatrix& g);

}  // namespace trigmono
