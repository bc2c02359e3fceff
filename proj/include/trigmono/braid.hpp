#pragma once

#include <array>
#include <optional>

#include "trigmono/exact.hpp"
#include "trigmono/modular.hpp"

namespace trigmono {

/// Freely reduced word in the free group <a1, a2, a3>.
/// Letters are +-1, +-2, +-3; negative means inverse.
struct FreeWord {
  std::vector<int> letters;

  static FreeWord gen(int i, int exp = 1);
  static FreeWord fromLetters(std::vector<int> raw);  // reduces
  static FreeWord rho() { return fromLetters({1, 2, 3}); }  // a1 a2 a3

  FreeWord operator*(const FreeWord& o) const;
  FreeWord inverse() const;
  FreeWord pow(int k) const;
  bool operator==(const FreeWord& o) const = default;
  bool operator<(const FreeWord& o) const { return letters < o.letters; }
  int degree() const;  // exponent sum
  bool empty() const { return letters.empty(); }
  std::string str() const;
};

/// Word in the braid group B3; letters +-1, +-2 for s1, s2 and inverses.
/// Words are stored freely reduced; equality of the underlying braids is
/// decided through the Artin action (braidEqual).
struct BraidWord {
  std::vector<int> letters;

  static BraidWord s1(int exp = 1) { return gen(1, exp); }
  static BraidWord s2(int exp = 1) { return gen(2, exp); }
  static BraidWord gen(int i, int exp);

  BraidWord operator*(const BraidWord& o) const;
  BraidWord inverse() const;
  BraidWord pow(int k) const;
  BraidWord conjugatedBy(const BraidWord& mu) const;  // mu^-1 * this * mu
  bool empty() const { return letters.empty(); }
  bool operator==(const BraidWord& o) const = default;
  std::string str() const;
};

// Artin action; for a product the leftmost factor acts last:
// (b c)(w) = b(c(w)).
FreeWord artinApply(const BraidWord& b, const FreeWord& w);

// Images of (a1, a2, a3) under b.
std::array<FreeWord, 3> artinImages(const BraidWord& b);

bool braidEqual(const BraidWord& a, const BraidWord& b);

// Multiplicative reduction to SL(2,Z): s1 -> [[1,1],[0,1]], s2 -> [[0,1],[-1,2]].
ModularMatrix braidToSL2(const BraidWord& b);

/// 2x2 matrix of Laurent polynomials.
struct Mat2Laurent {
  LaurentPoly e[2][2];

  static Mat2Laurent identity();
  Mat2Laurent operator*(const Mat2Laurent& o) const;
  Mat2Laurent operator-(const Mat2Laurent& o) const;
  bool operator==(const Mat2Laurent& o) const;
  ModularMatrix evaluateUnit(const Int& x) const;  // x = +-1
};

// Reduced Burau matrix: s1 -> [[-t,1],[0,1]], s2 -> [[1,0],[t,-t]].
Mat2Laurent burau(const BraidWord& b);

// Chain word {x, y}_m: (xy)^k (yx)^-k for m = 2k,
// ((xy)^k x)((yx)^k y)^-1 for m = 2k+1.
FreeWord chainRelator(const FreeWord& x, const FreeWord& y, int m);

// Shortest braid mu with mu(a1) = x and mu(a2) = y, by breadth-first
// search; nullopt if none within maxDepth letters.
std::optional<BraidWord> braidFromPair(const FreeWord& x, const FreeWord& y, int maxDepth = 16);

// Shortest mu with mu^-1 b mu = target, i.e. b = mu target mu^-1;
// breadth-first over conjugators.
std::optional<BraidWord> conjugatingBraid(const BraidWord& b, const BraidWord& target,
                                          int maxDepth = 16);

BraidWord nagataTwist(const BraidWord& b);  // b * (s2 s1)^3
BraidWord infinityBraid(int d);             // (s2 s1)^(3d)
int depthOfPullback(int m, int n);          // 1 if n <= 2 else 2

}  // namespace trigmono
