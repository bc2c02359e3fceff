#include "doctest.h"
#include "trigmono/braid.hpp"
#include "trigmono/exact.hpp"

using namespace trigmono;

namespace {

IntMat mat2(int a, int b, int c, int d) {
  IntMat m(2, 2);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  return m;
}

LaurentPoly poly(std::vector<std::pair<int, int>> terms) {
  LaurentPoly p;
  for (auto [e, c] : terms) p = p + LaurentPoly::t(e, c);
  return p;
}

}  // namespace

TEST_CASE("smith normal form on stated examples") {
  CHECK(smithNormalForm(mat2(2, 0, 0, 0)) == std::vector<Int>{2});
  // X^2 - id, reduced by hand to (1, 3)
  CHECK(smithNormalForm(mat2(-1, -1, 1, -2)) == std::vector<Int>{1, 3});
  CHECK(smithNormalForm(mat2(2, 0, 0, 2)) == std::vector<Int>{2, 2});
  CHECK(smithNormalForm(IntMat(2, 2)).empty());
}

TEST_CASE("smith normal form divisibility chain") {
  IntMat m(3, 3);
  int vals[3][3] = {{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = vals[i][j];
  auto d = smithNormalForm(m);
  REQUIRE(d.size() == 3);
  CHECK(d[0] == 2);
  CHECK(d[1] % d[0] == 0);
  CHECK(d[2] % d[1] == 0);
  Int prod = d[0] * d[1] * d[2];
  CHECK(prod == 144);  // |det|
}

TEST_CASE("lattice hermite form and quotients") {
  CHECK(quotientOf(Lattice2::zero()) == FinAbGroup{2, {}});
  CHECK(quotientOf(Lattice2::full()).trivial());

  Lattice2 l = Lattice2::fromColumns({{-1, 1}, {-1, -2}});
  auto q = quotientOf(l);
  CHECK(q == FinAbGroup{0, {3}});

  // 2Z^2
  Lattice2 two = Lattice2::fromColumns({{2, 0}, {0, 2}});
  CHECK(quotientOf(two) == FinAbGroup{0, {2, 2}});
  CHECK(two.contains(4, -2));
  CHECK_FALSE(two.contains(1, 0));
}

TEST_CASE("lattice sum") {
  CHECK(latticeSum({}) == Lattice2::zero());
  Lattice2 l = Lattice2::fromColumns({{3, 0}, {0, 3}});
  CHECK(latticeSum({l, Lattice2::full()}) == Lattice2::full());
  // rank-1 pieces combine
  Lattice2 r1 = Lattice2::fromColumns({{2, 0}});
  Lattice2 r2 = Lattice2::fromColumns({{0, 2}});
  CHECK(quotientOf(latticeSum({r1, r2})) == FinAbGroup{0, {2, 2}});
}

TEST_CASE("lattice sum of squared-generator images") {
  // images of s1^2 and s2^2 span an index-4 sublattice
  ModularMatrix t2 = braidToSL2(BraidWord::s1(2));
  ModularMatrix s22 = braidToSL2(BraidWord::s2(2));
  Lattice2 sum = latticeSum({imageLattice(t2), imageLattice(s22)});
  CHECK(quotientOf(sum) == FinAbGroup{0, {2, 2}});
}

TEST_CASE("hermite form is canonical") {
  // same sublattice from different generating sets
  Lattice2 a = Lattice2::fromColumns({{2, 1}, {0, 3}});
  Lattice2 b = Lattice2::fromColumns({{2, 4}, {2, 1}, {0, -3}});
  CHECK(a == b);
}

TEST_CASE("laurent arithmetic and normalization") {
  LaurentPoly p = poly({{2, 1}, {1, -1}, {0, 1}});  // t^2 - t + 1
  CHECK(p.str() == "t^2-t+1");
  LaurentPoly shifted = p * LaurentPoly::t(-3, -1);
  CHECK(shifted.normalized() == p);
  CHECK(p.evaluate(-1) == 3);
  CHECK((p * p).evaluate(2) == 9);
}

TEST_CASE("laurent gcd on stated examples") {
  LaurentPoly phi6 = poly({{2, 1}, {1, -1}, {0, 1}});
  LaurentPoly a = phi6 * poly({{1, 1}, {0, 1}});   // (t^2-t+1)(t+1)
  LaurentPoly b = phi6 * LaurentPoly::t(1);        // (t^2-t+1) t
  CHECK(laurentGcd({a, b}) == phi6);
  CHECK(laurentGcd({a, LaurentPoly::zero()}) == a.normalized());
  CHECK(laurentGcd({LaurentPoly::zero(), LaurentPoly::zero()}).isZero());

  LaurentPoly phi10 = poly({{4, 1}, {3, -1}, {2, 1}, {1, -1}, {0, 1}});
  LaurentPoly phi2 = poly({{1, 1}, {0, 1}});
  CHECK(laurentGcd({phi10 * phi2, phi10 * LaurentPoly::t(3)}) == phi10);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == poly({{1, 1}, {0, -1}}));
  CHECK(cyclotomic(2) == poly({{1, 1}, {0, 1}}));
  CHECK(cyclotomic(6) == poly({{2, 1}, {1, -1}, {0, 1}}));
  CHECK(cyclotomic(10) == poly({{4, 1}, {3, -1}, {2, 1}, {1, -1}, {0, 1}}));
  // t^12 - 1 = prod of cyclotomics over divisors
  LaurentPoly prod = LaurentPoly::constant(1);
  for (int d : {1, 2, 3, 4, 6, 12}) prod = prod * cyclotomic(d);
  CHECK(prod == poly({{12, 1}, {0, -1}}));
}

TEST_CASE("laurent divisibility") {
  LaurentPoly phi6 = cyclotomic(6);
  CHECK(laurentDivides(phi6, phi6 * phi6));
  CHECK(laurentDivides(phi6, LaurentPoly::zero()));
  CHECK_FALSE(laurentDivides(phi6, cyclotomic(4)));
  // divisibility is insensitive to units
  CHECK(laurentDivides(phi6 * LaurentPoly::t(-2), phi6 * LaurentPoly::t(5, -3)));
}

TEST_CASE("cokernel") {
  IntMat rel(1, 3);
  rel.at(0, 0) = 1;
  rel.at(0, 1) = 1;
  rel.at(0, 2) = 1;
  CHECK(cokernel(rel, 3) == FinAbGroup{2, {}});
  IntMat rel2(2, 2);
  rel2.at(0, 0) = 2;
  rel2.at(1, 1) = 3;
  CHECK(cokernel(rel2, 2) == FinAbGroup{0, {6}});  // Z/2 + Z/3 = Z/6
}

TEST_CASE("fin ab group printing") {
  CHECK(FinAbGroup{0, {}}.str() == "0");
  CHECK(FinAbGroup{2, {}}.str() == "Z^2");
  CHECK(FinAbGroup{0, {3, 3}}.str() == "Z/3+Z/3");
  CHECK(FinAbGroup{1, {2}}.str() == "Z+Z/2");
  CHECK(FinAbGroup{0, {5, 5}}.order() == 25);
}
