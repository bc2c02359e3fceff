// Acceptance suite: runs every top-level criterion and prints one
// pass/fail line per criterion. Exit code 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>

#include "trigmono/catalog.hpp"

using namespace trigmono;

namespace {

int failures = 0;

void report(int number, const char* name, bool pass, const std::string& detail = "") {
  std::printf("[%s] criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", number, name,
              detail.empty() ? "" : " - ", detail.c_str());
  if (!pass) ++failures;
}

double seconds(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::multiset<int> regionSet(const CatalogEntry* e) {
  return {e->cens.regions.begin(), e->cens.regions.end()};
}

// 1. genus-zero classification over m | n <= 12
void criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  bool pass = true;
  std::string detail;
  std::set<std::pair<int, int>> genusZero;
  for (const auto& r : genusTable(12)) {
    if (r.genus_zero) genusZero.insert({r.m, r.n});
    if (r.m == 1 && r.n == 11 && r.genus != 1) pass = false;
    if (r.m == 6 && r.n == 6 && r.genus != 1) pass = false;
    // every genus-zero row is covered except the documented discrepancy
    if (r.genus_zero && !r.covered_by_maxima) {
      if (r.m == 1 && r.n == 12) {
        if (!r.discrepancy) pass = false;
        detail = "(1,12) flagged as the documented discrepancy";
      } else {
        pass = false;
        detail = "unexpected uncovered row (" + std::to_string(r.m) + "," +
                 std::to_string(r.n) + ")";
      }
    }
    if (!r.genus_zero && r.covered_by_maxima) {
      pass = false;
      detail = "covered pair of positive genus";
    }
  }
  std::set<std::pair<int, int>> expected;
  for (const auto& e : buildCatalog()) expected.insert({e.m, e.n});
  expected.insert({1, 12});
  if (genusZero != expected) pass = false;
  double dt = seconds(t0);
  if (dt >= 5.0) pass = false;
  std::ostringstream os;
  os << detail << (detail.empty() ? "" : "; ") << genusZero.size() << " genus-zero rows, "
     << dt << " s";
  report(1, "genus-zero classification up to level 12", pass, os.str());
}

// 2. skeleton censuses of the named figures
void criterion2() {
  bool pass = true;
  auto expect = [&pass](const CatalogEntry* e, std::multiset<int> widths, int extra = -1) {
    if (!e || regionSet(e) != widths) pass = false;
    if (extra >= 0 && e && e->cens.nWhite1 != extra) pass = false;
  };
  const CatalogEntry* g33 = findEntry(3, 3);
  pass = pass && g33 && g33->cens.index == 12 && g33->cens.nBlack3 == 4;
  expect(g33, {3, 3, 3, 3});
  const CatalogEntry* g55 = findEntry(5, 5);
  pass = pass && g55 && g55->cens.index == 60;
  expect(g55, {5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5});
  const CatalogEntry* g19 = findEntry(1, 9);
  pass = pass && g19 && g19->cens.index == 36;
  expect(g19, {9, 9, 9, 3, 3, 1, 1, 1});
  expect(findEntry(1, 5), {5, 5, 1, 1});
  expect(findEntry(1, 2), {2, 1}, 1);
  expect(findEntry(1, 4), {4, 1, 1});
  expect(findEntry(2, 2), {2, 2, 2});
  report(2, "skeleton censuses match the figures", pass);
}

// 3. oracle agreement for n <= 30
void criterion3() {
  auto t0 = std::chrono::steady_clock::now();
  bool pass = true;
  for (int n = 1; n <= 30 && pass; ++n) {
    auto c1 = census(buildSkeleton(enumerateCongruence(1, n).table));
    auto o1 = genusOracle(OracleKind::gamma1, n);
    if (c1.index != o1.index || static_cast<long>(c1.regions.size()) != o1.cusps ||
        c1.genus != o1.genus)
      pass = false;
    auto cn = census(buildSkeleton(enumerateCongruence(n, n).table));
    auto on = genusOracle(OracleKind::gamma, n);
    if (cn.index != on.index || static_cast<long>(cn.regions.size()) != on.cusps ||
        cn.genus != on.genus)
      pass = false;
  }
  double dt = seconds(t0);
  if (dt >= 20.0) pass = false;
  std::ostringstream os;
  os << dt << " s";
  report(3, "census agrees with the number-theoretic oracle up to level 30", pass, os.str());
}

// 4. torsion, -id, and the level-4 parabolic classes
void criterion4() {
  bool pass = true;
  for (int n = 1; n <= 12; ++n)
    for (int m = 1; m <= n; ++m) {
      if (n % m != 0) continue;
      auto ct = enumerateCongruence(m, n);
      auto c = census(buildSkeleton(ct.table), ct);
      bool expectTorsion = m == 1 && n <= 3;
      if (c.torsion_free != !expectTorsion) pass = false;
      if (!c.contains_minus_id || *c.contains_minus_id != (n <= 2)) pass = false;
    }
  // Gamma_1(4): three parabolic classes, exactly one not unipotent, on a
  // width-1 region carrying the D~5 fiber
  const CatalogEntry* g14 = findEntry(1, 4);
  if (!g14 || g14->cens.regions.size() != 3) pass = false;
  if (g14) {
    int neg = 0, negWidth = 0;
    for (size_t r = 0; r < g14->cens.regionNegative.size(); ++r)
      if (g14->cens.regionNegative[r]) {
        ++neg;
        negWidth = static_cast<int>(g14->skeleton.regions[r].size());
      }
    if (neg != 1 || negWidth != 1) pass = false;
    if (regionSet(g14) != std::multiset<int>{4, 1, 1}) pass = false;
    int d5 = 0;
    for (const auto& f : g14->fiber_list)
      if (f == "D~5") ++d5;
    if (d5 != 1) pass = false;
  }
  report(4, "torsion, -id and parabolic-class lemmas", pass);
}

// 5. Alexander values
void criterion5() {
  bool pass = true;
  LaurentPoly phi6 = cyclotomic(6), phi10 = cyclotomic(10);
  try {
    pass = pass && alexanderPolynomial(findEntry(3, 3)->monodromy) == phi6 * phi6;
    pass = pass && alexanderPolynomial(findEntry(1, 9)->monodromy) == phi6;
    pass = pass && alexanderPolynomial(findEntry(5, 5)->monodromy) == phi10 * phi10;
    pass = pass && alexanderAbelianInvariants(findEntry(1, 9)->monodromy) == FinAbGroup{2, {3}};
    pass = pass && alexanderAbelianInvariants(findEntry(1, 5)->monodromy) == FinAbGroup{0, {5}};
    pass = pass && alexanderAbelianInvariants(findEntry(1, 7)->monodromy) == FinAbGroup{0, {7}};
  } catch (const std::exception&) {
    pass = false;
  }
  report(5, "Alexander polynomials and module invariants", pass);
}

// 6. dihedral quotients across the catalog, double-computed
void criterion6() {
  bool pass = true;
  for (const auto& e : buildCatalog()) {
    FinAbGroup q = maximalUniformQuotient(e.monodromy);
    if (!(q == e.expected.Q)) pass = false;
    IntMat rows(static_cast<int>(2 * e.monodromy.braids.size()), 2);
    int r = 0;
    for (const BraidWord& b : e.monodromy.braids) {
      ModularMatrix g = burau(b).evaluateUnit(-1);
      rows.at(r, 0) = g.a - 1;
      rows.at(r, 1) = g.b;
      ++r;
      rows.at(r, 0) = g.c;
      rows.at(r, 1) = g.d - 1;
      ++r;
    }
    if (!(cokernel(rows, 2) == q)) pass = false;
  }
  report(6, "maximal dihedral quotients equal the label groups (two routes)", pass);
}

// 7. reducibility and abelianization ranks
void criterion7() {
  bool pass = true;
  for (const auto& e : buildCatalog()) {
    int comps = componentCount(e.monodromy);
    if (comps != e.expected.components) pass = false;
    FinAbGroup ab = abelianization(vanKampen(e.monodromy, Flavor::affine));
    if (ab.free_rank != comps) pass = false;
  }
  const CatalogEntry* fig1[] = {findEntry(1, 1), findEntry(1, 3), findEntry(3, 3),
                                findEntry(1, 5), findEntry(1, 7), findEntry(1, 9),
                                findEntry(5, 5)};
  for (const CatalogEntry* e : fig1)
    if (!e || e->expected.components != 1) pass = false;
  if (findEntry(1, 2)->expected.components != 2) pass = false;
  if (findEntry(2, 2)->expected.components != 3) pass = false;
  report(7, "component counts and abelianization ranks", pass);
}

// 8. isotrivial table
void criterion8() {
  bool pass = true;
  for (int r = 0; r <= 24; ++r) {
    auto z = isotrivialQuotient(JClass::zero, r);
    switch (r % 6) {
      case 0: pass = pass && z == FinAbGroup{2, {}}; break;
      case 3: pass = pass && z == FinAbGroup{0, {2, 2}}; break;
      case 2: case 4: pass = pass && z == FinAbGroup{0, {3}}; break;
      default: pass = pass && z.trivial();
    }
    auto o = isotrivialQuotient(JClass::one, r);
    switch (r % 4) {
      case 0: pass = pass && o == FinAbGroup{2, {}}; break;
      case 2: pass = pass && o == FinAbGroup{0, {2, 2}}; break;
      default: pass = pass && o == FinAbGroup{0, {2}};
    }
    auto g = isotrivialQuotient(JClass::generic, r);
    pass = pass && g == (r % 2 ? FinAbGroup{0, {2, 2}} : FinAbGroup{2, {}});
  }
  report(8, "isotrivial quotient table for r = 0..24", pass);
}

// 9. z-splitting counts
void criterion9() {
  bool pass = zSplittingCount(FinAbGroup{0, {5, 5}}) == 12;
  // all quotients of the irreducible-curve maxima
  std::set<Int> counts;
  std::vector<FinAbGroup> irreducible = {{0, {}},     {0, {3}}, {0, {3, 3}}, {0, {9}},
                                         {0, {5}},    {0, {5, 5}}, {0, {7}}};
  for (const auto& q : irreducible) counts.insert(zSplittingCount(q));
  std::set<Int> allowed = {0, 1, 2, 3, 4, 12};
  for (const Int& c : counts)
    if (!allowed.count(c)) pass = false;
  if (!counts.count(12) || !counts.count(4)) pass = false;
  report(9, "Z-splitting section counts", pass);
}

// 10. randomized property suites, fixed seeds, 1000 cases each
void criterion10() {
  bool pass = true;
  std::mt19937 rng(20260808);
  auto randomBraid = [&rng](int maxLen) {
    std::uniform_int_distribution<int> len(0, maxLen);
    std::uniform_int_distribution<int> letter(0, 3);
    BraidWord b;
    int k = len(rng);
    for (int i = 0; i < k; ++i) {
      static const int ls[4] = {1, -1, 2, -2};
      int l = ls[letter(rng)];
      b = b * BraidWord::gen(l > 0 ? l : -l, l > 0 ? 1 : -1);
    }
    return b;
  };

  // braid relation and u^3 = v^2
  BraidWord u = BraidWord::s2() * BraidWord::s1();
  BraidWord v = BraidWord::s2() * BraidWord::s1(2);
  for (int i = 0; i < 1000 && pass; ++i) {
    BraidWord c = randomBraid(6);
    BraidWord lhs = c * BraidWord::s1() * BraidWord::s2() * BraidWord::s1();
    BraidWord rhs = c * BraidWord::s2() * BraidWord::s1() * BraidWord::s2();
    if (!braidEqual(lhs, rhs)) pass = false;
  }
  if (!braidEqual(u.pow(3), v.pow(2))) pass = false;

  // faithfulness spot checks: braids acting identically are word-equal
  // through the SL2 and Burau reductions as well
  for (int i = 0; i < 1000 && pass; ++i) {
    BraidWord a = randomBraid(8), b = randomBraid(8);
    if (braidEqual(a, b)) {
      if (!(braidToSL2(a) == braidToSL2(b))) pass = false;
      if (!(burau(a) == burau(b))) pass = false;
    }
    FreeWord rho = FreeWord::rho();
    if (!(artinApply(a, rho) == rho)) pass = false;
  }

  // infinity identity
  for (int d = 0; d < 1000 && pass; ++d) {
    if (d > 40) break;
    ModularMatrix img = braidToSL2(infinityBraid(d));
    ModularMatrix want = d % 2 ? ModularMatrix::identity().neg() : ModularMatrix::identity();
    if (!(img == want)) pass = false;
  }

  // generator sufficiency
  std::uniform_int_distribution<int> pick(0, 2);
  for (int i = 0; i < 1000 && pass; ++i) {
    std::vector<ModularMatrix> gens;
    std::vector<Lattice2> ls;
    for (int k = 0; k < 3; ++k) {
      gens.push_back(braidToSL2(randomBraid(6)));
      ls.push_back(imageLattice(gens.back()));
    }
    Lattice2 base = latticeSum(ls);
    ModularMatrix g;
    int len = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int k = 0; k < len; ++k) g = g * gens[static_cast<size_t>(pick(rng))];
    std::vector<Lattice2> ext = ls;
    ext.push_back(imageLattice(g));
    if (!(latticeSum(ext) == base)) pass = false;
  }

  // Burau at t = -1
  const ModularMatrix C = ModularMatrix::T();
  for (int i = 0; i < 1000 && pass; ++i) {
    BraidWord b = randomBraid(10);
    if (!(C * burau(b).evaluateUnit(-1) * C.inverse() == braidToSL2(b))) pass = false;
  }

  // Smith form under unimodular multiplications
  std::uniform_int_distribution<int> small(-3, 3);
  for (int i = 0; i < 1000 && pass; ++i) {
    IntMat m(3, 3);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) m.at(r, c) = small(rng);
    auto inv = smithNormalForm(m);
    IntMat m2 = m;
    for (int k = 0; k < 4; ++k) {
      int a = std::uniform_int_distribution<int>(0, 2)(rng);
      int b = std::uniform_int_distribution<int>(0, 2)(rng);
      if (a == b) continue;
      int f1 = small(rng), f2 = small(rng);
      for (int c = 0; c < 3; ++c) m2.at(a, c) += f1 * m2.at(b, c);
      for (int r = 0; r < 3; ++r) m2.at(r, a) += f2 * m2.at(r, b);
    }
    if (smithNormalForm(m2) != inv) pass = false;
  }

  report(10, "randomized property suites (fixed seeds)", pass);
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  std::printf("total: %d failing criteria, %.1f s\n", failures, seconds(t0));
  return failures == 0 ? 0 : 1;
}
