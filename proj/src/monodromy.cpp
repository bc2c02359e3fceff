#include "trigmono/monodromy.hpp"

#include <algorithm>

namespace trigmono {

MonodromyData MonodromyData::make(std::vector<BraidWord> braids, int d,
                                  std::optional<std::vector<FreeWord>> slopes, bool lax) {
  if (d < 0) throw ValidationError("MonodromyData: d must be nonnegative");
  MonodromyData md;
  md.braids = std::move(braids);
  md.d = d;
  md.slopes = std::move(slopes);
  if (md.slopes) {
    if (md.slopes->size() != md.braids.size())
      throw ValidationError("MonodromyData: slope count must match braid count");
    for (const FreeWord& s : *md.slopes)
      if (s.degree() % 2 != 0) throw ValidationError("MonodromyData: slopes must have even degree");
  }
  if (!md.infinityHolds() && !lax)
    throw ValidationError("MonodromyData: braid product differs from (s2 s1)^(3d)");
  return md;
}

bool MonodromyData::infinityHolds() const {
  BraidWord prod;
  for (const BraidWord& b : braids) prod = prod * b;
  return braidEqual(prod, infinityBraid(d));
}

DihedralVector dihedralProject(const FreeWord& w) {
  if (w.degree() % 2 != 0) throw std::invalid_argument("dihedralProject: odd degree");
  // evaluate in H x| Z/2; generators map to the involutions (h_i, -1)
  // with h1 = (0,0), h2 = (1,0), h3 = (0,-1), so letter signs drop out
  static const int H[3][2] = {{0, 0}, {1, 0}, {0, -1}};
  DihedralVector acc;
  int sign = 1;
  for (int l : w.letters) {
    int i = (l > 0 ? l : -l) - 1;
    // (acc, sign) * (h, -1) = (acc + sign * h, -sign)
    acc.a += sign * H[i][0];
    acc.b += sign * H[i][1];
    sign = -sign;
  }
  return acc;
}

namespace {

std::vector<ModularMatrix> sl2Images(const MonodromyData& md) {
  std::vector<ModularMatrix> out;
  out.reserve(md.braids.size());
  for (const BraidWord& b : md.braids) out.push_back(braidToSL2(b));
  return out;
}

Lattice2 monodromyLattice(const MonodromyData& md) {
  std::vector<Lattice2> ls;
  for (const ModularMatrix& g : sl2Images(md)) ls.push_back(imageLattice(g));
  return latticeSum(ls);
}

}  // namespace

FinAbGroup maximalUniformQuotient(const MonodromyData& md) {
  return quotientOf(monodromyLattice(md));
}

GeneralizedQuotients generalizedQuotients(const MonodromyData& md) {
  if (!md.slopes) throw std::invalid_argument("generalizedQuotients: slopes required");
  std::vector<Lattice2> ls{monodromyLattice(md)};
  std::vector<DihedralVector> tilde;
  for (const FreeWord& s : *md.slopes) tilde.push_back(dihedralProject(s));
  for (const DihedralVector& v : tilde)
    ls.push_back(Lattice2::fromColumns({{2 * v.a, 2 * v.b}}));
  GeneralizedQuotients out;
  Lattice2 afnLattice = latticeSum(ls);
  out.afn = quotientOf(afnLattice);
  if (md.d % 2 == 0) {
    DihedralVector sum;
    for (const DihedralVector& v : tilde) {
      sum.a += v.a;
      sum.b += v.b;
    }
    ls.push_back(Lattice2::fromColumns({{sum.a, sum.b}}));
    out.proj = quotientOf(latticeSum(ls));
  }
  return out;
}

int componentCount(const MonodromyData& md) {
  // orbits of the mod-2 images on the nonzero vectors of (Z/2)^2,
  // encoded 1..3 by the bits of (x, y)
  auto act = [](const ModularMatrix& g, int v) {
    int x = v & 1, y = v >> 1;
    int nx = mpz_class(g.a * x + g.b * y).get_ui() & 1;
    int ny = mpz_class(g.c * x + g.d * y).get_ui() & 1;
    return nx | (ny << 1);
  };
  std::vector<int> parent{0, 1, 2, 3};
  auto find = [&parent](int v) {
    while (parent[static_cast<size_t>(v)] != v) v = parent[static_cast<size_t>(v)];
    return v;
  };
  for (const ModularMatrix& g : sl2Images(md))
    for (int v = 1; v <= 3; ++v) {
      int w = act(g, v);
      int a = find(v), b = find(w);
      if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    }
  int orbits = 0;
  for (int v = 1; v <= 3; ++v)
    if (find(v) == v) ++orbits;
  return orbits;
}

namespace {

// Derivative row (dw/da1, dw/da2, dw/da3) of a word, abelianized through
// the degree grading.
std::array<LaurentPoly, 3> foxRow(const FreeWord& w) {
  std::array<LaurentPoly, 3> row;
  int deg = 0;
  for (int l : w.letters) {
    size_t k = static_cast<size_t>((l > 0 ? l : -l) - 1);
    if (l > 0) {
      row[k] = row[k] + LaurentPoly::t(deg);
      ++deg;
    } else {
      --deg;
      row[k] = row[k] - LaurentPoly::t(deg);
    }
  }
  return row;
}

// Relation rows of the braid relators b_i(a_j) a_j^-1 presenting the
// Alexander module. Each derivative row sums to zero, so it lies in the
// rank-2 sublattice with basis f1 = e1 - e2, f2 = e2 - e3; the module is
// the quotient of that sublattice by the rows.
std::vector<std::array<LaurentPoly, 2>> relationRows(const MonodromyData& md) {
  std::vector<std::array<LaurentPoly, 2>> rows;
  for (const BraidWord& b : md.braids) {
    auto img = artinImages(b);
    for (size_t j = 0; j < 3; ++j) {
      auto r = foxRow(img[j]);
      r[j] = r[j] - LaurentPoly::constant(1);
      rows.push_back({r[0], r[0] + r[1]});
    }
  }
  return rows;
}

}  // namespace

LaurentPoly alexanderPolynomial(const MonodromyData& md) {
  auto rows = relationRows(md);
  std::vector<LaurentPoly> minors;
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = i + 1; j < rows.size(); ++j) {
      LaurentPoly det = rows[i][0] * rows[j][1] - rows[i][1] * rows[j][0];
      if (!det.isZero()) minors.push_back(det);
    }
  if (minors.empty()) throw RankDeficient("alexanderPolynomial: relation matrix has rank < 2");
  return laurentGcd(minors);
}

FinAbGroup alexanderAbelianInvariants(const MonodromyData& md) {
  if (md.d < 1) throw std::invalid_argument("alexanderAbelianInvariants: d >= 1 required");
  const int N = 3 * md.d;  // t^N = 1
  auto rows = relationRows(md);
  // Z-module Z[t]/(t^N - 1) per generator; each Laurent row expands to N
  // integer rows under multiplication by powers of t.
  IntMat rel(static_cast<int>(rows.size()) * N, 2 * N);
  int r = 0;
  for (const auto& row : rows) {
    for (int k = 0; k < N; ++k, ++r) {
      for (int gen = 0; gen < 2; ++gen)
        for (const auto& [e, v] : row[static_cast<size_t>(gen)].c) {
          int col = gen * N + (((e + k) % N) + N) % N;
          rel.at(r, col) += v;
        }
    }
  }
  return cokernel(rel, 2 * N);
}

bool isQuotientOf(const FinAbGroup& a, const FinAbGroup& b) {
  if (a.free_rank > b.free_rank) return false;
  const auto& fa = a.invariant_factors;
  const auto& fb = b.invariant_factors;
  // each spare free generator of b covers one factor of a, largest first;
  // the rest must align against b's factor chain from the top down
  size_t spare = static_cast<size_t>(b.free_rank - a.free_rank);
  size_t rem = fa.size() > spare ? fa.size() - spare : 0;
  if (rem > fb.size()) return false;
  for (size_t j = 0; j < rem; ++j) {
    const Int& da = fa[rem - 1 - j];
    const Int& db = fb[fb.size() - 1 - j];
    if (db % da != 0) return false;
  }
  return true;
}

bool dihedralAdmissible(const FinAbGroup& q) {
  if (!q.finite()) return false;
  static const std::vector<FinAbGroup> maxima = {
      {0, {2, 8}}, {0, {4, 4}}, {0, {2, 6}}, {0, {3, 6}},
      {0, {9}},    {0, {5, 5}}, {0, {10}},   {0, {7}},
  };
  for (const auto& t : maxima)
    if (isQuotientOf(q, t)) return true;
  return false;
}

Int zSplittingCount(const FinAbGroup& q) {
  if (!q.finite()) throw std::invalid_argument("zSplittingCount: finite group required");
  Int tensor2 = 1;
  for (const Int& d : q.invariant_factors)
    if (d % 2 == 0) tensor2 *= 2;
  return (q.order() - tensor2) / 2;
}

FinAbGroup isotrivialQuotient(JClass j, int r) {
  ModularMatrix g;
  switch (j) {
    case JClass::zero: g = ModularMatrix::X().neg().pow(r); break;
    case JClass::one: g = ModularMatrix::Y().neg().pow(r); break;
    case JClass::generic: g = ModularMatrix::identity().neg().pow(r); break;
  }
  return quotientOf(imageLattice(g));
}

OkaReport okaReport(const MonodromyData& md) {
  OkaReport rep;
  FinAbGroup q = maximalUniformQuotient(md);
  rep.has_D6 = false;
  for (const Int& d : q.invariant_factors)
    if (d % 3 == 0) rep.has_D6 = true;
  if (q.free_rank > 0) rep.has_D6 = true;
  rep.component_count = componentCount(md);
  try {
    LaurentPoly delta = alexanderPolynomial(md);
    rep.phi6_divides_delta = laurentDivides(cyclotomic(6), delta);
  } catch (const RankDeficient&) {
    rep.delta_defined = false;
    rep.phi6_divides_delta = false;
  }
  if (rep.component_count == 1 && rep.delta_defined && rep.has_D6 != rep.phi6_divides_delta)
    throw std::logic_error("okaReport: equivalence of D6 quotient and Phi6 divisibility failed");
  return rep;
}

CyclotomicFactorization factorCyclotomic(const LaurentPoly& p, int bound) {
  CyclotomicFactorization out;
  out.cofactor = p.normalized();
  if (p.isZero()) return out;
  for (int m = 1; m <= bound; ++m) {
    if (bound % m != 0) continue;
    LaurentPoly phi = cyclotomic(m);
    int mult = 0;
    while (laurentDivides(phi, out.cofactor)) {
      out.cofactor = laurentExactDiv(out.cofactor, phi).normalized();
      ++mult;
    }
    if (mult > 0) out.factors.emplace_back(m, mult);
  }
  return out;
}

}  // namespace trigmono
