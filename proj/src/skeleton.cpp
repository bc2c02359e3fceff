#include "trigmono/skeleton.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace trigmono {

namespace {

std::vector<std::vector<int>> cycles(const std::vector<int>& perm) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(perm.size(), false);
  for (size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> cyc;
    int e = static_cast<int>(s);
    while (!seen[static_cast<size_t>(e)]) {
      seen[static_cast<size_t>(e)] = true;
      cyc.push_back(e);
      e = perm[static_cast<size_t>(e)];
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

}  // namespace

Skeleton buildSkeleton(const CosetTable& t) {
  Skeleton s;
  s.table = t;
  s.black = cycles(t.sX);
  s.white = cycles(t.sY);
  // face permutation (sX o sY)^-1
  std::vector<int> face(static_cast<size_t>(t.size));
  for (int e = 0; e < t.size; ++e)
    face[static_cast<size_t>(t.sX[static_cast<size_t>(t.sY[static_cast<size_t>(e)])])] = e;
  s.regions = cycles(face);
  for (const auto& c : s.black)
    if (c.size() != 1 && c.size() != 3) throw std::logic_error("buildSkeleton: sX^3 != id");
  for (const auto& c : s.white)
    if (c.size() != 1 && c.size() != 2) throw std::logic_error("buildSkeleton: sY^2 != id");
  // connectivity
  std::vector<bool> seen(static_cast<size_t>(t.size), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 0;
  while (!stack.empty()) {
    int e = stack.back();
    stack.pop_back();
    ++reached;
    for (int nxt : {t.sX[static_cast<size_t>(e)], t.sY[static_cast<size_t>(e)]})
      if (!seen[static_cast<size_t>(nxt)]) {
        seen[static_cast<size_t>(nxt)] = true;
        stack.push_back(nxt);
      }
  }
  if (reached != t.size) throw std::logic_error("buildSkeleton: table not transitive");
  return s;
}

Census census(const Skeleton& s) {
  Census c;
  c.index = s.table.size;
  for (const auto& v : s.black) (v.size() == 3 ? c.nBlack3 : c.nBlack1)++;
  for (const auto& v : s.white) (v.size() == 2 ? c.nWhite2 : c.nWhite1)++;
  for (const auto& r : s.regions) c.regions.push_back(static_cast<int>(r.size()));
  std::sort(c.regions.rbegin(), c.regions.rend());
  const int vertices = c.nBlack3 + c.nBlack1 + c.nWhite2 + c.nWhite1;
  const int chi = vertices - c.index + static_cast<int>(s.regions.size());
  if ((2 - chi) % 2 != 0) throw std::logic_error("census: odd Euler characteristic");
  c.genus = (2 - chi) / 2;
  if (c.genus < 0) throw std::logic_error("census: negative genus");
  c.torsion_free = c.nBlack1 == 0 && c.nWhite1 == 0;
  if (c.torsion_free) c.d = c.index / 6;
  return c;
}

Census census(const Skeleton& s, const CongruenceTable& ct) {
  Census c = census(s);
  c.contains_minus_id = congruenceMember(ModularMatrix::identity().neg(), ct.m, ct.n);
  // member parabolic of each region: h T^w h^-1 up to sign; the region is
  // non-unipotent when only the negative lift belongs to the subgroup
  c.regionNegative.assign(s.regions.size(), false);
  for (size_t r = 0; r < s.regions.size(); ++r) {
    const int w = static_cast<int>(s.regions[r].size());
    ModularMatrix h = ct.representative(s.regions[r][0]);
    ModularMatrix g = h * ModularMatrix::T().pow(w) * h.inverse();
    bool plus = congruenceMember(g, ct.m, ct.n);
    bool minus = congruenceMember(g.neg(), ct.m, ct.n);
    if (!plus && !minus) throw std::logic_error("census: region parabolic not in subgroup");
    c.regionNegative[r] = !plus && minus;
  }
  return c;
}

namespace {

long phi(int n) {
  long r = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

}  // namespace

namespace {

// n^k/2 * prod_{p | n} (1 - 1/p^2), exact
long indexFactor(int n, int k) {
  long num = 1;
  for (int i = 0; i < k; ++i) num *= n;
  long den = 2;
  int m = n;
  for (int p = 2; m > 1; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    num *= static_cast<long>(p - 1) * (p + 1);
    den *= static_cast<long>(p) * p;
  }
  return num / den;
}

}  // namespace

OracleRow genusOracle(OracleKind kind, int n) {
  if (n < 1) throw std::invalid_argument("genusOracle: n >= 1");
  OracleRow row;
  long nu2 = 0, nu3 = 0;
  if (kind == OracleKind::gamma1) {
    if (n == 1) {
      row.index = 1;
      row.cusps = 1;
      nu2 = nu3 = 1;
    } else if (n == 2) {
      row.index = 3;
      row.cusps = 2;
      nu2 = 1;
    } else if (n == 4) {
      row.index = 6;
      row.cusps = 3;
    } else {
      row.index = indexFactor(n, 2);
      long cusps = 0;
      for (int dd = 1; dd <= n; ++dd)
        if (n % dd == 0) cusps += phi(dd) * phi(n / dd);
      row.cusps = cusps / 2;
      if (n == 3) nu3 = 1;
    }
  } else {
    if (n == 1) {
      row.index = 1;
      row.cusps = 1;
      nu2 = nu3 = 1;
    } else if (n == 2) {
      row.index = 6;
      row.cusps = 3;
    } else {
      row.index = indexFactor(n, 3);
      row.cusps = row.index / n;
    }
  }
  // genus from the Riemann-Hurwitz count
  long twelveG = 12 + row.index - 3 * nu2 - 4 * nu3 - 6 * row.cusps;
  if (twelveG % 12 != 0) throw std::logic_error("genusOracle: non-integral genus");
  row.genus = twelveG / 12;
  return row;
}

std::string exportSkeletonJson(const Skeleton& s, const Census& c) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["index"] = c.index;
  j["sX"] = s.table.sX;
  j["sY"] = s.table.sY;
  j["black"] = s.black;
  j["white"] = s.white;
  nlohmann::json regions = nlohmann::json::array();
  for (const auto& r : s.regions)
    regions.push_back({{"width", r.size()}, {"edges", r}});
  j["regions"] = regions;
  j["genus"] = c.genus;
  j["torsion_free"] = c.torsion_free;
  if (c.contains_minus_id)
    j["contains_minus_id"] = *c.contains_minus_id;
  else
    j["contains_minus_id"] = nullptr;
  if (c.d)
    j["d"] = *c.d;
  else
    j["d"] = nullptr;
  return j.dump(2);
}

std::string exportSkeletonDot(const Skeleton& s) {
  // black vertices filled, monovalent white drawn, bivalent white
  // suppressed; edges listed in the cyclic order of each black vertex
  std::vector<int> blackOf(static_cast<size_t>(s.table.size), -1);
  std::vector<int> whiteOf(static_cast<size_t>(s.table.size), -1);
  for (size_t i = 0; i < s.black.size(); ++i)
    for (int e : s.black[i]) blackOf[static_cast<size_t>(e)] = static_cast<int>(i);
  for (size_t i = 0; i < s.white.size(); ++i)
    for (int e : s.white[i]) whiteOf[static_cast<size_t>(e)] = static_cast<int>(i);

  std::ostringstream os;
  os << "graph skeleton {\n  ordering=out;\n";
  for (size_t i = 0; i < s.black.size(); ++i)
    os << "  b" << i << " [shape=circle,style=filled,fillcolor=black,label=\"\"];\n";
  for (size_t i = 0; i < s.white.size(); ++i)
    if (s.white[i].size() == 1)
      os << "  w" << i << " [shape=circle,label=\"\"];\n";
  std::vector<bool> done(static_cast<size_t>(s.table.size), false);
  for (const auto& bv : s.black) {
    for (int e : bv) {  // cyclic order around the black vertex
      if (done[static_cast<size_t>(e)]) continue;
      int w = whiteOf[static_cast<size_t>(e)];
      if (s.white[static_cast<size_t>(w)].size() == 1) {
        os << "  b" << blackOf[static_cast<size_t>(e)] << " -- w" << w << " [label=\"" << e
           << "\"];\n";
        done[static_cast<size_t>(e)] = true;
      } else {
        int other = s.table.sY[static_cast<size_t>(e)];
        os << "  b" << blackOf[static_cast<size_t>(e)] << " -- b"
           << blackOf[static_cast<size_t>(other)] << " [label=\"" << e << "," << other << "\"];\n";
        done[static_cast<size_t>(e)] = true;
        done[static_cast<size_t>(other)] = true;
      }
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace trigmono
