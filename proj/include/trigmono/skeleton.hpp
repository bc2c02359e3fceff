#pragma once

#include <optional>

#include "trigmono/coset.hpp"

namespace trigmono {

/// Bipartite ribbon graph of a coset table: black vertices are the
/// orbits of X, white vertices the orbits of Y, regions the orbits of
/// the face permutation (sX o sY)^-1.
struct Skeleton {
  CosetTable table;
  std::vector<std::vector<int>> black;    // cycles of sX (valency 1 or 3)
  std::vector<std::vector<int>> white;    // cycles of sY (valency 1 or 2)
  std::vector<std::vector<int>> regions;  // face cycles, width = length
};

Skeleton buildSkeleton(const CosetTable& t);

struct Census {
  int index = 0;
  int nBlack3 = 0, nBlack1 = 0;
  int nWhite2 = 0, nWhite1 = 0;
  std::vector<int> regions;  // widths, descending
  int genus = 0;
  bool torsion_free = false;
  std::optional<bool> contains_minus_id;
  std::optional<int> d;
  // For congruence tables: per region (in Skeleton order), whether the
  // member parabolic is -unipotent rather than unipotent.
  std::vector<bool> regionNegative;
};

Census census(const Skeleton& s);
Census census(const Skeleton& s, const CongruenceTable& ct);

enum class OracleKind { gamma1, gamma };

struct OracleRow {
  long index = 0;
  long cusps = 0;
  long genus = 0;
};

// Closed-form index / cusp / genus values for Gamma_1(n) and Gamma(n).
OracleRow genusOracle(OracleKind kind, int n);

std::string exportSkeletonJson(const Skeleton& s, const Census& c);
std::string exportSkeletonDot(const Skeleton& s);

}  // namespace trigmono
