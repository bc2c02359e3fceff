#pragma once

#include "trigmono/modular.hpp"

namespace trigmono {

/// Edge set of the quotient Gamma/G with the left action of the
/// generators X (order 3) and Y (order 2) of PSL(2,Z).
struct CosetTable {
  int size = 0;
  std::vector<int> sX, sY;  // permutations; sX^3 = sY^2 = id
  int base = 0;

  bool operator==(const CosetTable& o) const = default;
};

/// Congruence enumeration result: the table plus enough data to
/// reconstruct an SL(2,Z) representative of each coset.
struct CongruenceTable {
  CosetTable table;
  int m = 1, n = 1;
  std::vector<int> parent;  // BFS tree; -1 at base
  std::vector<int> gen;     // 0: X, 1: Y applied to parent

  ModularMatrix representative(int edge) const;
};

// Cosets of (the PSL image of) the congruence subgroup; requires m | n.
CongruenceTable enumerateCongruence(int m, int n);

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Todd-Coxeter enumeration over <x, y | x^3, y^2> relative to the
// subgroup generated by the given words. Throws BudgetExceeded when more
// than maxCosets live cosets would be needed.
CosetTable enumerateSubgroup(const std::vector<ModularWord>& gens, int maxCosets);

// Tables equal up to relabeling of edges (any base).
bool tablesIsomorphic(const CosetTable& a, const CosetTable& b);

// Generators of the subgroup attached to a congruence table
// (Schreier generators of the base-edge stabilizer).
std::vector<ModularMatrix> schreierGenerators(const CongruenceTable& t);

// Permutation of the edges induced by left multiplication by g.
std::vector<int> edgeAction(const CosetTable& t, const ModularWord& g);

}  // namespace trigmono
