#pragma once

#include "trigmono/braid.hpp"

namespace trigmono {

/// Braid monodromy of a trigonal curve: ordered braid tuple over a base
/// with Hirzebruch index d, optionally with slopes for generalized curves.
struct MonodromyData {
  std::vector<BraidWord> braids;
  int d = 0;
  std::optional<std::vector<FreeWord>> slopes;

  // Checks the product-at-infinity identity and slope degrees; with
  // lax = true the infinity check failure is reported but not fatal.
  static MonodromyData make(std::vector<BraidWord> braids, int d,
                            std::optional<std::vector<FreeWord>> slopes = std::nullopt,
                            bool lax = false);
  bool infinityHolds() const;
};

struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Element of H = Z a + Z b.
struct DihedralVector {
  Int a = 0, b = 0;
  bool operator==(const DihedralVector& o) const = default;
};

// Projection of an even-degree word through the dihedral evaluation
// a1 -> ((0,0), -), a2 -> ((1,0), -), a3 -> ((0,-1), -) in H x| Z/2.
DihedralVector dihedralProject(const FreeWord& w);

// Q = H / sum of Im(g - id) over the SL2 images of the braids.
FinAbGroup maximalUniformQuotient(const MonodromyData& md);

struct GeneralizedQuotients {
  FinAbGroup afn;
  std::optional<FinAbGroup> proj;  // only when d is even
};

GeneralizedQuotients generalizedQuotients(const MonodromyData& md);

// Orbits of the mod-2 monodromy on the three nonzero vectors of (Z/2)^2.
int componentCount(const MonodromyData& md);

struct RankDeficient : std::runtime_error {
  explicit RankDeficient(const std::string& what) : std::runtime_error(what) {}
};

// Alexander polynomial: gcd of the 2x2 minors of the stacked reduced
// Burau matrices minus identity, normalized. Throws RankDeficient when
// the module is not torsion.
LaurentPoly alexanderPolynomial(const MonodromyData& md);

// The abelian group underlying the Alexander module with t^(3d) = 1.
FinAbGroup alexanderAbelianInvariants(const MonodromyData& md);

// Whether Q is a quotient of one of the eight maximal groups
// Z2+Z8, Z4+Z4, Z2+Z6, Z3+Z6, Z9, Z5+Z5, Z10, Z7.
bool dihedralAdmissible(const FinAbGroup& q);

// Whether b admits a surjection onto a.
bool isQuotientOf(const FinAbGroup& a, const FinAbGroup& b);

// (|Q| - |Q x Z2|) / 2 for finite Q.
Int zSplittingCount(const FinAbGroup& q);

enum class JClass { zero, one, generic };

// Maximal uniform quotient of an isotrivial curve with invariant j in
// the given class and root multiplicity gcd r.
FinAbGroup isotrivialQuotient(JClass j, int r);

struct OkaReport {
  bool has_D6 = false;
  bool phi6_divides_delta = false;
  int component_count = 0;
  bool delta_defined = true;
};

OkaReport okaReport(const MonodromyData& md);

// Trial division of p against cyclotomics Phi_m with m | bound; returns
// (m, multiplicity) pairs and the remaining cofactor.
struct CyclotomicFactorization {
  std::vector<std::pair<int, int>> factors;
  LaurentPoly cofactor;
};

CyclotomicFactorization factorCyclotomic(const LaurentPoly& p, int bound);

}  // namespace trigmono
