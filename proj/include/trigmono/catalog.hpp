#pragma once

#include "trigmono/presentation.hpp"
#include "trigmono/skeleton.hpp"

namespace trigmono {

/// One relation of a catalog entry. A chain item carries the image pair
/// (x, y) of its conjugator (the braid is outer * mu s1^m mu^-1 * outer^-1
/// with mu = braidFromPair(x, y)); a conjugate item carries the conjugator
/// braid explicitly; the completion item is solved from the infinity
/// identity and validated as a positive parabolic braid of its width.
struct SchemaItem {
  enum class Kind { chain, conjugate, completion } kind = Kind::chain;
  FreeWord x, y;      // chain image pair
  BraidWord outer;    // chain: outer conjugator (wheel patterns)
  BraidWord conj;     // conjugate: braid = conj * base * conj^-1
  int width = 0;      // chain exponent / region width (0 for vertex fibers)
  std::string fiber;  // "A~p", "A~0*", "A~0**", "A~1*", "D~p", "E~6"
};

struct CatalogExpected {
  FinAbGroup Q;
  int components = 0;
  std::optional<LaurentPoly> delta;
  std::optional<FinAbGroup> alexander_group;
  Int z_splitting = 0;
};

struct CatalogEntry {
  int m = 1, n = 1;
  std::string label;  // quotient tag, e.g. "Z/3+Z/3"
  CongruenceTable table;
  Skeleton skeleton;
  Census cens;
  int d = 0;
  std::vector<std::string> fiber_list;
  bool fibers_derived = false;  // widths read off the skeleton, not quoted
  std::vector<SchemaItem> schema;
  MonodromyData monodromy;
  CatalogExpected expected;
};

struct AssemblyError : std::runtime_error {
  explicit AssemblyError(const std::string& what) : std::runtime_error(what) {}
};

// All universal-curve entries, assembled and validated once.
const std::vector<CatalogEntry>& buildCatalog();

// nullptr when the pair is not in the catalog.
const CatalogEntry* findEntry(int m, int n);

struct VerifyLine {
  std::string check;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyLine> lines;
  bool allPass() const;
};

VerifyReport verify(const CatalogEntry& e);

struct GenusRow {
  int m = 0, n = 0;
  int index = 0;
  int cusps = 0;
  int genus = 0;
  bool torsion_free = false;
  bool contains_minus_id = false;
  bool genus_zero = false;
  bool covered_by_maxima = false;  // Z/m + Z/n a quotient of the eight maxima
  bool discrepancy = false;        // genus zero but not covered
};

std::vector<GenusRow> genusTable(int maxN);

// Positive parabolic braid test used for completions: the SL2 image is
// unipotent of the given signed width and the exponent sum matches.
bool isPositiveParabolicBraid(const BraidWord& b, int width);

}  // namespace trigmono
