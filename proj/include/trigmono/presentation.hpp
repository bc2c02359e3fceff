#pragma once

#include "trigmono/monodromy.hpp"

namespace trigmono {

enum class Flavor { affine, projective };

/// Presentation on the generators a1, a2, a3.
struct Presentation {
  std::vector<FreeWord> relators;  // freely reduced, nonempty
  Flavor flavor = Flavor::affine;
};

// Relators b_i(a_j) a_j^-1 for j = 1, 2 (j = 3 follows since rho is
// fixed; emitAllThree adds it anyway); projective adds rho^d.
Presentation vanKampen(const MonodromyData& md, Flavor flavor, bool emitAllThree = false);

// Relators k_i a_j k_i^-1 (b_i(a_j))^-1; projective adds k_r ... k_1 rho^d.
Presentation vanKampenWithSlopes(const MonodromyData& md, Flavor flavor,
                                 bool emitAllThree = false);

FinAbGroup abelianization(const Presentation& p);

enum class PresentationFormat { text, cas };

std::string exportPresentation(const Presentation& p, PresentationFormat format);

}  // namespace trigmono
