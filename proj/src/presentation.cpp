#include "trigmono/presentation.hpp"

#include <sstream>

namespace trigmono {

namespace {

void pushRelator(std::vector<FreeWord>& out, FreeWord w) {
  if (!w.empty()) out.push_back(std::move(w));
}

}  // namespace

Presentation vanKampen(const MonodromyData& md, Flavor flavor, bool emitAllThree) {
  Presentation p;
  p.flavor = flavor;
  const int jmax = emitAllThree ? 3 : 2;
  for (const BraidWord& b : md.braids) {
    auto img = artinImages(b);
    for (int j = 0; j < jmax; ++j)
      pushRelator(p.relators, img[static_cast<size_t>(j)] * FreeWord::gen(j + 1).inverse());
  }
  if (flavor == Flavor::projective) pushRelator(p.relators, FreeWord::rho().pow(md.d));
  return p;
}

Presentation vanKampenWithSlopes(const MonodromyData& md, Flavor flavor, bool emitAllThree) {
  if (!md.slopes) throw std::invalid_argument("vanKampenWithSlopes: slopes required");
  Presentation p;
  p.flavor = flavor;
  const int jmax = emitAllThree ? 3 : 2;
  for (size_t i = 0; i < md.braids.size(); ++i) {
    const FreeWord& k = (*md.slopes)[i];
    auto img = artinImages(md.braids[i]);
    for (int j = 0; j < jmax; ++j) {
      FreeWord rel =
          k * FreeWord::gen(j + 1) * k.inverse() * img[static_cast<size_t>(j)].inverse();
      pushRelator(p.relators, std::move(rel));
    }
  }
  if (flavor == Flavor::projective) {
    FreeWord last;
    for (auto it = md.slopes->rbegin(); it != md.slopes->rend(); ++it) last = last * *it;
    last = last * FreeWord::rho().pow(md.d);
    pushRelator(p.relators, std::move(last));
  }
  return p;
}

FinAbGroup abelianization(const Presentation& p) {
  IntMat rel(static_cast<int>(p.relators.size()), 3);
  for (size_t i = 0; i < p.relators.size(); ++i)
    for (int l : p.relators[i].letters) {
      int g = (l > 0 ? l : -l) - 1;
      rel.at(static_cast<int>(i), g) += l > 0 ? 1 : -1;
    }
  return cokernel(rel, 3);
}

std::string exportPresentation(const Presentation& p, PresentationFormat format) {
  std::ostringstream os;
  if (format == PresentationFormat::cas) {
    os << "gens a1 a2 a3\n";
    for (const FreeWord& r : p.relators) os << r.str() << "\n";
    return os.str();
  }
  os << "generators: a1, a2, a3\n";
  os << (p.flavor == Flavor::projective ? "projective" : "affine") << " presentation, "
     << p.relators.size() << " relators\n";
  for (const FreeWord& r : p.relators) os << "  " << r.str() << " = 1\n";
  return os.str();
}

}  // namespace trigmono
