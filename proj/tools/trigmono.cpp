// Command-line interface: skeletons, coset enumeration, curve invariants,
// presentations, and the universal-curve catalog.
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "trigmono/catalog.hpp"
#include "trigmono/wordio.hpp"

using namespace trigmono;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitBudget = 2;
constexpr int kExitParse = 3;

void writeOut(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream os(path);
  os << text;
}

// Split a generator list on ';' or on ',' outside brackets.
std::vector<std::string> splitGens(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
    if ((ch == ';' || (ch == ',' && depth == 0))) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

json groupJson(const FinAbGroup& g) {
  json j;
  j["rank"] = g.free_rank;
  json factors = json::array();
  for (const Int& f : g.invariant_factors) factors.push_back(f.get_str());
  j["factors"] = factors;
  j["name"] = g.str();
  return j;
}

MonodromyData parseMonodromy(const std::string& braids, int d, const std::string& slopes,
                             bool lax) {
  std::vector<BraidWord> bs;
  for (const std::string& s : splitList(braids, ';'))
    if (!s.empty()) bs.push_back(parseBraidWord(s));
  std::optional<std::vector<FreeWord>> sl;
  if (!slopes.empty()) {
    std::vector<FreeWord> ws;
    for (const std::string& s : splitList(slopes, ';'))
      if (!s.empty()) ws.push_back(parseFreeWord(s));
    sl = std::move(ws);
  }
  return MonodromyData::make(std::move(bs), d, std::move(sl), lax);
}

json invariantsJson(const MonodromyData& md) {
  json j;
  j["schema_version"] = 1;
  FinAbGroup q = maximalUniformQuotient(md);
  j["Q"] = groupJson(q);
  if (md.slopes) {
    auto gq = generalizedQuotients(md);
    j["Q_afn"] = groupJson(gq.afn);
    if (gq.proj) j["Q_proj"] = groupJson(*gq.proj);
  }
  j["components"] = componentCount(md);
  try {
    LaurentPoly delta = alexanderPolynomial(md);
    j["delta"] = delta.str();
    auto fac = factorCyclotomic(delta, md.d > 0 ? 3 * md.d : delta.highExp() + 2);
    json factors = json::array();
    for (auto [m, mult] : fac.factors) factors.push_back({{"phi", m}, {"multiplicity", mult}});
    j["delta_cyclotomic_factors"] = factors;
  } catch (const RankDeficient&) {
    j["delta"] = nullptr;
  }
  if (md.d >= 1) j["alexander_group"] = groupJson(alexanderAbelianInvariants(md));
  if (q.finite()) {
    j["z_splitting"] = zSplittingCount(q).get_str();
    j["admissible"] = dihedralAdmissible(q);
  } else {
    j["z_splitting"] = nullptr;
    j["admissible"] = false;
  }
  OkaReport oka = okaReport(md);
  j["oka"] = {{"has_D6", oka.has_D6},
              {"phi6_divides_delta", oka.phi6_divides_delta},
              {"component_count", oka.component_count}};
  return j;
}

json censusJson(const Census& c) {
  json j;
  j["index"] = c.index;
  j["genus"] = c.genus;
  j["regions"] = c.regions;
  j["torsion_free"] = c.torsion_free;
  return j;
}

int runGenusTable(int maxN, const std::string& jsonPath) {
  auto rows = genusTable(maxN);
  json out;
  out["schema_version"] = 1;
  json jrows = json::array();
  std::printf("%4s %4s %6s %6s %6s %8s %5s %s\n", "m", "n", "index", "cusps", "genus", "torsfree",
              "-id", "flags");
  for (const auto& r : rows) {
    std::string flags;
    if (r.genus_zero) flags += " genus-zero";
    if (r.discrepancy) flags += " DISCREPANCY";
    std::printf("%4d %4d %6d %6d %6d %8s %5s%s\n", r.m, r.n, r.index, r.cusps, r.genus,
                r.torsion_free ? "yes" : "no", r.contains_minus_id ? "yes" : "no", flags.c_str());
    jrows.push_back({{"m", r.m},
                     {"n", r.n},
                     {"index", r.index},
                     {"cusps", r.cusps},
                     {"genus", r.genus},
                     {"torsion_free", r.torsion_free},
                     {"contains_minus_id", r.contains_minus_id},
                     {"genus_zero", r.genus_zero},
                     {"covered_by_maxima", r.covered_by_maxima},
                     {"discrepancy", r.discrepancy}});
  }
  out["rows"] = jrows;
  if (!jsonPath.empty()) writeOut(jsonPath, out.dump(2));
  return kExitOk;
}

int runCatalog(const std::string& entry, bool doVerify, const std::string& jsonPath) {
  json out;
  out["schema_version"] = 1;
  json jentries = json::array();
  bool allPass = true;
  for (const CatalogEntry& e : buildCatalog()) {
    if (!entry.empty()) {
      auto parts = splitList(entry, ',');
      if (parts.size() != 2 || e.m != std::stoi(parts[0]) || e.n != std::stoi(parts[1]))
        continue;
    }
    json je;
    je["m"] = e.m;
    je["n"] = e.n;
    je["label"] = e.label;
    je["d"] = e.d;
    je["fibers"] = e.fiber_list;
    je["fibers_derived"] = e.fibers_derived;
    je["census"] = censusJson(e.cens);
    json braids = json::array();
    for (const BraidWord& b : e.monodromy.braids) braids.push_back(b.str());
    je["braids"] = braids;
    je["Q"] = groupJson(e.expected.Q);
    std::printf("(%d,%d) %-10s index %3d d %2d fibers:", e.m, e.n, e.label.c_str(), e.cens.index,
                e.d);
    for (const auto& f : e.fiber_list) std::printf(" %s", f.c_str());
    std::printf("%s\n", e.fibers_derived ? " (derived)" : "");
    if (doVerify) {
      VerifyReport rep = verify(e);
      json checks = json::array();
      for (const auto& line : rep.lines) {
        std::printf("  [%s] %s%s%s\n", line.pass ? "ok" : "FAIL", line.check.c_str(),
                    line.detail.empty() ? "" : ": ", line.detail.c_str());
        checks.push_back({{"check", line.check}, {"pass", line.pass}, {"detail", line.detail}});
      }
      je["checks"] = checks;
      if (!rep.allPass()) allPass = false;
    }
    jentries.push_back(je);
  }
  out["entries"] = jentries;
  if (!jsonPath.empty()) writeOut(jsonPath, out.dump(2));
  if (jentries.empty()) {
    std::cerr << "no such catalog entry\n";
    return kExitParse;
  }
  return allPass ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact monodromy toolkit for trigonal curves over the modular group"};
  app.require_subcommand(1);

  auto* genusCmd = app.add_subcommand("genus-table", "index/cusp/genus table for m | n <= N");
  int maxN = 12;
  std::string genusJsonPath;
  genusCmd->add_option("--max-n", maxN, "largest level")->required();
  genusCmd->add_option("--json", genusJsonPath, "write rows as JSON");

  auto* skelCmd = app.add_subcommand("skeleton", "skeleton of a congruence subgroup");
  int skM = 1, skN = 1;
  std::string dotPath, skelJsonPath;
  skelCmd->add_option("--m", skM, "b = 0 mod m")->required();
  skelCmd->add_option("--n", skN, "level")->required();
  skelCmd->add_option("--dot", dotPath, "write DOT to this path ('-' for stdout)");
  skelCmd->add_option("--json", skelJsonPath, "write JSON to this path ('-' for stdout)");

  auto* subCmd = app.add_subcommand("subgroup", "coset enumeration from matrix generators");
  std::string gensText;
  int budget = 100000;
  subCmd->add_option("--gens", gensText, "generators [[a,b],[c,d]];...")->required();
  subCmd->add_option("--budget", budget, "maximum number of cosets");

  auto* invCmd = app.add_subcommand("invariants", "curve invariants of a braid tuple");
  std::string braidsText, slopesText;
  int dArg = 0;
  bool lax = false;
  invCmd->add_option("--braids", braidsText, "braid words separated by ';'")->required();
  invCmd->add_option("--d", dArg, "Hirzebruch index")->required();
  invCmd->add_option("--slopes", slopesText, "slope words separated by ';'");
  invCmd->add_flag("--lax", lax, "downgrade the infinity-product check to a warning");

  auto* presCmd = app.add_subcommand("presentation", "van Kampen presentation of a braid tuple");
  std::string pBraids, pSlopes, format = "text";
  int pD = 0;
  bool projective = false, allThree = false;
  presCmd->add_option("--braids", pBraids, "braid words separated by ';'")->required();
  presCmd->add_option("--d", pD, "Hirzebruch index")->required();
  presCmd->add_option("--slopes", pSlopes, "slope words separated by ';'");
  presCmd->add_flag("--projective", projective, "add the rho^d relation");
  presCmd->add_flag("--all-generators", allThree, "emit the redundant third relator");
  presCmd->add_option("--format", format, "text | cas")->check(CLI::IsMember({"text", "cas"}));

  auto* catCmd = app.add_subcommand("catalog", "universal-curve catalog");
  std::string entryText, catJsonPath;
  bool doVerify = false;
  catCmd->add_option("--entry", entryText, "restrict to one entry M,N");
  catCmd->add_flag("--verify", doVerify, "run all checks per entry");
  catCmd->add_option("--json", catJsonPath, "write entries as JSON");

  auto* isoCmd = app.add_subcommand("isotrivial", "maximal quotient of an isotrivial curve");
  std::string jClass;
  int rArg = 0;
  isoCmd->add_option("--j", jClass, "zero | one | generic")
      ->required()
      ->check(CLI::IsMember({"zero", "one", "generic"}));
  isoCmd->add_option("--r", rArg, "gcd of the root multiplicities")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*genusCmd) return runGenusTable(maxN, genusJsonPath);

    if (*skelCmd) {
      auto ct = enumerateCongruence(skM, skN);
      auto sk = buildSkeleton(ct.table);
      auto c = census(sk, ct);
      std::printf("index %d, genus %d, %d regions, torsion %s\n", c.index, c.genus,
                  static_cast<int>(c.regions.size()), c.torsion_free ? "free" : "present");
      if (!dotPath.empty()) writeOut(dotPath, exportSkeletonDot(sk));
      if (!skelJsonPath.empty()) writeOut(skelJsonPath, exportSkeletonJson(sk, c));
      return kExitOk;
    }

    if (*subCmd) {
      std::vector<ModularWord> gens;
      for (const std::string& g : splitGens(gensText))
        gens.push_back(matrixToWord(parseMatrix(g)));
      CosetTable t = enumerateSubgroup(gens, budget);
      auto c = census(buildSkeleton(t));
      std::printf("index %d, genus %d, regions:", t.size, c.genus);
      for (int w : c.regions) std::printf(" %d", w);
      std::printf("\n");
      return kExitOk;
    }

    if (*invCmd) {
      MonodromyData md = parseMonodromy(braidsText, dArg, slopesText, lax);
      if (lax && !md.infinityHolds())
        std::cerr << "warning: braid product differs from (s2 s1)^(3d)\n";
      std::cout << invariantsJson(md).dump(2) << "\n";
      return kExitOk;
    }

    if (*presCmd) {
      MonodromyData md = parseMonodromy(pBraids, pD, pSlopes, false);
      Flavor flavor = projective ? Flavor::projective : Flavor::affine;
      Presentation p = pSlopes.empty() ? vanKampen(md, flavor, allThree)
                                       : vanKampenWithSlopes(md, flavor, allThree);
      std::cout << exportPresentation(
          p, format == "cas" ? PresentationFormat::cas : PresentationFormat::text);
      return kExitOk;
    }

    if (*catCmd) return runCatalog(entryText, doVerify, catJsonPath);

    if (*isoCmd) {
      JClass j = jClass == "zero" ? JClass::zero : jClass == "one" ? JClass::one : JClass::generic;
      FinAbGroup q = isotrivialQuotient(j, rArg);
      std::printf("maximal uniform quotient: D(%s)\n", q.str().c_str());
      return kExitOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitOk;
}
