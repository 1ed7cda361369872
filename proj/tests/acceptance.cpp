// Acceptance gate: one pass/fail line per criterion, exit = number of
// failures. Criteria 3-7 run the reproduction pipelines in-process and
// require every check to pass.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "commands.hpp"
#include "g2forge/catalog.hpp"
#include "g2forge/certificates.hpp"
#include "g2forge/closed_space.hpp"
#include "g2forge/g2.hpp"
#include "g2forge/kform.hpp"
#include "g2forge/lie_algebra.hpp"
#include "g2forge/linalg.hpp"
#include "g2forge/parser.hpp"
#include "g2forge/search.hpp"

namespace {

using namespace g2forge;

const char* kPhi0 = "e123+e145+e167+e246-e257-e347-e356";

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

std::vector<std::pair<LieAlgebra, Certificate>> producedCertificates;

double elapsedMs(std::chrono::steady_clock::time_point start) {
  auto now = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(now - start).count();
}

// Independent oracle for criterion 1: expands
// (iota_i phi) ^ (iota_j phi) ^ phi with its own sign bookkeeping.
int bitsBelow(Mask m, int i) {
  int count = 0;
  for (int b = 0; b < i - 1; ++b)
    if (m >> b & 1) ++count;
  return count;
}

int shuffleSign(Mask a, Mask b) {
  int inversions = 0;
  for (int x = 0; x < 7; ++x) {
    if (!(b >> x & 1)) continue;
    for (int y = x + 1; y < 7; ++y)
      if (a >> y & 1) ++inversions;
  }
  return inversions % 2 == 0 ? 1 : -1;
}

Rational oracleEntry(const KForm& phi, int i, int j) {
  Rational total;
  for (const auto& [ma, ca] : phi.coefficients()) {
    if (!(ma >> (i - 1) & 1)) continue;
    Mask ra = ma & ~(Mask(1) << (i - 1));
    int sa = bitsBelow(ma, i) % 2 == 0 ? 1 : -1;
    for (const auto& [mb, cb] : phi.coefficients()) {
      if (!(mb >> (j - 1) & 1)) continue;
      Mask rb = mb & ~(Mask(1) << (j - 1));
      if ((ra & rb) != 0) continue;
      int sb = bitsBelow(mb, j) % 2 == 0 ? 1 : -1;
      for (const auto& [mc, cc] : phi.coefficients()) {
        if (((ra | rb) & mc) != 0) continue;
        if ((ra | rb | mc) != multiindex::fullMask(7)) continue;
        int sign = sa * sb * shuffleSign(ra, rb) * shuffleSign(ra | rb, mc);
        total += Rational(sign) * (ca * cb * cc).constantValue();
      }
    }
  }
  return total / Rational(6);
}

Outcome criterionFlatBaseline() {
  Outcome out;
  const Catalog& cat = Catalog::builtin();
  LieAlgebra g = cat.get("R7");
  KForm phi = parseForm(kPhi0, 7, 3);

  GramMatrix b = bMatrix(g, phi);
  PMatrix id = liftToPolynomial(QMatrix::identity(7));
  out.expect(b.entries == id, "bMatrix is not the identity");

  for (int i = 1; i <= 7; ++i)
    for (int j = i; j <= 7; ++j) {
      Rational want(i == j ? 1 : 0);
      if (oracleEntry(phi, i, j) != want) {
        out.expect(false, "oracle disagrees at (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
      }
    }

  G2Verdict verdict = isG2(g, phi);
  out.expect(verdict.closed, "phi0 not closed");
  out.expect(verdict.stable, "phi0 not stable");
  out.expect(verdict.detB == Rational(1), "det b != 1");
  out.expect(verdict.definiteSign == 1, "b not positive definite");
  out.expect(isCoclosedNumeric(g, phi), "phi0 not co-closed");
  return out;
}

Outcome criterionWorkedExample() {
  Outcome out;
  auto start = std::chrono::steady_clock::now();

  LieAlgebra g = Catalog::builtin().get("so3+aff+aff");
  ClosedFormSpace space = closedSpace(g, 3);
  out.expect(space.dimension() == 16,
             "closed-space dimension " + std::to_string(space.dimension()));

  GramMatrix gram = genericGram(g, space);
  Polynomial g55 =
      parsePolynomialExpression("-p567*(p235^2+p245^2+p345^2)", space.freeVars);
  Polynomial g77 =
      parsePolynomialExpression("p567*(p237^2+p267^2+p367^2)", space.freeVars);
  out.expect(gram.entries.at(4, 4) == g55, "entry (5,5) mismatch");
  out.expect(gram.entries.at(6, 6) == g77, "entry (7,7) mismatch");

  std::optional<Certificate> cert = obstruct(g);
  out.expect(cert.has_value(), "no certificate");
  if (cert) {
    out.expect(cert->kind == CertificateKind::DiagonalProduct,
               std::string("kind ") + certificateKindName(cert->kind));
    producedCertificates.emplace_back(g, *cert);
  }

  double ms = elapsedMs(start);
  out.expect(ms < 5000.0, "runtime " + std::to_string(ms) + " ms");
  return out;
}

Outcome reproduceTarget(const std::string& target) {
  Outcome out;
  namespace fs = std::filesystem;
  fs::path path = fs::temp_directory_path() / ("g2forge-acceptance-" + target + ".json");

  cli::ReproduceArgs args;
  args.target = target;
  cli::OutputOptions opts;
  opts.json = true;
  opts.outPath = path.string();
  int code = cli::runReproduce(args, opts);
  out.expect(code == 0, "exit code " + std::to_string(code));

  std::ifstream in(path);
  if (!in.good()) {
    out.expect(false, "missing report file");
    return out;
  }
  nlohmann::json doc = nlohmann::json::parse(in);
  fs::remove(path);

  long failed = doc["results"]["failed"].get<long>();
  if (failed != 0) {
    int shown = 0;
    for (const auto& check : doc["results"]["checks"]) {
      if (check["ok"].get<bool>() || shown >= 3) continue;
      out.expect(false, check["name"].get<std::string>());
      ++shown;
    }
    out.expect(false, std::to_string(failed) + " checks failed");
  }
  return out;
}

std::vector<std::map<std::string, Rational>> sampleBindings(const CatalogEntry& entry) {
  if (entry.params.empty()) return {{}};
  std::vector<Rational> grid = {Rational(1, 2),  Rational(-1, 2), Rational(2),
                                Rational(-3, 4), Rational(1),     Rational(-2),
                                Rational(1, 4),  Rational(-1, 4), Rational(3),
                                Rational(0),     Rational(-1),    Rational(1, 3)};
  std::vector<std::map<std::string, Rational>> found;
  auto admissible = [&](const std::map<std::string, Rational>& b) {
    for (const auto& c : entry.constraints)
      if (!c.satisfiedAt(b)) return false;
    return true;
  };
  if (entry.params.size() == 1) {
    for (const Rational& v : grid) {
      std::map<std::string, Rational> b = {{entry.params[0], v}};
      if (admissible(b)) found.push_back(b);
      if (found.size() == 4) break;
    }
  } else {
    for (const Rational& v : grid) {
      for (const Rational& w : grid) {
        std::map<std::string, Rational> b = {{entry.params[0], v},
                                             {entry.params[1], w}};
        if (admissible(b)) found.push_back(b);
        if (found.size() == 4) return found;
      }
    }
  }
  return found;
}

// Binding on the vanishing locus of a conditional tag, if the candidate grid
// hits one inside the parameter domain.
std::optional<std::map<std::string, Rational>> onLocus(const CatalogEntry& entry,
                                                       const ConditionalTag& tag) {
  std::vector<Rational> grid = {Rational(0),     Rational(-1),    Rational(-2),
                                Rational(-1, 2), Rational(-1, 4), Rational(-3, 4),
                                Rational(1),     Rational(1, 2),  Rational(2)};
  auto admissible = [&](const std::map<std::string, Rational>& b) {
    for (const auto& c : entry.constraints)
      if (!c.satisfiedAt(b)) return false;
    return tag.condition.evaluate(b).isZero();
  };
  if (entry.params.size() == 1) {
    for (const Rational& v : grid) {
      std::map<std::string, Rational> b = {{entry.params[0], v}};
      if (admissible(b)) return b;
    }
  } else if (entry.params.size() == 2) {
    for (const Rational& v : grid)
      for (const Rational& w : grid) {
        std::map<std::string, Rational> b = {{entry.params[0], v},
                                             {entry.params[1], w}};
        if (admissible(b)) return b;
      }
  }
  return std::nullopt;
}

Outcome criterionClassificationLists() {
  Outcome out;
  const Catalog& cat = Catalog::builtin();

  // Unimodular sublist of the seven indecomposables.
  CatalogFilter uniTable1;
  uniTable1.tag = "unimodular";
  uniTable1.group = "1";
  std::vector<std::string> names;
  for (const CatalogEntry* e : cat.list(uniTable1)) names.push_back(e->name);
  std::vector<std::string> wantUni = {"L7_2", "L7_3", "L7_6", "L7_7"};
  out.expect(names == wantUni, "table-1 unimodular list mismatch");

  // Nontrivial-center sublist of the sixteen four-dimensional radicals.
  CatalogFilter center;
  center.tag = "nontrivial-center";
  center.group = "solvable4";
  names.clear();
  for (const CatalogEntry* e : cat.list(center)) names.push_back(e->name);
  std::vector<std::string> wantCenter = {"R4",          "R+h3", "R+r3",
                                         "R+r3_lambda", "R+r3p_lambda",
                                         "n4",          "r4_lambda",
                                         "d4",          "d4p_lambda"};
  out.expect(names == wantCenter, "nontrivial-center list mismatch");

  // Stored tags must agree with recomputation everywhere we can sample.
  for (const CatalogEntry& entry : cat.entries()) {
    if (entry.group != "table1" && entry.group != "solvable4") continue;
    LieAlgebra symbolic = entry.algebra();
    for (const auto& b : sampleBindings(entry)) {
      LieAlgebra inst = entry.params.empty() ? symbolic : instantiate(symbolic, b);
      bool uni = isUnimodular(inst);
      bool cen = !centerBasis(inst).empty();
      if (uni != entry.unimodular.holdsAt(b))
        out.expect(false, entry.name + ": unimodular tag mismatch");
      if (cen != entry.centerNontrivial.holdsAt(b))
        out.expect(false, entry.name + ": center tag mismatch");
    }
    for (const ConditionalTag* tag : {&entry.unimodular, &entry.centerNontrivial}) {
      if (tag->state != ConditionalTag::State::conditional) continue;
      auto locus = onLocus(entry, *tag);
      if (!locus) continue;
      LieAlgebra inst = instantiate(symbolic, *locus);
      bool computed = tag == &entry.unimodular ? isUnimodular(inst)
                                               : !centerBasis(inst).empty();
      if (!computed) out.expect(false, entry.name + ": tag fails on its locus");
    }
  }
  return out;
}

Outcome criterionSemisimpleSymplectic() {
  Outcome out;
  const Catalog& cat = Catalog::builtin();
  for (const std::string& name : {"so31", "sl2+sl2", "sl2+so3", "so3+so3"}) {
    LieAlgebra g = cat.get(name);
    ClosedFormSpace space = closedSpace(g, 2);
    KForm cube = wedgePower(space.genericElement, 3);
    out.expect(cube.isZero(), name + ": omega^3 != 0");
  }
  return out;
}

Outcome criterionSearch() {
  Outcome out;
  const Catalog& cat = Catalog::builtin();

  struct Target {
    std::string name;
    std::map<std::string, Rational> bindings;
  };
  std::vector<Target> positive = {
      {"mainthm1", {}},
      {"mainthm2", {{"mu", Rational(-3, 4)}}},
      {"mainthm2", {{"mu", Rational(-1, 2)}}},
      {"mainthm3", {{"mu", Rational(1)}}},
      {"mainthm3", {{"mu", Rational(2)}}},
      {"mainthm4", {}},
  };
  for (const Target& t : positive) {
    LieAlgebra g = cat.get(t.name, t.bindings);
    auto start = std::chrono::steady_clock::now();
    SearchResult r = searchClosedG2(g);
    double ms = elapsedMs(start);
    out.expect(r.found, t.name + ": no certified form");
    if (r.found)
      out.expect(r.verdict.isClosedG2(), t.name + ": verdict not a closed G2");
    out.expect(ms < 60000.0, t.name + ": " + std::to_string(ms) + " ms");
  }

  std::vector<std::string> obstructed = {"so3+aff+aff", "so3+h4",  "so3+d4",
                                         "sl2+aff+aff", "sl2+h4", "L7_2"};
  for (const std::string& name : obstructed) {
    LieAlgebra g = cat.get(name);
    SearchResult r = searchClosedG2(g);
    out.expect(!r.found, name + ": search unexpectedly certified a form");
    SampleCounts counts = sampleDefiniteness(g, 1000, 1);
    out.expect(counts.definite == 0,
               name + ": " + std::to_string(counts.definite) + " definite samples");
    std::optional<Certificate> cert = obstruct(g);
    out.expect(cert.has_value(), name + ": no obstruction certificate");
    if (cert) producedCertificates.emplace_back(g, *cert);
  }
  return out;
}

Outcome criterionPropertySuites() {
  Outcome out;
  const Catalog& cat = Catalog::builtin();

  // d compose d vanishes symbolically on every entry.
  for (const CatalogEntry& entry : cat.entries()) {
    LieAlgebra g = entry.algebra();
    for (int k = 1; k <= std::min(3, g.dim() - 1); ++k) {
      KForm dd = ceDiff(g, ceDiff(g, genericForm(g, k)));
      if (!dd.isZero()) out.expect(false, entry.name + ": d(d(.)) != 0 at k=" + std::to_string(k));
    }
  }

  // Cubic scaling of b, compatible metric scaling.
  LieAlgebra r7 = cat.get("R7");
  KForm phi0 = parseForm(kPhi0, 7, 3);
  std::vector<Mask> masks = multiindex::subsets(7, 3);
  int definiteDraws = 0;
  for (int trial = 0; trial < 50; ++trial) {
    KForm phi = phi0;
    for (std::size_t m = 0; m < masks.size(); ++m) {
      std::uint64_t r = counterRandom(11, static_cast<std::uint64_t>(trial), m);
      long num = static_cast<long>(r % 5) - 2;
      phi.addTerm(masks[m], Polynomial(Rational(num, 64)));
    }
    std::uint64_t r = counterRandom(12, static_cast<std::uint64_t>(trial), 0);
    Rational lambda(1 + static_cast<long>(r % 5), 1 + static_cast<long>(r >> 8 & 3));

    KForm scaled = phi;
    scaled.scale(Polynomial(lambda));
    QMatrix b = bMatrixRational(r7, phi);
    QMatrix bScaled = bMatrixRational(r7, scaled);
    QMatrix want(7, 7);
    Rational cube = lambda.pow(3);
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) want.at(i, j) = cube * b.at(i, j);
    if (!(bScaled == want)) out.expect(false, "cubic scaling failed at trial " + std::to_string(trial));

    G2Verdict base = isG2(r7, phi);
    G2Verdict after = isG2(r7, scaled);
    if (base.definiteSign != 1) {
      out.expect(false, "perturbed form not definite at trial " + std::to_string(trial));
      continue;
    }
    ++definiteDraws;
    double factor = rationalPowDouble(lambda, 2.0 / 3.0);
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) {
        double diff = after.metricNumeric.at(i, j) - factor * base.metricNumeric.at(i, j);
        if (diff < -1e-8 || diff > 1e-8) {
          out.expect(false, "metric scaling off at trial " + std::to_string(trial));
          i = j = 7;
        }
      }
  }
  out.expect(definiteDraws == 50, "expected 50 definite draws");

  // Widen the re-verification pool to cover all four certificate kinds.
  LieAlgebra l76 = cat.get("L7_6");
  producedCertificates.emplace_back(l76, verifyL76(l76));
  LieAlgebra mixed = cat.get("sl2+aff+aff");
  GramMatrix mixedGram = genericGram(mixed);
  std::vector<Rational> e6(7), e7(7);
  e6[5] = Rational(1);
  e7[6] = Rational(1);
  std::optional<Certificate> minor = subspaceMinorCertificate(mixedGram, {e6, e7});
  out.expect(minor.has_value(), "no subspace-minor certificate for sl2+aff+aff");
  if (minor) producedCertificates.emplace_back(mixed, *minor);

  out.expect(!producedCertificates.empty(), "no certificates were produced");
  for (const auto& [g, cert] : producedCertificates) {
    std::string text = cert.toJson().dump();
    Certificate round = Certificate::fromJson(nlohmann::json::parse(text));
    std::string why;
    if (!verifyCertificate(g, round, &why))
      out.expect(false, g.label() + ": reverify failed: " + why);
  }
  return out;
}

}  // namespace

int main() {
  struct Row {
    std::string title;
    Outcome (*run)();
  };
  std::vector<Row> rows = {
      {"1. flat baseline b(phi0) = identity", criterionFlatBaseline},
      {"2. worked example closed space and product certificate", criterionWorkedExample},
      {"3. reproduce prop4.6", [] { return reproduceTarget("prop4.6"); }},
      {"4. reproduce prop4.8", [] { return reproduceTarget("prop4.8"); }},
      {"5. reproduce prop4.7", [] { return reproduceTarget("prop4.7"); }},
      {"6. reproduce prop5.1", [] { return reproduceTarget("prop5.1"); }},
      {"7. reproduce prop5.2", [] { return reproduceTarget("prop5.2"); }},
      {"8. unimodularity and center classification lists", criterionClassificationLists},
      {"9. semisimple symplectic obstruction", criterionSemisimpleSymplectic},
      {"10. search finds certified forms, absence certified", criterionSearch},
      {"11. property suites and certificate round-trips", criterionPropertySuites},
  };

  int failures = 0;
  for (const Row& row : rows) {
    Outcome out;
    try {
      out = row.run();
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    if (out.ok) {
      std::printf("[PASS] %s\n", row.title.c_str());
    } else {
      std::printf("[FAIL] %s: %s\n", row.title.c_str(), out.detail.c_str());
      ++failures;
    }
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(rows.size()) - failures,
              rows.size());
  return failures;
}
