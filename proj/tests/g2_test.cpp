#include <cmath>
#include <map>
#include <vector>

#include "doctest.h"
#include "g2forge/catalog.hpp"
#include "g2forge/g2.hpp"
#include "g2forge/kform.hpp"
#include "g2forge/parser.hpp"

using namespace g2forge;

namespace {

const char* kPhi0 = "e123+e145+e167+e246-e257-e347-e356";

// Oracle for the bilinear map: contract along basis directions by hand and
// expand (iota_i phi) ^ (iota_j phi) ^ phi term by term, then read off the
// top coefficient. Shares nothing with the bMatrix implementation beyond the
// wedge primitive.
Polynomial oracleB(const KForm& phi, int i, int j) {
  auto interior = [](const KForm& f, int idx) {
    KForm out(f.dim(), f.degree() - 1);
    for (const auto& [mask, c] : f.coefficients()) {
      Mask bit = Mask(1) << (idx - 1);
      if (!(mask & bit)) continue;
      int pos = 0;
      for (int b = 0; b < idx - 1; ++b)
        if (mask & (Mask(1) << b)) ++pos;
      Polynomial signedC = (pos % 2 == 0) ? c : -c;
      out.addTerm(mask & ~bit, signedC);
    }
    return out;
  };
  KForm prod = wedge(wedge(interior(phi, i), interior(phi, j)), phi);
  Polynomial top = prod.coefficient(multiindex::fullMask(7));
  return Rational(1, 6) * top;
}

KForm scaleForm(const KForm& f, const Rational& c) {
  KForm out = f;
  out.scale(Polynomial(c));
  return out;
}

}  // namespace

TEST_CASE("flat baseline: the reference 3-form induces the identity metric") {
  LieAlgebra r7 = Catalog::builtin().get("R7");
  KForm phi0 = parseForm(kPhi0, 7, 3);

  QMatrix b = bMatrixRational(r7, phi0);
  CHECK(b == QMatrix::identity(7));
  for (int i = 1; i <= 7; ++i)
    for (int j = i; j <= 7; ++j)
      CHECK(oracleB(phi0, i, j) == Polynomial(i == j ? 1 : 0));

  G2Verdict v = isG2(r7, phi0);
  CHECK(v.closed);
  CHECK(v.stable);
  CHECK(v.definiteSign == 1);
  CHECK(v.detB == Rational(1));
  CHECK(v.isClosedG2());
  CHECK(v.hasMetric);
  CHECK(v.volumeCoeff == doctest::Approx(1.0));
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      CHECK(v.metricNumeric.at(i, j) == doctest::Approx(i == j ? 1.0 : 0.0));
  CHECK(isCoclosedNumeric(r7, phi0));
}

TEST_CASE("bilinear map matches the oracle on a non-flat example") {
  LieAlgebra g = Catalog::builtin().get("L7_3", {{"a", Rational(-2)}});
  KForm phi = parseForm("e157-e235-e267-3*e124-e126+e134-e136-e456+e367+e247", 7, 3);
  GramMatrix b = bMatrix(g, phi);
  for (int i = 1; i <= 7; ++i)
    for (int j = 1; j <= 7; ++j) CHECK(b.entries.at(i - 1, j - 1) == oracleB(phi, i, j));
}

TEST_CASE("orientation flip negates the gram matrix") {
  LieAlgebra r7 = Catalog::builtin().get("R7");
  KForm phi0 = parseForm(kPhi0, 7, 3);
  QMatrix flipped = bMatrixRational(r7, phi0, -1);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) CHECK(flipped.at(i, j) == -Rational(i == j ? 1 : 0));
}

TEST_CASE("cubic scaling law is exact") {
  LieAlgebra r7 = Catalog::builtin().get("R7");
  KForm phi0 = parseForm(kPhi0, 7, 3);
  QMatrix base = bMatrixRational(r7, phi0);
  for (const Rational& lam : {Rational(2), Rational(-3), Rational(5, 7)}) {
    QMatrix scaled = bMatrixRational(r7, scaleForm(phi0, lam));
    Rational cube = lam.pow(3);
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) CHECK(scaled.at(i, j) == cube * base.at(i, j));
  }
}

TEST_CASE("metric scaling law holds numerically") {
  LieAlgebra g = Catalog::builtin().get("mainthm1");
  KForm phi = parseForm(
      "-e147+2*e236+2*e237+e245+e247-2*e125+4*e127-2*e135-4*e137+e146+e347-e345+e567", 7, 3);
  G2Verdict v = isG2(g, phi);
  REQUIRE(v.isClosedG2());
  for (const Rational& lam : {Rational(2), Rational(1, 3), Rational(7, 4)}) {
    G2Verdict vs = isG2(g, scaleForm(phi, lam));
    REQUIRE(vs.isClosedG2());
    double factor = std::pow(lam.toDouble(), 2.0 / 3.0);
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j)
        CHECK(vs.metricNumeric.at(i, j) ==
              doctest::Approx(factor * v.metricNumeric.at(i, j)).epsilon(1e-10));
  }
}

TEST_CASE("degenerate forms are rejected as unstable") {
  LieAlgebra r7 = Catalog::builtin().get("R7");
  KForm degenerate = parseForm("e123", 7, 3);
  G2Verdict v = isG2(r7, degenerate);
  CHECK(v.closed);
  CHECK(!v.stable);
  CHECK(v.definiteSign == 0);
  CHECK(!v.isClosedG2());
  CHECK(!v.hasMetric);
}

TEST_CASE("stable indefinite forms carry no metric") {
  LieAlgebra r7 = Catalog::builtin().get("R7");
  // Flipping one summand of the reference form yields a stable 3-form whose
  // bilinear form is indefinite.
  KForm phi = parseForm("e123+e145+e167+e246-e257-e347+e356", 7, 3);
  G2Verdict v = isG2(r7, phi);
  CHECK(v.stable);
  CHECK(v.definiteSign == 0);
  CHECK(!v.isClosedG2());
}

TEST_CASE("negative definite sign still yields a positive metric") {
  LieAlgebra r7 = Catalog::builtin().get("R7");
  KForm phi0 = parseForm(kPhi0, 7, 3);
  KForm minus = scaleForm(phi0, Rational(-1));
  G2Verdict v = isG2(r7, minus);
  CHECK(v.definiteSign == -1);
  CHECK(v.isClosedG2());
  REQUIRE(v.hasMetric);
  for (int i = 0; i < 7; ++i) CHECK(v.metricNumeric.at(i, i) > 0.0);
}

TEST_CASE("hodge star is an involution for the induced metric") {
  LieAlgebra r7 = Catalog::builtin().get("R7");
  KForm phi0 = parseForm(kPhi0, 7, 3);
  for (const char* text : {"e1", "e4-2*e7"}) {
    KForm alpha = parseForm(text, 7, 1);
    NumericForm twice = hodgeStarNumeric(r7, phi0, hodgeStarNumeric(r7, phi0, alpha));
    NumericForm direct = toNumeric(alpha);
    for (const auto& [m, c] : direct.coefficients())
      CHECK(twice.coefficient(m) == doctest::Approx(c).epsilon(1e-12));
    for (const auto& [m, c] : twice.coefficients())
      CHECK(direct.coefficient(m) == doctest::Approx(c).epsilon(1e-12));
  }
  // *phi0 is the standard coassociative 4-form; phi0 ^ *phi0 = 7 vol.
  NumericForm star = hodgeStarNumeric(r7, phi0, phi0);
  NumericForm prod = wedge(toNumeric(parseForm(kPhi0, 7, 3)), star);
  CHECK(prod.coefficient(multiindex::fullMask(7)) == doctest::Approx(7.0));
}

TEST_CASE("coclosedness flags the torsion-free case only") {
  const Catalog& cat = Catalog::builtin();
  CHECK(isCoclosedNumeric(cat.get("R7"), parseForm(kPhi0, 7, 3)));
  LieAlgebra g = cat.get("L7_3", {{"a", Rational(-2)}});
  KForm phi = parseForm("e157-e235-e267-3*e124-e126+e134-e136-e456+e367+e247", 7, 3);
  CHECK(isG2(g, phi).isClosedG2());
  CHECK(!isCoclosedNumeric(g, phi, 1e-6));
}

TEST_CASE("symplectic check in dimension at most six") {
  LieAlgebra r6 = Catalog::builtin().get("R6");
  CHECK(symplecticCheck(r6, parseForm("e12+e34+e56", 6, 2)));
  CHECK(!symplecticCheck(r6, parseForm("e12+e34", 6, 2)));  // degenerate
  LieAlgebra n = parseStructureEquations("(0, 0, e12, 0, 0, 0)", {});
  CHECK(!symplecticCheck(n, parseForm("e34+e56+e12", 6, 2)));  // not closed
}

TEST_CASE("central contraction produces the quotient symplectic candidate") {
  LieAlgebra r7 = Catalog::builtin().get("R7");
  KForm phi0 = parseForm(kPhi0, 7, 3);
  std::vector<Rational> e1{Rational(1), Rational(0), Rational(0), Rational(0),
                           Rational(0), Rational(0), Rational(0)};
  ContractionResult r = centralContraction(r7, phi0, e1);
  CHECK(r.quotient.algebra.dim() == 6);
  CHECK(r.quotient.droppedIndex == 1);
  CHECK(r.omega == parseForm("e12+e34+e56", 6, 2));
  CHECK(symplecticCheck(r.quotient.algebra, r.omega));
}
