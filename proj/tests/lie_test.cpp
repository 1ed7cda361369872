#include <map>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "g2forge/catalog.hpp"
#include "g2forge/lie_algebra.hpp"
#include "g2forge/parser.hpp"

using namespace g2forge;

namespace {

bool sameConstants(const LieAlgebra& a, const LieAlgebra& b) {
  if (a.dim() != b.dim()) return false;
  for (int i = 1; i <= a.dim(); ++i)
    for (int j = i + 1; j <= a.dim(); ++j)
      for (int k = 1; k <= a.dim(); ++k)
        if (!(a.structureConstant(i, j, k) == b.structureConstant(i, j, k))) return false;
  return true;
}

}  // namespace

TEST_CASE("structure equations encode brackets with the dual sign") {
  LieAlgebra so3 = Catalog::builtin().get("so3");
  // de1 = -e23 encodes [e2, e3] = e1.
  CHECK(so3.structureConstant(2, 3, 1) == Polynomial(1));
  CHECK(so3.structureConstant(1, 2, 3) == Polynomial(1));
  CHECK(so3.structureConstant(2, 1, 3) == Polynomial(-1));
  CHECK(so3.structureConstant(1, 1, 2).isZero());

  std::vector<Rational> e1{Rational(1), Rational(0), Rational(0)};
  std::vector<Rational> e2{Rational(0), Rational(1), Rational(0)};
  std::vector<Rational> expected{Rational(0), Rational(0), Rational(1)};
  CHECK(so3.bracket(e1, e2) == expected);
}

TEST_CASE("jacobi identity checking") {
  CHECK(jacobiCheck(Catalog::builtin().get("so3")).ok);
  CHECK(jacobiCheck(Catalog::builtin().get("L7_2")).ok);

  // [e1,e2] = -e2 and [e2,e3] = -e3 breaks Jacobi on (1,2,3).
  LieAlgebra bad = parseStructureEquations("(0, e12, e23)", {});
  JacobiResult r = jacobiCheck(bad);
  REQUIRE(!r.ok);
  REQUIRE(!r.violations.empty());
  CHECK(r.violations[0].i == 1);
  CHECK(r.violations[0].j == 2);
  CHECK(r.violations[0].k == 3);
  CHECK(!r.violations[0].residual.isZero());
}

TEST_CASE("unimodularity from traces of ad") {
  CHECK(isUnimodular(Catalog::builtin().get("R7")));
  CHECK(isUnimodular(Catalog::builtin().get("so3")));
  CHECK(!isUnimodular(Catalog::builtin().get("aff")));
  // One trace polynomial per basis vector; all identically zero for an
  // abelian algebra.
  auto flatConds = unimodularConditions(Catalog::builtin().get("R7"));
  CHECK(flatConds.size() == 7);
  for (const auto& c : flatConds) CHECK(c.isZero());

  // The two-parameter solvable family is unimodular exactly on the plane
  // lambda + mu + 1 = 0.
  const CatalogEntry* entry = Catalog::builtin().find("r4_mu_lambda");
  REQUIRE(entry != nullptr);
  auto conds = unimodularConditions(entry->algebra());
  REQUIRE(!conds.empty());
  std::map<std::string, Rational> onSlice{{"mu", Rational(-3, 4)}, {"lambda", Rational(-1, 4)}};
  std::map<std::string, Rational> offSlice{{"mu", Rational(1, 2)}, {"lambda", Rational(1)}};
  bool allVanishOn = true, allVanishOff = true;
  for (const auto& c : conds) {
    allVanishOn = allVanishOn && c.evaluate(onSlice).isZero();
    allVanishOff = allVanishOff && c.evaluate(offSlice).isZero();
  }
  CHECK(allVanishOn);
  CHECK(!allVanishOff);
}

TEST_CASE("killing form and semisimplicity") {
  LieAlgebra so3 = Catalog::builtin().get("so3");
  QMatrix k = killingForm(so3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(k.at(i, j) == Rational(i == j ? -2 : 0));
  CHECK(isSemisimple(so3));
  CHECK(signatureSymmetric(k) == Signature{0, 3, 0});

  LieAlgebra sl2 = Catalog::builtin().get("sl2");
  CHECK(isSemisimple(sl2));
  CHECK(signatureSymmetric(killingForm(sl2)) == Signature{2, 1, 0});

  CHECK(!isSemisimple(Catalog::builtin().get("R7")));
  CHECK(!isSemisimple(Catalog::builtin().get("aff")));
  CHECK(isSemisimple(Catalog::builtin().get("so31")));
  CHECK(isSemisimple(Catalog::builtin().get("sl2+so3")));
}

TEST_CASE("derived series and solvability") {
  DerivedSeries so3Series = derivedSeries(Catalog::builtin().get("so3"));
  CHECK(!so3Series.solvable);
  CHECK(so3Series.dims.front() == 3);

  DerivedSeries affSeries = derivedSeries(Catalog::builtin().get("aff"));
  CHECK(affSeries.solvable);
  CHECK(affSeries.dims.front() == 2);
  CHECK(affSeries.dims[1] == 1);

  CHECK(derivedSeries(Catalog::builtin().get("R+h3")).solvable);
  CHECK(!derivedSeries(Catalog::builtin().get("L7_2")).solvable);
}

TEST_CASE("center computation") {
  CHECK(centerBasis(Catalog::builtin().get("so3")).empty());
  CHECK(centerBasis(Catalog::builtin().get("R+h3")).size() == 2);
  CHECK(centerBasis(Catalog::builtin().get("R7")).size() == 7);
  CHECK(centerBasis(Catalog::builtin().get("mainthm1")).empty());
  CHECK(centerBasis(Catalog::builtin().get("L6_1+R")).size() == 1);

  // Central vectors bracket to zero with the whole basis.
  LieAlgebra g = Catalog::builtin().get("R+h3");
  for (const auto& xi : centerBasis(g)) {
    for (int i = 1; i <= g.dim(); ++i) {
      std::vector<Rational> ei(static_cast<std::size_t>(g.dim()));
      ei[static_cast<std::size_t>(i - 1)] = Rational(1);
      for (const auto& c : g.bracket(xi, ei)) CHECK(c.isZero());
    }
  }
}

TEST_CASE("direct sums shift the second factor") {
  const Catalog& cat = Catalog::builtin();
  LieAlgebra s = directSum(cat.get("so3"), cat.get("aff"));
  CHECK(s.dim() == 5);
  CHECK(s.structureConstant(1, 2, 3) == Polynomial(1));
  CHECK(s.structureConstant(4, 5, 5) == Polynomial(1));
  CHECK(s.structureConstant(3, 4, 1).isZero());

  const CatalogEntry* param = cat.find("r4_lambda");
  REQUIRE(param != nullptr);
  CHECK_THROWS_AS(directSum(param->algebra(), param->algebra()), std::invalid_argument);
  CHECK_THROWS_AS(directSum(cat.get("R7"), cat.get("R3")), std::invalid_argument);
}

TEST_CASE("central quotients stay Lie algebras") {
  LieAlgebra g = Catalog::builtin().get("R+h3");
  auto center = centerBasis(g);
  REQUIRE(!center.empty());
  CentralQuotient q = quotientByCentral(g, center.front());
  CHECK(q.algebra.dim() == 3);
  CHECK(jacobiCheck(q.algebra).ok);
  CHECK(isUnimodular(q.algebra));
  CHECK(q.droppedIndex >= 1);
  CHECK(q.droppedIndex <= 4);

  LieAlgebra n = Catalog::builtin().get("L6_1+R");
  auto zeta = centerBasis(n);
  REQUIRE(zeta.size() == 1);
  CentralQuotient qn = quotientByCentral(n, zeta.front());
  CHECK(qn.algebra.dim() == 6);
  CHECK(jacobiCheck(qn.algebra).ok);
  CHECK(isUnimodular(qn.algebra));
}

TEST_CASE("instantiation binds all parameters") {
  const CatalogEntry* entry = Catalog::builtin().find("r4_mu_lambda");
  REQUIRE(entry != nullptr);
  LieAlgebra g = entry->algebra();
  LieAlgebra gi = instantiate(g, {{"mu", Rational(1, 2)}, {"lambda", Rational(1)}});
  CHECK(!gi.hasParams());
  CHECK(jacobiCheck(gi).ok);
  CHECK_THROWS_AS(instantiate(g, {{"mu", Rational(1)}}), std::invalid_argument);
}

TEST_CASE("structure equation rendering round-trips every catalog entry") {
  for (const auto& entry : Catalog::builtin().entries()) {
    LieAlgebra g = entry.algebra();
    LieAlgebra back = parseStructureEquations(g.render(), g.params(), g.label());
    CHECK_MESSAGE(sameConstants(g, back), entry.name);
  }
}

TEST_CASE("algebra JSON round-trip") {
  const CatalogEntry* entry = Catalog::builtin().find("r4_mu_lambda");
  REQUIRE(entry != nullptr);
  LieAlgebra g = entry->algebra();
  LieAlgebra back = LieAlgebra::fromJson(g.toJson());
  CHECK(back.dim() == g.dim());
  CHECK(back.params() == g.params());
  CHECK(sameConstants(g, back));
}
