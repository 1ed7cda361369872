#include <algorithm>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "g2forge/catalog.hpp"
#include "g2forge/certificates.hpp"
#include "g2forge/parser.hpp"

using namespace g2forge;

namespace {

PMatrix pm(const std::vector<std::vector<std::string>>& rows,
           const std::vector<std::string>& names) {
  PMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = parsePolynomialExpression(rows[i][j], names);
  return m;
}

}  // namespace

TEST_CASE("generic gram entries are homogeneous cubics") {
  LieAlgebra g = Catalog::builtin().get("so3+aff+aff");
  GramMatrix b = genericGram(g);
  CHECK(b.entries.rows() == 7);
  CHECK(b.entries.isSymmetric());
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      if (!b.entries.at(i, j).isZero()) CHECK(b.entries.at(i, j).isHomogeneous(3));
}

TEST_CASE("zero diagonal detection") {
  GramMatrix b;
  b.entries = pm({{"0", "x"}, {"x", "y"}}, {"x", "y"});
  auto cert = findZeroDiagonal(b);
  REQUIRE(cert.has_value());
  CHECK(cert->kind == CertificateKind::ZeroDiagonal);
  CHECK(cert->zeroIndices == std::vector<int>{1});

  GramMatrix none;
  none.entries = pm({{"x", "0"}, {"0", "y"}}, {"x", "y"});
  CHECK(!findZeroDiagonal(none).has_value());
}

TEST_CASE("default diagonal combinations") {
  auto combos = defaultDiagonalCombos(7);
  CHECK(combos.size() == 28);  // 7 singletons + 21 pairs
  CHECK(combos.front() == std::vector<int>{1});
  CHECK(std::find(combos.begin(), combos.end(), std::vector<int>{6, 7}) != combos.end());
}

TEST_CASE("diagonal product certificate on the worked example") {
  LieAlgebra g = Catalog::builtin().get("so3+aff+aff");
  GramMatrix b = genericGram(g);
  CHECK(!findZeroDiagonal(b).has_value());

  auto cert = findDiagonalProduct(b, {{5}, {7}});
  REQUIRE(cert.has_value());
  CHECK(cert->kind == CertificateKind::DiagonalProduct);
  CHECK(cert->sign1 * cert->sign2 == -1);
  CHECK(!cert->sos1.squares.empty());
  CHECK(!cert->sos2.squares.empty());
  std::string why;
  CHECK_MESSAGE(verifyCertificate(g, *cert, &why), why);

  // The default scan also finds some product on this algebra.
  CHECK(findDiagonalProduct(b).has_value());
}

TEST_CASE("subspace minor certificates") {
  LieAlgebra g = Catalog::builtin().get("sl2+aff+aff");
  GramMatrix b = genericGram(g);
  std::vector<Rational> e6(7), e7(7);
  e6[5] = Rational(1);
  e7[6] = Rational(1);
  auto cert = subspaceMinorCertificate(b, {e6, e7});
  REQUIRE(cert.has_value());
  CHECK(cert->kind == CertificateKind::SubspaceMinor);
  CHECK(!cert->minorRoute.empty());
  std::string why;
  CHECK_MESSAGE(verifyCertificate(g, *cert, &why), why);

  // One-dimensional restriction with an identically vanishing entry.
  LieAlgebra h = Catalog::builtin().get("sl2+d4_lambda", {{"lambda", Rational(1)}});
  GramMatrix bh = genericGram(h);
  auto one = subspaceMinorCertificate(bh, {e7});
  REQUIRE(one.has_value());
  CHECK(one->minorRoute == "zero-determinant");
  CHECK(verifyCertificate(h, *one));

  // No certificate on a definite direction.
  LieAlgebra r7 = Catalog::builtin().get("R7");
  GramMatrix br = genericGram(r7);
  std::vector<Rational> e1(7);
  e1[0] = Rational(1);
  CHECK(!subspaceMinorCertificate(br, {e1}).has_value());
}

TEST_CASE("scripted chain for the rank-one-free closed space") {
  LieAlgebra g = Catalog::builtin().get("L7_6");
  Certificate cert = verifyL76(g);
  CHECK(cert.kind == CertificateKind::ScriptedL76);
  CHECK(!cert.identities.empty());
  std::string why;
  CHECK_MESSAGE(verifyCertificate(g, cert, &why), why);

  // The chain's preconditions fail on an algebra with a different shape.
  CHECK_THROWS_AS(verifyL76(Catalog::builtin().get("L7_2")), std::domain_error);
}

TEST_CASE("obstruct orchestration on documented cases") {
  const Catalog& cat = Catalog::builtin();

  auto h4 = obstruct(cat.get("so3+h4"));
  REQUIRE(h4.has_value());
  CHECK(h4->kind == CertificateKind::ZeroDiagonal);
  CHECK(h4->zeroIndices == std::vector<int>{7});

  auto l76 = obstruct(cat.get("L7_6"));
  REQUIRE(l76.has_value());
  CHECK(l76->kind == CertificateKind::ScriptedL76);

  auto l72 = obstruct(cat.get("L7_2"));
  REQUIRE(l72.has_value());
  CHECK(l72->kind == CertificateKind::ZeroDiagonal);
  CHECK(l72->zeroIndices == std::vector<int>{4, 5, 6, 7});

  // Algebras that admit closed structures yield no certificate.
  CHECK(!obstruct(cat.get("sl2+r4_-1/2")).has_value());
  CHECK(!obstruct(cat.get("mainthm4")).has_value());
  CHECK(!obstruct(cat.get("R7")).has_value());
}

TEST_CASE("certificates survive JSON round-trips") {
  const Catalog& cat = Catalog::builtin();
  for (const char* name : {"so3+h4", "so3+aff+aff", "L7_6", "L7_2"}) {
    LieAlgebra g = cat.get(name);
    auto cert = obstruct(g);
    REQUIRE_MESSAGE(cert.has_value(), name);

    nlohmann::json j = cert->toJson();
    CHECK(j.contains("kind"));
    CHECK(j.contains("text"));
    REQUIRE(j.contains("residuals"));
    for (const auto& r : j["residuals"]) CHECK(r.get<std::string>() == "0");

    Certificate back = Certificate::fromJson(j);
    CHECK(back.kind == cert->kind);
    std::string why;
    CHECK_MESSAGE(verifyCertificate(g, back, &why), why);
  }
}

TEST_CASE("tampered certificates are rejected") {
  const Catalog& cat = Catalog::builtin();

  LieAlgebra g = cat.get("so3+h4");
  auto zero = obstruct(g);
  REQUIRE(zero.has_value());
  Certificate tampered = *zero;
  tampered.zeroIndices.push_back(1);
  CHECK(!verifyCertificate(g, tampered));

  LieAlgebra a = cat.get("so3+aff+aff");
  auto prod = findDiagonalProduct(genericGram(a), {{5}, {7}});
  REQUIRE(prod.has_value());
  Certificate wrongFactor = *prod;
  wrongFactor.factor = wrongFactor.factor + Polynomial(1);
  CHECK(!verifyCertificate(a, wrongFactor));
  Certificate wrongSign = *prod;
  wrongSign.sign1 = -wrongSign.sign1;
  CHECK(!verifyCertificate(a, wrongSign));

  // A certificate for one algebra must not verify against another.
  CHECK(!verifyCertificate(cat.get("R7"), *zero));
}

TEST_CASE("definiteness sampling") {
  const Catalog& cat = Catalog::builtin();

  SampleCounts obstructed = sampleDefiniteness(cat.get("so3+d4"), 1000, 1);
  CHECK(obstructed.definite == 0);
  CHECK(obstructed.definite + obstructed.indefinite + obstructed.singular == 1000);

  // Definite forms are rare under this sampling measure (about 1 in 1000 on
  // the abelian algebra), so a few thousand trials are needed to see one.
  SampleCounts flat = sampleDefiniteness(cat.get("R7"), 2000, 1);
  CHECK(flat.definite > 0);

  // Counter-based randomness: thread count cannot change the counts.
  CHECK(sampleDefiniteness(cat.get("so3+d4"), 300, 7, false) ==
        sampleDefiniteness(cat.get("so3+d4"), 300, 7, true));
}

TEST_CASE("counter random generator is a pure function") {
  CHECK(counterRandom(1, 2, 3) == counterRandom(1, 2, 3));
  CHECK(counterRandom(1, 2, 3) != counterRandom(1, 2, 4));
  CHECK(counterRandom(1, 2, 3) != counterRandom(2, 2, 3));
  std::vector<std::uint64_t> draws;
  for (int i = 0; i < 1000; ++i) draws.push_back(counterRandom(9, 0, static_cast<std::uint64_t>(i)));
  std::sort(draws.begin(), draws.end());
  CHECK(std::unique(draws.begin(), draws.end()) == draws.end());
}
