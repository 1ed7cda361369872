#include <map>
#include <stdexcept>

#include "doctest.h"
#include "g2forge/parser.hpp"
#include "g2forge/polynomial.hpp"
#include "g2forge/rational.hpp"
#include "g2forge/sos.hpp"

using namespace g2forge;

namespace {
Polynomial P(const std::string& text) {
  return parsePolynomialExpression(text, {"x", "y", "z", "s", "mu"});
}
}  // namespace

TEST_CASE("rational parsing and canonical form") {
  CHECK(Rational::fromString("-3/4") == Rational(-3, 4));
  CHECK(Rational::fromString("2/4") == Rational(1, 2));
  CHECK(Rational::fromString("2/4").toString() == "1/2");
  CHECK(Rational::fromString("5").isInteger());
  CHECK(Rational::fromString("0").isZero());
  CHECK(Rational::fromString("+7/3") == Rational(7, 3));
  CHECK_THROWS_AS(Rational::fromString("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::fromString("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::fromString(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::fromString("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic") {
  Rational a(3, 4), b(-5, 6);
  CHECK(a + b == Rational(-1, 12));
  CHECK(a * b == Rational(-5, 8));
  CHECK(a / b == Rational(-9, 10));
  CHECK((a - a).isZero());
  CHECK(a.inverse() == Rational(4, 3));
  CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
  CHECK(b.abs() == Rational(5, 6));
  CHECK(b.sign() == -1);
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(9, 4).sqrtExact() == Rational(3, 2));
  CHECK(!Rational(2).sqrtExact().has_value());
  CHECK(!Rational(-4).sqrtExact().has_value());
  CHECK(Rational(1, 3).toDouble() == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("polynomial canonical form and rendering") {
  Polynomial p = P("(x+y)*(x+y)");
  CHECK(p == P("x*x+2*x*y+y*y"));
  CHECK(p.toString() == "x^2+2*x*y+y^2");
  CHECK(P("x-x").isZero());
  CHECK(P("3/2").isConstant());
  CHECK(P("3/2").constantValue() == Rational(3, 2));
  CHECK(P("0").constantValue().isZero());
  CHECK(P("-x^2*y+3*z-1/2").toString() == "-x^2*y+3*z-1/2");

  // The variable list holds exactly the occurring variables.
  Polynomial q = P("x*y - x*y + z");
  CHECK(q.vars() == std::vector<std::string>{"z"});
}

TEST_CASE("polynomial order and degrees") {
  Polynomial p = P("x^2 + x*y^5");
  CHECK(p.leadingMonomial() == std::map<std::string, int>{{"x", 2}});
  CHECK(p.leadingCoefficient() == Rational(1));
  CHECK(p.totalDegree() == 6);
  CHECK(p.degreeIn("y") == 5);
  CHECK(p.usesVariable("x"));
  CHECK(!p.usesVariable("z"));
  CHECK(P("x*y+z^2").isHomogeneous(2));
  CHECK(!P("x*y+z").isHomogeneous(2));
  CHECK(P("x^2+3*x*y").coefficientOfMonomial({{"x", 1}, {"y", 1}}) == Rational(3));
  CHECK(P("x^2+3*x*y").coefficientOfMonomial({{"z", 1}}).isZero());
}

TEST_CASE("polynomial algebra laws") {
  Polynomial a = P("x^2-y"), b = P("y*z+1/2"), c = P("-3*x+z^2");
  CHECK(a * b == b * a);
  CHECK((a * b) * c == a * (b * c));
  CHECK(a * (b + c) == a * b + a * c);
  CHECK((a - a).isZero());
  CHECK(-a + a == Polynomial());
  CHECK(a.pow(3) == a * a * a);
  CHECK(Rational(2) * a == a + a);
}

TEST_CASE("substitution and evaluation") {
  Polynomial p = P("x^2*y - 2*z");
  CHECK(p.substitute(std::map<std::string, Rational>{{"x", Rational(3)}}) == P("9*y-2*z"));
  CHECK(p.substitute(std::map<std::string, Polynomial>{{"z", P("x*y")}}) == P("x^2*y-2*x*y"));
  std::map<std::string, Rational> full{{"x", Rational(1, 2)}, {"y", Rational(4)}, {"z", Rational(1)}};
  CHECK(p.evaluate(full) == Rational(-1));
  CHECK_THROWS_AS(p.evaluate({{"x", Rational(1)}}), std::invalid_argument);

  // Simultaneous substitution: swapping x and y must not cascade.
  Polynomial swap = P("x-y").substitute(
      std::map<std::string, Polynomial>{{"x", P("y")}, {"y", P("x")}});
  CHECK(swap == P("y-x"));
}

TEST_CASE("content and exact division") {
  Polynomial p = P("2*x+4*y");
  CHECK(p.content() == Rational(2));
  CHECK(p.primitivePart() == P("x+2*y"));
  CHECK(P("x/2+y/3").content() == Rational(1, 6));

  CHECK(tryDivideExact(P("x^2-y^2"), P("x-y")) == P("x+y"));
  CHECK(!tryDivideExact(P("x^2+y"), P("x-y")).has_value());
  CHECK_THROWS_AS(tryDivideExact(P("x"), Polynomial()), std::domain_error);
}

TEST_CASE("polynomial gcd") {
  Polynomial g = polyGcd(P("(x-y)*(x+y)"), P("(x-y)*x"));
  CHECK(g == P("x-y"));
  CHECK(polyGcd(P("6"), P("4")) == P("1"));
  CHECK(polyGcd(P("-2*x"), Polynomial()) == P("x"));
  CHECK(polyGcd(Polynomial(), Polynomial()).isZero());

  // The factor is primitive (unit content), like polyGcd.
  CommonFactor cf = commonFactor({P("2*x^2*y"), Polynomial(), P("4*x*y^2")});
  CHECK(cf.factor == P("x*y"));
  CHECK(cf.reduced[0] == P("2*x"));
  CHECK(cf.reduced[1].isZero());
  CHECK(cf.reduced[2] == P("4*y"));
}

TEST_CASE("perfect squares") {
  CHECK(perfectSquareRoot(P("(x+2*y)^2*9")) == P("3*x+6*y"));
  CHECK(perfectSquareRoot(P("x^2+2*x*y+y^2")) == P("x+y"));
  CHECK(!perfectSquareRoot(P("x^2+y")).has_value());
  CHECK(!perfectSquareRoot(P("-x^2")).has_value());
  CHECK(perfectSquareRoot(Polynomial()) == Polynomial());
  // Root is normalized to a positive leading coefficient.
  CHECK(perfectSquareRoot(P("(y-x)^2")) == P("x-y"));
}

TEST_CASE("quadratic extension arithmetic with s^2 = 2") {
  Polynomial s = Polynomial::variable("s");
  CHECK(P("s^2").reduceSquareRoot("s", Rational(2)) == P("2"));
  CHECK(P("(1+s)^2").reduceSquareRoot("s", Rational(2)) == P("3+2*s"));
  CHECK(P("s^3*x").reduceSquareRoot("s", Rational(2)) == P("2*s*x"));

  CHECK(signInQuadraticExtension(P("3-s"), "s", Rational(2)) == 1);
  CHECK(signInQuadraticExtension(P("1-s"), "s", Rational(2)) == -1);
  // 7 - 5*sqrt(2): 49 < 50, so negative even though both test squares are close.
  CHECK(signInQuadraticExtension(P("7-5*s"), "s", Rational(2)) == -1);
  CHECK(signInQuadraticExtension(P("5-3*s"), "s", Rational(2)) == 1);
  CHECK(signInQuadraticExtension(Polynomial(), "s", Rational(2)) == 0);
  CHECK(signInQuadraticExtension(P("-s"), "s", Rational(2)) == -1);
  CHECK_THROWS_AS(signInQuadraticExtension(P("s^2"), "s", Rational(2)), std::invalid_argument);
  CHECK_THROWS_AS(signInQuadraticExtension(P("x+s"), "s", Rational(2)), std::invalid_argument);
}

TEST_CASE("sum-of-squares certification") {
  std::vector<std::string> vars{"x", "y"};
  auto w = sosCertify(P("x^2+2*x*y+2*y^2"), vars);
  REQUIRE(w.has_value());
  CHECK(w->expand() == P("x^2+2*x*y+2*y^2"));
  for (const auto& [c, l] : w->squares) CHECK(c.sign() > 0);

  // Rank-deficient but still PSD: (x+y)^2.
  auto w2 = sosCertify(P("(x+y)^2"), vars);
  REQUIRE(w2.has_value());
  CHECK(w2->expand() == P("(x+y)^2"));

  CHECK(!sosCertify(P("x^2-y^2"), vars).has_value());
  CHECK(!sosCertify(P("x*y"), vars).has_value());
  CHECK_THROWS_AS(sosCertify(P("x^2+z"), vars), std::invalid_argument);

  QMatrix gram = quadraticFormGram(P("x^2+6*x*y"), vars);
  CHECK(gram.at(0, 0) == Rational(1));
  CHECK(gram.at(0, 1) == Rational(3));
  CHECK(gram.at(1, 0) == Rational(3));
  CHECK(gram.at(1, 1) == Rational(0));
}
