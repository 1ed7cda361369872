#include <set>
#include <stdexcept>

#include "g2forge/certificates.hpp"

namespace g2forge {

namespace {

void require(bool ok, const std::string& step, const Polynomial& residual) {
  if (!ok)
    throw std::domain_error("scripted chain failed at " + step +
                            "; residual = " + residual.toString());
}

void requireEqual(const Polynomial& lhs, const Polynomial& rhs, const std::string& step) {
  require(lhs == rhs, step, lhs - rhs);
}

}  // namespace

Certificate verifyL76(const LieAlgebra& g, const ClosedFormSpace& space) {
  if (g.dim() != 7)
    throw std::domain_error("scripted chain needs a seven-dimensional algebra");
  GramMatrix gram = genericGram(g, space);
  const PMatrix& full = gram.entries;

  // Radical block: rows/columns e4..e7; first row names the generators.
  Polynomial b1 = full.at(3, 3);
  Polynomial b2 = full.at(3, 4);
  Polynomial b3 = full.at(3, 5);
  Polynomial b4 = full.at(3, 6);

  // b1..b4 depend only on the coefficients of phi at e246, e247, e346, e347,
  // e357. The chart produced by the kernel computation may carry each of
  // those coefficients on a differently named free variable (up to a scalar),
  // so the allowed support is read off the generic element.
  std::set<std::string> allowed;
  for (const std::vector<int>& indices :
       {std::vector<int>{2, 4, 6}, {2, 4, 7}, {3, 4, 6}, {3, 4, 7}, {3, 5, 7}}) {
    Mask m = multiindex::fromIndices(indices, 7);
    Polynomial c = space.genericElement.coefficient(m);
    require(c.vars().size() == 1 && c.terms().size() == 1 && c.totalDegree() == 1,
            "coefficient of e" + multiindex::digits(m) +
                " is a scalar multiple of one free variable",
            c);
    allowed.insert(c.vars()[0]);
  }
  require(allowed.size() == 5, "five independent coefficients on the radical block",
          Polynomial());

  int idx = 1;
  for (const Polynomial* p : {&b1, &b2, &b3, &b4}) {
    std::string name = "b" + std::to_string(idx++);
    require(!p->isZero(), name + " nonzero", *p);
    require(p->isHomogeneous(3), name + " homogeneous of degree 3", *p);
    for (const auto& v : p->vars())
      require(allowed.count(v) != 0, name + " supported on the five radical coefficients", *p);
  }

  Certificate cert;
  cert.kind = CertificateKind::ScriptedL76;
  cert.algebraLabel = g.label();

  // Entry identities for the restricted matrix, denominators cleared by b1 powers.
  requireEqual(full.at(4, 4), Rational(3) * b3, "B55 = 3*b3");
  cert.identities.push_back("B55 = 3*b3");
  requireEqual(full.at(4, 5), Rational(9) * b4, "B56 = 9*b4");
  cert.identities.push_back("B56 = 9*b4");
  Polynomial m33 = Rational(4) * (b2 * b4) - b3 * b3;
  requireEqual(b1 * full.at(4, 6), m33, "b1*B57 = 4*b2*b4 - b3^2");
  cert.identities.push_back("b1*B57 = 4*b2*b4 - b3^2");
  requireEqual(b1 * full.at(5, 5), Rational(3) * m33, "b1*B66 = 3*(4*b2*b4 - b3^2)");
  cert.identities.push_back("b1*B66 = 3*(4*b2*b4 - b3^2)");
  Polynomial n67 = Rational(2) * (b1 * b3 * b4) - Rational(4) * (b2 * b2 * b4) + b2 * b3 * b3;
  requireEqual(b1 * b1 * full.at(5, 6), Rational(-1) * n67,
               "b1^2*B67 = -(2*b1*b3*b4 - 4*b2^2*b4 + b2*b3^2)");
  cert.identities.push_back("b1^2*B67 = -(2*b1*b3*b4 - 4*b2^2*b4 + b2*b3^2)");
  Polynomial n77 = Rational(8) * (b1 * b4 * b4) - Rational(4) * (b2 * b3 * b4) + b3.pow(3);
  requireEqual(b1 * b1 * full.at(6, 6), Rational(-1) * n77,
               "b1^2*B77 = -(8*b1*b4^2 - 4*b2*b3*b4 + b3^3)");
  cert.identities.push_back("b1^2*B77 = -(8*b1*b4^2 - 4*b2*b3*b4 + b3^3)");

  // Determinant of the radical block is a square over b1^4.
  std::vector<int> radical = {3, 4, 5, 6};
  Polynomial det4 = determinant(full.submatrix(radical, radical));
  Polynomial q = Rational(27) * (b1 * b1 * b4 * b4) - Rational(18) * (b1 * b2 * b3 * b4) +
                 Rational(4) * (b1 * b3.pow(3)) + Rational(4) * (b2.pow(3) * b4) -
                 b2 * b2 * b3 * b3;
  require(!q.isZero(), "square root of the radical determinant nonzero", q);
  requireEqual(b1.pow(4) * det4, q * q, "b1^4*det = Q^2 with Q = 27*b1^2*b4^2 - ...");
  cert.identities.push_back(
      "b1^4*det(B|radical) = (27*b1^2*b4^2 - 18*b1*b2*b3*b4 + 4*b1*b3^3 + 4*b2^3*b4 - "
      "b2^2*b3^2)^2");

  // Q as a quadratic in b4 has discriminant -16*(3*b1*b3 - b2^2)^3; checked abstractly.
  Polynomial q1 = Polynomial::variable("q1");
  Polynomial q2 = Polynomial::variable("q2");
  Polynomial q3 = Polynomial::variable("q3");
  Polynomial bq = Rational(4) * q2.pow(3) - Rational(18) * (q1 * q2 * q3);
  Polynomial cq = Rational(4) * (q1 * q3.pow(3)) - q2 * q2 * q3 * q3;
  Polynomial disc = bq * bq - Rational(4) * (Rational(27) * (q1 * q1) * cq);
  Polynomial target = Rational(-16) * (Rational(3) * (q1 * q3) - q2 * q2).pow(3);
  requireEqual(disc, target, "disc_b4(Q) = -16*(3*b1*b3 - b2^2)^3");
  cert.identities.push_back("disc_b4(Q) = -16*(3*b1*b3 - b2^2)^3");

  for (int i = 0; i < 4; ++i) {
    std::vector<Rational> v(7, Rational(0));
    v[static_cast<std::size_t>(i) + 3] = Rational(1);
    cert.subspaceVectors.push_back(std::move(v));
  }
  std::string support;
  for (const auto& v : allowed) support += (support.empty() ? "" : ", ") + v;
  cert.notes.push_back("b1..b4 are homogeneous cubics in " + support +
                       ", the free coefficients carrying e246, e247, e346, e347, e357");
  cert.notes.push_back(
      "the determinant square forces radical signature (4,0), (0,4), or (2,2)");
  cert.notes.push_back(
      "definiteness would force b1*b3 > 0 and 3*b1*b3 - b2^2 > 0, making the discriminant "
      "negative, so Q keeps the sign of 27*b1^2 and the definite signatures are impossible");
  return cert;
}

Certificate verifyL76(const LieAlgebra& g) { return verifyL76(g, closedSpace(g, 3)); }

}  // namespace g2forge
