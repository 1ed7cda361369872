#pragma once

#include "g2forge/kform.hpp"
#include "g2forge/lie_algebra.hpp"
#include "g2forge/linalg.hpp"
#include "g2forge/numeric.hpp"

namespace g2forge {

// Symmetric 7x7 matrix of b_phi(e_i, e_j) relative to the reference volume
// orientation * e^{1..7}; entries are polynomials when phi has symbolic
// coefficients.
struct GramMatrix {
  PMatrix entries;
  int orientation = +1;
};

// b_phi(v, w) e^{1..7} = (1/6) (iota_v phi) ^ (iota_w phi) ^ phi.
// Pre: dim 7, degree 3.
GramMatrix bMatrix(const LieAlgebra& g, const KForm& phi, int orientation = +1);

// Convenience for forms with rational coefficients.
QMatrix bMatrixRational(const LieAlgebra& g, const KForm& phi, int orientation = +1);

// Floating-point variant for numeric forms; the algebra must have constant
// structure constants.
DMatrix bMatrixNumeric(const LieAlgebra& g, const NumericForm& phi, int orientation = +1);

struct G2Verdict {
  bool closed = false;
  bool stable = false;       // det b != 0
  int definiteSign = 0;      // +1 positive definite, -1 negative definite, 0 otherwise
  Rational detB;
  bool hasMetric = false;    // definite case only
  DMatrix metricNumeric;     // |det|^{-1/9} * (definiteSign * B)
  double volumeCoeff = 0.0;  // |det|^{1/9}

  bool isClosedG2() const { return closed && stable && definiteSign != 0; }
};

// Full verdict for a rational 3-form on a 7-dimensional algebra.
G2Verdict isG2(const LieAlgebra& g, const KForm& phi);
bool isStable(const LieAlgebra& g, const KForm& phi);

// |r|^exponent through logarithms of numerator/denominator, safe for very
// large rationals. Pre: r != 0.
double rationalPowDouble(const Rational& r, double exponent);

// Hodge star of alpha with respect to the metric induced by phi; phi must
// certify as definite (throws std::domain_error otherwise).
NumericForm hodgeStarNumeric(const LieAlgebra& g, const KForm& phi, const NumericForm& alpha);
NumericForm hodgeStarNumeric(const LieAlgebra& g, const KForm& phi, const KForm& alpha);
NumericForm hodgeStarNumeric(const LieAlgebra& g, const NumericForm& phi,
                             const NumericForm& alpha);

// Checks d(*phi) = 0 within tol (max absolute coefficient).
bool isCoclosedNumeric(const LieAlgebra& g, const KForm& phi, double tol = 1e-6);
bool isCoclosedNumeric(const LieAlgebra& g, const NumericForm& phi, double tol = 1e-6);

// True iff d(omega) = 0 and omega^(dim/2) != 0; works symbolically.
// Pre: even dimension <= 6.
bool symplecticCheck(const LieAlgebra& h, const KForm& omega);

// Quotient by a central xi together with the 2-form induced by iota_xi phi.
// Pre: phi closed, xi central; post: the induced form is closed.
struct ContractionResult {
  CentralQuotient quotient;
  KForm omega;
};
ContractionResult centralContraction(const LieAlgebra& g, const KForm& phi,
                                     const std::vector<Rational>& xi);

}  // namespace g2forge
