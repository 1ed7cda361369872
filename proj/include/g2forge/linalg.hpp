#pragma once

#include <vector>

#include "g2forge/matrix.hpp"

namespace g2forge {

// Exact kernel of a rational matrix, computed by reduced row echelon form.
// Pivot rule: scan columns left to right, take the smallest row index with a
// nonzero entry, so the result is deterministic. Basis vectors are indexed by
// free column in ascending order; the vector for free column f has entry 1 at
// f and zeros at all other free columns.
struct Kernel {
  std::vector<std::vector<Rational>> basis;
  std::vector<int> pivotColumns;
  std::vector<int> freeColumns;
};
Kernel nullspace(const QMatrix& m);

int rank(const QMatrix& m);

Rational determinant(const QMatrix& m);

// Fraction-free (Bareiss) determinant over the polynomial ring.
Polynomial determinant(const PMatrix& m);

// Kernel of a matrix whose entries are polynomials in parameters, computed by
// fraction-free Gauss-Jordan elimination. Valid wherever no pivot vanishes:
// the true kernel vectors are basis[i] / denominator, and `validity` lists the
// pivot polynomials assumed nonzero along the elimination path.
struct ParametricKernel {
  std::vector<std::vector<Polynomial>> basis;
  Polynomial denominator;
  std::vector<Polynomial> validity;
  std::vector<int> pivotColumns;
  std::vector<int> freeColumns;
};
ParametricKernel parametricNullspace(const PMatrix& m);

enum class Definiteness { PositiveDefinite, NegativeDefinite, Indefinite, Degenerate };

const char* definitenessName(Definiteness d);

// Classification of a symmetric rational matrix by leading principal minors
// (Sylvester): all minors positive, signs alternating starting negative,
// determinant zero, or indefinite. Throws std::invalid_argument when the
// matrix is not symmetric.
Definiteness definiteness(const QMatrix& m);

// Sylvester classification for a symmetric matrix with entries in the
// quadratic extension Q(sqrt(square)), encoded as polynomials in `var` with
// var^2 = square. Entries may have higher degree in var; minors are reduced
// before their signs are taken. Pre: square > 0, no other variables occur.
Definiteness definitenessQuadratic(const PMatrix& m, const std::string& var,
                                   const Rational& square);

// Inertia of a symmetric rational matrix, computed exactly from the
// characteristic polynomial via Descartes' rule of signs (exact here because
// all eigenvalues are real).
struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};
Signature signatureSymmetric(const QMatrix& m);

}  // namespace g2forge
