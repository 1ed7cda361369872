#pragma once

#include <vector>

#include "g2forge/matrix.hpp"

namespace g2forge {

// Eigenvalues of a symmetric matrix (ascending), computed by the cyclic
// Jacobi rotation method. Pre: symmetric within 1e-9 (throws otherwise).
std::vector<double> symmetricEigenvalues(const DMatrix& m);

double minEigenvalueNumeric(const DMatrix& m);

// Inverse via Gauss elimination with partial pivoting; throws
// std::domain_error when the matrix is numerically singular.
DMatrix inverseNumeric(const DMatrix& m);

}  // namespace g2forge
