#pragma once

#include <optional>
#include <string>
#include <vector>

#include "g2forge/matrix.hpp"
#include "g2forge/polynomial.hpp"

namespace g2forge {

// Exact sum-of-squares witness: p = sum_i c_i * L_i^2 with c_i > 0 rational
// and L_i linear in the quadratic-form variables.
struct SOSWitness {
  std::vector<std::pair<Rational, Polynomial>> squares;

  Polynomial expand() const {
    Polynomial p;
    for (const auto& [c, l] : squares) p += c * (l * l);
    return p;
  }
};

// Gram matrix of a quadratic form in quadVars. Throws std::invalid_argument
// when p is not a quadratic form in exactly those variables with rational
// coefficients (instantiate parameters first).
QMatrix quadraticFormGram(const Polynomial& p, const std::vector<std::string>& quadVars);

// Exact LDL^T decomposition of the Gram matrix: returns a witness iff the
// form is positive semidefinite. A zero pivot forces its whole row to vanish,
// otherwise the form takes both signs and certification fails.
std::optional<SOSWitness> sosCertify(const Polynomial& p,
                                     const std::vector<std::string>& quadVars);

}  // namespace g2forge
