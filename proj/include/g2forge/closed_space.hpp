#pragma once

#include <string>
#include <vector>

#include "g2forge/kform.hpp"
#include "g2forge/lie_algebra.hpp"

namespace g2forge {

// Space of exactly closed k-forms. For instantiated algebras the basis is
// rational and denominator = 1; for parametric algebras the basis vectors are
// cleared numerators over `denominator`, valid wherever no polynomial in
// `validity` vanishes.
struct ClosedFormSpace {
  int degree = 0;
  std::vector<KForm> basis;
  // Coefficient names aligned with basis, derived from the free multi-index:
  // prefix + digits ("p123").
  std::vector<std::string> freeVars;
  KForm genericElement;
  Polynomial denominator;
  std::vector<Polynomial> validity;

  int dimension() const { return static_cast<int>(basis.size()); }
};

// Kernel of the Chevalley-Eilenberg differential on k-forms. Unknown columns
// are ordered by tuple-lex multi-index ((1,2,3) < (1,2,4) < ... < (5,6,7));
// rows likewise. Throws std::invalid_argument when a generated coefficient
// name collides with an algebra parameter.
ClosedFormSpace closedSpace(const LieAlgebra& g, int k, const std::string& prefix = "p");

}  // namespace g2forge
