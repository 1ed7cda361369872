#pragma once

#include <cstdint>
#include <vector>

#include "g2forge/certificates.hpp"
#include "g2forge/g2.hpp"

namespace g2forge {

struct SearchConfig {
  int restarts = 50;
  int evalBudget = 2000;        // objective evaluations per restart
  std::uint64_t seed = 1;
  long maxDenominator = 48;     // first rationalization cap; doubled up to 3 times
  double eps = 1e-3;            // numeric definiteness margin before rationalizing
  bool parallel = true;
};

struct RestartStat {
  int restart = 0;
  double bestObjective = 0.0;
  bool certified = false;
};

struct SearchResult {
  bool found = false;
  KForm phi;                 // certified closed G2 form (when found)
  G2Verdict verdict;
  int restartIndex = -1;     // winning restart (smallest index that certified)
  double bestObjective = 0.0;
  long denominatorUsed = 0;  // largest coefficient denominator of the certified form
  std::vector<RestartStat> stats;
};

// Numeric hill climb over the unit sphere of closed-space coefficients
// maximizing the definiteness margin max(lambda_min(B), -lambda_max(B))
// normalized by the spectral radius, followed by exact certification of
// rationalized candidates. Deterministic for fixed config:
// all restarts run and the smallest certified restart index wins, so the
// result does not depend on thread count. Pre: g instantiated, dim 7.
SearchResult searchClosedG2(const LieAlgebra& g, const SearchConfig& config = {});

// Best rational approximation to v with denominator <= maxDen (continued
// fractions with a final semiconvergent).
Rational rationalApproximation(double v, long maxDen);

}  // namespace g2forge
