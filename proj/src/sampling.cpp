#include <map>
#include <set>
#include <stdexcept>

#include "g2forge/certificates.hpp"
#include "g2forge/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace g2forge {

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t counterRandom(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
  std::uint64_t h = mix64(seed);
  h = mix64(h ^ stream);
  return mix64(h ^ counter);
}

namespace {

// Rational sample point for one trial; depends only on (seed, trial), so
// results are identical for any thread count.
std::map<std::string, Rational> samplePoint(const std::vector<std::string>& freeVars,
                                            std::uint64_t seed, std::uint64_t trial) {
  std::map<std::string, Rational> point;
  std::uint64_t k = 0;
  for (const auto& name : freeVars) {
    std::uint64_t r = counterRandom(seed, trial, 2 * k);
    std::uint64_t r2 = counterRandom(seed, trial, 2 * k + 1);
    long num = static_cast<long>(r % 21) - 10;
    long den = static_cast<long>(r2 % 4) + 1;
    point.emplace(name, Rational(num, den));
    ++k;
  }
  return point;
}

void classifyTrial(const GramMatrix& gram, const std::vector<std::string>& freeVars,
                   std::uint64_t seed, std::uint64_t trial, SampleCounts& counts) {
  auto point = samplePoint(freeVars, seed, trial);
  int n = gram.entries.rows();
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Rational v = gram.entries.at(i, j).evaluate(point);
      m.at(i, j) = v;
      m.at(j, i) = v;
    }
  switch (definiteness(m)) {
    case Definiteness::PositiveDefinite:
    case Definiteness::NegativeDefinite:
      ++counts.definite;
      break;
    case Definiteness::Indefinite:
      ++counts.indefinite;
      break;
    case Definiteness::Degenerate:
      ++counts.singular;
      break;
  }
}

}  // namespace

SampleCounts sampleDefiniteness(const LieAlgebra& g, const ClosedFormSpace& space,
                                const GramMatrix& gram, long trials, std::uint64_t seed,
                                bool parallel) {
  (void)g;
  if (trials < 0) throw std::invalid_argument("trial count must be nonnegative");
  std::set<std::string> known(space.freeVars.begin(), space.freeVars.end());
  for (int i = 0; i < gram.entries.rows(); ++i)
    for (int j = 0; j < gram.entries.cols(); ++j)
      for (const auto& v : gram.entries.at(i, j).vars())
        if (!known.count(v))
          throw std::invalid_argument("sampling needs an instantiated algebra; entry depends on " +
                                      v);

  SampleCounts counts;
#ifdef _OPENMP
  if (parallel && trials > 1) {
    long definite = 0, indefinite = 0, singular = 0;
#pragma omp parallel for schedule(dynamic) num_threads(effectiveThreads()) \
    reduction(+ : definite, indefinite, singular)
    for (long t = 0; t < trials; ++t) {
      SampleCounts local;
      classifyTrial(gram, space.freeVars, seed, static_cast<std::uint64_t>(t), local);
      definite += local.definite;
      indefinite += local.indefinite;
      singular += local.singular;
    }
    counts.definite = definite;
    counts.indefinite = indefinite;
    counts.singular = singular;
    return counts;
  }
#else
  (void)parallel;
#endif
  for (long t = 0; t < trials; ++t)
    classifyTrial(gram, space.freeVars, seed, static_cast<std::uint64_t>(t), counts);
  return counts;
}

SampleCounts sampleDefiniteness(const LieAlgebra& g, long trials, std::uint64_t seed,
                                bool parallel) {
  ClosedFormSpace space = closedSpace(g, 3);
  GramMatrix gram = genericGram(g, space);
  return sampleDefiniteness(g, space, gram, trials, seed, parallel);
}

}  // namespace g2forge
