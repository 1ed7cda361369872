// Timing comparison for the OpenMP-parallel paths: definiteness sampling and
// randomized search, serial against parallel. Both paths use counter-based
// randomness, so the parallel run must reproduce the serial counts exactly.
#include <cstdio>
#include <cstdlib>

#include "g2forge/catalog.hpp"
#include "g2forge/certificates.hpp"
#include "g2forge/parallel.hpp"
#include "g2forge/report.hpp"
#include "g2forge/search.hpp"

using namespace g2forge;

int main(int argc, char** argv) {
  long trials = argc > 1 ? std::atol(argv[1]) : 2000;
  std::printf("threads: %d\n", effectiveThreads());

  LieAlgebra g = Catalog::builtin().get("so3+d4");
  Stopwatch sw;
  SampleCounts serial = sampleDefiniteness(g, trials, 1, false);
  double serialMs = sw.elapsedMs();
  sw.reset();
  SampleCounts parallel = sampleDefiniteness(g, trials, 1, true);
  double parallelMs = sw.elapsedMs();
  std::printf("sampleDefiniteness, %ld trials: serial %.1f ms, parallel %.1f ms, speedup %.2fx\n",
              trials, serialMs, parallelMs, serialMs / parallelMs);
  if (serial.definite != parallel.definite || serial.indefinite != parallel.indefinite ||
      serial.singular != parallel.singular) {
    std::printf("MISMATCH: parallel sampling diverged from serial\n");
    return 1;
  }

  LieAlgebra h = Catalog::builtin().get("mainthm1");
  SearchConfig config;
  config.restarts = 8;
  config.evalBudget = 500;
  config.parallel = false;
  sw.reset();
  SearchResult a = searchClosedG2(h, config);
  serialMs = sw.elapsedMs();
  config.parallel = true;
  sw.reset();
  SearchResult b = searchClosedG2(h, config);
  parallelMs = sw.elapsedMs();
  std::printf("searchClosedG2, 8 restarts x 500 evals: serial %.1f ms, parallel %.1f ms, speedup %.2fx\n",
              serialMs, parallelMs, serialMs / parallelMs);
  if (a.found != b.found || a.restartIndex != b.restartIndex) {
    std::printf("MISMATCH: parallel search diverged from serial\n");
    return 1;
  }
  std::printf("parallel results match serial\n");
  return 0;
}
