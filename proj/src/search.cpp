#include "g2forge/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "g2forge/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace g2forge {

Rational rationalApproximation(double v, long maxDen) {
  if (maxDen < 1) throw std::invalid_argument("denominator cap must be positive");
  if (!std::isfinite(v)) throw std::invalid_argument("cannot rationalize a non-finite value");
  bool negative = v < 0;
  double x = std::fabs(v);
  // Convergents p/q of the continued fraction of x.
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double rem = x;
  for (int iter = 0; iter < 64; ++iter) {
    double fa = std::floor(rem);
    if (fa > 9e17) break;
    long a = static_cast<long>(fa);
    if (q1 != 0 && a > (9e17 + q0) / static_cast<double>(q1)) break;
    long p2 = a * p1 + p0;
    long q2 = a * q1 + q0;
    if (q2 > maxDen) {
      // Best semiconvergent with denominator within the cap.
      long k = (maxDen - q0) / q1;
      long ps = k * p1 + p0, qs = k * q1 + q0;
      double errConv = std::fabs(x - static_cast<double>(p1) / static_cast<double>(q1));
      double errSemi = qs > 0
                           ? std::fabs(x - static_cast<double>(ps) / static_cast<double>(qs))
                           : std::numeric_limits<double>::infinity();
      long pn = p1, qn = q1;
      if (k > 0 && errSemi < errConv) {
        pn = ps;
        qn = qs;
      }
      Rational r(pn, qn);
      return negative ? -r : r;
    }
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double frac = rem - fa;
    if (frac < 1e-15) break;
    rem = 1.0 / frac;
  }
  Rational r(p1, q1 == 0 ? 1 : q1);
  return negative ? -r : r;
}

namespace {

// One monomial c * x_a x_b x_c of a compiled homogeneous-cubic Gram entry.
struct CubicTerm {
  double coeff;
  int a, b, c;
};

struct CompiledGram {
  int vars = 0;
  // Upper triangle (i <= j) in row-major order.
  std::vector<std::vector<CubicTerm>> entries;
};

CompiledGram compileGram(const GramMatrix& gram, const std::vector<std::string>& freeVars) {
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < freeVars.size(); ++i)
    index.emplace(freeVars[i], static_cast<int>(i));
  CompiledGram compiled;
  compiled.vars = static_cast<int>(freeVars.size());
  int n = gram.entries.rows();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const Polynomial& p = gram.entries.at(i, j);
      std::vector<CubicTerm> terms;
      const auto& vars = p.vars();
      std::vector<int> varIndex(vars.size());
      for (std::size_t k = 0; k < vars.size(); ++k) {
        auto it = index.find(vars[k]);
        if (it == index.end())
          throw std::invalid_argument("search needs an instantiated algebra; entry depends on " +
                                      vars[k]);
        varIndex[k] = it->second;
      }
      for (const auto& [expo, coeff] : p.terms()) {
        CubicTerm t{coeff.toDouble(), 0, 0, 0};
        int slot = 0;
        int total = 0;
        int factors[3] = {0, 0, 0};
        for (std::size_t k = 0; k < expo.size(); ++k) {
          total += expo[k];
          for (int rep = 0; rep < expo[k]; ++rep) {
            if (slot < 3) factors[slot] = varIndex[k];
            ++slot;
          }
        }
        if (total != 3)
          throw std::logic_error("Gram entry is not a homogeneous cubic");
        t.a = factors[0];
        t.b = factors[1];
        t.c = factors[2];
        terms.push_back(t);
      }
      compiled.entries.push_back(std::move(terms));
    }
  return compiled;
}

void evaluateGram(const CompiledGram& compiled, const std::vector<double>& x, DMatrix& out) {
  int n = out.rows();
  std::size_t slot = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      double v = 0.0;
      for (const auto& t : compiled.entries[slot])
        v += t.coeff * x[static_cast<std::size_t>(t.a)] * x[static_cast<std::size_t>(t.b)] *
             x[static_cast<std::size_t>(t.c)];
      out.at(i, j) = v;
      out.at(j, i) = v;
      ++slot;
    }
}

// Scale-invariant definiteness score in [-1, 1]: the margin
// max(lambda_min, -lambda_max) divided by the spectral radius, positive iff
// the matrix is definite. Without the normalization the ascent collapses
// toward nearly-decomposable forms, whose Gram matrix vanishes and parks the
// raw margin just below zero.
double definitenessObjective(const CompiledGram& compiled, const std::vector<double>& x,
                             DMatrix& scratch) {
  evaluateGram(compiled, x, scratch);
  auto eigen = symmetricEigenvalues(scratch);
  double lo = eigen.front(), hi = eigen.back();
  double scale = std::max(std::fabs(lo), std::fabs(hi));
  if (scale < 1e-300) return -1.0;
  return std::max(lo, -hi) / scale;
}

void normalize(std::vector<double>& x) {
  double norm = 0.0;
  for (double v : x) norm += v * v;
  norm = std::sqrt(norm);
  if (norm < 1e-12) {
    std::fill(x.begin(), x.end(), 0.0);
    x[0] = 1.0;
    return;
  }
  for (double& v : x) v /= norm;
}

double unitDouble(std::uint64_t r) {
  return (static_cast<double>(r >> 11) * 0x1.0p-53) * 2.0 - 1.0;
}

struct RestartOutcome {
  RestartStat stat;
  KForm phi;
  G2Verdict verdict;
  long denominatorUsed = 0;
};

RestartOutcome runRestart(const LieAlgebra& g, const ClosedFormSpace& space,
                          const CompiledGram& compiled, const SearchConfig& config,
                          int restart) {
  int m = compiled.vars;
  std::vector<double> x(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    x[static_cast<std::size_t>(i)] =
        unitDouble(counterRandom(config.seed, static_cast<std::uint64_t>(restart),
                                 static_cast<std::uint64_t>(i)));
  normalize(x);

  DMatrix scratch(7, 7);
  double best = definitenessObjective(compiled, x, scratch);
  int evals = 1;
  double step = 0.5;
  while (step >= 1e-4 && evals < config.evalBudget) {
    bool improved = false;
    for (int i = 0; i < m && !improved; ++i) {
      for (int s = -1; s <= 1 && !improved; s += 2) {
        if (evals >= config.evalBudget) break;
        std::vector<double> y = x;
        y[static_cast<std::size_t>(i)] += s * step;
        normalize(y);
        double fy = definitenessObjective(compiled, y, scratch);
        ++evals;
        if (fy > best + 1e-12) {
          x = std::move(y);
          best = fy;
          improved = true;
        }
      }
    }
    if (!improved) step *= 0.5;
  }

  RestartOutcome out;
  out.stat.restart = restart;
  out.stat.bestObjective = best;
  if (best <= config.eps) return out;

  long cap = config.maxDenominator;
  for (int attempt = 0; attempt < 4; ++attempt, cap *= 2) {
    KForm candidate(7, 3);
    long largestDen = 1;
    bool allZero = true;
    for (int i = 0; i < m; ++i) {
      Rational q = rationalApproximation(x[static_cast<std::size_t>(i)], cap);
      if (q.isZero()) continue;
      allZero = false;
      candidate += Polynomial(q) * space.basis[static_cast<std::size_t>(i)];
      largestDen = std::max(largestDen, q.raw().get_den().get_si());
    }
    if (allZero) continue;
    G2Verdict verdict = isG2(g, candidate);
    if (verdict.isClosedG2()) {
      out.stat.certified = true;
      out.phi = candidate;
      out.verdict = verdict;
      out.denominatorUsed = largestDen;
      return out;
    }
  }
  return out;
}

}  // namespace

SearchResult searchClosedG2(const LieAlgebra& g, const SearchConfig& config) {
  if (g.dim() != 7) throw std::invalid_argument("search needs a seven-dimensional algebra");
  if (!g.params().empty())
    throw std::invalid_argument("search needs an instantiated algebra");
  SearchResult result;
  ClosedFormSpace space = closedSpace(g, 3);
  if (space.dimension() == 0) return result;
  GramMatrix gram = genericGram(g, space);
  CompiledGram compiled = compileGram(gram, space.freeVars);

  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(config.restarts));
#ifdef _OPENMP
  if (config.parallel && config.restarts > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(effectiveThreads())
    for (int r = 0; r < config.restarts; ++r)
      outcomes[static_cast<std::size_t>(r)] = runRestart(g, space, compiled, config, r);
  } else
#endif
  {
    for (int r = 0; r < config.restarts; ++r)
      outcomes[static_cast<std::size_t>(r)] = runRestart(g, space, compiled, config, r);
  }

  for (const auto& out : outcomes) result.stats.push_back(out.stat);
  if (!result.stats.empty()) {
    result.bestObjective = result.stats.front().bestObjective;
    for (const auto& s : result.stats)
      result.bestObjective = std::max(result.bestObjective, s.bestObjective);
  }
  for (const auto& out : outcomes) {
    if (!out.stat.certified) continue;
    result.found = true;
    result.phi = out.phi;
    result.verdict = out.verdict;
    result.restartIndex = out.stat.restart;
    result.bestObjective = out.stat.bestObjective;
    result.denominatorUsed = out.denominatorUsed;
    break;
  }
  return result;
}

}  // namespace g2forge
