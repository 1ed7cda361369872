#include "g2forge/sos.hpp"

#include <algorithm>
#include <stdexcept>

namespace g2forge {

QMatrix quadraticFormGram(const Polynomial& p, const std::vector<std::string>& quadVars) {
  std::vector<std::string> sorted = quadVars;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("quadraticFormGram: duplicate variable");
  int n = static_cast<int>(quadVars.size());
  QMatrix g(n, n);
  if (p.isZero()) return g;
  for (const auto& v : p.vars())
    if (!std::binary_search(sorted.begin(), sorted.end(), v))
      throw std::invalid_argument("quadraticFormGram: coefficient not rational (variable \"" +
                                  v + "\" is not a form variable)");
  if (!p.isHomogeneous(2))
    throw std::invalid_argument("quadraticFormGram: polynomial is not a quadratic form");
  auto indexOf = [&quadVars](const std::string& name) {
    for (std::size_t i = 0; i < quadVars.size(); ++i)
      if (quadVars[i] == name) return static_cast<int>(i);
    return -1;
  };
  for (const auto& [mono, c] : p.terms()) {
    std::vector<int> present;
    for (std::size_t i = 0; i < mono.size(); ++i) {
      for (int rep = 0; rep < mono[i]; ++rep)
        present.push_back(indexOf(p.vars()[i]));
    }
    int a = present[0], b = present[1];
    if (a == b) {
      g.at(a, a) += c;
    } else {
      Rational half = c / Rational(2);
      g.at(a, b) += half;
      g.at(b, a) += half;
    }
  }
  return g;
}

std::optional<SOSWitness> sosCertify(const Polynomial& p,
                                     const std::vector<std::string>& quadVars) {
  QMatrix a = quadraticFormGram(p, quadVars);
  int n = a.rows();
  SOSWitness witness;
  for (int k = 0; k < n; ++k) {
    if (a.at(k, k).sign() < 0) return std::nullopt;
    if (a.at(k, k).isZero()) {
      for (int j = k + 1; j < n; ++j)
        if (!a.at(k, j).isZero()) return std::nullopt;
      continue;
    }
    Rational d = a.at(k, k);
    Polynomial l = Polynomial::variable(quadVars[k]);
    for (int j = k + 1; j < n; ++j)
      if (!a.at(k, j).isZero())
        l += (a.at(k, j) / d) * Polynomial::variable(quadVars[j]);
    witness.squares.emplace_back(d, std::move(l));
    for (int i = k + 1; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        Rational delta = a.at(k, i) * a.at(k, j) / d;
        a.at(i, j) -= delta;
        if (i != j) a.at(j, i) = a.at(i, j);
      }
    }
  }
  return witness;
}

}  // namespace g2forge
