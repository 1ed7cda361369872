#include "g2forge/closed_space.hpp"

#include <stdexcept>

#include "g2forge/linalg.hpp"

namespace g2forge {

ClosedFormSpace closedSpace(const LieAlgebra& g, int k, const std::string& prefix) {
  if (k < 1 || k > g.dim()) throw std::invalid_argument("closedSpace: degree out of range");
  const std::vector<Mask> cols = multiindex::subsets(g.dim(), k);
  const std::vector<Mask> rows = multiindex::subsets(g.dim(), k + 1);
  std::map<Mask, int> rowIndex;
  for (std::size_t r = 0; r < rows.size(); ++r) rowIndex[rows[r]] = static_cast<int>(r);

  for (Mask m : cols) {
    std::string name = prefix + multiindex::digits(m);
    for (const auto& p : g.params())
      if (p == name)
        throw std::invalid_argument("closedSpace: coefficient name \"" + name +
                                    "\" collides with a parameter");
  }

  // Column c holds the coefficients of d(e^{cols[c]}) by (k+1)-multi-index.
  PMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    KForm unit(g.dim(), k);
    unit.addTerm(cols[c], Polynomial(Rational(1)));
    KForm d = ceDiff(g, unit);
    for (const auto& [mask, coeff] : d.coefficients())
      m.at(rowIndex.at(mask), static_cast<int>(c)) = coeff;
  }

  ClosedFormSpace out;
  out.degree = k;
  if (!g.hasParams()) {
    Kernel ker = nullspace(toRationalMatrix(m));
    out.denominator = Polynomial(Rational(1));
    for (std::size_t b = 0; b < ker.basis.size(); ++b) {
      KForm f(g.dim(), k);
      for (std::size_t c = 0; c < cols.size(); ++c)
        f.addTerm(cols[c], Polynomial(ker.basis[b][c]));
      out.basis.push_back(std::move(f));
      out.freeVars.push_back(prefix +
                             multiindex::digits(cols[static_cast<std::size_t>(
                                 ker.freeColumns[b])]));
    }
  } else {
    ParametricKernel ker = parametricNullspace(m);
    out.denominator = ker.denominator;
    out.validity = ker.validity;
    for (std::size_t b = 0; b < ker.basis.size(); ++b) {
      KForm f(g.dim(), k);
      for (std::size_t c = 0; c < cols.size(); ++c) f.addTerm(cols[c], ker.basis[b][c]);
      out.basis.push_back(std::move(f));
      out.freeVars.push_back(prefix +
                             multiindex::digits(cols[static_cast<std::size_t>(
                                 ker.freeColumns[b])]));
    }
  }

  KForm generic(g.dim(), k);
  for (std::size_t b = 0; b < out.basis.size(); ++b) {
    Polynomial t = Polynomial::variable(out.freeVars[b]);
    for (const auto& [mask, coeff] : out.basis[b].coefficients())
      generic.addTerm(mask, t * coeff);
  }
  out.genericElement = std::move(generic);

  // Every basis element must be exactly closed (identically in parameters).
  for (const auto& f : out.basis)
    if (!ceDiff(g, f).isZero())
      throw std::logic_error("closedSpace: basis element is not closed");
  return out;
}

}  // namespace g2forge
