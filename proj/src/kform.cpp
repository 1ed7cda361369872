#include "g2forge/kform.hpp"

#include <bit>
#include <stdexcept>

namespace g2forge {

namespace multiindex {

int size(Mask m) { return std::popcount(m); }

Mask fullMask(int dim) { return (Mask(1) << dim) - 1; }

Mask fromIndices(const std::vector<int>& indices, int dim) {
  Mask m = 0;
  int prev = 0;
  for (int i : indices) {
    if (i < 1 || i > dim)
      throw std::invalid_argument("multiindex: index " + std::to_string(i) + " out of range");
    if (i <= prev)
      throw std::invalid_argument("multiindex: indices must be strictly increasing");
    prev = i;
    m |= Mask(1) << (i - 1);
  }
  return m;
}

std::vector<int> toIndices(Mask m) {
  std::vector<int> out;
  for (int i = 1; m != 0; ++i, m >>= 1)
    if (m & 1) out.push_back(i);
  return out;
}

std::string digits(Mask m) {
  std::string out;
  for (int i : toIndices(m)) out += static_cast<char>('0' + i);
  return out;
}

int wedgeSign(Mask a, Mask b) {
  if ((a & b) != 0) return 0;
  // Inversions between the two sorted tuples: for every index j in b, count
  // the indices of a greater than j.
  int inversions = 0;
  Mask bb = b;
  for (int j = 0; bb != 0; ++j, bb >>= 1)
    if (bb & 1) inversions += std::popcount(a >> (j + 1));
  return inversions % 2 == 0 ? 1 : -1;
}

int removalSign(Mask m, int i) {
  if ((m & (Mask(1) << (i - 1))) == 0)
    throw std::invalid_argument("removalSign: index not in mask");
  int below = std::popcount(m & ((Mask(1) << (i - 1)) - 1));
  return below % 2 == 0 ? 1 : -1;
}

bool tupleLexLess(Mask a, Mask b) {
  auto ia = toIndices(a), ib = toIndices(b);
  return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
}

std::vector<Mask> subsets(int dim, int k) {
  std::vector<Mask> out;
  if (k < 0 || k > dim) return out;
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i + 1;
  while (true) {
    out.push_back(fromIndices(idx, dim));
    int t = k - 1;
    while (t >= 0 && idx[t] == dim - (k - 1 - t)) --t;
    if (t < 0) break;
    ++idx[t];
    for (int s = t + 1; s < k; ++s) idx[s] = idx[s - 1] + 1;
  }
  return out;
}

}  // namespace multiindex

KForm contract(const std::vector<Rational>& v, const KForm& f) {
  std::vector<Polynomial> lifted;
  lifted.reserve(v.size());
  for (const auto& c : v) lifted.emplace_back(c);
  return contractWith(lifted, f);
}

KForm contract(const std::vector<Polynomial>& v, const KForm& f) { return contractWith(v, f); }

NumericForm contract(const std::vector<double>& v, const NumericForm& f) {
  return contractWith(v, f);
}

std::vector<KForm> basisDifferentials(const LieAlgebra& g) {
  std::vector<KForm> out(static_cast<std::size_t>(g.dim()), KForm(g.dim(), 2));
  for (const auto& [key, c] : g.constants()) {
    auto [i, j, k] = key;
    out[static_cast<std::size_t>(k) - 1].addTerm(multiindex::fromIndices({i, j}, g.dim()), -c);
  }
  return out;
}

std::vector<NumericForm> basisDifferentialsNumeric(const LieAlgebra& g) {
  if (g.hasParams())
    throw std::logic_error("basisDifferentialsNumeric: instantiate parameters first");
  std::vector<NumericForm> out(static_cast<std::size_t>(g.dim()), NumericForm(g.dim(), 2));
  for (const auto& [key, c] : g.constants()) {
    auto [i, j, k] = key;
    out[static_cast<std::size_t>(k) - 1].addTerm(multiindex::fromIndices({i, j}, g.dim()),
                                                 -c.constantValue().toDouble());
  }
  return out;
}

namespace {

// d(e^I) = sum_t (-1)^(t-1) de^{i_t} ^ e^{I \ i_t}, extended Coeff-linearly.
template <class Coeff>
FormT<Coeff> ceDiffT(const std::vector<FormT<Coeff>>& dBasis, const FormT<Coeff>& alpha) {
  FormT<Coeff> out(alpha.dim(), alpha.degree() + 1);
  for (const auto& [mask, coeff] : alpha.coefficients()) {
    auto idx = multiindex::toIndices(mask);
    for (std::size_t t = 0; t < idx.size(); ++t) {
      Mask rest = mask & ~(Mask(1) << (idx[t] - 1));
      int outerSign = (t % 2 == 0) ? 1 : -1;
      for (const auto& [dmask, dcoeff] : dBasis[static_cast<std::size_t>(idx[t]) - 1]
                                             .coefficients()) {
        int sign = multiindex::wedgeSign(dmask, rest);
        if (sign == 0) continue;
        Coeff c = coeff * dcoeff;
        if (outerSign * sign < 0) c = -c;
        out.addTerm(dmask | rest, c);
      }
    }
  }
  return out;
}

}  // namespace

KForm ceDiff(const LieAlgebra& g, const KForm& alpha) {
  if (alpha.dim() != g.dim()) throw std::invalid_argument("ceDiff: dimension mismatch");
  return ceDiffT(basisDifferentials(g), alpha);
}

NumericForm ceDiffNumeric(const std::vector<NumericForm>& dBasis, const NumericForm& alpha) {
  return ceDiffT(dBasis, alpha);
}

NumericForm ceDiffNumeric(const LieAlgebra& g, const NumericForm& alpha) {
  if (alpha.dim() != g.dim()) throw std::invalid_argument("ceDiff: dimension mismatch");
  return ceDiffT(basisDifferentialsNumeric(g), alpha);
}

KForm genericForm(int dim, int k, const std::string& prefix) {
  KForm f(dim, k);
  for (Mask m : multiindex::subsets(dim, k))
    f.addTerm(m, Polynomial::variable(prefix + multiindex::digits(m)));
  return f;
}

KForm genericForm(const LieAlgebra& g, int k, const std::string& prefix) {
  for (Mask m : multiindex::subsets(g.dim(), k)) {
    std::string name = prefix + multiindex::digits(m);
    for (const auto& p : g.params())
      if (p == name)
        throw std::invalid_argument("genericForm: coefficient name \"" + name +
                                    "\" collides with a parameter");
  }
  return genericForm(g.dim(), k, prefix);
}

KForm substituteForm(const KForm& f, const std::map<std::string, Polynomial>& bindings) {
  KForm out(f.dim(), f.degree());
  for (const auto& [m, c] : f.coefficients()) out.addTerm(m, c.substitute(bindings));
  return out;
}

KForm substituteForm(const KForm& f, const std::map<std::string, Rational>& bindings) {
  KForm out(f.dim(), f.degree());
  for (const auto& [m, c] : f.coefficients()) out.addTerm(m, c.substitute(bindings));
  return out;
}

NumericForm toNumeric(const KForm& f) {
  NumericForm out(f.dim(), f.degree());
  for (const auto& [m, c] : f.coefficients()) out.addTerm(m, c.constantValue().toDouble());
  return out;
}

NumericForm toNumeric(const KForm& f, const std::map<std::string, double>& bindings) {
  NumericForm out(f.dim(), f.degree());
  for (const auto& [m, c] : f.coefficients()) {
    double value = 0.0;
    for (const auto& [exponents, coeff] : c.terms()) {
      double term = coeff.toDouble();
      for (std::size_t v = 0; v < exponents.size(); ++v) {
        if (exponents[v] == 0) continue;
        auto it = bindings.find(c.vars()[v]);
        if (it == bindings.end())
          throw std::invalid_argument("toNumeric: unbound variable \"" + c.vars()[v] + "\"");
        for (int e = 0; e < exponents[v]; ++e) term *= it->second;
      }
      value += term;
    }
    if (value != 0.0) out.addTerm(m, value);
  }
  return out;
}

}  // namespace g2forge
