#include "g2forge/g2.hpp"

#include <cmath>
#include <stdexcept>

namespace g2forge {

GramMatrix bMatrix(const LieAlgebra& g, const KForm& phi, int orientation) {
  if (g.dim() != 7) throw std::invalid_argument("bMatrix: algebra must be 7-dimensional");
  if (phi.dim() != 7 || phi.degree() != 3)
    throw std::invalid_argument("bMatrix: phi must be a 3-form in dimension 7");
  if (orientation != 1 && orientation != -1)
    throw std::invalid_argument("bMatrix: orientation must be +1 or -1");
  const Mask top = multiindex::fullMask(7);
  std::vector<KForm> contractions;
  contractions.reserve(7);
  for (int i = 1; i <= 7; ++i) {
    std::vector<Polynomial> e(7);
    e[static_cast<std::size_t>(i) - 1] = Polynomial(Rational(1));
    contractions.push_back(contract(e, phi));
  }
  GramMatrix out;
  out.orientation = orientation;
  out.entries = PMatrix(7, 7);
  Rational scale = Rational(orientation, 6);
  for (int i = 0; i < 7; ++i) {
    for (int j = i; j < 7; ++j) {
      KForm w = wedge(wedge(contractions[static_cast<std::size_t>(i)],
                            contractions[static_cast<std::size_t>(j)]),
                      phi);
      Polynomial entry = scale * w.coefficient(top);
      out.entries.at(i, j) = entry;
      if (i != j) out.entries.at(j, i) = std::move(entry);
    }
  }
  return out;
}

QMatrix bMatrixRational(const LieAlgebra& g, const KForm& phi, int orientation) {
  return toRationalMatrix(bMatrix(g, phi, orientation).entries);
}

DMatrix bMatrixNumeric(const LieAlgebra& g, const NumericForm& phi, int orientation) {
  if (g.dim() != 7) throw std::invalid_argument("bMatrix: algebra must be 7-dimensional");
  if (phi.dim() != 7 || phi.degree() != 3)
    throw std::invalid_argument("bMatrix: phi must be a 3-form in dimension 7");
  if (orientation != 1 && orientation != -1)
    throw std::invalid_argument("bMatrix: orientation must be +1 or -1");
  const Mask top = multiindex::fullMask(7);
  std::vector<NumericForm> contractions;
  contractions.reserve(7);
  for (int i = 1; i <= 7; ++i) {
    std::vector<double> e(7, 0.0);
    e[static_cast<std::size_t>(i) - 1] = 1.0;
    contractions.push_back(contract(e, phi));
  }
  DMatrix out(7, 7);
  double scale = orientation / 6.0;
  for (int i = 0; i < 7; ++i) {
    for (int j = i; j < 7; ++j) {
      NumericForm w = wedge(wedge(contractions[static_cast<std::size_t>(i)],
                                  contractions[static_cast<std::size_t>(j)]),
                            phi);
      double entry = scale * w.coefficient(top);
      out.at(i, j) = entry;
      out.at(j, i) = entry;
    }
  }
  return out;
}

double rationalPowDouble(const Rational& r, double exponent) {
  if (r.isZero()) throw std::domain_error("rationalPowDouble: zero base");
  const mpz_class num = ::abs(r.raw().get_num());
  const mpz_class den = r.raw().get_den();
  signed long en = 0, ed = 0;
  double dn = mpz_get_d_2exp(&en, num.get_mpz_t());
  double dd = mpz_get_d_2exp(&ed, den.get_mpz_t());
  double logValue = (std::log(dn) + en * M_LN2) - (std::log(dd) + ed * M_LN2);
  return std::exp(exponent * logValue);
}

G2Verdict isG2(const LieAlgebra& g, const KForm& phi) {
  G2Verdict v;
  v.closed = ceDiff(g, phi).isZero();
  QMatrix b = bMatrixRational(g, phi);
  v.detB = determinant(b);
  v.stable = !v.detB.isZero();
  if (!v.stable) return v;
  Definiteness d = definiteness(b);
  if (d == Definiteness::PositiveDefinite)
    v.definiteSign = 1;
  else if (d == Definiteness::NegativeDefinite)
    v.definiteSign = -1;
  if (v.definiteSign != 0) {
    v.hasMetric = true;
    v.volumeCoeff = rationalPowDouble(v.detB, 1.0 / 9.0);
    double metricScale = rationalPowDouble(v.detB, -1.0 / 9.0);
    v.metricNumeric = DMatrix(7, 7);
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j)
        v.metricNumeric.at(i, j) =
            metricScale * v.definiteSign * b.at(i, j).toDouble();
  }
  return v;
}

bool isStable(const LieAlgebra& g, const KForm& phi) {
  return !determinant(bMatrixRational(g, phi)).isZero();
}

namespace {

// Gram pairing of basis k-forms via inverse-metric minors.
double formInnerProduct(const DMatrix& gInv, Mask a, Mask b) {
  auto ia = multiindex::toIndices(a);
  auto ib = multiindex::toIndices(b);
  int k = static_cast<int>(ia.size());
  if (k == 0) return 1.0;
  DMatrix m(k, k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c)
      m.at(r, c) = gInv.at(ia[static_cast<std::size_t>(r)] - 1,
                           ib[static_cast<std::size_t>(c)] - 1);
  // Determinant by elimination (k <= 7).
  double det = 1.0;
  for (int col = 0; col < k; ++col) {
    int pivot = col;
    for (int r = col + 1; r < k; ++r)
      if (std::fabs(m.at(r, col)) > std::fabs(m.at(pivot, col))) pivot = r;
    if (m.at(pivot, col) == 0.0) return 0.0;
    if (pivot != col) {
      det = -det;
      for (int c = col; c < k; ++c) std::swap(m.at(col, c), m.at(pivot, c));
    }
    det *= m.at(col, col);
    for (int r = col + 1; r < k; ++r) {
      double f = m.at(r, col) / m.at(col, col);
      for (int c = col; c < k; ++c) m.at(r, c) -= f * m.at(col, c);
    }
  }
  return det;
}

// beta ^ *alpha = <beta, alpha> dVol for basis beta = e^I:
// (*alpha)_{comp(I)} = eps(I, comp(I)) <e^I, alpha> dV.
NumericForm starWithMetric(const DMatrix& metric, double dV, const NumericForm& alpha) {
  DMatrix gInv = inverseNumeric(metric);
  int k = alpha.degree();
  NumericForm star(7, 7 - k);
  const Mask top = multiindex::fullMask(7);
  for (Mask m : multiindex::subsets(7, k)) {
    Mask comp = top & ~m;
    double inner = 0.0;
    for (const auto& [ma, ca] : alpha.coefficients())
      inner += ca * formInnerProduct(gInv, m, ma);
    double value = multiindex::wedgeSign(m, comp) * inner * dV;
    if (value != 0.0) star.addTerm(comp, value);
  }
  return star;
}

double maxAbsCoefficient(const NumericForm& f) {
  double worst = 0.0;
  for (const auto& [m, c] : f.coefficients()) worst = std::max(worst, std::fabs(c));
  return worst;
}

}  // namespace

NumericForm hodgeStarNumeric(const LieAlgebra& g, const KForm& phi, const NumericForm& alpha) {
  if (alpha.dim() != 7) throw std::invalid_argument("hodgeStarNumeric: dimension mismatch");
  G2Verdict v = isG2(g, phi);
  if (!v.hasMetric)
    throw std::domain_error("hodgeStarNumeric: phi does not induce a definite metric");
  return starWithMetric(v.metricNumeric, v.volumeCoeff, alpha);
}

NumericForm hodgeStarNumeric(const LieAlgebra& g, const KForm& phi, const KForm& alpha) {
  return hodgeStarNumeric(g, phi, toNumeric(alpha));
}

NumericForm hodgeStarNumeric(const LieAlgebra& g, const NumericForm& phi,
                             const NumericForm& alpha) {
  if (alpha.dim() != 7) throw std::invalid_argument("hodgeStarNumeric: dimension mismatch");
  DMatrix b = bMatrixNumeric(g, phi);
  std::vector<double> eigen = symmetricEigenvalues(b);
  int sign = 0;
  if (eigen.front() > 0.0)
    sign = 1;
  else if (eigen.back() < 0.0)
    sign = -1;
  else
    throw std::domain_error("hodgeStarNumeric: phi does not induce a definite metric");
  double logDetAbs = 0.0;
  for (double ev : eigen) logDetAbs += std::log(std::fabs(ev));
  double dV = std::exp(logDetAbs / 9.0);
  double metricScale = sign * std::exp(-logDetAbs / 9.0);
  DMatrix metric(7, 7);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) metric.at(i, j) = metricScale * b.at(i, j);
  return starWithMetric(metric, dV, alpha);
}

bool isCoclosedNumeric(const LieAlgebra& g, const KForm& phi, double tol) {
  NumericForm star = hodgeStarNumeric(g, phi, phi);
  return maxAbsCoefficient(ceDiffNumeric(g, star)) <= tol;
}

bool isCoclosedNumeric(const LieAlgebra& g, const NumericForm& phi, double tol) {
  NumericForm star = hodgeStarNumeric(g, phi, phi);
  return maxAbsCoefficient(ceDiffNumeric(g, star)) <= tol;
}

bool symplecticCheck(const LieAlgebra& h, const KForm& omega) {
  if (h.dim() % 2 != 0 || h.dim() > 6)
    throw std::invalid_argument("symplecticCheck: need even dimension <= 6");
  if (omega.dim() != h.dim() || omega.degree() != 2)
    throw std::invalid_argument("symplecticCheck: omega must be a 2-form on h");
  if (!ceDiff(h, omega).isZero()) return false;
  return !wedgePower(omega, h.dim() / 2).isZero();
}

ContractionResult centralContraction(const LieAlgebra& g, const KForm& phi,
                                     const std::vector<Rational>& xi) {
  if (!ceDiff(g, phi).isZero())
    throw std::invalid_argument("centralContraction: phi is not closed");
  CentralQuotient q = quotientByCentral(g, xi);
  KForm sigma = contract(xi, phi);
  int p = q.droppedIndex;
  KForm omega(q.algebra.dim(), phi.degree() - 1);
  for (const auto& [m, c] : sigma.coefficients()) {
    if (m & (Mask(1) << (p - 1))) continue;  // components along the dropped coordinate
    Mask low = m & ((Mask(1) << (p - 1)) - 1);
    Mask high = (m >> p) << (p - 1);
    omega.addTerm(low | high, c);
  }
  if (!ceDiff(q.algebra, omega).isZero())
    throw std::logic_error("centralContraction: induced form failed to be closed");
  return {std::move(q), std::move(omega)};
}

}  // namespace g2forge
