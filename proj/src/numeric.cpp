#include "g2forge/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace g2forge {

std::vector<double> symmetricEigenvalues(const DMatrix& m) {
  if (!m.isSquare()) throw std::invalid_argument("symmetricEigenvalues: matrix not square");
  int n = m.rows();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::fabs(m.at(i, j) - m.at(j, i)) > 1e-9)
        throw std::invalid_argument("symmetricEigenvalues: matrix not symmetric");
  DMatrix a = m;
  const int maxSweeps = 100;
  for (int sweep = 0; sweep < maxSweeps; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += a.at(i, j) * a.at(i, j);
    if (off < 1e-26) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = a.at(p, q);
        if (apq == 0.0) continue;
        double theta = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
        double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = a.at(k, p), akq = a.at(k, q);
          a.at(k, p) = c * akp - s * akq;
          a.at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = a.at(p, k), aqk = a.at(q, k);
          a.at(p, k) = c * apk - s * aqk;
          a.at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> eigs(n);
  for (int i = 0; i < n; ++i) eigs[i] = a.at(i, i);
  std::sort(eigs.begin(), eigs.end());
  return eigs;
}

double minEigenvalueNumeric(const DMatrix& m) {
  auto eigs = symmetricEigenvalues(m);
  if (eigs.empty()) throw std::invalid_argument("minEigenvalueNumeric: empty matrix");
  return eigs.front();
}

DMatrix inverseNumeric(const DMatrix& m) {
  if (!m.isSquare()) throw std::invalid_argument("inverseNumeric: matrix not square");
  int n = m.rows();
  DMatrix a = m;
  DMatrix inv = DMatrix::identity(n);
  for (int k = 0; k < n; ++k) {
    int pivot = k;
    for (int i = k + 1; i < n; ++i)
      if (std::fabs(a.at(i, k)) > std::fabs(a.at(pivot, k))) pivot = i;
    if (std::fabs(a.at(pivot, k)) < 1e-14)
      throw std::domain_error("inverseNumeric: singular matrix");
    if (pivot != k)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(k, j), a.at(pivot, j));
        std::swap(inv.at(k, j), inv.at(pivot, j));
      }
    double d = a.at(k, k);
    for (int j = 0; j < n; ++j) {
      a.at(k, j) /= d;
      inv.at(k, j) /= d;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      double f = a.at(i, k);
      if (f == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(k, j);
        inv.at(i, j) -= f * inv.at(k, j);
      }
    }
  }
  return inv;
}

}  // namespace g2forge
