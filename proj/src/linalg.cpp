#include "g2forge/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace g2forge {

namespace {

// Rational RREF in place; returns pivot columns.
std::vector<int> rowReduce(QMatrix& m) {
  std::vector<int> pivotCols;
  int r = 0;
  for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
    int pivotRow = -1;
    for (int i = r; i < m.rows(); ++i) {
      if (!m.at(i, col).isZero()) {
        pivotRow = i;
        break;
      }
    }
    if (pivotRow < 0) continue;
    if (pivotRow != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(pivotRow, j));
    Rational inv = m.at(r, col).inverse();
    for (int j = col; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, col).isZero()) continue;
      Rational factor = m.at(i, col);
      for (int j = col; j < m.cols(); ++j) m.at(i, j) -= factor * m.at(r, j);
    }
    pivotCols.push_back(col);
    ++r;
  }
  return pivotCols;
}

}  // namespace

Kernel nullspace(const QMatrix& m) {
  QMatrix red = m;
  Kernel k;
  k.pivotColumns = rowReduce(red);
  for (int col = 0; col < m.cols(); ++col)
    if (!std::binary_search(k.pivotColumns.begin(), k.pivotColumns.end(), col))
      k.freeColumns.push_back(col);
  for (int f : k.freeColumns) {
    std::vector<Rational> v(m.cols(), Rational(0));
    v[f] = Rational(1);
    for (std::size_t r = 0; r < k.pivotColumns.size(); ++r)
      v[k.pivotColumns[r]] = -red.at(static_cast<int>(r), f);
    k.basis.push_back(std::move(v));
  }
  return k;
}

int rank(const QMatrix& m) {
  QMatrix red = m;
  return static_cast<int>(rowReduce(red).size());
}

Rational determinant(const QMatrix& m) {
  if (!m.isSquare()) throw std::invalid_argument("determinant: matrix not square");
  int n = m.rows();
  QMatrix a = m;
  Rational det(1);
  for (int k = 0; k < n; ++k) {
    int pivotRow = -1;
    for (int i = k; i < n; ++i) {
      if (!a.at(i, k).isZero()) {
        pivotRow = i;
        break;
      }
    }
    if (pivotRow < 0) return Rational(0);
    if (pivotRow != k) {
      for (int j = k; j < n; ++j) std::swap(a.at(k, j), a.at(pivotRow, j));
      det = -det;
    }
    det *= a.at(k, k);
    Rational inv = a.at(k, k).inverse();
    for (int i = k + 1; i < n; ++i) {
      if (a.at(i, k).isZero()) continue;
      Rational factor = a.at(i, k) * inv;
      for (int j = k + 1; j < n; ++j) a.at(i, j) -= factor * a.at(k, j);
    }
  }
  return det;
}

Polynomial determinant(const PMatrix& m) {
  if (!m.isSquare()) throw std::invalid_argument("determinant: matrix not square");
  int n = m.rows();
  if (n == 0) return Polynomial(Rational(1));
  PMatrix a = m;
  int sign = 1;
  Polynomial prev(Rational(1));
  for (int k = 0; k + 1 < n; ++k) {
    int pivotRow = -1;
    for (int i = k; i < n; ++i) {
      if (!a.at(i, k).isZero()) {
        pivotRow = i;
        break;
      }
    }
    if (pivotRow < 0) return Polynomial();
    if (pivotRow != k) {
      for (int j = k; j < n; ++j) std::swap(a.at(k, j), a.at(pivotRow, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Polynomial num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        auto q = tryDivideExact(num, prev);
        if (!q) throw std::logic_error("determinant: Bareiss division not exact");
        a.at(i, j) = std::move(*q);
      }
      a.at(i, k) = Polynomial();
    }
    prev = a.at(k, k);
  }
  Polynomial det = a.at(n - 1, n - 1);
  return sign < 0 ? -det : det;
}

ParametricKernel parametricNullspace(const PMatrix& m) {
  PMatrix a = m;
  ParametricKernel k;
  Polynomial prev(Rational(1));
  std::vector<int> pivotRows;
  int r = 0;
  for (int col = 0; col < a.cols() && r < a.rows(); ++col) {
    int pivotRow = -1;
    for (int i = r; i < a.rows(); ++i) {
      if (!a.at(i, col).isZero()) {
        pivotRow = i;
        break;
      }
    }
    if (pivotRow < 0) continue;
    if (pivotRow != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(r, j), a.at(pivotRow, j));
    Polynomial pivot = a.at(r, col);
    // Fraction-free Gauss-Jordan step: update every other row, dividing by the
    // previous pivot (exact by the bordered-minor identity). Afterwards every
    // earlier pivot entry equals the current pivot.
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      Polynomial factor = a.at(i, col);
      for (int j = 0; j < a.cols(); ++j) {
        Polynomial num = pivot * a.at(i, j) - factor * a.at(r, j);
        auto q = tryDivideExact(num, prev);
        if (!q) throw std::logic_error("parametricNullspace: division not exact");
        a.at(i, j) = std::move(*q);
      }
    }
    prev = pivot;
    if (!pivot.isConstant()) k.validity.push_back(pivot.primitivePart());
    k.pivotColumns.push_back(col);
    ++r;
  }
  for (int col = 0; col < a.cols(); ++col)
    if (!std::binary_search(k.pivotColumns.begin(), k.pivotColumns.end(), col))
      k.freeColumns.push_back(col);
  k.denominator = prev;
  for (int f : k.freeColumns) {
    std::vector<Polynomial> v(a.cols());
    v[f] = prev;
    for (std::size_t pr = 0; pr < k.pivotColumns.size(); ++pr)
      v[k.pivotColumns[pr]] = -a.at(static_cast<int>(pr), f);
    k.basis.push_back(std::move(v));
  }
  return k;
}

const char* definitenessName(Definiteness d) {
  switch (d) {
    case Definiteness::PositiveDefinite: return "positive-definite";
    case Definiteness::NegativeDefinite: return "negative-definite";
    case Definiteness::Indefinite: return "indefinite";
    case Definiteness::Degenerate: return "degenerate";
  }
  return "unknown";
}

Definiteness definiteness(const QMatrix& m) {
  if (!m.isSymmetric()) throw std::invalid_argument("definiteness: matrix not symmetric");
  int n = m.rows();
  std::vector<Rational> minors(n);
  for (int k = 1; k <= n; ++k) minors[k - 1] = determinant(m.leadingBlock(k));
  if (n > 0 && minors[n - 1].isZero()) return Definiteness::Degenerate;
  bool allPositive = true, alternating = true;
  for (int k = 1; k <= n; ++k) {
    if (minors[k - 1].sign() <= 0) allPositive = false;
    if (minors[k - 1].sign() != (k % 2 == 1 ? -1 : 1)) alternating = false;
  }
  if (allPositive) return Definiteness::PositiveDefinite;
  if (alternating) return Definiteness::NegativeDefinite;
  return Definiteness::Indefinite;
}

Definiteness definitenessQuadratic(const PMatrix& m, const std::string& var,
                                   const Rational& square) {
  if (!m.isSquare()) throw std::invalid_argument("definitenessQuadratic: matrix not square");
  int n = m.rows();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!(m.at(i, j).reduceSquareRoot(var, square) ==
            m.at(j, i).reduceSquareRoot(var, square)))
        throw std::invalid_argument("definitenessQuadratic: matrix not symmetric");
  std::vector<int> signs(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    Polynomial minor = determinant(m.leadingBlock(k)).reduceSquareRoot(var, square);
    signs[static_cast<std::size_t>(k) - 1] = signInQuadraticExtension(minor, var, square);
  }
  if (n > 0 && signs[static_cast<std::size_t>(n) - 1] == 0) return Definiteness::Degenerate;
  bool allPositive = true, alternating = true;
  for (int k = 1; k <= n; ++k) {
    int s = signs[static_cast<std::size_t>(k) - 1];
    if (s <= 0) allPositive = false;
    if (s != (k % 2 == 1 ? -1 : 1)) alternating = false;
  }
  if (allPositive) return Definiteness::PositiveDefinite;
  if (alternating) return Definiteness::NegativeDefinite;
  return Definiteness::Indefinite;
}

Signature signatureSymmetric(const QMatrix& m) {
  if (!m.isSymmetric()) throw std::invalid_argument("signatureSymmetric: matrix not symmetric");
  int n = m.rows();
  PMatrix a = liftToPolynomial(m);
  Polynomial lambda = Polynomial::variable("lambda");
  for (int i = 0; i < n; ++i) a.at(i, i) -= lambda;
  Polynomial chi = determinant(a);
  // chi has all-real roots, so Descartes' rule counts them exactly.
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1, Rational(0));
  for (int d = 0; d <= n; ++d) coeffs[d] = chi.coefficientOfMonomial({{"lambda", d}});
  int zero = 0;
  while (zero <= n && coeffs[zero].isZero()) ++zero;
  Signature s;
  s.zero = zero;
  int prevSign = 0;
  for (int d = zero; d <= n; ++d) {
    int sg = coeffs[d].sign();
    if (sg == 0) continue;
    if (prevSign != 0 && sg != prevSign) ++s.positive;
    prevSign = sg;
  }
  prevSign = 0;
  for (int d = zero; d <= n; ++d) {
    int sg = coeffs[d].sign() * (d % 2 == 1 ? -1 : 1);
    if (sg == 0) continue;
    if (prevSign != 0 && sg != prevSign) ++s.negative;
    prevSign = sg;
  }
  return s;
}

}  // namespace g2forge
