#pragma once

#include <stdexcept>
#include <vector>

#include "g2forge/polynomial.hpp"
#include "g2forge/rational.hpp"

namespace g2forge {

template <typename T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative dimension");
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& at(int i, int j) { return data_[index(i, j)]; }
  const T& at(int i, int j) const { return data_[index(i, j)]; }

  bool isSquare() const { return rows_ == cols_; }

  bool isSymmetric() const {
    if (!isSquare()) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = i + 1; j < cols_; ++j)
        if (!(at(i, j) == at(j, i))) return false;
    return true;
  }

  Matrix submatrix(const std::vector<int>& rowIdx, const std::vector<int>& colIdx) const {
    Matrix m(static_cast<int>(rowIdx.size()), static_cast<int>(colIdx.size()));
    for (std::size_t i = 0; i < rowIdx.size(); ++i)
      for (std::size_t j = 0; j < colIdx.size(); ++j)
        m.at(static_cast<int>(i), static_cast<int>(j)) = at(rowIdx[i], colIdx[j]);
    return m;
  }

  Matrix leadingBlock(int k) const {
    Matrix m(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) m.at(i, j) = at(i, j);
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int rows_, cols_;
  std::vector<T> data_;

  std::size_t index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
      throw std::out_of_range("Matrix: index out of range");
    return static_cast<std::size_t>(i) * cols_ + j;
  }
};

using QMatrix = Matrix<Rational>;
using PMatrix = Matrix<Polynomial>;
using DMatrix = Matrix<double>;

inline PMatrix liftToPolynomial(const QMatrix& m) {
  PMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(i, j) = Polynomial(m.at(i, j));
  return r;
}

// Pre: every entry constant (throws otherwise).
inline QMatrix toRationalMatrix(const PMatrix& m) {
  QMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).constantValue();
  return r;
}

inline DMatrix toDoubleMatrix(const QMatrix& m) {
  DMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).toDouble();
  return r;
}

}  // namespace g2forge
