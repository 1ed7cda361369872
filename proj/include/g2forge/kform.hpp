#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "g2forge/lie_algebra.hpp"
#include "g2forge/polynomial.hpp"

namespace g2forge {

// A multi-index {i_1 < ... < i_k} packed as a bitmask: index i is bit i-1.
using Mask = std::uint32_t;

namespace multiindex {

int size(Mask m);
Mask fullMask(int dim);
// Validates 1-based indices: in range, nonempty handled by caller.
Mask fromIndices(const std::vector<int>& indices, int dim);
std::vector<int> toIndices(Mask m);
std::string digits(Mask m);  // "167" for {1,6,7}
// Sign of e^a ^ e^b as a permutation of the merged sorted index tuple;
// 0 when the masks intersect.
int wedgeSign(Mask a, Mask b);
// (-1)^(t-1) where i is the t-th smallest index of m. Pre: i in m.
int removalSign(Mask m, int i);
// Lexicographic order on the increasing index tuples ((1,6,7) < (2,3,4)).
bool tupleLexLess(Mask a, Mask b);
// All k-subsets of {1..dim} in tuple-lex order.
std::vector<Mask> subsets(int dim, int k);

}  // namespace multiindex

template <class Coeff>
struct CoeffTraits;

template <>
struct CoeffTraits<Polynomial> {
  static bool isZero(const Polynomial& c) { return c.isZero(); }
};
template <>
struct CoeffTraits<double> {
  static bool isZero(double c) { return c == 0.0; }
};

// Exterior form of fixed degree with coefficients indexed by multi-index
// masks; zero coefficients are never stored.
template <class Coeff>
class FormT {
 public:
  FormT() : dim_(0), degree_(0) {}
  FormT(int dim, int degree) : dim_(dim), degree_(degree) {
    if (dim < 0 || dim > 9) throw std::invalid_argument("FormT: dimension out of range");
    if (degree < 0) throw std::invalid_argument("FormT: negative degree");
  }

  static FormT basis(int dim, const std::vector<int>& indices) {
    FormT f(dim, static_cast<int>(indices.size()));
    f.addTerm(multiindex::fromIndices(indices, dim), Coeff(1));
    return f;
  }

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  const std::map<Mask, Coeff>& coefficients() const { return coeffs_; }

  Coeff coefficient(Mask m) const {
    auto it = coeffs_.find(m);
    return it == coeffs_.end() ? Coeff(0) : it->second;
  }

  void addTerm(Mask m, const Coeff& c) {
    if (multiindex::size(m) != degree_ || (m & ~multiindex::fullMask(dim_)) != 0)
      throw std::invalid_argument("FormT: mask does not match degree/dimension");
    if (CoeffTraits<Coeff>::isZero(c)) return;
    auto [it, inserted] = coeffs_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (CoeffTraits<Coeff>::isZero(it->second)) coeffs_.erase(it);
    }
  }

  bool isZero() const { return coeffs_.empty(); }

  FormT operator-() const {
    FormT r = *this;
    for (auto& [m, c] : r.coeffs_) c = -c;
    return r;
  }

  FormT& operator+=(const FormT& o) {
    requireShape(o);
    for (const auto& [m, c] : o.coeffs_) addTerm(m, c);
    return *this;
  }
  FormT& operator-=(const FormT& o) {
    requireShape(o);
    for (const auto& [m, c] : o.coeffs_) addTerm(m, -c);
    return *this;
  }
  friend FormT operator+(FormT a, const FormT& b) { return a += b; }
  friend FormT operator-(FormT a, const FormT& b) { return a -= b; }

  FormT& scale(const Coeff& s) {
    if (CoeffTraits<Coeff>::isZero(s)) {
      coeffs_.clear();
      return *this;
    }
    for (auto& [m, c] : coeffs_) c = c * s;
    return *this;
  }
  friend FormT operator*(const Coeff& s, FormT f) { return f.scale(s); }

  friend bool operator==(const FormT& a, const FormT& b) {
    return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const FormT& a, const FormT& b) { return !(a == b); }

 private:
  int dim_, degree_;
  std::map<Mask, Coeff> coeffs_;

  void requireShape(const FormT& o) const {
    if (dim_ != o.dim_ || degree_ != o.degree_)
      throw std::invalid_argument("FormT: dimension/degree mismatch");
  }
};

using KForm = FormT<Polynomial>;
using NumericForm = FormT<double>;

template <class Coeff>
FormT<Coeff> wedge(const FormT<Coeff>& a, const FormT<Coeff>& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("wedge: dimension mismatch");
  FormT<Coeff> out(a.dim(), a.degree() + b.degree());
  for (const auto& [ma, ca] : a.coefficients()) {
    for (const auto& [mb, cb] : b.coefficients()) {
      int sign = multiindex::wedgeSign(ma, mb);
      if (sign == 0) continue;
      Coeff c = ca * cb;
      if (sign < 0) c = -c;
      out.addTerm(ma | mb, c);
    }
  }
  return out;
}

template <class Coeff>
FormT<Coeff> wedgePower(const FormT<Coeff>& a, int e) {
  if (e < 1) throw std::invalid_argument("wedgePower: exponent must be >= 1");
  FormT<Coeff> out = a;
  for (int i = 1; i < e; ++i) out = wedge(out, a);
  return out;
}

// Interior product iota_v with v given in basis coordinates.
template <class Coeff>
FormT<Coeff> contractWith(const std::vector<Coeff>& v, const FormT<Coeff>& f) {
  if (static_cast<int>(v.size()) != f.dim())
    throw std::invalid_argument("contract: vector dimension mismatch");
  if (f.degree() < 1) throw std::invalid_argument("contract: degree must be >= 1");
  FormT<Coeff> out(f.dim(), f.degree() - 1);
  for (const auto& [m, c] : f.coefficients()) {
    for (int i : multiindex::toIndices(m)) {
      Coeff term = c * v[static_cast<std::size_t>(i) - 1];
      if (multiindex::removalSign(m, i) < 0) term = -term;
      out.addTerm(m & ~(Mask(1) << (i - 1)), term);
    }
  }
  return out;
}

KForm contract(const std::vector<Rational>& v, const KForm& f);
KForm contract(const std::vector<Polynomial>& v, const KForm& f);
NumericForm contract(const std::vector<double>& v, const NumericForm& f);

// Differentials of the basis 1-forms: element k-1 is de^k.
std::vector<KForm> basisDifferentials(const LieAlgebra& g);
std::vector<NumericForm> basisDifferentialsNumeric(const LieAlgebra& g);

// Chevalley-Eilenberg differential, extended from de^k as an anti-derivation.
KForm ceDiff(const LieAlgebra& g, const KForm& alpha);
NumericForm ceDiffNumeric(const std::vector<NumericForm>& dBasis, const NumericForm& alpha);
NumericForm ceDiffNumeric(const LieAlgebra& g, const NumericForm& alpha);

// Generic k-form: one fresh coefficient variable per multi-index, named
// prefix + digits ("p123"). Errors when a name collides with a parameter.
KForm genericForm(const LieAlgebra& g, int k, const std::string& prefix = "p");
KForm genericForm(int dim, int k, const std::string& prefix = "p");

KForm substituteForm(const KForm& f, const std::map<std::string, Polynomial>& bindings);
KForm substituteForm(const KForm& f, const std::map<std::string, Rational>& bindings);

// Requires every coefficient constant.
NumericForm toNumeric(const KForm& f);

// Evaluates symbolic coefficients at double values; every variable occurring
// in f must be bound.
NumericForm toNumeric(const KForm& f, const std::map<std::string, double>& bindings);

}  // namespace g2forge
