#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "g2forge/linalg.hpp"
#include "g2forge/polynomial.hpp"

namespace g2forge {

// A Lie algebra of dimension <= 9 presented by structure constants
// [e_i, e_j] = sum_k c^k_ij e_k, stored for i < j with polynomial entries in
// the declared parameters. The dual picture is the structure-equation tuple
// (de^1, ..., de^n) with de^k = -sum_{i<j} c^k_ij e^i ^ e^j.
class LieAlgebra {
 public:
  using ConstantKey = std::tuple<int, int, int>;  // (i, j, k), i < j, 1-based

  LieAlgebra(int dim, std::string label, std::vector<std::string> params,
             std::map<ConstantKey, Polynomial> constants);

  int dim() const { return dim_; }
  const std::string& label() const { return label_; }
  void setLabel(std::string label) { label_ = std::move(label); }
  const std::vector<std::string>& params() const { return params_; }
  bool hasParams() const { return !params_.empty(); }
  const std::map<ConstantKey, Polynomial>& constants() const { return constants_; }

  // c^k_ij for any i, j (antisymmetry applied; zero when i == j).
  Polynomial structureConstant(int i, int j, int k) const;

  // Coordinates of [e_i, e_j].
  std::vector<Polynomial> bracketBasis(int i, int j) const;

  // Bracket of rational vectors; requires an instantiated algebra.
  std::vector<Rational> bracket(const std::vector<Rational>& u,
                                const std::vector<Rational>& v) const;

  // Structure-equation text "(de1, de2, ...)"; defined in parser.cpp.
  std::string render() const;

  nlohmann::json toJson() const;
  static LieAlgebra fromJson(const nlohmann::json& j);

 private:
  int dim_;
  std::string label_;
  std::vector<std::string> params_;
  std::map<ConstantKey, Polynomial> constants_;
};

struct JacobiViolation {
  int i, j, k;     // offending triple
  int component;   // basis component l of the cyclic-sum residual
  Polynomial residual;
};
struct JacobiResult {
  bool ok = true;
  std::vector<JacobiViolation> violations;
};
JacobiResult jacobiCheck(const LieAlgebra& g);

// tr(ad_{e_i}) for each i; the algebra is unimodular iff all vanish.
std::vector<Polynomial> unimodularConditions(const LieAlgebra& g);
bool isUnimodular(const LieAlgebra& g);  // requires instantiated

// Basis of the center (instantiated algebras).
std::vector<std::vector<Rational>> centerBasis(const LieAlgebra& g);

struct DerivedSeries {
  std::vector<int> dims;  // dim g, dim [g,g], ... until stable
  bool solvable = false;
};
DerivedSeries derivedSeries(const LieAlgebra& g);

QMatrix killingForm(const LieAlgebra& g);
bool isSemisimple(const LieAlgebra& g);

// Block sum with b's basis indices shifted by dim(a); errors when the result
// would exceed dimension 9 or parameter names collide.
LieAlgebra directSum(const LieAlgebra& a, const LieAlgebra& b);

struct CentralQuotient {
  LieAlgebra algebra;
  int droppedIndex = 0;  // 1-based index of the coordinate eliminated
  std::vector<Rational> xi;
};
// Quotient by the central line spanned by xi. The eliminated coordinate is
// the one with the largest |xi| entry (smallest index on ties); remaining
// basis vectors map to the quotient basis in order.
CentralQuotient quotientByCentral(const LieAlgebra& g, const std::vector<Rational>& xi);

// Binds all parameters (errors on unbound ones) and re-checks Jacobi.
LieAlgebra instantiate(const LieAlgebra& g, const std::map<std::string, Rational>& values);

}  // namespace g2forge
