#include "g2forge/lie_algebra.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "g2forge/parser.hpp"

namespace g2forge {

namespace {

constexpr int kMaxDim = 9;

// Row-reduces the span of the given vectors and returns an independent basis.
std::vector<std::vector<Rational>> spanBasis(std::vector<std::vector<Rational>> vectors,
                                             int dim) {
  std::vector<std::vector<Rational>> basis;
  std::vector<int> leadCols;
  for (auto& v : vectors) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Rational& lead = v[leadCols[b]];
      if (!lead.isZero()) {
        Rational f = lead;
        for (int j = 0; j < dim; ++j) v[j] -= f * basis[b][j];
      }
    }
    int lead = -1;
    for (int j = 0; j < dim; ++j) {
      if (!v[j].isZero()) {
        lead = j;
        break;
      }
    }
    if (lead < 0) continue;
    Rational inv = v[lead].inverse();
    for (int j = 0; j < dim; ++j) v[j] *= inv;
    basis.push_back(v);
    leadCols.push_back(lead);
  }
  return basis;
}

}  // namespace

LieAlgebra::LieAlgebra(int dim, std::string label, std::vector<std::string> params,
                       std::map<ConstantKey, Polynomial> constants)
    : dim_(dim), label_(std::move(label)), params_(std::move(params)) {
  if (dim < 1 || dim > kMaxDim)
    throw std::invalid_argument("LieAlgebra: dimension must be between 1 and 9");
  std::set<std::string> paramSet(params_.begin(), params_.end());
  if (paramSet.size() != params_.size())
    throw std::invalid_argument("LieAlgebra: duplicate parameter name");
  for (auto& [key, value] : constants) {
    auto [i, j, k] = key;
    if (i < 1 || j < 1 || k < 1 || i > dim || j > dim || k > dim)
      throw std::invalid_argument("LieAlgebra: structure constant index out of range");
    if (i >= j) throw std::invalid_argument("LieAlgebra: constants must be stored with i < j");
    for (const auto& v : value.vars())
      if (!paramSet.count(v))
        throw std::invalid_argument("LieAlgebra: constant uses undeclared parameter \"" + v +
                                    "\"");
    if (!value.isZero()) constants_.emplace(key, value);
  }
}

Polynomial LieAlgebra::structureConstant(int i, int j, int k) const {
  if (i < 1 || j < 1 || k < 1 || i > dim_ || j > dim_ || k > dim_)
    throw std::out_of_range("structureConstant: index out of range");
  if (i == j) return Polynomial();
  bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = constants_.find({i, j, k});
  if (it == constants_.end()) return Polynomial();
  return flip ? -it->second : it->second;
}

std::vector<Polynomial> LieAlgebra::bracketBasis(int i, int j) const {
  std::vector<Polynomial> out(dim_);
  for (int k = 1; k <= dim_; ++k) out[k - 1] = structureConstant(i, j, k);
  return out;
}

std::vector<Rational> LieAlgebra::bracket(const std::vector<Rational>& u,
                                          const std::vector<Rational>& v) const {
  if (hasParams()) throw std::logic_error("bracket: instantiate parameters first");
  if (static_cast<int>(u.size()) != dim_ || static_cast<int>(v.size()) != dim_)
    throw std::invalid_argument("bracket: vector dimension mismatch");
  std::vector<Rational> out(dim_, Rational(0));
  for (const auto& [key, c] : constants_) {
    auto [i, j, k] = key;
    Rational coeff = u[i - 1] * v[j - 1] - u[j - 1] * v[i - 1];
    if (!coeff.isZero()) out[k - 1] += coeff * c.constantValue();
  }
  return out;
}

nlohmann::json LieAlgebra::toJson() const {
  nlohmann::json j;
  j["label"] = label_;
  j["dim"] = dim_;
  j["params"] = params_;
  j["equations"] = renderStructureEquationList(*this);
  return j;
}

LieAlgebra LieAlgebra::fromJson(const nlohmann::json& j) {
  std::vector<std::string> params;
  if (j.contains("params")) params = j.at("params").get<std::vector<std::string>>();
  std::vector<std::string> equations = j.at("equations").get<std::vector<std::string>>();
  std::string text = "(";
  for (std::size_t i = 0; i < equations.size(); ++i) {
    if (i) text += ",";
    text += equations[i];
  }
  text += ")";
  LieAlgebra g = parseStructureEquations(text, params);
  if (j.contains("dim") && j.at("dim").get<int>() != g.dim())
    throw std::invalid_argument("LieAlgebra::fromJson: dim does not match equations");
  if (j.contains("label")) g.setLabel(j.at("label").get<std::string>());
  return g;
}

JacobiResult jacobiCheck(const LieAlgebra& g) {
  JacobiResult result;
  int n = g.dim();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        for (int l = 1; l <= n; ++l) {
          Polynomial residual;
          for (int m = 1; m <= n; ++m) {
            residual += g.structureConstant(i, j, m) * g.structureConstant(m, k, l);
            residual += g.structureConstant(j, k, m) * g.structureConstant(m, i, l);
            residual += g.structureConstant(k, i, m) * g.structureConstant(m, j, l);
          }
          if (!residual.isZero()) {
            result.ok = false;
            result.violations.push_back({i, j, k, l, residual});
          }
        }
      }
    }
  }
  return result;
}

std::vector<Polynomial> unimodularConditions(const LieAlgebra& g) {
  std::vector<Polynomial> traces(g.dim());
  for (int i = 1; i <= g.dim(); ++i) {
    Polynomial tr;
    for (int j = 1; j <= g.dim(); ++j) tr += g.structureConstant(i, j, j);
    traces[i - 1] = tr;
  }
  return traces;
}

bool isUnimodular(const LieAlgebra& g) {
  if (g.hasParams()) throw std::logic_error("isUnimodular: instantiate parameters first");
  for (const auto& t : unimodularConditions(g))
    if (!t.isZero()) return false;
  return true;
}

std::vector<std::vector<Rational>> centerBasis(const LieAlgebra& g) {
  if (g.hasParams()) throw std::logic_error("centerBasis: instantiate parameters first");
  int n = g.dim();
  // x in center iff sum_i x_i c^k_ij = 0 for all j, k.
  QMatrix m(n * n, n);
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k)
      for (int i = 1; i <= n; ++i)
        m.at((j - 1) * n + (k - 1), i - 1) = g.structureConstant(i, j, k).constantValue();
  return nullspace(m).basis;
}

DerivedSeries derivedSeries(const LieAlgebra& g) {
  if (g.hasParams()) throw std::logic_error("derivedSeries: instantiate parameters first");
  int n = g.dim();
  DerivedSeries out;
  std::vector<std::vector<Rational>> current;
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> e(n, Rational(0));
    e[i] = Rational(1);
    current.push_back(std::move(e));
  }
  out.dims.push_back(n);
  while (true) {
    std::vector<std::vector<Rational>> brackets;
    for (std::size_t a = 0; a < current.size(); ++a)
      for (std::size_t b = a + 1; b < current.size(); ++b)
        brackets.push_back(g.bracket(current[a], current[b]));
    current = spanBasis(std::move(brackets), n);
    int d = static_cast<int>(current.size());
    if (d == out.dims.back()) break;
    out.dims.push_back(d);
    if (d == 0) break;
  }
  out.solvable = out.dims.back() == 0;
  return out;
}

QMatrix killingForm(const LieAlgebra& g) {
  if (g.hasParams()) throw std::logic_error("killingForm: instantiate parameters first");
  int n = g.dim();
  std::vector<QMatrix> ad(n, QMatrix(n, n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        ad[i - 1].at(k - 1, j - 1) = g.structureConstant(i, j, k).constantValue();
  QMatrix kf(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      Rational tr(0);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) tr += ad[i].at(a, b) * ad[j].at(b, a);
      kf.at(i, j) = tr;
      kf.at(j, i) = tr;
    }
  }
  return kf;
}

bool isSemisimple(const LieAlgebra& g) { return !determinant(killingForm(g)).isZero(); }

LieAlgebra directSum(const LieAlgebra& a, const LieAlgebra& b) {
  if (a.dim() + b.dim() > kMaxDim)
    throw std::invalid_argument("directSum: combined dimension exceeds 9");
  for (const auto& p : a.params())
    for (const auto& q : b.params())
      if (p == q) throw std::invalid_argument("directSum: parameter name collision \"" + p + "\"");
  std::map<LieAlgebra::ConstantKey, Polynomial> constants = a.constants();
  int shift = a.dim();
  for (const auto& [key, c] : b.constants()) {
    auto [i, j, k] = key;
    constants.emplace(LieAlgebra::ConstantKey{i + shift, j + shift, k + shift}, c);
  }
  std::vector<std::string> params = a.params();
  params.insert(params.end(), b.params().begin(), b.params().end());
  return LieAlgebra(a.dim() + b.dim(), a.label() + "+" + b.label(), std::move(params),
                    std::move(constants));
}

CentralQuotient quotientByCentral(const LieAlgebra& g, const std::vector<Rational>& xi) {
  if (static_cast<int>(xi.size()) != g.dim())
    throw std::invalid_argument("quotientByCentral: xi dimension mismatch");
  bool nonzero = false;
  for (const auto& c : xi) nonzero = nonzero || !c.isZero();
  if (!nonzero) throw std::invalid_argument("quotientByCentral: xi is zero");
  // Centrality: sum_i xi_i c^k_ij = 0 for all j, k (symbolically).
  for (int j = 1; j <= g.dim(); ++j) {
    for (int k = 1; k <= g.dim(); ++k) {
      Polynomial s;
      for (int i = 1; i <= g.dim(); ++i)
        s += Polynomial(xi[i - 1]) * g.structureConstant(i, j, k);
      if (!s.isZero())
        throw std::invalid_argument("quotientByCentral: xi is not central");
    }
  }
  int p = 1;
  for (int i = 2; i <= g.dim(); ++i)
    if (xi[i - 1].abs() > xi[p - 1].abs()) p = i;
  // In the quotient, e_p = -sum_{k != p} (xi_k / xi_p) e_k, so
  // c'^k_ij = c^k_ij - c^p_ij (xi_k / xi_p) on the surviving coordinates.
  auto newIndex = [p](int old) { return old < p ? old : old - 1; };
  std::map<LieAlgebra::ConstantKey, Polynomial> constants;
  for (int i = 1; i <= g.dim(); ++i) {
    if (i == p) continue;
    for (int j = i + 1; j <= g.dim(); ++j) {
      if (j == p) continue;
      Polynomial cp = g.structureConstant(i, j, p);
      for (int k = 1; k <= g.dim(); ++k) {
        if (k == p) continue;
        Polynomial c = g.structureConstant(i, j, k) -
                       Polynomial(xi[k - 1] / xi[p - 1]) * cp;
        if (!c.isZero()) constants.emplace(LieAlgebra::ConstantKey{newIndex(i), newIndex(j), newIndex(k)}, c);
      }
    }
  }
  CentralQuotient out{LieAlgebra(g.dim() - 1, g.label() + "/z", g.params(), std::move(constants)),
                      p, xi};
  return out;
}

LieAlgebra instantiate(const LieAlgebra& g, const std::map<std::string, Rational>& values) {
  for (const auto& p : g.params())
    if (!values.count(p))
      throw std::invalid_argument("instantiate: unbound parameter \"" + p + "\"");
  std::map<LieAlgebra::ConstantKey, Polynomial> constants;
  for (const auto& [key, c] : g.constants()) {
    Polynomial v = c.substitute(values);
    if (!v.isZero()) constants.emplace(key, v);
  }
  LieAlgebra out(g.dim(), g.label(), {}, std::move(constants));
  JacobiResult jr = jacobiCheck(out);
  if (!jr.ok) {
    const auto& v = jr.violations.front();
    throw std::domain_error("instantiate: Jacobi identity fails at (" + std::to_string(v.i) +
                            "," + std::to_string(v.j) + "," + std::to_string(v.k) +
                            ") component " + std::to_string(v.component) + ", residual " +
                            v.residual.toString());
  }
  return out;
}

}  // namespace g2forge
