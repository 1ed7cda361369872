#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "g2forge/rational.hpp"

namespace g2forge {

// Multivariate polynomial with Rational coefficients.
//
// Variables are identified by name and ordered lexicographically by name;
// that global order induces the monomial order (lexicographic on exponent
// vectors), so the leading term of x^2 + x*y^5 with x < y is x^2.
// Canonical form: the variable list contains exactly the variables that occur
// with a nonzero exponent, sorted ascending; no zero coefficients are stored.
class Polynomial {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, Rational>;

  Polynomial() = default;  // zero polynomial
  explicit Polynomial(const Rational& c);
  explicit Polynomial(long c) : Polynomial(Rational(c)) {}

  static Polynomial variable(const std::string& name);
  // c * prod(factors[i].first ^ factors[i].second)
  static Polynomial term(const Rational& c,
                         const std::vector<std::pair<std::string, int>>& factors);

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }

  bool isZero() const { return terms_.empty(); }
  bool isConstant() const { return vars_.empty(); }
  // Value of a constant polynomial (zero polynomial included).
  Rational constantValue() const;

  int totalDegree() const;
  int degreeIn(const std::string& var) const;
  bool usesVariable(const std::string& var) const;
  bool isHomogeneous(int degree) const;

  // Coefficient of a specific monomial, given as variable -> exponent
  // (variables omitted from the map must have exponent zero).
  Rational coefficientOfMonomial(const std::map<std::string, int>& mono) const;

  // Leading term under the lex order. Pre: nonzero.
  Rational leadingCoefficient() const;
  std::map<std::string, int> leadingMonomial() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& scale(const Rational& c);
  friend Polynomial operator*(const Rational& c, Polynomial p) { return p.scale(c); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // Substitutes bindings simultaneously; unbound variables stay symbolic.
  Polynomial substitute(const std::map<std::string, Polynomial>& bindings) const;
  Polynomial substitute(const std::map<std::string, Rational>& bindings) const;
  // Full evaluation; throws std::invalid_argument if a variable is unbound.
  Rational evaluate(const std::map<std::string, Rational>& bindings) const;

  // Positive gcd of all coefficients (0 for the zero polynomial).
  Rational content() const;
  // *this divided by content(); zero maps to zero.
  Polynomial primitivePart() const;

  Polynomial pow(int e) const;

  // Replaces var^(2k+r) by square^k * var^r in every term; the result has
  // degree <= 1 in var. Used to compute in Q[sqrt(s)] with var^2 = s.
  Polynomial reduceSquareRoot(const std::string& var, const Rational& square) const;

  // Deterministic rendering: terms in descending lex order, explicit '*' and
  // '^', unit coefficients elided ("-x^2*y+3*z-1/2").
  std::string toString() const;

 private:
  std::vector<std::string> vars_;
  TermMap terms_;

  void compress();  // drop variables that no longer occur
  static void alignVars(const Polynomial& a, const Polynomial& b,
                        std::vector<std::string>& mergedVars, TermMap& ta, TermMap& tb);

  friend std::optional<Polynomial> tryDivideExact(const Polynomial& a, const Polynomial& b);
  friend std::optional<Polynomial> perfectSquareRoot(const Polynomial& p);
};

// Exact quotient a / b, or nullopt when b does not divide a.
// Throws std::domain_error when b is zero.
std::optional<Polynomial> tryDivideExact(const Polynomial& a, const Polynomial& b);

// Gcd normalized to a primitive polynomial with positive leading coefficient
// (constants map to 1, gcd(p, 0) = |pp(p)|-normalized p, gcd(0, 0) = 0).
Polynomial polyGcd(const Polynomial& a, const Polynomial& b);

// Greatest common factor f of all entries plus the reduced entries p_i / f.
// Zero entries are ignored for the gcd and map to zero in the output; if all
// entries are zero, f = 1.
struct CommonFactor {
  Polynomial factor;
  std::vector<Polynomial> reduced;
};
CommonFactor commonFactor(const std::vector<Polynomial>& ps);

// Exact square root with positive leading coefficient, or nullopt when p is
// not a perfect square.
std::optional<Polynomial> perfectSquareRoot(const Polynomial& p);

// Sign of a polynomial of degree <= 1 in `var` and constant otherwise,
// interpreted as a + b*sqrt(square): returns -1, 0, or +1. Pre: square > 0.
// Throws std::invalid_argument if p involves other variables or has degree
// > 1 in var (reduceSquareRoot first).
int signInQuadraticExtension(const Polynomial& p, const std::string& var,
                             const Rational& square);

}  // namespace g2forge
