#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "g2forge/kform.hpp"
#include "g2forge/lie_algebra.hpp"
#include "g2forge/polynomial.hpp"

namespace g2forge {

// Parse failure with the 0-based character position in the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Polynomial expression over rational literals and the allowed names, with
// + - * / ^ and parentheses; division only by constants.
Polynomial parsePolynomialExpression(const std::string& text,
                                     const std::vector<std::string>& allowedNames);

// Structure-equation tuple "(de1, ..., den)" where each entry is 0 or a sum
// of terms [coef *] eIJ with single-digit strictly increasing indices. The
// number of entries fixes the dimension. Coefficients may use the declared
// parameter names.
LieAlgebra parseStructureEquations(const std::string& text,
                                   const std::vector<std::string>& params,
                                   const std::string& label = "custom");

// k-form in basis terms "[coef *] eI...": every term must have |I| = degree.
// The literal "0" denotes the zero form.
KForm parseForm(const std::string& text, int dim, int degree,
                const std::vector<std::string>& allowedNames = {});

// Canonical rendering: terms in ascending tuple-lex order of the multi-index,
// unit coefficients elided, non-constant coefficients parenthesized when they
// have several terms ("-e147+2*e236", "(mu+1)*e47").
std::string renderForm(const KForm& f);

std::vector<std::string> renderStructureEquationList(const LieAlgebra& g);

}  // namespace g2forge
