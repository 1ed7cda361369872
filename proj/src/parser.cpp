#include "g2forge/parser.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace g2forge {

namespace {

enum class Tok { Number, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({Tok::Number, text.substr(start, i - start), start});
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        ++i;
      out.push_back({Tok::Name, text.substr(start, i - start), start});
    } else {
      Tok kind;
      switch (c) {
        case '+': kind = Tok::Plus; break;
        case '-': kind = Tok::Minus; break;
        case '*': kind = Tok::Star; break;
        case '/': kind = Tok::Slash; break;
        case '^': kind = Tok::Caret; break;
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        case ',': kind = Tok::Comma; break;
        default:
          throw ParseError(std::string("unexpected character '") + c + "'", start);
      }
      out.push_back({kind, std::string(1, c), start});
      ++i;
    }
  }
  out.push_back({Tok::End, "", text.size()});
  return out;
}

bool isBasisToken(const std::string& name) {
  if (name.size() < 2 || name[0] != 'e') return false;
  return std::all_of(name.begin() + 1, name.end(),
                     [](char c) { return c >= '1' && c <= '9'; });
}

// Recursive-descent parser over the token stream. Form terms are tracked as
// (coefficient, optional basis mask); pure polynomial parsing forbids basis
// tokens entirely.
class Parser {
 public:
  Parser(std::vector<Token> tokens, std::set<std::string> allowedNames, bool allowBasis,
         int dim)
      : tokens_(std::move(tokens)), names_(std::move(allowedNames)), allowBasis_(allowBasis),
        dim_(dim) {}

  const Token& peek() const { return tokens_[pos_]; }
  Token next() { return tokens_[pos_++]; }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }
  void expect(Tok kind, const std::string& what) {
    if (!accept(kind)) throw ParseError("expected " + what, peek().pos);
  }

  struct Value {
    Polynomial coeff;
    Mask mask = 0;  // 0 = scalar
    int degree = 0;
  };

  // expr := term (('+'|'-') term)*  -- a sum of Values merged by the caller.
  std::vector<Value> parseSum() {
    std::vector<Value> terms;
    bool negate = false;
    if (accept(Tok::Minus))
      negate = true;
    else
      accept(Tok::Plus);
    while (true) {
      Value v = parseProduct();
      if (negate) v.coeff = -v.coeff;
      terms.push_back(std::move(v));
      if (accept(Tok::Plus)) {
        negate = false;
      } else if (accept(Tok::Minus)) {
        negate = true;
      } else {
        break;
      }
    }
    return terms;
  }

  // product := factor (('*'|'/') factor | factor)*, implicit adjacency counts
  // as multiplication ("2e12"); division requires a constant divisor.
  Value parseProduct() {
    Value v = parseFactor();
    while (true) {
      if (accept(Tok::Star)) {
        mergeFactor(v, parseFactor(), false);
      } else if (accept(Tok::Slash)) {
        std::size_t at = peek().pos;
        Value d = parseFactor();
        if (d.mask != 0) throw ParseError("cannot divide by a basis form", at);
        if (!d.coeff.isConstant()) throw ParseError("division only by rational constants", at);
        if (d.coeff.isZero()) throw ParseError("division by zero", at);
        v.coeff = (d.coeff.constantValue().inverse()) * v.coeff;
      } else if (peek().kind == Tok::Number || peek().kind == Tok::Name ||
                 peek().kind == Tok::LParen) {
        mergeFactor(v, parseFactor(), false);
      } else {
        break;
      }
    }
    return v;
  }

  Value parseFactor() {
    const Token& t = peek();
    Value v;
    if (t.kind == Tok::Number) {
      next();
      v.coeff = Polynomial(Rational::fromString(t.text));
    } else if (t.kind == Tok::Name) {
      next();
      if (allowBasis_ && isBasisToken(t.text)) {
        v.mask = parseBasisMask(t);
        v.degree = multiindex::size(v.mask);
        v.coeff = Polynomial(Rational(1));
      } else {
        if (!names_.count(t.text))
          throw ParseError("unknown name \"" + t.text + "\"", t.pos);
        v.coeff = Polynomial::variable(t.text);
      }
    } else if (t.kind == Tok::LParen) {
      next();
      std::vector<Value> inner = parseSum();
      expect(Tok::RParen, "')'");
      for (const auto& term : inner)
        if (term.mask != 0)
          throw ParseError("basis forms cannot appear inside parentheses", t.pos);
      Polynomial sum;
      for (const auto& term : inner) sum += term.coeff;
      v.coeff = std::move(sum);
    } else if (t.kind == Tok::Minus || t.kind == Tok::Plus) {
      next();
      Value inner = parseFactor();
      if (t.kind == Tok::Minus) inner.coeff = -inner.coeff;
      return inner;
    } else {
      throw ParseError("expected a number, name, or '('", t.pos);
    }
    if (accept(Tok::Caret)) {
      const Token& e = peek();
      if (e.kind != Tok::Number) throw ParseError("expected an integer exponent", e.pos);
      next();
      if (v.mask != 0) throw ParseError("basis forms cannot be raised to powers", e.pos);
      v.coeff = v.coeff.pow(std::stoi(e.text));
    }
    return v;
  }

  Mask parseBasisMask(const Token& t) {
    std::vector<int> indices;
    for (std::size_t i = 1; i < t.text.size(); ++i) {
      int idx = t.text[i] - '0';
      if (!indices.empty() && idx <= indices.back())
        throw ParseError("multi-index must be strictly increasing in \"" + t.text + "\"",
                         t.pos);
      indices.push_back(idx);
    }
    if (dim_ > 0)
      for (int idx : indices)
        if (idx > dim_)
          throw ParseError("index " + std::to_string(idx) + " exceeds dimension " +
                               std::to_string(dim_),
                           t.pos);
    return multiindex::fromIndices(indices, dim_ > 0 ? dim_ : 9);
  }

  void mergeFactor(Value& v, const Value& f, bool /*division*/) {
    if (v.mask != 0 && f.mask != 0)
      throw ParseError("at most one basis factor per term", peek().pos);
    v.coeff *= f.coeff;
    if (f.mask != 0) {
      v.mask = f.mask;
      v.degree = f.degree;
    }
  }

  std::size_t position() const { return pos_; }

 private:
  std::vector<Token> tokens_;
  std::set<std::string> names_;
  bool allowBasis_;
  int dim_;
  std::size_t pos_ = 0;
};

// Folds parsed sum terms into a k-form; `degree` < 0 means "infer".
KForm buildForm(const std::vector<Parser::Value>& terms, int dim, int degree,
                std::size_t errPos) {
  int inferred = degree;
  bool sawBasis = false;
  for (const auto& t : terms) {
    if (t.mask == 0) {
      if (!t.coeff.isZero())
        throw ParseError("term without a basis factor must be 0", errPos);
      continue;
    }
    sawBasis = true;
    if (inferred < 0) inferred = t.degree;
    if (t.degree != inferred)
      throw ParseError("mixed degrees in form (found " + std::to_string(t.degree) +
                           ", expected " + std::to_string(inferred) + ")",
                       errPos);
  }
  if (!sawBasis && inferred < 0)
    throw ParseError("cannot infer the degree of the zero form", errPos);
  KForm f(dim, inferred);
  for (const auto& t : terms)
    if (t.mask != 0) f.addTerm(t.mask, t.coeff);
  return f;
}

std::string renderCoefficientTerm(const Polynomial& coeff, const std::string& basis,
                                  bool leading) {
  // Single-monomial coefficients render bare ("-2*e12", "mu*e46"); several
  // monomials get parentheses ("(mu+1)*e47").
  std::string out;
  if (coeff.terms().size() > 1) {
    out = (leading ? "" : "+") + std::string("(") + coeff.toString() + ")*" + basis;
    return out;
  }
  Polynomial abs = coeff;
  bool negative = coeff.leadingCoefficient().sign() < 0;
  if (negative) abs = -coeff;
  std::string sign = negative ? "-" : (leading ? "" : "+");
  std::string body = abs.toString();
  if (body == "1")
    out = sign + basis;
  else
    out = sign + body + "*" + basis;
  return out;
}

}  // namespace

Polynomial parsePolynomialExpression(const std::string& text,
                                     const std::vector<std::string>& allowedNames) {
  Parser parser(lex(text), {allowedNames.begin(), allowedNames.end()}, false, 0);
  auto terms = parser.parseSum();
  if (parser.peek().kind != Tok::End)
    throw ParseError("unexpected trailing input", parser.peek().pos);
  Polynomial sum;
  for (const auto& t : terms) sum += t.coeff;
  return sum;
}

KForm parseForm(const std::string& text, int dim, int degree,
                const std::vector<std::string>& allowedNames) {
  Parser parser(lex(text), {allowedNames.begin(), allowedNames.end()}, true, dim);
  auto terms = parser.parseSum();
  if (parser.peek().kind != Tok::End)
    throw ParseError("unexpected trailing input", parser.peek().pos);
  return buildForm(terms, dim, degree, 0);
}

LieAlgebra parseStructureEquations(const std::string& text,
                                   const std::vector<std::string>& params,
                                   const std::string& label) {
  auto tokens = lex(text);
  if (tokens.front().kind != Tok::LParen)
    throw ParseError("structure equations must start with '('", tokens.front().pos);
  // Split the token stream into top-level comma-separated entries.
  std::vector<std::vector<Token>> entries(1);
  int depth = 0;
  std::size_t i = 0;
  std::size_t closePos = 0;
  bool closed = false;
  for (i = 1; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    if (t.kind == Tok::End) break;
    if (t.kind == Tok::LParen) ++depth;
    if (t.kind == Tok::RParen) {
      if (depth == 0) {
        closed = true;
        closePos = i;
        break;
      }
      --depth;
    }
    if (t.kind == Tok::Comma && depth == 0) {
      entries.emplace_back();
    } else {
      entries.back().push_back(t);
    }
  }
  if (!closed) throw ParseError("missing closing ')'", tokens.back().pos);
  for (std::size_t j = closePos + 1; j < tokens.size(); ++j)
    if (tokens[j].kind != Tok::End)
      throw ParseError("unexpected trailing input", tokens[j].pos);

  int dim = static_cast<int>(entries.size());
  if (dim < 1 || dim > 9)
    throw ParseError("dimension must be between 1 and 9, got " + std::to_string(dim), 0);

  std::map<LieAlgebra::ConstantKey, Polynomial> constants;
  for (int k = 1; k <= dim; ++k) {
    auto entryTokens = entries[static_cast<std::size_t>(k - 1)];
    if (entryTokens.empty())
      throw ParseError("empty structure-equation entry " + std::to_string(k), 0);
    std::size_t entryPos = entryTokens.front().pos;
    entryTokens.push_back({Tok::End, "", entryPos});
    Parser parser(std::move(entryTokens), {params.begin(), params.end()}, true, dim);
    auto terms = parser.parseSum();
    if (parser.peek().kind != Tok::End)
      throw ParseError("unexpected input in entry " + std::to_string(k), parser.peek().pos);
    KForm de = buildForm(terms, dim, 2, entryPos);
    for (const auto& [mask, coeff] : de.coefficients()) {
      auto idx = multiindex::toIndices(mask);
      // de^k = -sum c^k_ij e^i^e^j.
      constants[{idx[0], idx[1], k}] = -coeff;
    }
  }
  return LieAlgebra(dim, label, params, std::move(constants));
}

std::string renderForm(const KForm& f) {
  if (f.isZero()) return "0";
  std::vector<Mask> masks;
  for (const auto& [m, c] : f.coefficients()) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), multiindex::tupleLexLess);
  std::string out;
  bool leading = true;
  for (Mask m : masks) {
    out += renderCoefficientTerm(f.coefficient(m), "e" + multiindex::digits(m), leading);
    leading = false;
  }
  return out;
}

std::vector<std::string> renderStructureEquationList(const LieAlgebra& g) {
  std::vector<std::string> out;
  for (int k = 1; k <= g.dim(); ++k) {
    KForm de(g.dim(), 2);
    for (const auto& [key, c] : g.constants()) {
      auto [i, j, kk] = key;
      if (kk != k) continue;
      de.addTerm(multiindex::fromIndices({i, j}, g.dim()), -c);
    }
    out.push_back(renderForm(de));
  }
  return out;
}

std::string LieAlgebra::render() const {
  std::string out = "(";
  auto list = renderStructureEquationList(*this);
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i) out += ",";
    out += list[i];
  }
  return out + ")";
}

}  // namespace g2forge
