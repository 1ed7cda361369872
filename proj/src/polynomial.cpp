#include "g2forge/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace g2forge {

namespace {

bool validVariableName(const std::string& name) {
  if (name.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  for (char c : name)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

}  // namespace

Polynomial::Polynomial(const Rational& c) {
  if (!c.isZero()) terms_[{}] = c;
}

Polynomial Polynomial::variable(const std::string& name) {
  if (!validVariableName(name))
    throw std::invalid_argument("Polynomial: invalid variable name \"" + name + "\"");
  Polynomial p;
  p.vars_ = {name};
  p.terms_[{1}] = Rational(1);
  return p;
}

Polynomial Polynomial::term(const Rational& c,
                            const std::vector<std::pair<std::string, int>>& factors) {
  Polynomial p(c);
  for (const auto& [name, exp] : factors) p *= Polynomial::variable(name).pow(exp);
  return p;
}

Rational Polynomial::constantValue() const {
  if (!isConstant()) throw std::logic_error("Polynomial: constantValue() on non-constant");
  if (terms_.empty()) return Rational(0);
  return terms_.begin()->second;
}

int Polynomial::totalDegree() const {
  int best = 0;
  for (const auto& [mono, c] : terms_) {
    int d = 0;
    for (int e : mono) d += e;
    best = std::max(best, d);
  }
  return best;
}

int Polynomial::degreeIn(const std::string& var) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) return 0;
  std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
  int best = 0;
  for (const auto& [mono, c] : terms_) best = std::max(best, mono[idx]);
  return best;
}

bool Polynomial::usesVariable(const std::string& var) const {
  return std::binary_search(vars_.begin(), vars_.end(), var);
}

bool Polynomial::isHomogeneous(int degree) const {
  for (const auto& [mono, c] : terms_) {
    int d = 0;
    for (int e : mono) d += e;
    if (d != degree) return false;
  }
  return true;
}

Rational Polynomial::coefficientOfMonomial(const std::map<std::string, int>& mono) const {
  for (const auto& [name, exp] : mono)
    if (exp < 0) throw std::invalid_argument("Polynomial: negative exponent");
  Exponents key(vars_.size(), 0);
  std::map<std::string, int> rest = mono;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = rest.find(vars_[i]);
    if (it != rest.end()) {
      key[i] = it->second;
      rest.erase(it);
    }
  }
  for (const auto& [name, exp] : rest)
    if (exp != 0) return Rational(0);  // monomial uses a variable absent from p
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::leadingCoefficient() const {
  if (isZero()) throw std::logic_error("Polynomial: leading term of zero");
  return terms_.rbegin()->second;
}

std::map<std::string, int> Polynomial::leadingMonomial() const {
  if (isZero()) throw std::logic_error("Polynomial: leading term of zero");
  std::map<std::string, int> mono;
  const Exponents& key = terms_.rbegin()->first;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (key[i] != 0) mono[vars_[i]] = key[i];
  return mono;
}

void Polynomial::compress() {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = it->second.isZero() ? terms_.erase(it) : std::next(it);
  if (vars_.empty()) return;
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [mono, c] : terms_)
    for (std::size_t i = 0; i < mono.size(); ++i)
      if (mono[i] != 0) used[i] = true;
  if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
  std::vector<std::string> newVars;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (used[i]) newVars.push_back(vars_[i]);
  TermMap newTerms;
  for (const auto& [mono, c] : terms_) {
    Exponents key;
    key.reserve(newVars.size());
    for (std::size_t i = 0; i < mono.size(); ++i)
      if (used[i]) key.push_back(mono[i]);
    newTerms[std::move(key)] = c;
  }
  vars_ = std::move(newVars);
  terms_ = std::move(newTerms);
}

void Polynomial::alignVars(const Polynomial& a, const Polynomial& b,
                           std::vector<std::string>& mergedVars, TermMap& ta, TermMap& tb) {
  mergedVars.clear();
  std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                 std::back_inserter(mergedVars));
  auto remap = [&mergedVars](const Polynomial& p, TermMap& out) {
    std::vector<std::size_t> pos(p.vars_.size());
    for (std::size_t i = 0; i < p.vars_.size(); ++i)
      pos[i] = static_cast<std::size_t>(
          std::lower_bound(mergedVars.begin(), mergedVars.end(), p.vars_[i]) -
          mergedVars.begin());
    out.clear();
    for (const auto& [mono, c] : p.terms_) {
      Exponents key(mergedVars.size(), 0);
      for (std::size_t i = 0; i < mono.size(); ++i) key[pos[i]] = mono[i];
      out[std::move(key)] = c;
    }
  };
  remap(a, ta);
  remap(b, tb);
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [mono, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.isZero()) return *this;
  if (isZero()) return *this = o;
  if (vars_ == o.vars_) {
    for (const auto& [mono, c] : o.terms_) {
      auto [it, inserted] = terms_.emplace(mono, c);
      if (!inserted) it->second += c;
    }
  } else {
    std::vector<std::string> mergedVars;
    TermMap ta, tb;
    alignVars(*this, o, mergedVars, ta, tb);
    for (const auto& [mono, c] : tb) {
      auto [it, inserted] = ta.emplace(mono, c);
      if (!inserted) it->second += c;
    }
    vars_ = std::move(mergedVars);
    terms_ = std::move(ta);
  }
  compress();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.isZero() || b.isZero()) return Polynomial();
  Polynomial r;
  Polynomial::TermMap ta, tb;
  Polynomial::alignVars(a, b, r.vars_, ta, tb);
  for (const auto& [ma, ca] : ta) {
    for (const auto& [mb, cb] : tb) {
      Polynomial::Exponents key(ma.size());
      for (std::size_t i = 0; i < ma.size(); ++i) key[i] = ma[i] + mb[i];
      Rational prod = ca * cb;
      auto [it, inserted] = r.terms_.emplace(std::move(key), prod);
      if (!inserted) it->second += prod;
    }
  }
  r.compress();
  return r;
}

Polynomial& Polynomial::scale(const Rational& c) {
  if (c.isZero()) {
    vars_.clear();
    terms_.clear();
    return *this;
  }
  for (auto& [mono, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& bindings) const {
  Polynomial result;
  for (const auto& [mono, c] : terms_) {
    Polynomial term(c);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (mono[i] == 0) continue;
      auto it = bindings.find(vars_[i]);
      Polynomial base = (it != bindings.end()) ? it->second : Polynomial::variable(vars_[i]);
      term *= base.pow(mono[i]);
    }
    result += term;
  }
  return result;
}

Polynomial Polynomial::substitute(const std::map<std::string, Rational>& bindings) const {
  std::map<std::string, Polynomial> lifted;
  for (const auto& [name, value] : bindings) lifted.emplace(name, Polynomial(value));
  return substitute(lifted);
}

Rational Polynomial::evaluate(const std::map<std::string, Rational>& bindings) const {
  std::vector<const Rational*> values(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = bindings.find(vars_[i]);
    if (it == bindings.end())
      throw std::invalid_argument("Polynomial: unbound variable \"" + vars_[i] + "\"");
    values[i] = &it->second;
  }
  Rational total(0);
  for (const auto& [mono, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < mono.size(); ++i)
      if (mono[i] != 0) term *= values[i]->pow(mono[i]);
    total += term;
  }
  return total;
}

Rational Polynomial::content() const {
  Rational g(0);
  for (const auto& [mono, c] : terms_) g = rationalContentGcd(g, c);
  return g;
}

Polynomial Polynomial::primitivePart() const {
  if (isZero()) return *this;
  Polynomial r = *this;
  Rational g = content();
  for (auto& [mono, c] : r.terms_) c /= g;
  return r;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw std::invalid_argument("Polynomial: negative power");
  Polynomial r(Rational(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    if (e >>= 1) base *= base;
  }
  return r;
}

Polynomial Polynomial::reduceSquareRoot(const std::string& var, const Rational& square) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) return *this;
  std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
  Polynomial r;
  r.vars_ = vars_;
  for (const auto& [mono, c] : terms_) {
    Exponents key = mono;
    Rational coeff = c * square.pow(mono[idx] / 2);
    key[idx] = mono[idx] % 2;
    auto [at, inserted] = r.terms_.emplace(std::move(key), coeff);
    if (!inserted) at->second += coeff;
  }
  r.compress();
  return r;
}

std::string Polynomial::toString() const {
  if (isZero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [mono, c] = *it;
    Rational a = c.abs();
    if (first) {
      if (c.sign() < 0) out << "-";
      first = false;
    } else {
      out << (c.sign() < 0 ? "-" : "+");
    }
    bool hasVars = std::any_of(mono.begin(), mono.end(), [](int e) { return e != 0; });
    bool needCoeff = !hasVars || a != Rational(1);
    if (needCoeff) out << a.toString();
    bool needStar = needCoeff;
    for (std::size_t i = 0; i < mono.size(); ++i) {
      if (mono[i] == 0) continue;
      if (needStar) out << "*";
      out << vars_[i];
      if (mono[i] != 1) out << "^" << mono[i];
      needStar = true;
    }
  }
  return out.str();
}

std::optional<Polynomial> tryDivideExact(const Polynomial& a, const Polynomial& b) {
  if (b.isZero()) throw std::domain_error("tryDivideExact: division by zero polynomial");
  if (a.isZero()) return Polynomial();
  std::vector<std::string> mergedVars;
  Polynomial::TermMap ta, tb;
  Polynomial::alignVars(a, b, mergedVars, ta, tb);
  Polynomial rem;
  rem.vars_ = mergedVars;
  rem.terms_ = std::move(ta);
  Polynomial div;
  div.vars_ = mergedVars;
  div.terms_ = std::move(tb);
  const auto& ltDiv = div.terms_.rbegin()->first;
  const Rational& lcDiv = div.terms_.rbegin()->second;

  Polynomial quot;
  quot.vars_ = mergedVars;
  while (!rem.terms_.empty()) {
    const auto& ltRem = rem.terms_.rbegin()->first;
    Polynomial::Exponents diff(mergedVars.size());
    for (std::size_t i = 0; i < mergedVars.size(); ++i) {
      diff[i] = ltRem[i] - ltDiv[i];
      if (diff[i] < 0) return std::nullopt;
    }
    Rational qc = rem.terms_.rbegin()->second / lcDiv;
    // rem -= qc * x^diff * div
    for (const auto& [mono, c] : div.terms_) {
      Polynomial::Exponents key(mergedVars.size());
      for (std::size_t i = 0; i < mergedVars.size(); ++i) key[i] = diff[i] + mono[i];
      Rational delta = qc * c;
      auto [it, inserted] = rem.terms_.emplace(std::move(key), -delta);
      if (!inserted) {
        it->second -= delta;
        if (it->second.isZero()) rem.terms_.erase(it);
      } else if (it->second.isZero()) {
        rem.terms_.erase(it);
      }
    }
    auto [qt, inserted] = quot.terms_.emplace(std::move(diff), qc);
    if (!inserted) qt->second += qc;  // unreachable: leading terms strictly decrease
  }
  quot.compress();
  return quot;
}

namespace {

// p with leading coefficient made positive.
Polynomial normalizeSign(const Polynomial& p) {
  if (p.isZero()) return p;
  return p.leadingCoefficient().sign() < 0 ? -p : p;
}

// Coefficient of var^k in p, as a polynomial in the remaining variables.
Polynomial coefficientOfPower(const Polynomial& p, const std::string& var, int k) {
  Polynomial r;
  for (const auto& [mono, c] : p.terms()) {
    int e = 0;
    std::vector<std::pair<std::string, int>> factors;
    for (std::size_t i = 0; i < p.vars().size(); ++i) {
      if (p.vars()[i] == var)
        e = mono[i];
      else if (mono[i] != 0)
        factors.emplace_back(p.vars()[i], mono[i]);
    }
    if (e == k) r += Polynomial::term(c, factors);
  }
  return r;
}

// Gcd of the var-power coefficients of p (a polynomial free of var).
Polynomial contentIn(const Polynomial& p, const std::string& var) {
  Polynomial g;
  for (int k = 0; k <= p.degreeIn(var); ++k) {
    Polynomial ck = coefficientOfPower(p, var, k);
    if (!ck.isZero()) g = polyGcd(g, ck);
    if (g.isConstant() && !g.isZero()) break;
  }
  return g;
}

Polynomial exactDivOrThrow(const Polynomial& a, const Polynomial& b) {
  auto q = tryDivideExact(a, b);
  if (!q) throw std::logic_error("polyGcd: internal exact division failed");
  return *q;
}

// Pseudo-remainder of p by q with respect to var (deg_var q >= 1).
Polynomial pseudoRemainder(const Polynomial& p, const Polynomial& q, const std::string& var) {
  int dq = q.degreeIn(var);
  Polynomial lq = coefficientOfPower(q, var, dq);
  Polynomial r = p;
  while (!r.isZero() && r.degreeIn(var) >= dq) {
    int dr = r.degreeIn(var);
    Polynomial lr = coefficientOfPower(r, var, dr);
    Polynomial shift = Polynomial::variable(var).pow(dr - dq);
    r = lq * r - lr * shift * q;
  }
  return r;
}

}  // namespace

Polynomial polyGcd(const Polynomial& a, const Polynomial& b) {
  if (a.isZero()) return normalizeSign(b.primitivePart());
  if (b.isZero()) return normalizeSign(a.primitivePart());
  if (a.isConstant() || b.isConstant()) return Polynomial(Rational(1));

  // Recurse on the lex-greatest variable of the union.
  std::string var = std::max(a.vars().back(), b.vars().back());
  if (!a.usesVariable(var)) return polyGcd(a, contentIn(b, var));
  if (!b.usesVariable(var)) return polyGcd(contentIn(a, var), b);

  Polynomial ca = contentIn(a, var);
  Polynomial cb = contentIn(b, var);
  Polynomial c = polyGcd(ca, cb);
  Polynomial A = exactDivOrThrow(a, ca);
  Polynomial B = exactDivOrThrow(b, cb);
  if (A.degreeIn(var) < B.degreeIn(var)) std::swap(A, B);

  Polynomial g;
  while (true) {
    Polynomial r = pseudoRemainder(A, B, var);
    if (r.isZero()) {
      g = B;
      break;
    }
    if (r.degreeIn(var) == 0) {
      g = Polynomial(Rational(1));
      break;
    }
    A = B;
    B = exactDivOrThrow(r, contentIn(r, var));
  }
  if (!g.isConstant()) g = exactDivOrThrow(g, contentIn(g, var));
  return normalizeSign((c * g).primitivePart());
}

CommonFactor commonFactor(const std::vector<Polynomial>& ps) {
  if (ps.empty()) throw std::invalid_argument("commonFactor: empty input");
  Polynomial f;
  for (const auto& p : ps)
    if (!p.isZero()) f = polyGcd(f, p);
  if (f.isZero()) f = Polynomial(Rational(1));  // all entries zero
  CommonFactor result;
  result.factor = f;
  result.reduced.reserve(ps.size());
  for (const auto& p : ps) {
    if (p.isZero()) {
      result.reduced.emplace_back();
    } else {
      auto q = tryDivideExact(p, f);
      if (!q) throw std::logic_error("commonFactor: gcd does not divide input");
      result.reduced.push_back(std::move(*q));
    }
  }
  return result;
}

std::optional<Polynomial> perfectSquareRoot(const Polynomial& p) {
  if (p.isZero()) return Polynomial();
  if (p.isConstant()) {
    auto s = p.constantValue().sqrtExact();
    if (!s) return std::nullopt;
    return Polynomial(*s);
  }
  const auto& ltMono = p.terms_.rbegin()->first;
  const Rational& ltCoeff = p.terms_.rbegin()->second;
  auto s = ltCoeff.sqrtExact();
  if (!s) return std::nullopt;
  Polynomial::Exponents half(ltMono.size());
  for (std::size_t i = 0; i < ltMono.size(); ++i) {
    if (ltMono[i] % 2 != 0) return std::nullopt;
    half[i] = ltMono[i] / 2;
  }

  Polynomial q;
  q.vars_ = p.vars_;
  q.terms_[half] = *s;
  Rational twoLead = Rational(2) * (*s);
  Polynomial rem = p - q * q;
  std::optional<Polynomial::Exponents> lastAdded;
  // Each accepted term is strictly smaller than the last, so the number of
  // iterations is bounded by the number of monomials below lt(q); cap it
  // defensively relative to the input size.
  std::size_t guard = 4 * p.terms_.size() + 16;
  while (!rem.isZero()) {
    if (guard-- == 0) return std::nullopt;
    std::vector<std::string> mergedVars;
    Polynomial::TermMap tr, tq;
    Polynomial::alignVars(rem, q, mergedVars, tr, tq);
    // Candidate next term t = lt(rem) / (2 lt(q)); all computed in merged vars.
    Polynomial::Exponents halfM(mergedVars.size(), 0);
    {
      std::size_t j = 0;
      for (std::size_t i = 0; i < mergedVars.size(); ++i) {
        while (j < p.vars_.size() && p.vars_[j] < mergedVars[i]) ++j;
        if (j < p.vars_.size() && p.vars_[j] == mergedVars[i]) halfM[i] = half[j++];
      }
    }
    const auto& ltRem = tr.rbegin()->first;
    Polynomial::Exponents tMono(mergedVars.size());
    for (std::size_t i = 0; i < mergedVars.size(); ++i) {
      tMono[i] = ltRem[i] - halfM[i];
      if (tMono[i] < 0) return std::nullopt;
    }
    if (!(tMono < halfM)) return std::nullopt;  // must be below lt(q)
    if (lastAdded && !(tMono < *lastAdded)) return std::nullopt;
    lastAdded = tMono;
    Rational tCoeff = tr.rbegin()->second / twoLead;
    Polynomial t;
    t.vars_ = mergedVars;
    t.terms_[tMono] = tCoeff;
    rem -= (Rational(2) * q + t) * t;
    q += t;
  }
  if (q * q != p) return std::nullopt;
  return normalizeSign(q);
}

int signInQuadraticExtension(const Polynomial& p, const std::string& var,
                             const Rational& square) {
  if (square.sign() <= 0)
    throw std::invalid_argument("signInQuadraticExtension: square must be positive");
  if (p.isZero()) return 0;
  for (const auto& v : p.vars())
    if (v != var)
      throw std::invalid_argument("signInQuadraticExtension: extra variable \"" + v + "\"");
  if (p.degreeIn(var) > 1)
    throw std::invalid_argument("signInQuadraticExtension: reduce the square first");
  Rational a = p.coefficientOfMonomial({});
  Rational b = p.coefficientOfMonomial({{var, 1}});
  if (b.isZero()) return a.sign();
  if (a.isZero()) return b.sign();
  if (a.sign() == b.sign()) return a.sign();
  // Mixed signs: compare |a| with |b| sqrt(square) via squares.
  return a.sign() * (a * a - square * b * b).sign();
}

}  // namespace g2forge
