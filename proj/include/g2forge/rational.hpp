#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace g2forge {

// Exact rational number, always kept in canonical form: numerator and
// denominator coprime, denominator positive, zero represented as 0/1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT implicit
  Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  // Parses "p", "-p", or "p/q" with optional sign on the numerator.
  static Rational fromString(const std::string& text);

  const mpq_class& raw() const { return v_; }

  bool isZero() const { return sgn(v_) == 0; }
  bool isInteger() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.isZero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  Rational inverse() const {
    if (isZero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1) / v_);
  }

  Rational pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    mpq_class r(1);
    mpq_class base = v_;
    while (e > 0) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return Rational(r);
  }

  // Exact square root if both numerator and denominator are perfect squares
  // (and the value is nonnegative); the returned root is nonnegative.
  std::optional<Rational> sqrtExact() const {
    if (sign() < 0) return std::nullopt;
    const mpz_class& num = v_.get_num();
    const mpz_class& den = v_.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
      return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(mpq_class(rn, rd));
  }

  double toDouble() const { return v_.get_d(); }

  // Renders as "p" for integers and "p/q" otherwise.
  std::string toString() const {
    if (isInteger()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

 private:
  mpq_class v_;
};

inline Rational Rational::fromString(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("Rational: empty string");
  std::size_t start = 0;
  if (text[0] == '+' || text[0] == '-') start = 1;
  bool seenDigit = false;
  bool seenSlash = false;
  for (std::size_t i = start; i < text.size(); ++i) {
    char c = text[i];
    if (c >= '0' && c <= '9') {
      seenDigit = true;
    } else if (c == '/' && !seenSlash && seenDigit && i + 1 < text.size()) {
      seenSlash = true;
      seenDigit = false;
    } else {
      throw std::invalid_argument("Rational: cannot parse \"" + text + "\"");
    }
  }
  if (!seenDigit) throw std::invalid_argument("Rational: cannot parse \"" + text + "\"");
  mpq_class v;
  // mpq set_str rejects an explicit leading '+'.
  if (v.set_str(text[0] == '+' ? text.substr(1) : text, 10) != 0)
    throw std::invalid_argument("Rational: cannot parse \"" + text + "\"");
  if (v.get_den() == 0) throw std::domain_error("Rational: zero denominator");
  v.canonicalize();
  return Rational(v);
}

// Greatest common divisor of |a| and |b| as a nonnegative rational:
// gcd(p1/q1, p2/q2) = gcd(p1 p2) / lcm(q1 q2) is the standard convention, but
// for coefficient content all we need is a positive generator of the
// fractional ideal, so gcd of numerators over lcm of denominators.
inline Rational rationalContentGcd(const Rational& a, const Rational& b) {
  if (a.isZero()) return b.abs();
  if (b.isZero()) return a.abs();
  mpz_class gn, gl;
  mpz_gcd(gn.get_mpz_t(), a.raw().get_num().get_mpz_t(), b.raw().get_num().get_mpz_t());
  mpz_lcm(gl.get_mpz_t(), a.raw().get_den().get_mpz_t(), b.raw().get_den().get_mpz_t());
  return Rational(mpq_class(gn, gl));
}

}  // namespace g2forge
