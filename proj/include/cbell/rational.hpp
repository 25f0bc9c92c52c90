#ifndef CBELL_RATIONAL_HPP
#define CBELL_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace cbell {

// Arbitrary-precision rational number, always kept in canonical form:
// gcd(|num|, den) = 1, den > 0, zero is 0/1. All arithmetic is exact.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: implicit by design
  Rational(int n) : q_(n) {}   // NOLINT
  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpz_class& n) : q_(n) {}

  // Parses "p/q" or "p" (lowest terms not required on input).
  static Rational from_string(const std::string& s);

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  int sign() const { return sgn(q_); }

  // "p/q" in lowest terms, "p" alone when q = 1.
  std::string to_string() const { return q_.get_str(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& r);
  Rational& operator-=(const Rational& r);
  Rational& operator*=(const Rational& r);
  Rational& operator/=(const Rational& r);  // throws on division by zero

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class q_;
};

// r^e for e >= 0 (r^0 = 1, including r = 0).
Rational pow(const Rational& r, unsigned e);

// n! and binomial(n, k) as exact rationals (integer-valued).
Rational factorial(unsigned n);
Rational binomial(unsigned n, unsigned k);

// (-1)^e as a rational sign factor.
inline Rational alt_sign(long e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

}  // namespace cbell

#endif
