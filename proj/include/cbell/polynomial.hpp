#ifndef CBELL_POLYNOMIAL_HPP
#define CBELL_POLYNOMIAL_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "cbell/rational.hpp"

namespace cbell {

// Dense univariate polynomial in x over Rational. Coefficient index = power
// of x; the highest-index stored coefficient is nonzero unless the polynomial
// is zero (empty coefficient vector).
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT: implicit ring embedding
  Polynomial(long constant) : Polynomial(Rational(constant)) {}
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial monomial(int power, const Rational& coeff = Rational(1));
  static Polynomial x() { return monomial(1); }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }

  // Coefficient of x^i; zero beyond the degree.
  const Rational& coeff(int i) const;

  Rational eval(const Rational& r) const;

  // k-th derivative (d/dx)^k.
  Polynomial derivative(unsigned k = 1) const;

  // p(c*x): substitutes a scaled argument.
  Polynomial with_scaled_argument(const Rational& c) const;

  // Coefficient strings, index = power of x; {"0"} for the zero polynomial.
  std::vector<std::string> coeff_strings() const;
  std::string to_string() const;  // human-readable, for diagnostics

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& p);
  Polynomial& operator-=(const Polynomial& p);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& p, const Rational& s);
  friend Polynomial operator*(const Rational& s, const Polynomial& p) { return p * s; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// (x)_k = x(x-1)...(x-k+1), with (x)_0 = 1.
Polynomial falling_factorial(unsigned k);

}  // namespace cbell

#endif
