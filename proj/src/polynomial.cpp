#include "cbell/polynomial.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace cbell {

Polynomial::Polynomial(const Rational& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

Polynomial Polynomial::monomial(int power, const Rational& coeff) {
  if (power < 0) throw std::invalid_argument("polynomial: negative power");
  if (coeff.is_zero()) return {};
  Polynomial p;
  p.coeffs_.assign(power + 1, Rational(0));
  p.coeffs_[power] = coeff;
  return p;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Rational& Polynomial::coeff(int i) const {
  static const Rational zero(0);
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero;
  return coeffs_[i];
}

Rational Polynomial::eval(const Rational& r) const {
  Rational acc(0);  // Horner
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * r + *it;
  return acc;
}

Polynomial Polynomial::derivative(unsigned k) const {
  Polynomial p = *this;
  for (unsigned round = 0; round < k; ++round) {
    if (p.coeffs_.empty()) return p;
    std::vector<Rational> d;
    d.reserve(p.coeffs_.size() - 1);
    for (size_t i = 1; i < p.coeffs_.size(); ++i)
      d.push_back(p.coeffs_[i] * Rational(static_cast<long>(i)));
    p.coeffs_ = std::move(d);
    p.trim();
  }
  return p;
}

Polynomial Polynomial::with_scaled_argument(const Rational& c) const {
  Polynomial p;
  p.coeffs_.reserve(coeffs_.size());
  Rational power(1);
  for (const auto& a : coeffs_) {
    p.coeffs_.push_back(a * power);
    power *= c;
  }
  p.trim();
  return p;
}

std::vector<std::string> Polynomial::coeff_strings() const {
  if (coeffs_.empty()) return {"0"};
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& a : coeffs_) out.push_back(a.to_string());
  return out;
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    os << coeffs_[i].to_string();
    if (i >= 1) os << "*x";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& a : p.coeffs_) a = -a;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& p) {
  if (p.coeffs_.size() > coeffs_.size()) coeffs_.resize(p.coeffs_.size(), Rational(0));
  for (size_t i = 0; i < p.coeffs_.size(); ++i) coeffs_[i] += p.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& p) {
  if (p.coeffs_.size() > coeffs_.size()) coeffs_.resize(p.coeffs_.size(), Rational(0));
  for (size_t i = 0; i < p.coeffs_.size(); ++i) coeffs_[i] -= p.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Polynomial p;
  p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  p.trim();  // product of nonzero leading coefficients is nonzero over Q
  return p;
}

Polynomial operator*(const Polynomial& p, const Rational& s) {
  if (s.is_zero()) return {};
  Polynomial q = p;
  for (auto& a : q.coeffs_) a *= s;
  return q;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  return os << p.to_string();
}

Polynomial falling_factorial(unsigned k) {
  Polynomial p(Rational(1));
  for (unsigned i = 0; i < k; ++i)
    p = p * (Polynomial::x() - Polynomial(Rational(static_cast<long>(i))));
  return p;
}

}  // namespace cbell
