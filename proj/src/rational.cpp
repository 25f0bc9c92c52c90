#include "cbell/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace cbell {

namespace {

void require_nonzero_den(const mpz_class& den) {
  if (sgn(den) == 0) throw std::domain_error("rational: zero denominator");
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  require_nonzero_den(den);
  q_ = mpq_class(num) / mpq_class(den);  // mpq division canonicalizes
}

Rational Rational::from_string(const std::string& s) {
  auto slash = s.find('/');
  const std::string num_part = s.substr(0, slash);
  const std::string den_part = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
  auto valid_int = [](const std::string& t, bool allow_sign) {
    if (t.empty()) return false;
    size_t i = (allow_sign && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  if (!valid_int(num_part, true) || !valid_int(den_part, false))
    throw std::invalid_argument("rational: cannot parse '" + s + "'");
  mpz_class num(num_part), den(den_part);
  return Rational(num, den);
}

Rational Rational::operator-() const {
  Rational r;
  r.q_ = -q_;
  return r;
}

Rational& Rational::operator+=(const Rational& r) {
  q_ += r.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& r) {
  q_ -= r.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& r) {
  q_ *= r.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& r) {
  if (r.is_zero()) throw std::domain_error("rational: division by zero");
  q_ /= r.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

Rational pow(const Rational& r, unsigned e) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), r.num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), r.den().get_mpz_t(), e);
  return Rational(num, den);
}

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

Rational binomial(unsigned n, unsigned k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

}  // namespace cbell
