#ifndef CBELL_SERIES_HPP
#define CBELL_SERIES_HPP

#include <stdexcept>
#include <vector>

#include "cbell/polynomial.hpp"
#include "cbell/rational.hpp"

namespace cbell {

template <typename R>
struct ring_traits;

template <>
struct ring_traits<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
};

template <>
struct ring_traits<Polynomial> {
  static Polynomial zero() { return {}; }
  static Polynomial one() { return Polynomial(Rational(1)); }
};

// Formal power series sum c_i t^i truncated at a fixed order N, with
// coefficients in R (Rational or Polynomial). Coefficients are stored plain;
// egf_coeff applies the n! scaling at extraction. Binary operations demand
// equal orders; there is no silent re-truncation.
template <typename R>
class Series {
 public:
  explicit Series(int order) : coeffs_(check_order(order) + 1, ring_traits<R>::zero()) {}
  Series(int order, std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
    if (static_cast<int>(coeffs_.size()) != check_order(order) + 1)
      throw std::invalid_argument("series: coefficient count must be order+1");
  }

  static Series constant(int order, const R& c0) {
    Series s(order);
    s.coeffs_[0] = c0;
    return s;
  }
  static Series one(int order) { return constant(order, ring_traits<R>::one()); }
  static Series monomial(int order, int power, const R& c) {
    Series s(order);
    if (power < 0 || power > order) throw std::invalid_argument("series: power out of range");
    s.coeffs_[power] = c;
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  const R& operator[](int i) const {
    if (i < 0 || i > order()) throw std::out_of_range("series: index beyond order");
    return coeffs_[i];
  }
  R& operator[](int i) {
    if (i < 0 || i > order()) throw std::out_of_range("series: index beyond order");
    return coeffs_[i];
  }

  // n! * c_n, i.e. a_n when the series is read as sum a_n t^n / n!.
  R egf_coeff(int n) const { return (*this)[n] * factorial(static_cast<unsigned>(n)); }

  // Termwise multiplication by a ring element.
  Series scaled(const R& s) const {
    Series r(order());
    for (int i = 0; i <= order(); ++i) r.coeffs_[i] = coeffs_[i] * s;
    return r;
  }

  Series operator-() const {
    Series r(order());
    for (int i = 0; i <= order(); ++i) r.coeffs_[i] = ring_traits<R>::zero() - coeffs_[i];
    return r;
  }

  friend Series operator+(const Series& f, const Series& g) {
    f.check_same_order(g);
    Series r(f.order());
    for (int i = 0; i <= f.order(); ++i) r.coeffs_[i] = f.coeffs_[i] + g.coeffs_[i];
    return r;
  }

  friend Series operator-(const Series& f, const Series& g) {
    f.check_same_order(g);
    Series r(f.order());
    for (int i = 0; i <= f.order(); ++i) r.coeffs_[i] = f.coeffs_[i] - g.coeffs_[i];
    return r;
  }

  // Cauchy product truncated at the shared order.
  friend Series operator*(const Series& f, const Series& g) {
    f.check_same_order(g);
    Series r(f.order());
    for (int n = 0; n <= f.order(); ++n) {
      R acc = ring_traits<R>::zero();
      for (int i = 0; i <= n; ++i) acc = acc + f.coeffs_[i] * g.coeffs_[n - i];
      r.coeffs_[n] = acc;
    }
    return r;
  }

  Series pow(unsigned k) const {
    Series r = one(order());
    for (unsigned i = 0; i < k; ++i) r = r * (*this);
    return r;
  }

  // exp(f) for f with zero constant term, by the coefficient recurrence
  // n g_n = sum_{j=1..n} j f_j g_{n-j}.
  Series exp() const {
    if (!(coeffs_[0] == ring_traits<R>::zero()))
      throw std::domain_error("series exp: constant term must be zero");
    Series g(order());
    g.coeffs_[0] = ring_traits<R>::one();
    for (int n = 1; n <= order(); ++n) {
      R acc = ring_traits<R>::zero();
      for (int j = 1; j <= n; ++j)
        acc = acc + coeffs_[j] * Rational(j) * g.coeffs_[n - j];
      g.coeffs_[n] = acc * Rational(1, n);
    }
    return g;
  }

  // log(f) for f with constant term one: n h_n = n f_n - sum_{j=1..n-1} j h_j f_{n-j}.
  Series log() const {
    if (!(coeffs_[0] == ring_traits<R>::one()))
      throw std::domain_error("series log: constant term must be one");
    Series h(order());
    for (int n = 1; n <= order(); ++n) {
      R acc = coeffs_[n] * Rational(n);
      for (int j = 1; j < n; ++j)
        acc = acc - h.coeffs_[j] * Rational(j) * coeffs_[n - j];
      h.coeffs_[n] = acc * Rational(1, n);
    }
    return h;
  }

  // g with g*g = f (truncated), for f with constant term one:
  // g_n = (f_n - sum_{j=1..n-1} g_j g_{n-j}) / 2.
  Series sqrt() const {
    if (!(coeffs_[0] == ring_traits<R>::one()))
      throw std::domain_error("series sqrt: constant term must be one");
    Series g(order());
    g.coeffs_[0] = ring_traits<R>::one();
    for (int n = 1; n <= order(); ++n) {
      R acc = coeffs_[n];
      for (int j = 1; j < n; ++j) acc = acc - g.coeffs_[j] * g.coeffs_[n - j];
      g.coeffs_[n] = acc * Rational(1, 2);
    }
    return g;
  }

  // g with f*g = 1 (truncated), for f with constant term one:
  // g_n = -sum_{j=1..n} f_j g_{n-j}.
  Series reciprocal() const {
    if (!(coeffs_[0] == ring_traits<R>::one()))
      throw std::domain_error("series reciprocal: constant term must be one");
    Series g(order());
    g.coeffs_[0] = ring_traits<R>::one();
    for (int n = 1; n <= order(); ++n) {
      R acc = ring_traits<R>::zero();
      for (int j = 1; j <= n; ++j) acc = acc - coeffs_[j] * g.coeffs_[n - j];
      g.coeffs_[n] = acc;
    }
    return g;
  }

  friend bool operator==(const Series& f, const Series& g) { return f.coeffs_ == g.coeffs_; }
  friend bool operator!=(const Series& f, const Series& g) { return !(f == g); }

 private:
  static int check_order(int order) {
    if (order < 0) throw std::invalid_argument("series: negative order");
    return order;
  }
  void check_same_order(const Series& g) const {
    if (order() != g.order())
      throw std::invalid_argument("series: order mismatch between operands");
  }

  std::vector<R> coeffs_;
};

// Embeds a rational series into the polynomial-coefficient ring
// (constant-polynomial embedding).
inline Series<Polynomial> promote(const Series<Rational>& f) {
  Series<Polynomial> g(f.order());
  for (int i = 0; i <= f.order(); ++i) g[i] = Polynomial(f[i]);
  return g;
}

}  // namespace cbell

#endif
