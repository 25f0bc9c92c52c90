#include "cbell/moments.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

#include "cbell/classical.hpp"

namespace cbell {

MomentModel MomentModel::constant(const Rational& c) {
  MomentModel m;
  m.kind_ = Kind::Constant;
  m.param_ = c;
  return m;
}

MomentModel MomentModel::bernoulli(const Rational& p) {
  if (p < Rational(0) || p > Rational(1))
    throw std::invalid_argument("bernoulli: p must lie in [0, 1]");
  MomentModel m;
  m.kind_ = Kind::Bernoulli;
  m.param_ = p;
  return m;
}

MomentModel MomentModel::poisson(const Rational& alpha) {
  MomentModel m;
  m.kind_ = Kind::Poisson;
  m.param_ = alpha;
  return m;
}

MomentModel MomentModel::finite_discrete(std::vector<std::pair<Rational, Rational>> support) {
  if (support.empty()) throw std::invalid_argument("discrete: empty support");
  Rational total(0);
  for (const auto& [value, weight] : support) {
    (void)value;
    if (!(weight > Rational(0))) throw std::invalid_argument("discrete: weights must be > 0");
    total += weight;
  }
  if (!(total == Rational(1))) throw std::invalid_argument("discrete: weights must sum to 1");
  MomentModel m;
  m.kind_ = Kind::FiniteDiscrete;
  m.support_ = std::move(support);
  return m;
}

MomentModel MomentModel::raw(std::vector<Rational> moments) {
  MomentModel m;
  m.kind_ = Kind::Raw;
  m.raw_ = std::move(moments);
  return m;
}

MomentModel MomentModel::parse(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("rv spec: expected '<kind>:<params>' in '" + spec + "'");
  const std::string kind = spec.substr(0, colon);
  const std::string body = spec.substr(colon + 1);
  auto split = [](const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) parts.push_back(item);
    return parts;
  };
  if (kind == "constant") return constant(Rational::from_string(body));
  if (kind == "bernoulli") return bernoulli(Rational::from_string(body));
  if (kind == "poisson") return poisson(Rational::from_string(body));
  if (kind == "discrete") {
    std::vector<std::pair<Rational, Rational>> support;
    for (const auto& entry : split(body, ',')) {
      auto eq = entry.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("rv spec: discrete entry '" + entry + "' lacks '='");
      support.emplace_back(Rational::from_string(entry.substr(0, eq)),
                           Rational::from_string(entry.substr(eq + 1)));
    }
    return finite_discrete(std::move(support));
  }
  if (kind == "raw") {
    std::vector<Rational> moments;
    for (const auto& entry : split(body, ',')) moments.push_back(Rational::from_string(entry));
    return raw(std::move(moments));
  }
  throw std::invalid_argument("rv spec: unknown kind '" + kind + "'");
}

std::string MomentModel::to_spec() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Constant:
      os << "constant:" << param_;
      break;
    case Kind::Bernoulli:
      os << "bernoulli:" << param_;
      break;
    case Kind::Poisson:
      os << "poisson:" << param_;
      break;
    case Kind::FiniteDiscrete: {
      os << "discrete:";
      for (size_t i = 0; i < support_.size(); ++i) {
        if (i) os << ",";
        os << support_[i].first << "=" << support_[i].second;
      }
      break;
    }
    case Kind::Raw: {
      os << "raw:";
      for (size_t i = 0; i < raw_.size(); ++i) {
        if (i) os << ",";
        os << raw_[i];
      }
      break;
    }
  }
  return os.str();
}

Rational MomentModel::moment(int n) const {
  if (n < 0) throw std::invalid_argument("moment: negative order");
  if (n == 0) return Rational(1);
  switch (kind_) {
    case Kind::Constant:
      return pow(param_, static_cast<unsigned>(n));
    case Kind::Bernoulli:
      return param_;
    case Kind::Poisson:
      // E[Y^n] is the Bell/Touchard value phi_n(alpha) = sum_k {n brace k} alpha^k.
      return bell_poly(n).eval(param_);
    case Kind::FiniteDiscrete: {
      Rational acc(0);
      for (const auto& [value, weight] : support_)
        acc += weight * pow(value, static_cast<unsigned>(n));
      return acc;
    }
    case Kind::Raw:
      if (n > static_cast<int>(raw_.size()))
        throw std::domain_error("raw model: moment order " + std::to_string(n) +
                                " exceeds declared max " + std::to_string(raw_.size()));
      return raw_[n - 1];
  }
  throw std::logic_error("moment: unreachable");
}

int MomentModel::max_order() const {
  return kind_ == Kind::Raw ? static_cast<int>(raw_.size()) : std::numeric_limits<int>::max();
}

Series<Rational> MomentModel::mgf_series(const Rational& scale, int order) const {
  Series<Rational> f(order);
  f[0] = Rational(1);
  Rational scale_pow(1);
  for (int n = 1; n <= order; ++n) {
    scale_pow *= scale;
    f[n] = moment(n) * scale_pow / factorial(static_cast<unsigned>(n));
  }
  return f;
}

Rational MomentModel::sum_power_moment(int k, int m) const {
  if (k < 0 || m < 0) throw std::invalid_argument("sum_power_moment: negative argument");
  if (k == 0) return m == 0 ? Rational(1) : Rational(0);
  const Series<Rational> f = mgf_series(Rational(1), m);
  Series<Rational> p = f;
  for (int i = 1; i < k; ++i) p = p * f;
  return p.egf_coeff(m);
}

std::vector<std::vector<Rational>> sum_moment_table(const MomentModel& model, int max_copies,
                                                    int max_power) {
  std::vector<std::vector<Rational>> sm(max_copies + 1,
                                        std::vector<Rational>(max_power + 1, Rational(0)));
  sm[0][0] = Rational(1);  // S_0 = 0
  if (max_copies == 0) return sm;
  const Series<Rational> f = model.mgf_series(Rational(1), max_power);
  Series<Rational> p = Series<Rational>::one(max_power);
  for (int k = 1; k <= max_copies; ++k) {
    p = p * f;
    for (int m = 0; m <= max_power; ++m) sm[k][m] = p.egf_coeff(m);
  }
  return sm;
}

}  // namespace cbell
