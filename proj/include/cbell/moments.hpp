#ifndef CBELL_MOMENTS_HPP
#define CBELL_MOMENTS_HPP

#include <string>
#include <utility>
#include <vector>

#include "cbell/rational.hpp"
#include "cbell/series.hpp"

namespace cbell {

// A random variable Y represented by its exact moment sequence n -> E[Y^n].
// Models are immutable after construction and the moment oracle is pure.
class MomentModel {
 public:
  enum class Kind { Constant, Bernoulli, Poisson, FiniteDiscrete, Raw };

  static MomentModel constant(const Rational& c);
  static MomentModel bernoulli(const Rational& p);  // requires 0 <= p <= 1
  static MomentModel poisson(const Rational& alpha);
  // Support points (value, weight) with weights > 0 summing to 1.
  static MomentModel finite_discrete(std::vector<std::pair<Rational, Rational>> support);
  // Explicit E[Y^1..Y^m]; queries beyond m are an error, never extrapolated.
  static MomentModel raw(std::vector<Rational> moments);

  // Grammar: constant:<q> | bernoulli:<q> | poisson:<q>
  //        | discrete:<v1>=<w1>,<v2>=<w2>,... | raw:<m1>,<m2>,...
  // where <q> is a rational literal "p/q" or an integer.
  static MomentModel parse(const std::string& spec);
  std::string to_spec() const;

  Kind kind() const { return kind_; }
  // Scalar parameter of constant/bernoulli/poisson models.
  const Rational& param() const { return param_; }

  // Exact E[Y^n]; E[Y^0] = 1 for every model.
  Rational moment(int n) const;

  // Highest n for which moment(n) is defined (unbounded except for raw models).
  int max_order() const;

  // Sum_{n=0..order} E[Y^n] scale^n t^n / n!, in plain-coefficient form.
  Series<Rational> mgf_series(const Rational& scale, int order) const;

  // E[S_k^m] for the sum S_k of k independent copies of Y (S_0 = 0).
  Rational sum_power_moment(int k, int m) const;

 private:
  MomentModel() = default;

  Kind kind_ = Kind::Constant;
  Rational param_;
  std::vector<std::pair<Rational, Rational>> support_;
  std::vector<Rational> raw_;
};

// Table sm[k][m] = E[S_k^m] for 0 <= k <= max_copies, 0 <= m <= max_power,
// built by iterated series powering.
std::vector<std::vector<Rational>> sum_moment_table(const MomentModel& model, int max_copies,
                                                    int max_power);

}  // namespace cbell

#endif
