#pragma once

#include <map>
#include <string>
#include <vector>

#include "kpopen/rational.hpp"

namespace kpo {

// T: variables T_1, T_2, ...  ts: t_n in slot 2n+1, s_n in slot 2n+2.
enum class TimeFamily { T, ts };
std::string to_string(TimeFamily family);

// Weight of slot k is k in both families.
class WeightedPolynomial {
 public:
  // exponent[k-1] is the power of slot k; trailing zeros are trimmed.
  using Exponent = std::vector<int>;
  using Terms = std::map<Exponent, Rational>;

  WeightedPolynomial() = default;
  WeightedPolynomial(TimeFamily family, int max_weight) : family_(family), max_weight_(max_weight) {}

  static WeightedPolynomial constant(TimeFamily family, int max_weight, const Rational& c);
  static WeightedPolynomial variable(TimeFamily family, int max_weight, int slot);

  TimeFamily family() const { return family_; }
  int max_weight() const { return max_weight_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  static int weight(const Exponent& e);
  // Terms above max_weight are dropped.
  void add_term(Exponent e, const Rational& c);
  Rational coeff(Exponent e) const;
  Rational constant_term() const { return coeff({}); }

  WeightedPolynomial truncated(int max_weight) const;
  WeightedPolynomial scaled(const Rational& c) const;
  WeightedPolynomial derivative(int slot) const;
  WeightedPolynomial times_variable(int slot) const;
  // Restriction to the terms of one weight.
  WeightedPolynomial homogeneous_part(int weight) const;

  // Rescales coefficients so that T_{2n+1} = t_n/(2n+1)!!, T_{2n+2} = s_n/(2^{n+1}(n+1)!).
  WeightedPolynomial to_family(TimeFamily family) const;

  friend WeightedPolynomial operator+(const WeightedPolynomial& a, const WeightedPolynomial& b);
  friend WeightedPolynomial operator-(const WeightedPolynomial& a, const WeightedPolynomial& b);
  friend WeightedPolynomial operator*(const WeightedPolynomial& a, const WeightedPolynomial& b);
  bool operator==(const WeightedPolynomial& o) const {
    return family_ == o.family_ && max_weight_ == o.max_weight_ && terms_ == o.terms_;
  }

  // "T1^2*T3" or "t0*s1"; "1" for the empty monomial.
  std::string monomial_name(const Exponent& e) const;

 private:
  TimeFamily family_ = TimeFamily::T;
  int max_weight_ = 0;
  Terms terms_;
};

// Scale factor f_k with T_k = (slot-k variable of ts) / f_k.
Integer ts_scale(int slot);

// log(p) for p with constant term 1, and exp(p) for p with constant term 0.
WeightedPolynomial truncated_log(const WeightedPolynomial& p);
WeightedPolynomial truncated_exp(const WeightedPolynomial& p);

}  // namespace kpo
