#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "kpopen/rational.hpp"

namespace kpo {

// Weakly decreasing sequence of positive integers.  The empty partition is valid.
class Partition {
 public:
  Partition() = default;
  // Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  // Multiplicity of the part value v.
  int multiplicity(int v) const;

  std::string str() const;

  auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }
  bool operator==(const Partition& o) const { return parts_ == o.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct FrobeniusForm {
  std::vector<int> arms;
  std::vector<int> legs;
  int rank() const { return static_cast<int>(arms.size()); }
  bool operator==(const FrobeniusForm&) const = default;
};

// Partitions of n in reverse lexicographic order, (n) first.
std::vector<Partition> partitions_of(int n);

Partition transpose(const Partition& lambda);
FrobeniusForm frobenius(const Partition& lambda);
// Inverse of frobenius; throws std::invalid_argument on malformed input.
Partition from_frobenius(const FrobeniusForm& f);
Integer z_aut(const Partition& lambda);

// Character of the irreducible representation lambda on the class mu.
long long character(const Partition& lambda, const Partition& mu);

// Linear combination of power-sum monomials p_lambda.
class PowerSumPolynomial {
 public:
  using Terms = std::map<Partition, Rational>;

  PowerSumPolynomial() = default;
  static PowerSumPolynomial one();
  static PowerSumPolynomial power_sum(int k);

  const Terms& terms() const { return terms_; }
  Rational coeff(const Partition& lambda) const;
  void add(const Partition& lambda, const Rational& c);

  PowerSumPolynomial& operator+=(const PowerSumPolynomial& o);
  PowerSumPolynomial scaled(const Rational& c) const;
  friend PowerSumPolynomial operator*(const PowerSumPolynomial& a, const PowerSumPolynomial& b);
  bool operator==(const PowerSumPolynomial& o) const { return terms_ == o.terms_; }

 private:
  Terms terms_;
};

// Complete homogeneous function h_n in the power-sum basis.
PowerSumPolynomial complete_homogeneous(int n);
// Schur function by characters.
PowerSumPolynomial schur_in_powersums(const Partition& mu);
// Schur function by the Jacobi-Trudi determinant of complete homogeneous functions.
PowerSumPolynomial schur_jacobi_trudi(const Partition& mu);

}  // namespace kpo
