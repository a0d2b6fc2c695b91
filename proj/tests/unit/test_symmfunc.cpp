#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kpopen/symmfunc.hpp"

using namespace kpo;

TEST_CASE("partition validation") {
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  Partition p{3, 1, 1};
  CHECK(p.size() == 5);
  CHECK(p.length() == 3);
  CHECK(p.multiplicity(1) == 2);
  CHECK(Partition{}.empty());
}

TEST_CASE("partition enumeration") {
  const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  for (int n = 0; n <= 12; ++n) CHECK(partitions_of(n).size() == static_cast<std::size_t>(counts[n]));
  auto four = partitions_of(4);
  CHECK(four.front() == Partition{4});
  CHECK(four.back() == Partition{1, 1, 1, 1});
}

TEST_CASE("transpose") {
  CHECK(transpose(Partition{3, 1}) == Partition{2, 1, 1});
  CHECK(transpose(Partition{2, 2}) == Partition{2, 2});
  CHECK(transpose(Partition{}) == Partition{});
  CHECK(transpose(Partition{4}) == Partition{1, 1, 1, 1});
  for (int n = 0; n <= 12; ++n)
    for (const auto& p : partitions_of(n)) {
      CHECK(transpose(transpose(p)) == p);
      CHECK(transpose(p).size() == n);
    }
}

TEST_CASE("frobenius coordinates") {
  CHECK(frobenius(Partition{1, 1, 1, 1}) == FrobeniusForm{{0}, {3}});
  CHECK(frobenius(Partition{}) == FrobeniusForm{});
  CHECK(frobenius(Partition{3, 1}) == FrobeniusForm{{2}, {1}});
  CHECK(frobenius(Partition{3, 2, 1}) == FrobeniusForm{{2, 0}, {2, 0}});
  CHECK_THROWS_AS(from_frobenius(FrobeniusForm{{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(from_frobenius(FrobeniusForm{{1}, {}}), std::invalid_argument);

  for (int n = 0; n <= 12; ++n)
    for (const auto& p : partitions_of(n)) {
      FrobeniusForm f = frobenius(p);
      CHECK(from_frobenius(f) == p);
      int total = f.rank();
      for (int k = 0; k < f.rank(); ++k) total += f.arms[k] + f.legs[k];
      CHECK(total == n);
      FrobeniusForm t = frobenius(transpose(p));
      CHECK(t.arms == f.legs);
      CHECK(t.legs == f.arms);
    }
}

TEST_CASE("centralizer orders") {
  CHECK(z_aut(Partition{1, 1, 1}) == 6);
  CHECK(z_aut(Partition{2, 1}) == 2);
  CHECK(z_aut(Partition{2, 2}) == 8);
  CHECK(z_aut(Partition{}) == 1);
}

TEST_CASE("characters") {
  CHECK(character(Partition{4}, Partition{3, 1}) == 1);
  CHECK(character(Partition{1, 1}, Partition{2}) == -1);
  CHECK(character(Partition{2}, Partition{1, 1}) == 1);
  CHECK(character(Partition{3, 1}, Partition{1, 1, 1, 1}) == 3);
  CHECK(character(Partition{3, 1}, Partition{2, 2}) == -1);
  CHECK(character(Partition{3, 1}, Partition{4}) == -1);
  CHECK(character(Partition{2, 2}, Partition{3, 1}) == -1);
  CHECK(character(Partition{4, 3, 2, 1}, Partition(std::vector<int>(10, 1))) == 768);
  CHECK(character(Partition{}, Partition{}) == 1);
  CHECK_THROWS(character(Partition{2}, Partition{1}));
}

TEST_CASE("column orthogonality of the character table") {
  for (int n = 1; n <= 6; ++n) {
    auto ps = partitions_of(n);
    for (const auto& mu : ps)
      for (const auto& nu : ps) {
        Integer sum = 0;
        for (const auto& lambda : ps) sum += Integer(static_cast<long>(character(lambda, mu) * character(lambda, nu)));
        CHECK(sum == (mu == nu ? z_aut(mu) : Integer(0)));
      }
  }
}

TEST_CASE("small schur functions") {
  PowerSumPolynomial p1 = PowerSumPolynomial::power_sum(1);
  CHECK(schur_in_powersums(Partition{1}) == p1);
  PowerSumPolynomial s2;
  s2.add(Partition{1, 1}, Rational(1, 2));
  s2.add(Partition{2}, Rational(1, 2));
  CHECK(schur_in_powersums(Partition{2}) == s2);
  PowerSumPolynomial s11;
  s11.add(Partition{1, 1}, Rational(1, 2));
  s11.add(Partition{2}, Rational(-1, 2));
  CHECK(schur_in_powersums(Partition{1, 1}) == s11);
  CHECK(schur_in_powersums(Partition{}) == PowerSumPolynomial::one());
  CHECK(complete_homogeneous(2) == s2);
  CHECK(complete_homogeneous(0) == PowerSumPolynomial::one());
}

TEST_CASE("power-sum polynomial algebra") {
  PowerSumPolynomial p1 = PowerSumPolynomial::power_sum(1), p2 = PowerSumPolynomial::power_sum(2);
  PowerSumPolynomial prod = p1 * p2;
  CHECK(prod.coeff(Partition{2, 1}) == 1);
  CHECK((p1 * p2) == (p2 * p1));
  PowerSumPolynomial sum = p1;
  sum += p1.scaled(-1);
  CHECK(sum.terms().empty());
}

TEST_CASE("character route agrees with Jacobi-Trudi") {
  for (int n = 0; n <= 8; ++n)
    for (const auto& mu : partitions_of(n)) CHECK(schur_in_powersums(mu) == schur_jacobi_trudi(mu));
}

TEST_CASE("complete and elementary functions") {
  // h_3 = s_(3) and e_3 = s_(1,1,1).
  CHECK(complete_homogeneous(3) == schur_in_powersums(Partition{3}));
  PowerSumPolynomial e3 = schur_in_powersums(Partition{1, 1, 1});
  CHECK(e3.coeff(Partition{1, 1, 1}) == Rational(1, 6));
  CHECK(e3.coeff(Partition{2, 1}) == Rational(-1, 2));
  CHECK(e3.coeff(Partition{3}) == Rational(1, 3));
}
