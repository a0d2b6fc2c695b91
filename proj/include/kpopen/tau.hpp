#pragma once

#include <map>
#include <vector>

#include "kpopen/report.hpp"
#include "kpopen/symmfunc.hpp"
#include "kpopen/weighted.hpp"
#include "kpopen/wk.hpp"

namespace kpo {

struct SchurExpansion {
  std::map<Partition, Rational> coefficients;
  int max_size = 0;

  Rational coeff(const Partition& mu) const;
};

// Determinant of an exact square matrix by Bareiss elimination.
Rational determinant(std::vector<std::vector<Rational>> m);

// (-1)^{n_1+...+n_k} det(a_{n_i, m_j}) for mu = (m_1..m_k | n_1..n_k).
Rational schur_coefficient(const Partition& mu, const CoordTable& table);
SchurExpansion schur_expansion(int max_size, const CoordTable& table);

// Sum of c_mu s_mu written in the time variables of `family`, through weight max_weight.
WeightedPolynomial tau_polynomial(const SchurExpansion& schur, TimeFamily family, int max_weight);
WeightedPolynomial tau_expansion(int max_weight, TimeFamily family, const CoordTable& table);
WeightedPolynomial free_energy(int max_weight, TimeFamily family, const CoordTable& table);

// L_n (n <= 0, ts family) or the modified operator for n >= 1 (T family), applied to p.
WeightedPolynomial apply_virasoro(int n, const WeightedPolynomial& p);

// Checks that the operator kills tau through weight check_weight.
VerificationReport verify_virasoro_bosonic(int n, int check_weight, const SchurExpansion& schur);
VerificationReport verify_virasoro_bosonic(int n, int check_weight, const CoordTable& table);

// Formal residue of the bilinear identity, through combined weight max_weight.
VerificationReport verify_hirota(int max_weight, const SchurExpansion& schur);
VerificationReport verify_hirota(int max_weight, const CoordTable& table);

}  // namespace kpo
