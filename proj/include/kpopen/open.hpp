#pragma once

#include <string>

#include "kpopen/report.hpp"
#include "kpopen/series.hpp"
#include "kpopen/wk.hpp"

namespace kpo {

// z^{-3q} coefficient of c(z); equals a°_{0,3q-1} for q >= 1.
Rational c_coefficient(int q);
TruncatedSeries c_series(int depth, const std::string& var = "z");

// Open affine coordinate by the closed relations to the Witten-Kontsevich ones.
Rational open_coord(int n, int m);
CoordTable open_table(int max_weight);
// Table generated only from the one-step recursion and the a°_{1,*} seeds.
CoordTable open_coord_recursive(int max_weight);
// Seed row a°_{1,m}.
Rational open_row1_seed(int m);

struct BasisVector {
  int index = 0;
  // Univariate series in z with exponent scale 2.
  TruncatedSeries series;
};

// f_n = z^{n+1/2} + sum_{m <= depth} a_{n,m} z^{-m-1/2}, complete through z^{-depth-1/2}.
BasisVector open_basis_vector(int n, int depth);
BasisVector wk_basis_vector(int n, int depth);
// Right-hand side of the relation to the Witten-Kontsevich basis:
// z f^{WK}_{n-1} for n not divisible by 3, z f^{WK}_{n-1} - a^{WK}_{n-1,0} f_0 otherwise.
BasisVector open_basis_from_wk(int n, int depth);

// A°(x, y); coefficient of x^{-n-1} y^{-m-1} is a°_{n,m}.
TruncatedSeries open_generating(int depth);

VerificationReport verify_virasoro_recursion(int n, int max_weight, const CoordTable& table);
VerificationReport verify_linear_constraint(int n, const CoordTable& table);
VerificationReport verify_symmetry(int max_pq, const CoordTable& open, const CoordTable& wk);
VerificationReport verify_ks_relations(int depth);
VerificationReport verify_mod3(const CoordTable& table);
// a°_{0,3q-1} = a°_{1,3q-2} + (3q - 3/2) a°_{0,3q-4} for q >= 2.
VerificationReport verify_row0_recursion(const CoordTable& table);
// Compares two tables entry by entry on their common weight range.
VerificationReport compare_tables(const std::string& suite, const CoordTable& a, const CoordTable& b);

}  // namespace kpo
