#pragma once

#include <string>
#include <vector>

#include "kpopen/report.hpp"
#include "kpopen/series.hpp"
#include "kpopen/wk.hpp"

namespace kpo {

enum class NPointKind { open, wk, ext };
std::string to_string(NPointKind kind);

class CancellationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Connected n-point function in z_1..z_n, complete for total exponent >= -degree_bound.
struct NPointSeries {
  int n = 0;
  NPointKind kind = NPointKind::open;
  int degree_bound = 0;
  TruncatedSeries series;

  // Coefficient of z_1^{-j_1-1} ... z_n^{-j_n-1}.
  Rational coeff(const std::vector<int>& j) const;
};

struct CycleOptions {
  // Largest k kept in the propagator expansions; negative selects a safe default.
  int cutoff = -1;
  // Exponents up to this value are tracked in the final sum and must cancel
  // whenever they exceed -2.
  int check_upper = 1;
};

// Cycle formula from a coordinate table covering weight `degree`.
NPointSeries connected_npoint(NPointKind kind, int n, int degree, const CycleOptions& options = {});
NPointSeries connected_npoint_from_table(const CoordTable& table, int n, int degree, const CycleOptions& options = {});

NPointSeries onepoint_closed(int degree);
// -1/(2z) + c(z)a(-z)/z + (a'(z)b(-z) - a(-z)b'(z))/(2z).
NPointSeries onepoint_derivative_form(int degree);
NPointSeries twopoint_closed(int degree);
NPointSeries threepoint_closed(int degree);
// Correlators of the extended open free energy, n = 1, 2, 3.
NPointSeries ext_correlator(int n, int degree);

// Permutation symmetry and purity (every exponent <= -2).
VerificationReport check_npoint_invariants(const NPointSeries& g);
// Coefficient-wise comparison on the common complete window.
VerificationReport compare_npoint(const std::string& suite, const NPointSeries& a, const NPointSeries& b);

}  // namespace kpo
