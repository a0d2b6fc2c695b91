#include "kpopen/wk.hpp"

#include <stdexcept>

namespace kpo {

std::string to_string(CoordKind kind) { return kind == CoordKind::wk ? "wk" : "open"; }
std::string to_string(CoordRoute route) { return route == CoordRoute::closed_form ? "closed_form" : "recursion"; }

CoordTable::CoordTable(CoordKind kind, int max_weight, CoordRoute route)
    : kind_(kind), max_weight_(max_weight), route_(route) {
  if (max_weight < 0) throw std::invalid_argument("max_weight must be nonnegative");
  rows_.resize(max_weight + 1);
  filled_.resize(max_weight + 1);
  for (int n = 0; n <= max_weight; ++n) {
    rows_[n].resize(max_weight - n + 1);
    filled_[n].assign(max_weight - n + 1, 0);
  }
}

const Rational& CoordTable::at(int n, int m) const {
  static const Rational zero(0);
  if (n < 0 || m < 0) return zero;
  if (!covers(n, m) || !filled_[n][m])
    throw std::out_of_range("coordinate (" + std::to_string(n) + "," + std::to_string(m) + ") not populated");
  return rows_[n][m];
}

void CoordTable::set(int n, int m, const Rational& value) {
  if (!covers(n, m))
    throw std::out_of_range("coordinate (" + std::to_string(n) + "," + std::to_string(m) + ") outside the table");
  rows_[n][m] = value;
  filled_[n][m] = 1;
}

Rational wk_b(int n, int m) {
  Rational sum = 0;
  for (int j = 1; j <= n; ++j) {
    Integer p108;
    mpz_ui_pow_ui(p108.get_mpz_t(), 108, j);
    Integer p2;
    mpz_ui_pow_ui(p2.get_mpz_t(), 2, n - j);
    sum += ratio(p108 * p2 * double_factorial(6 * n - 6 * j + 1), factorial(2 * n - 2 * j)) *
           ratio(factorial(m + n), factorial(m + n - j + 1));
  }
  return sum / 6;
}

namespace {

Rational pow36_inv(int k) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 36, k);
  return ratio(1, 1) / Rational(p);
}

// Shared prefactor of the closed formula, with the last factor's denominator 6M + delta.
Rational wk_closed(int big_n, int big_m, int delta, int sign) {
  Rational pref = pow36_inv(big_m + big_n) * ratio(double_factorial(6 * big_m + 1), factorial(2 * big_m + 2 * big_n));
  for (int j = 0; j < big_n; ++j) pref *= big_m + j;
  for (int j = 1; j <= big_n; ++j) pref *= 2 * big_m + 2 * j - 1;
  Integer p2;
  mpz_ui_pow_ui(p2.get_mpz_t(), 2, big_n);
  Rational tail = wk_b(big_n, big_m) +
                  ratio(p2 * double_factorial(6 * big_n + 1), factorial(2 * big_n) * (6 * big_m + delta));
  return sign * pref * tail;
}

}  // namespace

Rational wk_coord(int n, int m) {
  if (n < 0 || m < 0 || !on_support(n, m)) return 0;
  switch (n % 3) {
    case 0: {
      int big_n = n / 3, big_m = (m + 1) / 3;
      return wk_closed(big_n, big_m, 1, big_n % 2 ? -1 : 1);
    }
    case 1: {
      int big_n = (n - 1) / 3, big_m = (m + 2) / 3;
      return wk_closed(big_n, big_m, -1, big_n % 2 ? 1 : -1);
    }
    default: {
      int big_n = (n - 2) / 3, big_m = (m + 3) / 3;
      return wk_closed(big_n, big_m, 1, big_n % 2 ? -1 : 1);
    }
  }
}

Rational wk_special_row(int row, int m) {
  if (m < 0 || !on_support(row, m)) return 0;
  int big_m = (m + row + 1) / 3;
  Rational base = pow36_inv(big_m) * ratio(double_factorial(6 * big_m + 1), factorial(2 * big_m));
  switch (row) {
    case 0:
    case 2:
      return base / (6 * big_m + 1);
    case 1:
      return -base / (6 * big_m - 1);
    default:
      throw std::invalid_argument("special rows are 0, 1 and 2");
  }
}

Rational wk_coord_recursive(int n, int m, const CoordTable& table) {
  if (n < 0 || m < 0) return 0;
  if (n == 0) return wk_special_row(0, m);
  if (n + m <= 2) return wk_special_row(n, m);
  const int k = n - 1;
  Rational r = table.at(k, m + 1) - table.at(0, m) * table.at(k, 0);
  r -= (ratio(2 * m - 1, 2) * table.at(k, m - 2) + ratio(2 * k - 1, 2) * table.at(k - 2, m));
  return r;
}

CoordTable wk_table(int max_weight) {
  CoordTable t(CoordKind::wk, max_weight, CoordRoute::closed_form);
  for (int w = 0; w <= max_weight; ++w)
    for (int n = 0; n <= w; ++n) t.set(n, w - n, wk_coord(n, w - n));
  return t;
}

CoordTable wk_table_recursive(int max_weight) {
  CoordTable t(CoordKind::wk, max_weight, CoordRoute::recursion);
  for (int w = 0; w <= max_weight; ++w)
    for (int n = 0; n <= w; ++n) t.set(n, w - n, wk_coord_recursive(n, w - n, t));
  return t;
}

TruncatedSeries faber_zagier(FZSeries which, int depth, const std::string& var) {
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
  TruncatedSeries s({var});
  for (int m = 0; m <= depth; ++m) {
    Integer p36;
    mpz_ui_pow_ui(p36.get_mpz_t(), 36, m);
    Rational c = ratio(double_factorial(6 * m - 1), p36 * factorial(2 * m));
    if (which == FZSeries::a) {
      s.add_term({-3 * m}, c);
    } else {
      s.add_term({-3 * m + 1}, -c * ratio(6 * m + 1, 6 * m - 1));
    }
  }
  if (which == FZSeries::a) {
    s.set_upper({0});
    s.truncate_total(-3L * depth - 2);
  } else {
    s.set_upper({1});
    s.truncate_total(-3L * depth - 1);
  }
  return s;
}

TruncatedSeries wk_generating(int depth) {
  if (depth < 2) throw std::invalid_argument("wk_generating needs depth >= 2");
  const std::vector<std::string> xy{"x", "y"};
  TruncatedSeries a = faber_zagier(FZSeries::a, depth, "t");
  TruncatedSeries b = faber_zagier(FZSeries::b, depth, "t");
  TruncatedSeries ax = a.embedded(xy, {0}), ay = a.embedded(xy, {1});
  TruncatedSeries bx = b.embedded(xy, {0}), by = b.embedded(xy, {1});
  TruncatedSeries num = TruncatedSeries::monomial(xy, {1, 0}, 1) + TruncatedSeries::monomial(xy, {0, 1}, 1);
  num = num + ay * bx.negate_variable(0) - ax.negate_variable(0) * by;
  // 1/(y-x) + (...)/(y^2-x^2) = -(num)/(x^2-y^2)
  return -exact_divide_by(num, Divisor::x2_minus_y2, 0, 1);
}

TruncatedSeries wk_onepoint(int depth, const std::string& var) {
  TruncatedSeries s({var});
  for (int g = 1; g <= depth; ++g) {
    Integer p24;
    mpz_ui_pow_ui(p24.get_mpz_t(), 24, g);
    s.add_term({-6 * g + 2}, ratio(double_factorial(6 * g - 3), p24 * factorial(g)));
  }
  s.set_upper({0});
  s.truncate_total(-6L * depth - 3);
  return s;
}

}  // namespace kpo
