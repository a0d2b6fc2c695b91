#include "kpopen/open.hpp"

#include <sstream>
#include <stdexcept>

namespace kpo {

namespace {

std::string idx(int n, int m) { return "(" + std::to_string(n) + "," + std::to_string(m) + ")"; }

void compare_univariate(VerificationReport& report, const std::string& label, const TruncatedSeries& lhs,
                        const TruncatedSeries& rhs) {
  long floor = std::max(lhs.total_floor(), rhs.total_floor());
  long top = std::max(lhs.total_upper(), rhs.total_upper());
  for (long e = floor; e <= top; ++e) {
    TruncatedSeries::Exponent x{static_cast<int>(e)};
    Rational l = lhs.coeff(x), r = rhs.coeff(x);
    ++report.checked;
    if (l != r) report.add(label + " z^" + format_exponent(static_cast<int>(e), lhs.scale()), to_string(l), to_string(r));
  }
}

}  // namespace

Rational c_coefficient(int q) {
  if (q < 0) return 0;
  Rational sum = 0;
  for (int j = 0; j <= q; ++j) {
    Integer p54;
    mpz_ui_pow_ui(p54.get_mpz_t(), 54, j);
    sum += ratio(double_factorial(6 * j - 1), p54 * factorial(2 * j) * double_factorial(2 * j - 1));
  }
  return rational_pow(ratio(3, 2), q) * Rational(double_factorial(2 * q - 1)) * sum;
}

TruncatedSeries c_series(int depth, const std::string& var) {
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
  TruncatedSeries s({var});
  for (int q = 0; q <= depth; ++q) s.add_term({-3 * q}, c_coefficient(q));
  s.set_upper({0});
  s.truncate_total(-3L * depth - 2);
  return s;
}

Rational open_coord(int n, int m) {
  if (n < 0 || m < 0 || !on_support(n, m)) return 0;
  if (n == 0) return c_coefficient((m + 1) / 3);
  Rational r = wk_coord(n - 1, m + 1);
  if (n % 3 == 0) r -= c_coefficient((m + 1) / 3) * wk_coord(n - 1, 0);
  return r;
}

CoordTable open_table(int max_weight) {
  CoordTable t(CoordKind::open, max_weight, CoordRoute::closed_form);
  for (int w = 0; w <= max_weight; ++w)
    for (int n = 0; n <= w; ++n) t.set(n, w - n, open_coord(n, w - n));
  return t;
}

Rational open_row1_seed(int m) {
  if (m < 0 || m % 3 != 1) return 0;
  int q = (m + 2) / 3;
  Integer p36;
  mpz_ui_pow_ui(p36.get_mpz_t(), 36, q);
  return ratio(double_factorial(6 * q + 1), p36 * factorial(2 * q) * (6 * q + 1));
}

CoordTable open_coord_recursive(int max_weight) {
  if (max_weight < 2) throw std::invalid_argument("open_coord_recursive needs max_weight >= 2");
  CoordTable t(CoordKind::open, max_weight, CoordRoute::recursion);
  auto a = [&](int n, int m) -> const Rational& { return t.at(n, m); };
  t.set(0, 0, 0);
  t.set(0, 1, 0);
  t.set(1, 0, 0);
  // Weight 2 comes from the constant terms of the string equation.
  t.set(1, 1, open_row1_seed(1));
  t.set(2, 0, a(1, 1) - ratio(1, 2));
  t.set(0, 2, a(1, 1) + ratio(3, 2));
  for (int w = 3; w <= max_weight; ++w) {
    t.set(1, w - 1, open_row1_seed(w - 1));
    {
      const int m = w - 1;
      t.set(0, w, a(0, m) * a(0, 0) + a(1, m) + ratio(2 * m + 1, 2) * a(0, m - 2));
    }
    for (int n = 1; n + 1 <= w; ++n) {
      const int m = w - n - 1;
      Rational v = a(n, m + 1) - a(0, m) * a(n, 0) - ratio(2 * m + 1, 2) * a(n, m - 2) -
                   ratio(2 * n - 3, 2) * a(n - 2, m);
      t.set(n + 1, m, v);
    }
  }
  return t;
}

BasisVector open_basis_vector(int n, int depth) {
  if (n < 0 || depth < 0) throw std::invalid_argument("basis vector index and depth must be nonnegative");
  TruncatedSeries s({"z"}, 2);
  s.add_term({2 * n + 1}, 1);
  for (int m = 0; m <= depth; ++m) s.add_term({-2 * m - 1}, open_coord(n, m));
  s.set_upper({2L * n + 1});
  s.truncate_total(-2L * depth - 2);
  return {n, s};
}

BasisVector wk_basis_vector(int n, int depth) {
  if (n < 0 || depth < 0) throw std::invalid_argument("basis vector index and depth must be nonnegative");
  TruncatedSeries s({"z"}, 2);
  s.add_term({2 * n + 1}, 1);
  for (int m = 0; m <= depth; ++m) s.add_term({-2 * m - 1}, wk_coord(n, m));
  s.set_upper({2L * n + 1});
  s.truncate_total(-2L * depth - 2);
  return {n, s};
}

BasisVector open_basis_from_wk(int n, int depth) {
  if (n < 1) throw std::invalid_argument("relation to the Witten-Kontsevich basis needs n >= 1");
  TruncatedSeries s = wk_basis_vector(n - 1, depth + 1).series.shifted(0, 2);
  if (n % 3 == 0) s = s - open_basis_vector(0, depth).series.scaled(wk_coord(n - 1, 0));
  return {n, s};
}

TruncatedSeries open_generating(int depth) {
  if (depth < 2) throw std::invalid_argument("open_generating needs depth >= 2");
  const std::vector<std::string> xy{"x", "y"};
  TruncatedSeries a = faber_zagier(FZSeries::a, depth, "t");
  TruncatedSeries b = faber_zagier(FZSeries::b, depth, "t");
  TruncatedSeries c = c_series(depth, "t");
  TruncatedSeries ax = a.embedded(xy, {0}), ay = a.embedded(xy, {1});
  TruncatedSeries bx = b.embedded(xy, {0}), by = b.embedded(xy, {1});
  TruncatedSeries cy = c.embedded(xy, {1});
  TruncatedSeries amx = ax.negate_variable(0);
  TruncatedSeries x = TruncatedSeries::monomial(xy, {1, 0}, 1), y = TruncatedSeries::monomial(xy, {0, 1}, 1);
  TruncatedSeries num = x * (x + y) + y * (ay * bx.negate_variable(0) - amx * by);
  TruncatedSeries first = -exact_divide_by(exact_divide_by(num, Divisor::x2_minus_y2, 0, 1), Divisor::single_variable, 0);
  TruncatedSeries result = first + exact_divide_by(cy * amx, Divisor::single_variable, 0);
  for (const auto& [e, v] : result.terms())
    if (e[0] >= 0 || e[1] >= 0)
      throw DivisionError("nonnegative exponent survives in A(x,y) at x^" + std::to_string(e[0]) + " y^" +
                          std::to_string(e[1]));
  return result;
}

VerificationReport verify_virasoro_recursion(int n, int max_weight, const CoordTable& table) {
  VerificationReport report;
  report.suite = "recursion n=" + std::to_string(n);
  report.range = "l+m<=" + std::to_string(max_weight);
  if (n < -1) throw std::invalid_argument("recursion index n must be >= -1");
  if (table.max_weight() < max_weight + 2 * n + 3)
    throw std::out_of_range("table too small for the (2n+3)-step recursion");
  auto a = [&](int i, int j) -> const Rational& { return table.at(i, j); };
  for (int w = 0; w <= max_weight; ++w)
    for (int l = 0; l <= w; ++l) {
      const int m = w - l;
      Rational lhs = a(l, 2 * n + 3 + m) - a(2 * n + 3 + l, m);
      Rational rhs = ratio(4 * n + 5 + 2 * m, 2) * a(l, 2 * n + m) + ratio(2 * l - 3, 2) * a(2 * n + l, m);
      for (int k = 0; k <= 2 * n + 2; ++k) rhs += a(k, m) * a(l, 2 * n + 2 - k);
      for (int k = 0; k <= 2 * n - 1; ++k) rhs -= ratio(4 * n + 3 - 2 * k, 2) * a(k, m) * a(l, 2 * n - 1 - k);
      if (n == -1 && l == 1 && m == 0) rhs += ratio(1, 2);
      if (n == -1 && l == 0 && m == 1) rhs += ratio(3, 2);
      ++report.checked;
      if (lhs != rhs) report.add("n=" + std::to_string(n) + " (l,m)=" + idx(l, m), to_string(rhs), to_string(lhs));
    }
  return report;
}

VerificationReport verify_linear_constraint(int n, const CoordTable& table) {
  VerificationReport report;
  report.suite = "linear n=" + std::to_string(n);
  report.range = "weights " + std::to_string(2 * n + 2) + " and " + std::to_string(2 * n - 1);
  if (n < -1) throw std::invalid_argument("linear constraint index n must be >= -1");
  Rational lhs = 0, rhs = 0;
  for (int k = 0; k <= 2 * n + 2; ++k) lhs += table.at(k, 2 * n + 2 - k);
  for (int k = 0; k <= 2 * n - 1; ++k) rhs += ratio(4 * n + 3 - 2 * k, 2) * table.at(k, 2 * n - 1 - k);
  if (n == 0) rhs += ratio(13, 8);
  ++report.checked;
  if (lhs != rhs) report.add("n=" + std::to_string(n), to_string(rhs), to_string(lhs));
  return report;
}

VerificationReport verify_symmetry(int max_pq, const CoordTable& open, const CoordTable& wk) {
  VerificationReport report;
  report.suite = "symmetry";
  report.range = "p,q<=" + std::to_string(max_pq);
  auto a = [&](int i, int j) -> const Rational& { return open.at(i, j); };
  auto w = [&](int i, int j) -> const Rational& { return wk.at(i, j); };
  auto sgn = [](int k) { return k % 2 ? -1 : 1; };
  auto check = [&](const std::string& where, const Rational& lhs, const Rational& rhs) {
    ++report.checked;
    if (lhs != rhs) report.add(where, to_string(rhs), to_string(lhs));
  };
  for (int p = 0; p <= max_pq; ++p)
    for (int q = 1; q <= max_pq; ++q) {
      std::string pq = "(p,q)=" + idx(p, q);
      check("first " + pq, a(3 * p + 2, 3 * q - 3), sgn(p + q + 1) * a(3 * q - 1, 3 * p));
      if (p >= 1)
        check("second " + pq, a(3 * p + 1, 3 * q - 2),
              sgn(p + q + 1) * (a(3 * q, 3 * p - 1) + a(0, 3 * p - 1) * w(3 * q - 1, 0)));
      check("third " + pq, a(3 * p + 3, 3 * q - 1),
            sgn(p + q) * a(3 * q + 1, 3 * p + 1) - a(0, 3 * q - 1) * w(3 * p + 2, 0));
    }
  return report;
}

VerificationReport verify_ks_relations(int depth) {
  if (depth < 4) throw std::invalid_argument("Kac-Schwarz check needs depth >= 4");
  VerificationReport report;
  report.suite = "ks";
  report.range = "depth " + std::to_string(depth);
  auto op = [](const TruncatedSeries& f) {
    TruncatedSeries d = formal_derivative(f, 0).shifted(0, -2);
    return d + f - f.shifted(0, -3).scaled(ratio(3, 2));
  };
  TruncatedSeries a = faber_zagier(FZSeries::a, depth);
  TruncatedSeries b = faber_zagier(FZSeries::b, depth);
  TruncatedSeries c = c_series(depth);
  compare_univariate(report, "a", a, op(c));
  compare_univariate(report, "b", b, op(a.shifted(0, 1)));
  return report;
}

VerificationReport verify_mod3(const CoordTable& table) {
  VerificationReport report;
  report.suite = "mod3";
  report.range = "n+m<=" + std::to_string(table.max_weight());
  for (int w = 0; w <= table.max_weight(); ++w) {
    if (w % 3 == 2) continue;
    for (int n = 0; n <= w; ++n) {
      ++report.checked;
      if (table.at(n, w - n) != 0) report.add(idx(n, w - n), "0", to_string(table.at(n, w - n)));
    }
  }
  return report;
}

VerificationReport verify_row0_recursion(const CoordTable& table) {
  VerificationReport report;
  report.suite = "row0";
  report.range = "3q-1<=" + std::to_string(table.max_weight());
  for (int q = 2; 3 * q - 1 <= table.max_weight(); ++q) {
    Rational lhs = table.at(0, 3 * q - 1);
    Rational rhs = table.at(1, 3 * q - 2) + ratio(6 * q - 3, 2) * table.at(0, 3 * q - 4);
    ++report.checked;
    if (lhs != rhs) report.add("q=" + std::to_string(q), to_string(rhs), to_string(lhs));
  }
  return report;
}

VerificationReport compare_tables(const std::string& suite, const CoordTable& a, const CoordTable& b) {
  VerificationReport report;
  report.suite = suite;
  const int top = std::min(a.max_weight(), b.max_weight());
  report.range = "n+m<=" + std::to_string(top);
  for (int w = 0; w <= top; ++w)
    for (int n = 0; n <= w; ++n) {
      ++report.checked;
      if (a.at(n, w - n) != b.at(n, w - n)) report.add(idx(n, w - n), to_string(a.at(n, w - n)), to_string(b.at(n, w - n)));
    }
  return report;
}

}  // namespace kpo
