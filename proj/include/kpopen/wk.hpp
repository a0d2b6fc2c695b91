#pragma once

#include <string>
#include <vector>

#include "kpopen/rational.hpp"
#include "kpopen/series.hpp"

namespace kpo {

enum class CoordKind { wk, open };
enum class CoordRoute { closed_form, recursion };

std::string to_string(CoordKind kind);
std::string to_string(CoordRoute route);

// Triangular grid of affine coordinates a_{n,m} for n + m <= max_weight.
class CoordTable {
 public:
  CoordTable(CoordKind kind, int max_weight, CoordRoute route);

  CoordKind kind() const { return kind_; }
  int max_weight() const { return max_weight_; }
  CoordRoute route() const { return route_; }

  bool covers(int n, int m) const { return n >= 0 && m >= 0 && n + m <= max_weight_; }
  bool filled(int n, int m) const { return covers(n, m) && filled_[n][m]; }
  // Zero for negative indices; throws std::out_of_range for entries not populated.
  const Rational& at(int n, int m) const;
  void set(int n, int m, const Rational& value);

  bool operator==(const CoordTable& o) const { return rows_ == o.rows_ && kind_ == o.kind_; }

 private:
  CoordKind kind_;
  int max_weight_;
  CoordRoute route_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::vector<char>> filled_;
};

// True when n + m is congruent to 2 modulo 3, the only place coordinates can be nonzero.
inline bool on_support(int n, int m) { return ((n + m) % 3 + 3) % 3 == 2; }

Rational wk_b(int n, int m);
// Witten-Kontsevich affine coordinate by the closed formula.
Rational wk_coord(int n, int m);
// Closed formulas for rows 0, 1, 2 (the Faber-Zagier coefficients).
Rational wk_special_row(int row, int m);
// a^{WK}_{n,m} from the string-equation recursion; `table` must hold every entry of
// smaller weight and the entries (n', n + m - n') with n' < n.
Rational wk_coord_recursive(int n, int m, const CoordTable& table);

CoordTable wk_table(int max_weight);
CoordTable wk_table_recursive(int max_weight);

enum class FZSeries { a, b };
// a(z) or b(z) through the z^{-3 depth} term.
TruncatedSeries faber_zagier(FZSeries which, int depth, const std::string& var = "z");
// A^{WK}(x, y); coefficient of x^{-n-1} y^{-m-1} is a^{WK}_{n,m}.
TruncatedSeries wk_generating(int depth);
// Witten-Kontsevich one-point function through genus `depth`.
TruncatedSeries wk_onepoint(int depth, const std::string& var = "z");

}  // namespace kpo
