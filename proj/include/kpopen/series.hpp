#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "kpopen/rational.hpp"

namespace kpo {

// Raised when a coefficient outside the complete window is requested, or when an
// operation leaves no complete coefficient at all.
class WindowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by exact_divide_by when the dividend is not divisible inside its window.
class DivisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IncompatibleVariables : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr long kNegInf = -(1L << 40);
inline constexpr long kPosInf = 1L << 40;

// Sparse multivariate Laurent series with exact rational coefficients.
//
// Exponents are stored multiplied by scale() (1 or 2), so z^{k/2} is stored as k
// when scale() == 2.  The series also records which coefficients are complete:
// a coefficient at exponent e is known when total(e) >= total_floor() or when
// e[i] >= var_floor(i) for some variable i.  Everything else may differ from the
// untruncated series and is never stored.  upper(i) and total_upper() bound the
// exponents of the untruncated series from above (kPosInf when unbounded).
class TruncatedSeries {
 public:
  using Exponent = std::vector<int>;
  using Terms = std::map<Exponent, Rational>;

  TruncatedSeries() = default;
  // The zero polynomial; complete everywhere.
  explicit TruncatedSeries(std::vector<std::string> vars, int scale = 1);

  static TruncatedSeries constant(std::vector<std::string> vars, const Rational& c, int scale = 1);
  static TruncatedSeries monomial(std::vector<std::string> vars, const Exponent& e, const Rational& c,
                                  int scale = 1);

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  int scale() const { return scale_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  int var_index(const std::string& name) const;

  long total_floor() const { return total_floor_; }
  long var_floor(std::size_t i) const { return var_floor_[i]; }
  long upper(std::size_t i) const { return upper_[i]; }
  long total_upper() const { return total_upper_; }
  bool is_exact() const { return total_floor_ <= kNegInf; }

  bool known(const Exponent& e) const;
  // Coefficient at a stored-scale exponent; throws WindowError when not known.
  Rational coeff(const Exponent& e) const;
  Rational coeff(int e) const { return coeff(Exponent{e}); }

  // Adds c at e.  Intended for building series term by term before the window is
  // declared; terms that fall outside the window are silently dropped.
  void add_term(const Exponent& e, const Rational& c);

  // Declares the untruncated series to have exponents bounded by these values.
  void set_upper(const std::vector<long>& upper);
  // Marks everything with total exponent below floor as unknown and drops it.
  TruncatedSeries& truncate_total(long floor);

  TruncatedSeries operator-() const;
  TruncatedSeries scaled(const Rational& c) const;
  // z_i -> -z_i; requires scale 1 or even exponents in z_i.
  TruncatedSeries negate_variable(std::size_t i) const;
  // Multiplies by z_i^{delta / scale}.
  TruncatedSeries shifted(std::size_t i, int delta) const;
  // Variable k of the result is variable perm[k] of this series.
  TruncatedSeries permuted(const std::vector<int>& perm) const;
  TruncatedSeries with_scale(int scale) const;
  // Reinterprets a series in the variables of `target` by sending variable k of
  // this series to position positions[k] of target.
  TruncatedSeries embedded(const std::vector<std::string>& target, const std::vector<int>& positions) const;
  // Restriction of every variable to a single one; needs bounded exponents.
  TruncatedSeries diagonal(const std::string& name) const;

  // Coefficient-wise equality on the terms both operands know.
  bool agrees_with(const TruncatedSeries& other) const;
  bool operator==(const TruncatedSeries& other) const;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b, long floor);
  friend TruncatedSeries expand_inverse_difference(const std::vector<std::string>& vars, std::size_t i,
                                                   std::size_t j, int power, int bound);
  friend TruncatedSeries formal_derivative(const TruncatedSeries& f, std::size_t var);
  friend TruncatedSeries divide_by_linear(const TruncatedSeries& f, std::size_t i, std::size_t j, int sign);

 private:
  void normalize_window();
  void prune();
  long total_of(const Exponent& e) const;

  std::vector<std::string> vars_;
  int scale_ = 1;
  Terms terms_;
  long total_floor_ = kNegInf;
  std::vector<long> var_floor_;
  std::vector<long> upper_;
  long total_upper_ = 0;
};

enum class ArithOp { add, sub, mul, scale };

// a (op) b; for scale, b must be a constant series and the product is taken.
TruncatedSeries series_arith(const TruncatedSeries& a, const TruncatedSeries& b, ArithOp op);

// Product restricted to total exponent >= floor (the rest is declared unknown).
TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b, long floor);

// Expansion of 1/(z_i - z_j)^power in the region |z_i| > |z_j|, keeping the terms
// whose summation index k satisfies k <= bound.
TruncatedSeries expand_inverse_difference(const std::vector<std::string>& vars, std::size_t i, std::size_t j,
                                          int power, int bound);

enum class Divisor { x_minus_y, x_plus_y, x2_minus_y2, single_variable };

// Quotient of f by (z_i - z_j), (z_i + z_j), (z_i^2 - z_j^2) or z_i.  Throws
// DivisionError naming the first diagonal whose remainder is nonzero.
TruncatedSeries exact_divide_by(const TruncatedSeries& f, Divisor divisor, std::size_t i, std::size_t j = 0);

TruncatedSeries formal_derivative(const TruncatedSeries& f, std::size_t var);

// Human-readable exponent (halves shown as k/2).
std::string format_exponent(int stored, int scale);

}  // namespace kpo
