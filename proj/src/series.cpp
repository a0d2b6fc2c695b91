#include "kpopen/series.hpp"

#include <algorithm>
#include <sstream>

namespace kpo {

namespace {

long floor_plus_upper(long floor, long upper) {
  if (floor <= kNegInf) return kNegInf;
  if (floor >= kPosInf || upper >= kPosInf) return kPosInf;
  return floor + upper;
}

long upper_plus_upper(long a, long b) {
  if (a >= kPosInf || b >= kPosInf) return kPosInf;
  return a + b;
}

long shift_bound(long b, long delta) {
  if (b <= kNegInf || b >= kPosInf) return b;
  return b + delta;
}

std::string exponent_str(const TruncatedSeries::Exponent& e, int scale) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << format_exponent(e[i], scale);
  os << ")";
  return os.str();
}

void require_same_vars(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.vars() != b.vars()) throw IncompatibleVariables("series over different variables");
}

}  // namespace

std::string format_exponent(int stored, int scale) {
  if (scale == 1 || stored % 2 == 0) return std::to_string(stored / scale);
  return std::to_string(stored) + "/2";
}

TruncatedSeries::TruncatedSeries(std::vector<std::string> vars, int scale)
    : vars_(std::move(vars)), scale_(scale), var_floor_(vars_.size(), kNegInf), upper_(vars_.size(), 0) {
  if (scale != 1 && scale != 2) throw std::invalid_argument("exponent scale must be 1 or 2");
}

TruncatedSeries TruncatedSeries::constant(std::vector<std::string> vars, const Rational& c, int scale) {
  TruncatedSeries s(std::move(vars), scale);
  s.add_term(Exponent(s.nvars(), 0), c);
  return s;
}

TruncatedSeries TruncatedSeries::monomial(std::vector<std::string> vars, const Exponent& e, const Rational& c,
                                          int scale) {
  TruncatedSeries s(std::move(vars), scale);
  if (e.size() != s.nvars()) throw std::invalid_argument("exponent arity mismatch");
  std::vector<long> up(e.begin(), e.end());
  s.set_upper(up);
  s.add_term(e, c);
  return s;
}

int TruncatedSeries::var_index(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) throw IncompatibleVariables("unknown variable " + name);
  return static_cast<int>(it - vars_.begin());
}

long TruncatedSeries::total_of(const Exponent& e) const {
  long t = 0;
  for (int x : e) t += x;
  return t;
}

bool TruncatedSeries::known(const Exponent& e) const {
  if (total_of(e) >= total_floor_) return true;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] >= var_floor_[i]) return true;
  return false;
}

Rational TruncatedSeries::coeff(const Exponent& e) const {
  if (e.size() != nvars()) throw std::invalid_argument("exponent arity mismatch");
  if (!known(e)) throw WindowError("coefficient at " + exponent_str(e, scale_) + " lies outside the complete window");
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void TruncatedSeries::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != nvars()) throw std::invalid_argument("exponent arity mismatch");
  if (c == 0 || !known(e)) return;
  if (is_exact()) {
    long t = total_of(e);
    for (std::size_t i = 0; i < e.size(); ++i) upper_[i] = std::max<long>(upper_[i], e[i]);
    total_upper_ = std::max(total_upper_, t);
  }
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void TruncatedSeries::set_upper(const std::vector<long>& upper) {
  if (upper.size() != nvars()) throw std::invalid_argument("upper bound arity mismatch");
  upper_ = upper;
  long t = 0;
  for (long u : upper) t = upper_plus_upper(t, u);
  total_upper_ = t;
  normalize_window();
}

void TruncatedSeries::normalize_window() {
  for (long f : var_floor_)
    if (f <= kNegInf) total_floor_ = kNegInf;
  if (total_floor_ <= kNegInf) {
    std::fill(var_floor_.begin(), var_floor_.end(), kNegInf);
    return;
  }
  for (std::size_t i = 0; i < nvars(); ++i)
    if (upper_[i] < kPosInf) var_floor_[i] = std::min(var_floor_[i], upper_[i] + 1);
  if (total_upper_ < kPosInf) total_floor_ = std::min(total_floor_, total_upper_ + 1);
}

void TruncatedSeries::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0 || !known(it->first))
      it = terms_.erase(it);
    else
      ++it;
  }
}

TruncatedSeries& TruncatedSeries::truncate_total(long floor) {
  if (floor <= total_floor_) return *this;
  total_floor_ = floor;
  for (std::size_t i = 0; i < nvars(); ++i) var_floor_[i] = upper_[i] < kPosInf ? upper_[i] + 1 : kPosInf;
  normalize_window();
  prune();
  return *this;
}

TruncatedSeries TruncatedSeries::operator-() const { return scaled(Rational(-1)); }

TruncatedSeries TruncatedSeries::scaled(const Rational& c) const {
  TruncatedSeries r = *this;
  if (c == 0) {
    r.terms_.clear();
    return r;
  }
  for (auto& [e, v] : r.terms_) v *= c;
  return r;
}

TruncatedSeries TruncatedSeries::negate_variable(std::size_t i) const {
  TruncatedSeries r = *this;
  for (auto& [e, v] : r.terms_) {
    if (e[i] % scale_ != 0) throw std::invalid_argument("cannot negate a variable carrying half-integer powers");
    if ((e[i] / scale_) % 2 != 0) v = -v;
  }
  return r;
}

TruncatedSeries TruncatedSeries::shifted(std::size_t i, int delta) const {
  TruncatedSeries r(vars_, scale_);
  r.total_floor_ = shift_bound(total_floor_, delta);
  r.var_floor_ = var_floor_;
  r.var_floor_[i] = shift_bound(var_floor_[i], delta);
  r.upper_ = upper_;
  r.upper_[i] = shift_bound(upper_[i], delta);
  r.total_upper_ = shift_bound(total_upper_, delta);
  for (const auto& [e, v] : terms_) {
    Exponent f = e;
    f[i] += delta;
    r.terms_.emplace(std::move(f), v);
  }
  return r;
}

TruncatedSeries TruncatedSeries::permuted(const std::vector<int>& perm) const {
  if (perm.size() != nvars()) throw std::invalid_argument("permutation arity mismatch");
  TruncatedSeries r(vars_, scale_);
  r.total_floor_ = total_floor_;
  r.total_upper_ = total_upper_;
  for (std::size_t k = 0; k < nvars(); ++k) {
    r.var_floor_[k] = var_floor_[perm[k]];
    r.upper_[k] = upper_[perm[k]];
  }
  for (const auto& [e, v] : terms_) {
    Exponent f(nvars());
    for (std::size_t k = 0; k < nvars(); ++k) f[k] = e[perm[k]];
    r.terms_.emplace(std::move(f), v);
  }
  return r;
}

TruncatedSeries TruncatedSeries::with_scale(int scale) const {
  if (scale == scale_) return *this;
  if (!(scale_ == 1 && scale == 2)) throw std::invalid_argument("only integer to doubled exponent conversion is supported");
  TruncatedSeries r(vars_, 2);
  auto twice = [](long b) { return (b <= kNegInf || b >= kPosInf) ? b : 2 * b; };
  r.total_floor_ = twice(total_floor_);
  r.total_upper_ = twice(total_upper_);
  for (std::size_t k = 0; k < nvars(); ++k) {
    r.var_floor_[k] = twice(var_floor_[k]);
    r.upper_[k] = twice(upper_[k]);
  }
  for (const auto& [e, v] : terms_) {
    Exponent f = e;
    for (int& x : f) x *= 2;
    r.terms_.emplace(std::move(f), v);
  }
  return r;
}

TruncatedSeries TruncatedSeries::embedded(const std::vector<std::string>& target,
                                          const std::vector<int>& positions) const {
  if (positions.size() != nvars()) throw std::invalid_argument("embedding arity mismatch");
  TruncatedSeries r(target, scale_);
  r.total_floor_ = total_floor_;
  r.total_upper_ = total_upper_;
  for (std::size_t k = 0; k < target.size(); ++k) {
    r.upper_[k] = 0;
    r.var_floor_[k] = is_exact() ? kNegInf : 1;
  }
  for (std::size_t k = 0; k < nvars(); ++k) {
    r.upper_[positions[k]] = upper_[k];
    r.var_floor_[positions[k]] = var_floor_[k];
  }
  for (const auto& [e, v] : terms_) {
    Exponent f(target.size(), 0);
    for (std::size_t k = 0; k < nvars(); ++k) f[positions[k]] = e[k];
    r.terms_.emplace(std::move(f), v);
  }
  r.normalize_window();
  return r;
}

TruncatedSeries TruncatedSeries::diagonal(const std::string& name) const {
  for (long u : upper_)
    if (u >= kPosInf) throw WindowError("diagonal restriction needs exponents bounded above");
  TruncatedSeries r({name}, scale_);
  r.total_floor_ = total_floor_;
  r.var_floor_[0] = total_floor_;
  r.upper_[0] = total_upper_;
  r.total_upper_ = total_upper_;
  r.normalize_window();
  for (const auto& [e, v] : terms_) {
    long t = total_of(e);
    if (t >= total_floor_) r.add_term({static_cast<int>(t)}, v);
  }
  return r;
}

bool TruncatedSeries::agrees_with(const TruncatedSeries& other) const {
  if (vars_ != other.vars_ || scale_ != other.scale_) return false;
  for (const auto& [e, v] : terms_)
    if (other.known(e) && other.coeff(e) != v) return false;
  for (const auto& [e, v] : other.terms_)
    if (known(e) && coeff(e) != v) return false;
  return true;
}

bool TruncatedSeries::operator==(const TruncatedSeries& other) const {
  return vars_ == other.vars_ && scale_ == other.scale_ && terms_ == other.terms_;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_vars(a, b);
  if (a.scale_ != b.scale_) {
    int s = std::max(a.scale_, b.scale_);
    return a.with_scale(s) + b.with_scale(s);
  }
  TruncatedSeries r(a.vars_, a.scale_);
  r.total_floor_ = std::max(a.total_floor_, b.total_floor_);
  r.total_upper_ = std::max(a.total_upper_, b.total_upper_);
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    r.var_floor_[i] = std::max(a.var_floor_[i], b.var_floor_[i]);
    r.upper_[i] = std::max(a.upper_[i], b.upper_[i]);
  }
  r.normalize_window();
  r.terms_ = a.terms_;
  for (const auto& [e, v] : b.terms_) {
    auto [it, inserted] = r.terms_.emplace(e, v);
    if (!inserted) it->second += v;
  }
  r.prune();
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return multiply(a, b, kNegInf); }

TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b, long floor) {
  require_same_vars(a, b);
  if (a.scale_ != b.scale_) {
    int s = std::max(a.scale_, b.scale_);
    return multiply(a.with_scale(s), b.with_scale(s), floor);
  }
  const std::size_t n = a.nvars();
  TruncatedSeries r(a.vars_, a.scale_);
  if (a.is_exact() && b.is_exact()) {
    r.total_floor_ = kNegInf;
  } else {
    r.total_floor_ = std::max(floor_plus_upper(a.total_floor_, b.total_upper_),
                              floor_plus_upper(b.total_floor_, a.total_upper_));
    for (std::size_t i = 0; i < n; ++i)
      r.var_floor_[i] = std::max(floor_plus_upper(a.var_floor_[i], b.upper_[i]),
                                 floor_plus_upper(b.var_floor_[i], a.upper_[i]));
  }
  for (std::size_t i = 0; i < n; ++i) r.upper_[i] = upper_plus_upper(a.upper_[i], b.upper_[i]);
  r.total_upper_ = upper_plus_upper(a.total_upper_, b.total_upper_);
  r.normalize_window();
  if (floor > kNegInf) {
    r.truncate_total(floor);
  }
  if (!r.is_exact() && r.total_floor_ > r.total_upper_) {
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) any = any || r.var_floor_[i] <= r.upper_[i];
    if (!any)
      throw WindowError("window collapse in product: every total degree below " + std::to_string(r.total_floor_) +
                        " is incomplete and nothing above it survives");
  }

  bool var_window_useful = false;
  if (!r.is_exact())
    for (std::size_t i = 0; i < n; ++i) var_window_useful = var_window_useful || r.var_floor_[i] <= r.upper_[i];

  struct Entry {
    long total;
    const TruncatedSeries::Exponent* e;
    const Rational* c;
  };
  std::vector<Entry> bs;
  bs.reserve(b.terms_.size());
  for (const auto& [e, c] : b.terms_) bs.push_back({b.total_of(e), &e, &c});
  std::sort(bs.begin(), bs.end(), [](const Entry& x, const Entry& y) { return x.total > y.total; });

  TruncatedSeries::Exponent sum(n);
  Rational prod;
  for (const auto& [ea, ca] : a.terms_) {
    long ta = a.total_of(ea);
    for (const Entry& eb : bs) {
      if (!var_window_useful && ta + eb.total < r.total_floor_) break;
      for (std::size_t i = 0; i < n; ++i) sum[i] = ea[i] + (*eb.e)[i];
      if (!r.is_exact() && !r.known(sum)) continue;
      mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), eb.c->get_mpq_t());
      auto [it, inserted] = r.terms_.emplace(sum, prod);
      if (!inserted) it->second += prod;
    }
  }
  r.prune();
  return r;
}

TruncatedSeries series_arith(const TruncatedSeries& a, const TruncatedSeries& b, ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::sub:
      return a - b;
    case ArithOp::mul:
      return a * b;
    case ArithOp::scale: {
      require_same_vars(a, b);
      for (const auto& [e, v] : b.terms())
        for (int x : e)
          if (x != 0) throw std::invalid_argument("scale operand must be a constant series");
      Rational c = b.terms().empty() ? Rational(0) : b.terms().begin()->second;
      return a.scaled(c);
    }
  }
  throw std::invalid_argument("unknown arithmetic operation");
}

TruncatedSeries expand_inverse_difference(const std::vector<std::string>& vars, std::size_t i, std::size_t j,
                                          int power, int bound) {
  if (i == j) throw std::invalid_argument("expand_inverse_difference needs two distinct variables");
  if (power != 1 && power != 2) throw std::invalid_argument("power must be 1 or 2");
  if (i >= vars.size() || j >= vars.size()) throw std::invalid_argument("variable index out of range");
  TruncatedSeries r(vars, 1);
  const std::size_t n = vars.size();
  for (std::size_t k = 0; k < n; ++k) r.upper_[k] = 0;
  r.upper_[i] = -power;
  r.upper_[j] = kPosInf;
  r.total_upper_ = -power;
  r.total_floor_ = kPosInf;
  for (std::size_t k = 0; k < n; ++k) r.var_floor_[k] = kPosInf;
  // Terms with k > bound have z_i exponent below -1-bound.
  r.var_floor_[i] = -1L - bound;
  r.normalize_window();
  for (int k = power == 1 ? 0 : 1; k <= bound; ++k) {
    TruncatedSeries::Exponent e(n, 0);
    e[i] = -1 - k;
    e[j] = k - (power == 1 ? 0 : 1);
    r.terms_.emplace(e, Rational(power == 1 ? 1 : k));
  }
  return r;
}

// Quotient by (z_i - sign * z_j) for sign = +1 or -1.
TruncatedSeries divide_by_linear(const TruncatedSeries& f, std::size_t i, std::size_t j, int sign) {
  if (f.scale_ != 1) throw std::invalid_argument("division by a binomial needs integer exponents");
  if (i == j) throw std::invalid_argument("division needs two distinct variables");
  if (f.upper_[i] >= kPosInf || f.upper_[j] >= kPosInf)
    throw WindowError("division needs exponents bounded above");
  const std::size_t n = f.nvars();
  TruncatedSeries q(f.vars_, 1);
  q.upper_ = f.upper_;
  q.upper_[i] = f.upper_[i] - 1;
  q.upper_[j] = f.upper_[j] - 1;
  q.total_upper_ = shift_bound(f.total_upper_, -1);
  if (f.is_exact()) {
    q.total_floor_ = kNegInf;
  } else {
    q.total_floor_ = shift_bound(f.total_floor_, -1);
    for (std::size_t k = 0; k < n; ++k) q.var_floor_[k] = kPosInf;
  }
  q.normalize_window();

  // Group dividend terms by the exponents of the passive variables and by the
  // diagonal e_i + e_j.
  std::map<std::vector<int>, std::map<int, Rational>> groups;
  for (const auto& [e, v] : f.terms_) {
    if (!f.is_exact() && f.total_of(e) < f.total_floor_) continue;
    std::vector<int> key(e);
    key[i] = e[i] + e[j];
    key[j] = 0;
    groups[key].emplace(e[i], v);
  }
  const long ui = f.upper_[i], uj = f.upper_[j];
  for (auto& [key, line] : groups) {
    const long d = key[i];
    // f_{p,d-p} = q_{p-1,d-p} - sign * q_{p,d-p-1}
    Rational carry = 0;
    for (long p = ui; p >= d - uj; --p) {
      auto it = line.find(static_cast<int>(p));
      Rational fv = it == line.end() ? Rational(0) : it->second;
      Rational qv = fv + sign * carry;
      if (p == d - uj) {
        if (qv != 0) {
          TruncatedSeries::Exponent e = key;
          e[i] = static_cast<int>(p);
          e[j] = static_cast<int>(d - p);
          std::ostringstream os;
          os << "nonzero remainder " << to_string(qv) << " dividing by (" << f.vars_[i]
             << (sign > 0 ? " - " : " + ") << f.vars_[j] << ") on the diagonal through " << exponent_str(e, 1);
          throw DivisionError(os.str());
        }
        break;
      }
      if (qv != 0) {
        TruncatedSeries::Exponent e = key;
        e[i] = static_cast<int>(p - 1);
        e[j] = static_cast<int>(d - p);
        q.terms_.emplace(std::move(e), qv);
      }
      carry = qv;
    }
  }
  q.prune();
  return q;
}

TruncatedSeries exact_divide_by(const TruncatedSeries& f, Divisor divisor, std::size_t i, std::size_t j) {
  switch (divisor) {
    case Divisor::x_minus_y:
      return divide_by_linear(f, i, j, 1);
    case Divisor::x_plus_y:
      return divide_by_linear(f, i, j, -1);
    case Divisor::x2_minus_y2:
      return divide_by_linear(divide_by_linear(f, i, j, 1), i, j, -1);
    case Divisor::single_variable:
      return f.shifted(i, -f.scale());
  }
  throw std::invalid_argument("unknown divisor");
}

TruncatedSeries formal_derivative(const TruncatedSeries& f, std::size_t var) {
  const int s = f.scale_;
  TruncatedSeries r(f.vars_, s);
  r.total_floor_ = shift_bound(f.total_floor_, -s);
  r.var_floor_ = f.var_floor_;
  r.var_floor_[var] = shift_bound(f.var_floor_[var], -s);
  r.upper_ = f.upper_;
  r.upper_[var] = shift_bound(f.upper_[var], -s);
  r.total_upper_ = shift_bound(f.total_upper_, -s);
  for (const auto& [e, v] : f.terms_) {
    if (e[var] == 0) continue;
    TruncatedSeries::Exponent g = e;
    g[var] -= s;
    r.terms_.emplace(std::move(g), v * ratio(e[var], s));
  }
  r.normalize_window();
  return r;
}

}  // namespace kpo
