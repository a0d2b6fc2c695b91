#include "kpopen/npoint.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "kpopen/open.hpp"

namespace kpo {

std::string to_string(NPointKind kind) {
  switch (kind) {
    case NPointKind::open:
      return "open";
    case NPointKind::wk:
      return "wk";
    case NPointKind::ext:
      return "ext";
  }
  return "?";
}

Rational NPointSeries::coeff(const std::vector<int>& j) const {
  if (static_cast<int>(j.size()) != n) throw std::invalid_argument("index arity mismatch");
  TruncatedSeries::Exponent e(n);
  for (int i = 0; i < n; ++i) e[i] = -j[i] - 1;
  return series.coeff(e);
}

namespace {

std::vector<std::string> point_vars(int n) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back("z" + std::to_string(i));
  return v;
}

NPointSeries finish(int n, NPointKind kind, int degree, TruncatedSeries s) {
  if (s.total_floor() > -degree)
    throw WindowError("series complete only down to total degree " + std::to_string(s.total_floor()) +
                      ", requested " + std::to_string(-degree));
  s.truncate_total(-degree);
  return {n, kind, degree, std::move(s)};
}

// ---- cycle formula ---------------------------------------------------------

constexpr int kMaxPoints = 8;

struct Key {
  std::array<int, kMaxPoints> e{};
  bool operator==(const Key& o) const { return e == o.e; }
};

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : k.e) h = (h ^ static_cast<std::size_t>(x + 100000)) * 1099511628211ull;
    return h;
  }
};

struct Edge {
  int eu;
  int ev;
  Rational c;
};

// Terms of the propagator-corrected kernel between points u and v (0-based).
std::vector<Edge> kernel_terms(const CoordTable& table, int u, int v, int degree, int cutoff) {
  std::vector<Edge> out;
  for (int w = 0; w + 2 <= degree; ++w)
    for (int i = 0; i <= w; ++i) {
      const Rational& a = table.at(i, w - i);
      if (a != 0) out.push_back({-i - 1, -(w - i) - 1, a});
    }
  for (int k = 0; k <= cutoff; ++k) {
    if (u < v)
      out.push_back({-1 - k, k, Rational(1)});
    else
      out.push_back({k, -1 - k, Rational(-1)});
  }
  return out;
}

using StateMap = std::unordered_map<Key, Rational, KeyHash>;

void cycle_product(const CoordTable& table, const std::vector<int>& cycle, int degree, int cutoff, int hi,
                   StateMap& total, const Rational& sign) {
  const int n = static_cast<int>(cycle.size());
  const int lo = -degree;
  StateMap cur;
  cur.emplace(Key{}, Rational(1));
  for (int t = 0; t < n; ++t) {
    const int u = cycle[t], w = cycle[(t + 1) % n];
    std::vector<Edge> edges = kernel_terms(table, u, w, degree, cutoff);
    const int remaining = n - 1 - t;
    StateMap next;
    next.reserve(cur.size() * 4);
    Rational prod;
    for (const auto& [key, c] : cur) {
      long partial_total = 0;
      for (int i = 0; i < n; ++i) partial_total += key.e[i];
      for (const Edge& ed : edges) {
        Key k = key;
        k.e[u] += ed.eu;
        k.e[w] += ed.ev;
        if (partial_total + ed.eu + ed.ev < lo + remaining) continue;
        bool ok = true;
        // Vertices with both incident edges applied.
        if (t >= 1 && (k.e[u] < lo || k.e[u] > hi)) ok = false;
        if (ok && t == n - 1 && (k.e[w] < lo || k.e[w] > hi)) ok = false;
        if (ok && t < n - 1 && (k.e[w] < lo - cutoff - 1 || k.e[w] > hi + cutoff + 1)) ok = false;
        if (ok && t == 0 && (k.e[u] < lo - cutoff - 1 || k.e[u] > hi + cutoff + 1)) ok = false;
        if (!ok) continue;
        mpq_mul(prod.get_mpq_t(), c.get_mpq_t(), ed.c.get_mpq_t());
        auto [it, inserted] = next.emplace(k, prod);
        if (!inserted) it->second += prod;
      }
    }
    cur.swap(next);
  }
  for (auto& [key, c] : cur) {
    if (c == 0) continue;
    auto [it, inserted] = total.emplace(key, c * sign);
    if (!inserted) it->second += c * sign;
  }
}

TruncatedSeries kernel_series(const CoordTable& table, int floor) {
  TruncatedSeries a({"z1", "z2"});
  for (int w = 0; w + 2 <= -floor; ++w)
    for (int i = 0; i <= w; ++i) a.add_term({-i - 1, -(w - i) - 1}, table.at(i, w - i));
  a.set_upper({-1, -1});
  a.truncate_total(floor);
  return a;
}

CoordTable table_for(NPointKind kind, int weight) {
  return kind == NPointKind::wk ? wk_table(weight) : open_table(weight);
}

// ---- closed forms ----------------------------------------------------------

struct Factor {
  char fn;  // 'a', 'b', 'c'
  bool neg;
  int var;
};

struct TermSpec {
  Rational coef;
  std::vector<Factor> factors;
  std::vector<std::pair<Rational, std::vector<int>>> poly;  // empty means 1
  std::vector<int> mono;
  std::vector<std::pair<int, int>> pairs;  // (i, j) stands for z_i^2 - z_j^2
};

int var_of(char c) { return c == 'x' ? 0 : c == 'y' ? 1 : 2; }

// "a-x b+y" style factor lists.
std::vector<Factor> parse_factors(const std::string& s) {
  std::vector<Factor> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back({tok[0], tok[1] == '-', var_of(tok[2])});
  return out;
}

std::vector<int> parse_mono(const std::string& s, int nv) {
  std::vector<int> m(nv, 0);
  for (char c : s) ++m[var_of(c)];
  return m;
}

std::vector<std::pair<int, int>> parse_pairs(std::initializer_list<const char*> ps) {
  std::vector<std::pair<int, int>> out;
  for (const char* p : ps) out.emplace_back(var_of(p[0]), var_of(p[1]));
  return out;
}

TermSpec term(Rational coef, const std::string& factors, const std::string& mono,
              std::initializer_list<const char*> pairs, int nv,
              std::vector<std::pair<Rational, std::vector<int>>> poly = {}) {
  return {coef, parse_factors(factors), std::move(poly), parse_mono(mono, nv), parse_pairs(pairs)};
}

TermSpec permute(const TermSpec& t, const std::vector<int>& sigma) {
  TermSpec r = t;
  for (auto& f : r.factors) f.var = sigma[f.var];
  for (auto& [c, e] : r.poly) {
    std::vector<int> g(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) g[sigma[i]] = e[i];
    e = g;
  }
  std::vector<int> m(t.mono.size());
  for (std::size_t i = 0; i < t.mono.size(); ++i) m[sigma[i]] = t.mono[i];
  r.mono = m;
  for (auto& [i, j] : r.pairs) {
    i = sigma[i];
    j = sigma[j];
  }
  return r;
}

class Univariates {
 public:
  Univariates(std::vector<std::string> vars, int depth) : vars_(std::move(vars)), depth_(depth) {}

  const TruncatedSeries& get(char fn, bool neg, int var) {
    auto key = std::make_tuple(fn, neg, var);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    TruncatedSeries s = fn == 'a'   ? faber_zagier(FZSeries::a, depth_, "t")
                        : fn == 'b' ? faber_zagier(FZSeries::b, depth_, "t")
                                    : c_series(depth_, "t");
    s = s.embedded(vars_, {var});
    if (neg) s = s.negate_variable(var);
    return cache_.emplace(key, std::move(s)).first->second;
  }

 private:
  std::vector<std::string> vars_;
  int depth_;
  std::map<std::tuple<char, bool, int>, TruncatedSeries> cache_;
};

TruncatedSeries product(const std::vector<const TruncatedSeries*>& fs, long floor, const std::vector<std::string>& vars) {
  TruncatedSeries acc = TruncatedSeries::constant(vars, 1);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    long rest = 0;
    for (std::size_t k = i + 1; k < fs.size(); ++k) rest += fs[k]->total_upper();
    acc = multiply(acc, *fs[i], floor - rest);
  }
  return acc;
}

// Sums the fractions over a common denominator and divides exactly.
TruncatedSeries combine(const std::vector<TermSpec>& specs, const std::vector<std::string>& vars, int degree,
                        int depth) {
  const int nv = static_cast<int>(vars.size());
  std::vector<int> top_mono(nv, 0);
  std::map<std::pair<int, int>, int> top_pairs;
  auto canon = [](std::pair<int, int> p, int& sign) {
    if (p.first > p.second) {
      sign = -sign;
      std::swap(p.first, p.second);
    }
    return p;
  };
  std::vector<std::map<std::pair<int, int>, int>> term_pairs;
  std::vector<int> signs;
  for (const auto& t : specs) {
    for (int i = 0; i < nv; ++i) top_mono[i] = std::max(top_mono[i], t.mono[i]);
    std::map<std::pair<int, int>, int> tp;
    int sign = 1;
    for (auto p : t.pairs) ++tp[canon(p, sign)];
    for (auto& [p, k] : tp) top_pairs[p] = std::max(top_pairs[p], k);
    term_pairs.push_back(tp);
    signs.push_back(sign);
  }
  int den_degree = std::accumulate(top_mono.begin(), top_mono.end(), 0);
  for (auto& [p, k] : top_pairs) den_degree += 2 * k;
  const long num_floor = -degree + den_degree;

  Univariates uni(vars, depth);
  TruncatedSeries sum(vars);
  bool first = true;
  for (std::size_t idx = 0; idx < specs.size(); ++idx) {
    const TermSpec& t = specs[idx];
    std::vector<TruncatedSeries> extra;
    int comp_degree = 0;
    for (int i = 0; i < nv; ++i) comp_degree += top_mono[i] - t.mono[i];
    for (auto& [p, k] : top_pairs) {
      int have = term_pairs[idx].count(p) ? term_pairs[idx].at(p) : 0;
      for (int r = have; r < k; ++r) {
        std::vector<int> e1(nv, 0), e2(nv, 0);
        e1[p.first] = 2;
        e2[p.second] = 2;
        extra.push_back(TruncatedSeries::monomial(vars, e1, 1) - TruncatedSeries::monomial(vars, e2, 1));
        comp_degree += 2;
      }
    }
    if (!t.poly.empty()) {
      TruncatedSeries poly(vars);
      for (const auto& [c, e] : t.poly) poly = poly + TruncatedSeries::monomial(vars, e, c);
      extra.push_back(poly);
    }
    std::vector<const TruncatedSeries*> fs;
    for (const auto& f : t.factors) fs.push_back(&uni.get(f.fn, f.neg, f.var));
    for (const auto& e : extra) fs.push_back(&e);
    TruncatedSeries num = product(fs, num_floor - comp_degree, vars).scaled(t.coef * signs[idx]);
    for (int i = 0; i < nv; ++i)
      if (top_mono[i] > t.mono[i]) num = num.shifted(i, top_mono[i] - t.mono[i]);
    sum = first ? num : sum + num;
    first = false;
  }
  for (auto& [p, k] : top_pairs)
    for (int r = 0; r < k; ++r) sum = exact_divide_by(sum, Divisor::x2_minus_y2, p.first, p.second);
  for (int i = 0; i < nv; ++i)
    if (top_mono[i] > 0) sum = sum.shifted(i, -top_mono[i]);
  return sum;
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<TermSpec> symmetrize(const std::vector<TermSpec>& bracket) {
  std::vector<TermSpec> out;
  for (const auto& sigma : all_permutations(3))
    for (const auto& t : bracket) out.push_back(permute(t, sigma));
  return out;
}

int closed_depth(int degree) { return degree / 3 + 6; }

std::vector<TermSpec> ext2_terms() {
  return {
      term(1, "a+y a-y b-x c+x", "x", {"xy"}, 2),
      term(-1, "a-x a-y b+y c+x", "x", {"xy"}, 2),
      term(1, "a-x a-y b+x c+y", "y", {"xy"}, 2),
      term(-1, "a+x a-x b-y c+y", "y", {"xy"}, 2),
      term(-1, "a-x a-y c+x c+y", "xy", {}, 2),
  };
}

std::vector<TermSpec> wk2_terms() {
  return {
      term(1, "a+x a+y b-x b-y", "", {"xy", "xy"}, 2),
      term(1, "a-x a-y b+x b+y", "", {"xy", "xy"}, 2),
      term(-1, "a+y a-y b+x b-x", "", {"xy", "xy"}, 2),
      term(-1, "a+x a-x b+y b-y", "", {"xy", "xy"}, 2),
      // -1/(x-y)^2 = -(x+y)^2/(x^2-y^2)^2
      term(-1, "", "", {"xy", "xy"}, 2, {{1, {2, 0}}, {2, {1, 1}}, {1, {0, 2}}}),
  };
}

std::vector<TermSpec> open3_bracket() {
  return {
      term(ratio(1, 2), "a-x a-y a-z b+x b+y c+z", "z", {"zx", "zy"}, 3),
      term(ratio(1, 2), "a-x a-y a-z b+z c+x c+y", "xy", {"zx", "zy"}, 3,
           {{1, {2, 0, 0}}, {1, {0, 2, 0}}, {-2, {0, 0, 2}}}),
      term(1, "a+x a-x b+y b-y a-z b+z", "", {"xy", "yz", "zx"}, 3),
      term(1, "a+x a-x b+y b-y a+z b-z", "", {"xy", "yz", "zx"}, 3),
      term(1, "a+x a-x b-z c+z a+y b-y", "z", {"xy", "yz"}, 3),
      term(1, "a+x a-x b-z c+z a-y b+y", "z", {"xy", "xz"}, 3),
      term(1, "a+x a-x c+y c+z a-y b-z", "yz", {"xz"}, 3),
      term(1, "a+x a-x b+y b-y a-z c+z", "z", {"yx", "yz"}, 3),
      term(ratio(1, 3), "a-x a-y a-z c+x c+y c+z", "xyz", {}, 3),
  };
}

std::vector<TermSpec> ext3_bracket() {
  return {
      term(1, "a+x a-x a+y b-y b-z c+z", "z", {"xy", "yz"}, 3),
      term(1, "a+x a-x a-y b+y b-z c+z", "z", {"xy", "xz"}, 3),
      term(1, "a+x a-x c+y b-z a-y c+z", "yz", {"xz"}, 3),
      term(1, "a+x a-x c+y b-z a-y b+z", "y", {"xz", "yz"}, 3),
      term(ratio(1, 3), "a-x a-y a-z c+x c+y c+z", "xyz", {}, 3),
      term(ratio(1, 2), "a-x a-y a-z b+y b+z c+x", "x", {"xy", "xz"}, 3),
      term(ratio(1, 2), "a-x a-y a-z b+x c+y c+z", "yz", {"yx", "zx"}, 3,
           {{-2, {2, 0, 0}}, {1, {0, 2, 0}}, {1, {0, 0, 2}}}),
  };
}

TruncatedSeries ext1_series(int degree) {
  int depth = closed_depth(degree);
  TruncatedSeries c = c_series(depth, "z1");
  TruncatedSeries a = faber_zagier(FZSeries::a, depth, "z1");
  TruncatedSeries ca = c * a.negate_variable(0) - TruncatedSeries::constant({"z1"}, 1);
  return exact_divide_by(ca, Divisor::single_variable, 0);
}

}  // namespace

NPointSeries connected_npoint_from_table(const CoordTable& table, int n, int degree, const CycleOptions& options) {
  if (n < 1) throw std::invalid_argument("number of points must be >= 1");
  if (n > kMaxPoints) throw std::invalid_argument("at most 8 points supported");
  if (degree < 2 * n) throw std::invalid_argument("degree too small for any term");
  if (table.max_weight() < degree) throw std::out_of_range("coordinate table too small for this degree");
  const NPointKind kind = table.kind() == CoordKind::wk ? NPointKind::wk : NPointKind::open;
  const auto vars = point_vars(n);
  if (n == 1) {
    TruncatedSeries g({"z1"});
    for (int w = 0; w + 2 <= degree; ++w)
      for (int i = 0; i <= w; ++i) g.add_term({-w - 2}, table.at(i, w - i));
    g.set_upper({-2});
    g.truncate_total(-degree);
    return {1, kind, degree, g};
  }
  if (n == 2) {
    TruncatedSeries a = kernel_series(table, -degree - 1);
    TruncatedSeries at = a.permuted({1, 0});
    TruncatedSeries g = exact_divide_by(a - at, Divisor::x_minus_y, 0, 1) - a * at;
    NPointSeries out = finish(2, kind, degree, g);
    for (const auto& [e, v] : out.series.terms())
      if (e[0] > -2 || e[1] > -2) throw CancellationError("two-point function has a term at exponent >= -1");
    return out;
  }
  const int hi = std::max(options.check_upper, -2);
  const int cutoff = options.cutoff >= 0 ? options.cutoff : (n - 1) * (degree + std::max(hi, 0) + 1);
  StateMap total;
  std::vector<int> rest(n - 1);
  std::iota(rest.begin(), rest.end(), 1);
  const Rational sign = (n - 1) % 2 ? -1 : 1;
  do {
    std::vector<int> cycle{0};
    cycle.insert(cycle.end(), rest.begin(), rest.end());
    cycle_product(table, cycle, degree, cutoff, hi, total, sign);
  } while (std::next_permutation(rest.begin(), rest.end()));

  TruncatedSeries g(vars);
  for (const auto& [key, c] : total) {
    if (c == 0) continue;
    TruncatedSeries::Exponent e(key.e.begin(), key.e.begin() + n);
    bool pure = std::all_of(e.begin(), e.end(), [](int x) { return x <= -2; });
    if (!pure) {
      std::ostringstream os;
      os << "cycle formula left coefficient " << to_string(c) << " at exponent (";
      for (int i = 0; i < n; ++i) os << (i ? "," : "") << e[i];
      os << ")";
      throw CancellationError(os.str());
    }
    g.add_term(e, c);
  }
  g.set_upper(std::vector<long>(n, -2));
  g.truncate_total(-degree);
  return {n, kind, degree, g};
}

NPointSeries connected_npoint(NPointKind kind, int n, int degree, const CycleOptions& options) {
  if (kind == NPointKind::ext) {
    NPointSeries o = connected_npoint(NPointKind::open, n, degree, options);
    NPointSeries w = connected_npoint(NPointKind::wk, n, degree, options);
    return {n, NPointKind::ext, degree, o.series - w.series};
  }
  return connected_npoint_from_table(table_for(kind, degree), n, degree, options);
}

NPointSeries onepoint_closed(int degree) {
  TruncatedSeries s = ext1_series(degree) + wk_onepoint(degree / 6 + 1, "z1");
  return finish(1, NPointKind::open, degree, s);
}

NPointSeries onepoint_derivative_form(int degree) {
  int depth = closed_depth(degree);
  const std::vector<std::string> v{"z1"};
  TruncatedSeries a = faber_zagier(FZSeries::a, depth, "z1");
  TruncatedSeries b = faber_zagier(FZSeries::b, depth, "z1");
  TruncatedSeries c = c_series(depth, "z1");
  TruncatedSeries am = a.negate_variable(0), bm = b.negate_variable(0);
  TruncatedSeries wr = formal_derivative(a, 0) * bm - am * formal_derivative(b, 0);
  TruncatedSeries num = (c * am).scaled(2) + wr - TruncatedSeries::constant(v, 1);
  TruncatedSeries s = exact_divide_by(num, Divisor::single_variable, 0).scaled(ratio(1, 2));
  return finish(1, NPointKind::open, degree, s);
}

NPointSeries twopoint_closed(int degree) {
  std::vector<TermSpec> specs = ext2_terms();
  for (auto& t : wk2_terms()) specs.push_back(t);
  return finish(2, NPointKind::open, degree, combine(specs, point_vars(2), degree, closed_depth(degree)));
}

NPointSeries threepoint_closed(int degree) {
  return finish(3, NPointKind::open, degree,
                combine(symmetrize(open3_bracket()), point_vars(3), degree, closed_depth(degree)));
}

NPointSeries ext_correlator(int n, int degree) {
  switch (n) {
    case 1:
      return finish(1, NPointKind::ext, degree, ext1_series(degree));
    case 2:
      return finish(2, NPointKind::ext, degree, combine(ext2_terms(), point_vars(2), degree, closed_depth(degree)));
    case 3:
      return finish(3, NPointKind::ext, degree,
                    combine(symmetrize(ext3_bracket()), point_vars(3), degree, closed_depth(degree)));
    default:
      throw std::invalid_argument("closed extended correlators exist for n = 1, 2, 3");
  }
}

VerificationReport check_npoint_invariants(const NPointSeries& g) {
  VerificationReport report;
  report.suite = "npoint invariants";
  report.range = "n=" + std::to_string(g.n) + " degree<=" + std::to_string(g.degree_bound);
  for (const auto& [e, v] : g.series.terms()) {
    ++report.checked;
    for (int x : e)
      if (x > -2) {
        report.add("purity at exponent sum " + std::to_string(std::accumulate(e.begin(), e.end(), 0)), "0", to_string(v));
        break;
      }
    for (const auto& sigma : all_permutations(g.n)) {
      TruncatedSeries::Exponent f(g.n);
      for (int i = 0; i < g.n; ++i) f[i] = e[sigma[i]];
      if (g.series.coeff(f) != v) {
        report.add("symmetry", to_string(v), to_string(g.series.coeff(f)));
        break;
      }
    }
  }
  return report;
}

VerificationReport compare_npoint(const std::string& suite, const NPointSeries& a, const NPointSeries& b) {
  VerificationReport report;
  report.suite = suite;
  const int degree = std::min(a.degree_bound, b.degree_bound);
  report.range = "degree<=" + std::to_string(degree);
  auto check = [&](const TruncatedSeries::Exponent& e) {
    long t = std::accumulate(e.begin(), e.end(), 0L);
    if (t < -degree) return;
    ++report.checked;
    Rational x = a.series.coeff(e), y = b.series.coeff(e);
    if (x != y) {
      std::ostringstream os;
      os << "(";
      for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
      os << ")";
      report.add(os.str(), to_string(x), to_string(y));
    }
  };
  for (const auto& [e, v] : a.series.terms()) check(e);
  for (const auto& [e, v] : b.series.terms())
    if (!a.series.terms().count(e)) check(e);
  return report;
}

}  // namespace kpo
