#include "kpopen/tau.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kpo {

Rational SchurExpansion::coeff(const Partition& mu) const {
  auto it = coefficients.find(mu);
  return it == coefficients.end() ? Rational(0) : it->second;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t k = m.size();
  for (const auto& row : m)
    if (row.size() != k) throw std::invalid_argument("determinant needs a square matrix");
  if (k == 0) return 1;
  Rational sign = 1, prev = 1;
  for (std::size_t p = 0; p + 1 < k; ++p) {
    if (m[p][p] == 0) {
      std::size_t r = p + 1;
      while (r < k && m[r][p] == 0) ++r;
      if (r == k) return 0;
      std::swap(m[p], m[r]);
      sign = -sign;
    }
    for (std::size_t i = p + 1; i < k; ++i) {
      for (std::size_t j = p + 1; j < k; ++j) m[i][j] = (m[i][j] * m[p][p] - m[i][p] * m[p][j]) / prev;
      m[i][p] = 0;
    }
    prev = m[p][p];
  }
  return sign * m[k - 1][k - 1];
}

Rational schur_coefficient(const Partition& mu, const CoordTable& table) {
  const FrobeniusForm f = frobenius(mu);
  const int k = f.rank();
  if (k == 0) return 1;
  if (f.arms[0] + f.legs[0] > table.max_weight())
    throw std::out_of_range("coordinate table does not cover " + mu.str());
  std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
  int leg_sum = 0;
  for (int i = 0; i < k; ++i) {
    leg_sum += f.legs[i];
    for (int j = 0; j < k; ++j) m[i][j] = table.at(f.legs[i], f.arms[j]);
  }
  Rational d = determinant(std::move(m));
  return leg_sum % 2 ? Rational(-d) : d;
}

SchurExpansion schur_expansion(int max_size, const CoordTable& table) {
  if (max_size < 0) throw std::invalid_argument("size must be nonnegative");
  SchurExpansion s;
  s.max_size = max_size;
  for (int w = 0; w <= max_size; ++w)
    for (const Partition& mu : partitions_of(w)) {
      Rational c = schur_coefficient(mu, table);
      if (c != 0) s.coefficients.emplace(mu, c);
    }
  return s;
}

WeightedPolynomial tau_polynomial(const SchurExpansion& schur, TimeFamily family, int max_weight) {
  if (max_weight > schur.max_size) throw std::out_of_range("Schur expansion is shorter than the requested weight");
  WeightedPolynomial tau(TimeFamily::T, max_weight);
  for (const auto& [mu, c] : schur.coefficients) {
    if (mu.size() > max_weight) continue;
    const PowerSumPolynomial s = schur_in_powersums(mu);
    for (const auto& [lambda, v] : s.terms()) {
      WeightedPolynomial::Exponent e(lambda.empty() ? 0 : lambda[0], 0);
      Integer prod = 1;
      for (int part : lambda.parts()) {
        ++e[part - 1];
        prod *= part;
      }
      tau.add_term(e, c * v * prod);
    }
  }
  return tau.to_family(family);
}

WeightedPolynomial tau_expansion(int max_weight, TimeFamily family, const CoordTable& table) {
  return tau_polynomial(schur_expansion(max_weight, table), family, max_weight);
}

WeightedPolynomial free_energy(int max_weight, TimeFamily family, const CoordTable& table) {
  if (max_weight < 1) throw std::invalid_argument("free energy needs max_weight >= 1");
  return truncated_log(tau_expansion(max_weight, family, table));
}

namespace {

int t_slot(int i) { return 2 * i + 1; }
int s_slot(int i) { return 2 * i + 2; }

WeightedPolynomial virasoro_ts(int n, const WeightedPolynomial& p) {
  const int W = p.max_weight();
  WeightedPolynomial r(TimeFamily::ts, W);
  if (n == -1) {
    r = r + p.times_variable(t_slot(0)).times_variable(t_slot(0)).scaled(ratio(1, 2));
    r = r + p.times_variable(s_slot(0));
  }
  if (n == 0) r = r + p.scaled(ratio(1, 16) + ratio(3, 4));
  Integer two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, n + 1);
  for (int i = 0; t_slot(i + n) <= W || t_slot(i) <= W; ++i) {
    if (i + n < 0) continue;
    Rational coef = ratio(double_factorial(2 * i + 2 * n + 1), two_pow * double_factorial(2 * i - 1));
    WeightedPolynomial d = p.derivative(t_slot(i + n));
    r = r + d.times_variable(t_slot(i)).scaled(coef);
    if (i == 1) r = r - d.scaled(coef);
  }
  for (int i = 0; i <= n - 1; ++i) {
    Rational coef = ratio(double_factorial(2 * i + 1) * double_factorial(2 * n - 2 * i - 1), two_pow * 2);
    r = r + p.derivative(t_slot(i)).derivative(t_slot(n - i - 1)).scaled(coef);
  }
  for (int i = 0; s_slot(i) <= W || s_slot(i + n) <= W; ++i) {
    if (n + i < 0) continue;
    Rational coef = ratio(factorial(n + i + 1), factorial(i));
    r = r + p.derivative(s_slot(n + i)).times_variable(s_slot(i)).scaled(coef);
  }
  // Derivatives in s_{n-1} with n - 1 < 0 are zero.
  if (n - 1 >= 0) r = r + p.derivative(s_slot(n - 1)).scaled(ratio(factorial(n + 1) * 3, 4));
  return r;
}

WeightedPolynomial virasoro_modified(int n, const WeightedPolynomial& p) {
  const int W = p.max_weight();
  WeightedPolynomial r(TimeFamily::T, W);
  r = r - p.derivative(2 * n + 3);
  r = r + p.derivative(2 * n).scaled(n + 2);
  for (int k = 1; k <= 2 * n - 1; ++k) r = r + p.derivative(k).derivative(2 * n - k).scaled(ratio(1, 2));
  for (int k = 1; 2 * n + k <= W; ++k) r = r + p.derivative(2 * n + k).times_variable(k).scaled(k);
  return r;
}

std::string hirota_monomial(const std::vector<int>& e, int v) {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < 2 * v; ++k) {
    if (e[k] == 0) continue;
    if (!first) os << "*";
    first = false;
    os << (k < v ? "x" : "y") << (k % v + 1);
    if (e[k] > 1) os << "^" << e[k];
  }
  return first ? "1" : os.str();
}

// Polynomial in x_1..x_v, y_1..y_v, weight(x_j) = weight(y_j) = j.
struct BiPoly {
  int v = 0;
  int cap = 0;
  std::map<std::vector<int>, Rational> terms;

  int weight(const std::vector<int>& e) const {
    int w = 0;
    for (int k = 0; k < 2 * v; ++k) w += (k % v + 1) * e[k];
    return w;
  }
  void add(const std::vector<int>& e, const Rational& c) {
    if (c == 0 || weight(e) > cap) return;
    auto [it, inserted] = terms.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
  BiPoly times(const BiPoly& o) const {
    BiPoly r{v, cap, {}};
    std::vector<int> e(2 * v);
    for (const auto& [ea, ca] : terms)
      for (const auto& [eb, cb] : o.terms) {
        for (int k = 0; k < 2 * v; ++k) e[k] = ea[k] + eb[k];
        r.add(e, ca * cb);
      }
    return r;
  }
};

// tau(x -/+ [z^{-1}]) = sum_c P_c z^{-c}; `offset` selects the x or y block.
std::map<int, BiPoly> shifted_tau(const WeightedPolynomial& tau, int v, int cap, int offset, int sign) {
  std::map<int, BiPoly> out;
  for (const auto& [e, c] : tau.terms()) {
    // Expand prod_j (x_j + sign z^{-j}/j)^{e_j} one slot at a time.
    std::vector<std::pair<int, std::pair<std::vector<int>, Rational>>> acc{{0, {std::vector<int>(2 * v, 0), c}}};
    for (std::size_t k = 0; k < e.size(); ++k) {
      const int j = static_cast<int>(k + 1), m = e[k];
      if (m == 0) continue;
      decltype(acc) next;
      for (const auto& [deg, mono] : acc)
        for (int r = 0; r <= m; ++r) {
          auto f = mono.first;
          f[offset + j - 1] += m - r;
          Integer binom;
          mpz_bin_uiui(binom.get_mpz_t(), m, r);
          Rational coef = mono.second * binom * rational_pow(ratio(sign, j), r);
          next.push_back({deg + j * r, {f, coef}});
        }
      acc.swap(next);
    }
    for (const auto& [deg, mono] : acc) {
      auto [it, inserted] = out.try_emplace(deg, BiPoly{v, cap, {}});
      it->second.add(mono.first, mono.second);
    }
  }
  return out;
}

}  // namespace

WeightedPolynomial apply_virasoro(int n, const WeightedPolynomial& p) {
  if (n < -1) throw std::invalid_argument("Virasoro index must be >= -1");
  if (n <= 0) {
    if (p.family() != TimeFamily::ts) throw std::invalid_argument("L_n for n <= 0 acts on the ts family");
    return virasoro_ts(n, p);
  }
  if (p.family() != TimeFamily::T) throw std::invalid_argument("modified L_n for n >= 1 acts on the T family");
  return virasoro_modified(n, p);
}

VerificationReport verify_virasoro_bosonic(int n, int check_weight, const SchurExpansion& schur) {
  if (check_weight < 0) throw std::invalid_argument("no checkable weight");
  const int needed = check_weight + 2 * n + 3;
  if (needed > schur.max_size)
    throw std::out_of_range("tau must be known to weight " + std::to_string(needed));
  VerificationReport report;
  report.suite = "virasoro";
  report.range = "n=" + std::to_string(n) + " weight<=" + std::to_string(check_weight);
  const TimeFamily family = n <= 0 ? TimeFamily::ts : TimeFamily::T;
  WeightedPolynomial tau = tau_polynomial(schur, family, needed);
  WeightedPolynomial image = apply_virasoro(n, tau).truncated(check_weight);
  report.checked = static_cast<long>(tau.terms().size());
  for (const auto& [e, c] : image.terms()) report.add(image.monomial_name(e), "0", to_string(c));
  return report;
}

VerificationReport verify_virasoro_bosonic(int n, int check_weight, const CoordTable& table) {
  return verify_virasoro_bosonic(n, check_weight, schur_expansion(check_weight + 2 * n + 3, table));
}

VerificationReport verify_hirota(int max_weight, const SchurExpansion& schur) {
  if (max_weight < 2) throw std::invalid_argument("Hirota check needs max_weight >= 2");
  if (max_weight + 1 > schur.max_size)
    throw std::out_of_range("tau must be known to weight " + std::to_string(max_weight + 1));
  const int v = max_weight + 1;
  const int cap = max_weight;
  WeightedPolynomial tau = tau_polynomial(schur, TimeFamily::T, v);
  std::map<int, BiPoly> P = shifted_tau(tau, v, cap, 0, -1);
  std::map<int, BiPoly> R = shifted_tau(tau, v, cap, v, 1);

  // exp(sum_j (x_j - y_j) z^j) = sum_a E_a z^a, with a E_a = sum_j j (x_j - y_j) E_{a-j}.
  std::vector<BiPoly> E(cap + 1, BiPoly{v, cap, {}});
  E[0].add(std::vector<int>(2 * v, 0), 1);
  for (int a = 1; a <= cap; ++a)
    for (int j = 1; j <= a; ++j) {
      BiPoly diff{v, cap, {}};
      std::vector<int> ex(2 * v, 0), ey(2 * v, 0);
      ex[j - 1] = 1;
      ey[v + j - 1] = 1;
      diff.add(ex, ratio(j, a));
      diff.add(ey, ratio(-j, a));
      for (const auto& [e, c] : E[a - j].times(diff).terms) E[a].add(e, c);
    }

  BiPoly residue{v, cap, {}};
  for (const auto& [c1, p] : P)
    for (const auto& [c2, r] : R) {
      const int a = c1 + c2 - 1;
      if (a < 0 || a > cap) continue;
      for (const auto& [e, c] : E[a].times(p).times(r).terms) residue.add(e, c);
    }
  VerificationReport report;
  report.suite = "hirota";
  report.range = "combined weight<=" + std::to_string(max_weight);
  report.checked = static_cast<long>(tau.terms().size());
  for (const auto& [e, c] : residue.terms) report.add(hirota_monomial(e, v), "0", to_string(c));
  return report;
}

VerificationReport verify_hirota(int max_weight, const CoordTable& table) {
  return verify_hirota(max_weight, schur_expansion(max_weight + 1, table));
}

}  // namespace kpo
