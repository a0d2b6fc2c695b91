#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kpopen/npoint.hpp"
#include "kpopen/open.hpp"
#include "kpopen/symmfunc.hpp"
#include "kpopen/tau.hpp"
#include "kpopen/wk.hpp"
#include "reference_values.hpp"

using namespace kpo;

namespace {

// Collects mismatches for one criterion.
struct Outcome {
  std::vector<std::string> problems;
  long checked = 0;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok) problems.push_back(what);
  }
  void equal(const Rational& got, const Rational& want, const std::string& what) {
    expect(got == want, what + ": got " + to_string(got) + ", want " + to_string(want));
  }
  void report(const VerificationReport& r) {
    checked += r.checked;
    for (const auto& v : r.violations)
      problems.push_back(r.suite + " " + v.where + ": expected " + v.expected + ", actual " + v.actual);
    if (r.checked == 0) problems.push_back(r.suite + " checked nothing");
  }
};

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::vector<int> to_j(std::vector<int> powers) {
  for (int& p : powers) --p;
  return powers;
}

int total(const std::vector<int>& v) {
  int s = 0;
  for (int x : v) s += x;
  return s;
}

// Every listed class must match and every other nonzero term must be absent.
void check_listing(Outcome& out, const NPointSeries& g, const std::vector<ref::Correlator>& listing, int degree,
                   const std::string& label) {
  std::set<std::vector<int>> listed;
  for (const auto& c : listing) {
    std::vector<int> p = c.powers;
    if (g.n >= 3) std::sort(p.begin(), p.end());
    do {
      listed.insert(p);
      out.equal(g.coeff(to_j(p)), parse_rational(c.value), label + " at powers (" + join(p) + ")");
    } while (g.n >= 3 && std::next_permutation(p.begin(), p.end()));
  }
  for (const auto& [e, c] : g.series.terms()) {
    std::vector<int> p;
    for (int x : e) p.push_back(-x);
    if (total(p) > degree) continue;
    out.expect(listed.count(p) > 0, label + " has an unlisted term at powers (" + join(p) + ") = " + to_string(c));
  }
}

bool print(int id, const std::string& name, const Outcome& out, double seconds, double budget = 0) {
  bool ok = out.problems.empty() && (budget <= 0 || seconds < budget);
  std::cout << (ok ? "PASS " : "FAIL ") << id << " " << name << " (" << out.checked << " checks, " << std::fixed
            << std::setprecision(2) << seconds << " s";
  if (budget > 0) std::cout << ", limit " << budget << " s";
  std::cout << ")\n";
  const std::size_t shown = std::min<std::size_t>(out.problems.size(), 10);
  for (std::size_t i = 0; i < shown; ++i) std::cout << "    " << out.problems[i] << "\n";
  if (out.problems.size() > shown) std::cout << "    ... " << out.problems.size() - shown << " more\n";
  if (budget > 0 && seconds >= budget) std::cout << "    over the time limit\n";
  return ok;
}

double timed(const std::function<void()>& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool criterion1() {
  Outcome out;
  double s = timed([&] {
    CoordTable table = open_table(40);
    for (int n = 0; n <= 8; ++n) {
      TruncatedSeries f = open_basis_vector(n, 40 - n).series;
      out.equal(f.coeff(2 * n + 1), 1, "leading term of f_" + std::to_string(n));
      for (int m = 0; n + m <= 40; ++m)
        out.equal(f.coeff(-2 * m - 1), table.at(n, m), "f_" + std::to_string(n) + " against the table at m=" + std::to_string(m));
    }
    for (const auto& c : ref::basis_vectors) {
      out.equal(table.at(c.n, c.m), parse_rational(c.value), "a(" + std::to_string(c.n) + "," + std::to_string(c.m) + ")");
      out.equal(open_basis_vector(c.n, c.m).series.coeff(-2 * c.m - 1), parse_rational(c.value),
                "f_" + std::to_string(c.n) + " at z^-" + std::to_string(c.m) + "-1/2");
    }
  });
  return print(1, "basis vectors f_0..f_8 at weight 40", out, s, 10);
}

bool criterion2() {
  Outcome out;
  double s = timed([&] {
    SchurExpansion e = schur_expansion(9, open_table(9));
    std::map<Partition, Rational> listed;
    for (const auto& t : ref::schur) listed[Partition(t.partition)] = parse_rational(t.value);
    out.equal(e.coeff(Partition{}), 1, "empty partition");
    for (int w = 1; w <= 9; ++w)
      for (const Partition& mu : partitions_of(w)) {
        auto it = listed.find(mu);
        out.equal(e.coeff(mu), it == listed.end() ? Rational(0) : it->second, "s_" + mu.str());
      }
  });
  return print(2, "Schur expansion for |mu| <= 9", out, s);
}

bool criterion3() {
  Outcome out;
  double s = timed([&] {
    NPointSeries g = connected_npoint(NPointKind::open, 1, 22);
    check_listing(out, g, ref::one_point, 22, "G1");
    out.report(compare_npoint("one-point cycle vs closed", g, onepoint_closed(22)));
  });
  return print(3, "one-point function through z^-22", out, s, 5);
}

bool criterion4() {
  Outcome out;
  double s = timed([&] {
    NPointSeries cycle = connected_npoint(NPointKind::open, 2, 20);
    NPointSeries closed = twopoint_closed(20);
    check_listing(out, cycle, ref::two_point, 20, "G2 cycle");
    check_listing(out, closed, ref::two_point, 20, "G2 closed");
    out.report(compare_npoint("two-point cycle vs closed", cycle, closed));
  });
  return print(4, "two-point function through degree 20, both routes", out, s);
}

bool criterion5() {
  Outcome out;
  double s = timed([&] {
    NPointSeries g3 = connected_npoint(NPointKind::open, 3, 18);
    check_listing(out, g3, ref::three_point, 18, "G3");
    out.report(compare_npoint("three-point cycle vs closed", g3, threepoint_closed(18)));
    NPointSeries g4 = connected_npoint(NPointKind::open, 4, 16);
    check_listing(out, g4, ref::four_point, 16, "G4");
    out.report(check_npoint_invariants(g3));
    out.report(check_npoint_invariants(g4));
  });
  return print(5, "three- and four-point functions", out, s, 120);
}

bool criterion6() {
  Outcome out;
  double s = timed([&] {
    const int weight = 12;
    WeightedPolynomial f = free_energy(weight, TimeFamily::T, open_table(weight));
    std::map<int, NPointSeries> correlators;
    for (const auto& t : ref::free_energy) {
      WeightedPolynomial::Exponent e(*std::max_element(t.times.begin(), t.times.end()), 0);
      for (int k : t.times) ++e[k - 1];
      const Rational want = parse_rational(t.value);
      const std::string name = f.monomial_name(e);
      if (total(t.times) <= weight) {
        out.equal(f.coeff(e), want, name + " from log tau");
        continue;
      }
      // Beyond the truncation the coefficient is read off the correlator.
      const int n = static_cast<int>(t.times.size());
      const int degree = total(t.times) + n;
      auto it = correlators.find(n);
      if (it == correlators.end() || it->second.degree_bound < degree)
        it = correlators.insert_or_assign(n, connected_npoint(NPointKind::open, n, std::max(degree, 20))).first;
      Integer sym = 1;
      for (int m : e) sym *= factorial(m);
      out.equal(it->second.coeff(t.times) / sym, want, name + " from G" + std::to_string(n));
    }
  });
  return print(6, "free energy listing", out, s);
}

bool criterion7() {
  Outcome out;
  double s = timed([&] {
    CoordTable t = open_table(43);
    for (int n = -1; n <= 5; ++n) out.report(verify_virasoro_recursion(n, 30, t));
    for (int n = -1; n <= 6; ++n) out.report(verify_linear_constraint(n, t));
    out.equal(t.at(0, 2), ratio(41, 24), "a(0,2)");
    out.report(verify_symmetry(5, t, wk_table(43)));
    out.report(verify_mod3(open_table(40)));
    out.report(verify_mod3(wk_table(40)));
  });
  return print(7, "recursion, linear constraint, symmetry and mod-3 suites", out, s);
}

bool criterion8() {
  Outcome out;
  double s = timed([&] {
    CoordTable open = open_table(40);
    out.report(compare_tables("open closed form vs recursion", open, open_coord_recursive(40)));
    out.report(compare_tables("wk closed form vs recursion", wk_table(40), wk_table_recursive(40)));

    TruncatedSeries gen = open_generating(14);
    long covered = 0;
    for (int n = 0; n <= 40; ++n)
      for (int m = 0; n + m <= 40; ++m) {
        TruncatedSeries::Exponent e{-n - 1, -m - 1};
        if (!gen.known(e)) continue;
        ++covered;
        out.equal(gen.coeff(e), open.at(n, m), "A(x,y) at (" + std::to_string(n) + "," + std::to_string(m) + ")");
      }
    out.expect(covered >= 200, "generating function covers only " + std::to_string(covered) + " entries");
    for (const auto& [e, c] : gen.terms())
      out.expect(e[0] <= -1 && e[1] <= -1, "A(x,y) has a term outside the negative quadrant");

    for (int w = 0; w <= 8; ++w)
      for (const Partition& mu : partitions_of(w))
        out.expect(schur_in_powersums(mu) == schur_jacobi_trudi(mu), "character vs Jacobi-Trudi for s_" + mu.str());
  });
  return print(8, "route equivalences", out, s);
}

bool criterion9() {
  Outcome out;
  double s = timed([&] {
    const int depth = 30;
    TruncatedSeries a = faber_zagier(FZSeries::a, depth), b = faber_zagier(FZSeries::b, depth);
    TruncatedSeries w = a * b.negate_variable(0) - a.negate_variable(0) * b;
    TruncatedSeries target = TruncatedSeries::monomial({"z"}, {1}, -2);
    out.expect(w.total_floor() <= -3 * depth, "a/b relation window too short");
    for (long e = w.total_floor(); e <= 1; ++e)
      out.equal(w.coeff(static_cast<int>(e)), target.coeff(static_cast<int>(e)), "a(z)b(-z)-a(-z)b(z) at z^" + std::to_string(e));

    out.report(verify_ks_relations(depth));

    const int degree = 3 * depth;
    NPointSeries open1 = connected_npoint(NPointKind::open, 1, degree);
    NPointSeries wk1 = connected_npoint(NPointKind::wk, 1, degree);
    NPointSeries ext{1, NPointKind::ext, degree, open1.series - wk1.series};
    out.report(compare_npoint("extended one-point cycle vs closed", ext, ext_correlator(1, degree)));
  });
  return print(9, "series identities to order 30", out, s);
}

bool criterion10() {
  Outcome out;
  double s = timed([&] {
    CoordTable table = open_table(16);
    SchurExpansion schur = schur_expansion(16, table);
    for (int n = -1; n <= 2; ++n) out.report(verify_virasoro_bosonic(n, 9, schur));
    out.report(verify_hirota(6, schur));

    SchurExpansion bad = schur;
    bad.coefficients[Partition{3}] += 1;
    out.expect(!verify_hirota(6, bad).passed(), "Hirota misses the perturbed s_(3)");
    bool seen = false;
    for (int n = -1; n <= 2; ++n) seen |= !verify_virasoro_bosonic(n, 9, bad).passed();
    out.expect(seen, "no Virasoro operator notices the perturbed s_(3)");

    CoordTable broken = open_table(43);
    broken.set(2, 9, broken.at(2, 9) + 1);
    bool caught = false;
    for (int n = -1; n <= 5; ++n) caught |= !verify_virasoro_recursion(n, 30, broken).passed();
    out.expect(caught, "recursion misses the perturbed a(2,9)");
    broken.set(3, 3, 1);
    out.expect(!verify_mod3(broken).passed(), "mod-3 check misses a(3,3) = 1");
    CoordTable skewed = open_table(34);
    skewed.set(5, 6, skewed.at(5, 6) + 1);
    VerificationReport sym = verify_symmetry(5, skewed, wk_table(34));
    out.expect(!sym.passed() && sym.violations.front().where.find("(p,q)=") != std::string::npos,
               "symmetry check misses a(5,6) + 1");

    CoordTable shifted = open_table(20);
    shifted.set(0, 2, shifted.at(0, 2) + 1);
    NPointSeries g1 = connected_npoint_from_table(shifted, 1, 20);
    out.expect(!compare_npoint("one-point", g1, onepoint_closed(20)).passed(), "one-point comparison misses a(0,2) + 1");
  });
  return print(10, "Virasoro and Hirota verifiers with negative controls", out, s, 300);
}

}  // namespace

int main() {
  bool ok = true;
  const std::vector<bool (*)()> criteria = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                            criterion6, criterion7, criterion8, criterion9, criterion10};
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    try {
      ok = criteria[i]() && ok;
    } catch (const std::exception& e) {
      std::cout << "FAIL " << i + 1 << " (exception: " << e.what() << ")\n";
      ok = false;
    }
  }
  std::cout << (ok ? "all criteria passed" : "some criteria failed") << "\n";
  return ok ? 0 : 1;
}
