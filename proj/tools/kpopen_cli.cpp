#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "kpopen/json_io.hpp"
#include "kpopen/npoint.hpp"
#include "kpopen/open.hpp"
#include "kpopen/tau.hpp"

namespace fs = std::filesystem;
using namespace kpo;

namespace {

struct RunConfig {
  std::string format = "pretty";
  std::string output;
  std::string cache_dir;
  bool no_cache = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<fs::path> cache_root(const RunConfig& cfg) {
  if (cfg.no_cache) return std::nullopt;
  if (!cfg.cache_dir.empty()) return fs::path(cfg.cache_dir);
  if (const char* env = std::getenv("KPOPEN_CACHE_DIR"); env && *env) return fs::path(env);
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "kpopen";
  return std::nullopt;
}

CoordTable compute_table(CoordKind kind, int weight, CoordRoute route) {
  if (kind == CoordKind::wk) return route == CoordRoute::recursion ? wk_table_recursive(weight) : wk_table(weight);
  return route == CoordRoute::recursion ? open_coord_recursive(weight) : open_table(weight);
}

CoordTable load_table(const RunConfig& cfg, CoordKind kind, int weight, CoordRoute route = CoordRoute::closed_form) {
  auto root = cache_root(cfg);
  if (!root) return compute_table(kind, weight, route);
  fs::path file = *root / (to_string(kind) + "-" + to_string(route) + "-" + std::to_string(weight) + ".json");
  if (fs::exists(file)) {
    try {
      std::ifstream in(file);
      Json j = Json::parse(in);
      CoordTable t = table_from_json(j);
      if (t.max_weight() == weight && t.kind() == kind && t.route() == route) return t;
    } catch (const std::exception&) {
      // Stale or damaged entry; recomputed below.
    }
  }
  CoordTable t = compute_table(kind, weight, route);
  std::error_code ec;
  fs::create_directories(*root, ec);
  if (!ec) {
    fs::path tmp = file;
    tmp += ".tmp";
    {
      std::ofstream out(tmp);
      out << table_to_json(t).dump() << "\n";
    }
    fs::rename(tmp, file, ec);
  }
  return t;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw std::runtime_error("cannot write " + cfg.output);
  out << text;
}

std::string pretty_report(const VerificationReport& r) {
  std::ostringstream os;
  os << (r.passed() ? "PASS " : "FAIL ") << r.suite << " [" << r.range << "] checked " << r.checked << "\n";
  for (const auto& v : r.violations) os << "  " << v.where << ": expected " << v.expected << ", got " << v.actual << "\n";
  return os.str();
}

std::string pretty_series(const TruncatedSeries& s) {
  std::ostringstream os;
  for (const auto& [e, c] : s.terms()) {
    os << to_string(c);
    for (std::size_t i = 0; i < e.size(); ++i) os << " " << s.vars()[i] << "^" << format_exponent(e[i], s.scale());
    os << "\n";
  }
  return os.str();
}

// ---- subcommands -----------------------------------------------------------

int run_coords(const RunConfig& cfg, const std::string& kind_name, std::optional<int> n, std::optional<int> m,
               std::optional<int> grid, const std::string& route_name) {
  const CoordKind kind = kind_name == "wk" ? CoordKind::wk : CoordKind::open;
  const CoordRoute route = route_name == "recursion" ? CoordRoute::recursion : CoordRoute::closed_form;
  if (grid) {
    if (n || m) throw UsageError("--grid excludes --n/--m");
    CoordTable t = load_table(cfg, kind, *grid, route);
    if (cfg.format == "csv")
      emit(cfg, table_to_csv(t));
    else if (cfg.format == "json")
      emit(cfg, table_to_json(t).dump() + "\n");
    else {
      std::ostringstream os;
      for (int w = 0; w <= t.max_weight(); ++w)
        for (int i = 0; i <= w; ++i) os << "a(" << i << "," << w - i << ") = " << to_string(t.at(i, w - i)) << "\n";
      emit(cfg, os.str());
    }
    return 0;
  }
  if (!n || !m) throw UsageError("coords needs --n and --m, or --grid");
  Rational v;
  if (route == CoordRoute::recursion)
    v = load_table(cfg, kind, *n + *m, route).at(*n, *m);
  else
    v = kind == CoordKind::wk ? wk_coord(*n, *m) : open_coord(*n, *m);
  if (cfg.format == "json")
    emit(cfg, Json{{"kind", kind_name}, {"n", *n}, {"m", *m}, {"c", to_string(v)}}.dump() + "\n");
  else
    emit(cfg, to_string(v) + "\n");
  return 0;
}

int run_series(const RunConfig& cfg, const std::string& which, int depth) {
  TruncatedSeries s;
  if (which == "a")
    s = faber_zagier(FZSeries::a, depth);
  else if (which == "b")
    s = faber_zagier(FZSeries::b, depth);
  else if (which == "c")
    s = c_series(depth);
  else if (which == "ao-gen")
    s = open_generating(depth);
  else
    s = wk_generating(depth);
  emit(cfg, cfg.format == "json" ? series_to_json(s).dump() + "\n" : pretty_series(s));
  return 0;
}

int run_npoint(const RunConfig& cfg, const std::string& kind_name, int points, int degree) {
  const NPointKind kind = kind_name == "wk" ? NPointKind::wk : kind_name == "ext" ? NPointKind::ext : NPointKind::open;
  NPointSeries g;
  if (kind == NPointKind::ext) {
    NPointSeries o = connected_npoint_from_table(load_table(cfg, CoordKind::open, degree), points, degree);
    NPointSeries w = connected_npoint_from_table(load_table(cfg, CoordKind::wk, degree), points, degree);
    g = {points, kind, degree, o.series - w.series};
  } else {
    g = connected_npoint_from_table(
        load_table(cfg, kind == NPointKind::wk ? CoordKind::wk : CoordKind::open, degree), points, degree);
  }
  if (cfg.format == "csv")
    emit(cfg, npoint_to_csv(g));
  else if (cfg.format == "json")
    emit(cfg, npoint_to_json(g).dump() + "\n");
  else
    emit(cfg, pretty_series(g.series));
  return 0;
}

std::string pretty_polynomial(const WeightedPolynomial& p) {
  std::ostringstream os;
  for (const auto& [e, c] : p.terms()) os << to_string(c) << " " << p.monomial_name(e) << "\n";
  return os.str();
}

int run_tau(const RunConfig& cfg, int weight, const std::string& basis, bool log) {
  CoordTable table = load_table(cfg, CoordKind::open, std::max(weight, 1));
  if (basis == "schur") {
    if (log) throw UsageError("free-energy takes --basis T or ts");
    SchurExpansion s = schur_expansion(weight, table);
    if (cfg.format == "json") {
      emit(cfg, schur_to_json(s).dump() + "\n");
    } else {
      std::ostringstream os;
      for (int w = 0; w <= weight; ++w)
        for (const Partition& mu : partitions_of(w))
          if (s.coeff(mu) != 0) os << to_string(s.coeff(mu)) << " s" << mu.str() << "\n";
      emit(cfg, os.str());
    }
    return 0;
  }
  const TimeFamily family = basis == "ts" ? TimeFamily::ts : TimeFamily::T;
  if (log && weight < 1) throw UsageError("free-energy needs --max-weight >= 1");
  WeightedPolynomial p = log ? free_energy(weight, family, table) : tau_expansion(weight, family, table);
  emit(cfg, cfg.format == "json" ? polynomial_to_json(p).dump() + "\n" : pretty_polynomial(p));
  return 0;
}

std::vector<VerificationReport> suite_reports(const RunConfig& cfg, const std::string& suite, std::optional<int> max) {
  std::vector<VerificationReport> out;
  auto want = [&](const char* name) { return suite == "all" || suite == name; };
  auto K = [&](int fallback) { return max.value_or(fallback); };
  if (want("recursion")) {
    const int top = K(5), w = 30;
    CoordTable t = load_table(cfg, CoordKind::open, w + 2 * top + 3);
    for (int n = -1; n <= top; ++n) out.push_back(verify_virasoro_recursion(n, w, t));
    out.push_back(verify_mod3(t));
    out.push_back(verify_row0_recursion(t));
    out.push_back(compare_tables("open closed form vs recursion", t,
                                 load_table(cfg, CoordKind::open, t.max_weight(), CoordRoute::recursion)));
    out.push_back(compare_tables("wk closed form vs recursion", load_table(cfg, CoordKind::wk, t.max_weight()),
                                 load_table(cfg, CoordKind::wk, t.max_weight(), CoordRoute::recursion)));
  }
  if (want("linear")) {
    const int top = K(6);
    CoordTable t = load_table(cfg, CoordKind::open, 2 * top + 2);
    for (int n = -1; n <= top; ++n) out.push_back(verify_linear_constraint(n, t));
  }
  if (want("symmetry")) {
    const int pq = K(5);
    const int w = 6 * pq + 4;
    out.push_back(verify_symmetry(pq, load_table(cfg, CoordKind::open, w), load_table(cfg, CoordKind::wk, w)));
  }
  if (want("ks")) out.push_back(verify_ks_relations(std::max(K(30), 4)));
  if (want("virasoro")) {
    const int w = K(9);
    SchurExpansion s = schur_expansion(w + 7, load_table(cfg, CoordKind::open, w + 7));
    for (int n = -1; n <= 2; ++n) out.push_back(verify_virasoro_bosonic(n, w, s));
  }
  if (want("hirota")) {
    const int w = std::max(K(6), 2);
    out.push_back(verify_hirota(w, load_table(cfg, CoordKind::open, w + 1)));
  }
  if (want("npoint-routes")) {
    const int d = std::max(K(18), 6);
    CoordTable open = load_table(cfg, CoordKind::open, d);
    CoordTable wk = load_table(cfg, CoordKind::wk, d);
    NPointSeries cyc[4];
    for (int n = 1; n <= 3; ++n) {
      cyc[n] = connected_npoint_from_table(open, n, d);
      out.push_back(check_npoint_invariants(cyc[n]));
    }
    out.push_back(compare_npoint("one-point cycle vs closed", cyc[1], onepoint_closed(d)));
    out.push_back(compare_npoint("one-point cycle vs derivative form", cyc[1], onepoint_derivative_form(d)));
    out.push_back(compare_npoint("two-point cycle vs closed", cyc[2], twopoint_closed(d)));
    out.push_back(compare_npoint("three-point cycle vs closed", cyc[3], threepoint_closed(d)));
    for (int n = 1; n <= 3; ++n) {
      NPointSeries w = connected_npoint_from_table(wk, n, d);
      NPointSeries ext{n, NPointKind::ext, d, cyc[n].series - w.series};
      out.push_back(compare_npoint("extended " + std::to_string(n) + "-point cycle vs closed", ext, ext_correlator(n, d)));
    }
  }
  return out;
}

int run_verify(const RunConfig& cfg, const std::string& suite, std::optional<int> max) {
  std::vector<VerificationReport> reports = suite_reports(cfg, suite, max);
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed();
  if (cfg.format == "json") {
    Json j = Json::array();
    for (const auto& r : reports) j.push_back(report_to_json(r));
    emit(cfg, j.dump() + "\n");
  } else {
    std::string text;
    for (const auto& r : reports) text += pretty_report(r);
    text += ok ? "all suites passed\n" : "verification failed\n";
    emit(cfg, text);
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Affine coordinates, n-point functions and tau-function of open intersection numbers"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"pretty", "json", "csv"}));
  app.add_option("-o,--output", cfg.output, "Write output to this file");
  app.add_option("--cache-dir", cfg.cache_dir, "Table cache directory (default $KPOPEN_CACHE_DIR, then ~/.cache/kpopen)");
  app.add_flag("--no-cache", cfg.no_cache, "Neither read nor write the table cache");

  std::string kind_name, which, basis = "T", route = "closed";
  std::optional<int> n, m, grid, max;
  int depth = 0, points = 0, degree = 0, weight = 0;
  std::string suite;

  auto* coords = app.add_subcommand("coords", "Affine coordinates a_{n,m}");
  coords->add_option("kind", kind_name)->required()->check(CLI::IsMember({"wk", "open"}));
  coords->add_option("--n", n)->check(CLI::NonNegativeNumber);
  coords->add_option("--m", m)->check(CLI::NonNegativeNumber);
  coords->add_option("--grid", grid, "All entries with n + m <= W")->check(CLI::NonNegativeNumber);
  coords->add_option("--route", route)->check(CLI::IsMember({"closed", "recursion"}));

  auto* series = app.add_subcommand("series", "Generating series");
  series->add_option("which", which)->required()->check(CLI::IsMember({"a", "b", "c", "ao-gen", "wk-gen"}));
  series->add_option("--depth", depth)->required()->check(CLI::NonNegativeNumber);

  auto* npoint = app.add_subcommand("npoint", "Connected n-point function");
  npoint->add_option("--kind", kind_name)->required()->check(CLI::IsMember({"open", "wk", "ext"}));
  npoint->add_option("--points", points)->required()->check(CLI::Range(1, 8));
  npoint->add_option("--degree", degree)->required()->check(CLI::NonNegativeNumber);

  auto* tau = app.add_subcommand("tau", "Tau-function expansion");
  tau->add_option("--max-weight", weight)->required()->check(CLI::NonNegativeNumber);
  tau->add_option("--basis", basis)->check(CLI::IsMember({"schur", "T", "ts"}));

  auto* fe = app.add_subcommand("free-energy", "Logarithm of the tau-function");
  fe->add_option("--max-weight", weight)->required()->check(CLI::PositiveNumber);
  fe->add_option("--basis", basis)->check(CLI::IsMember({"T", "ts"}));

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", suite)
      ->required()
      ->check(CLI::IsMember({"all", "recursion", "linear", "symmetry", "ks", "virasoro", "hirota", "npoint-routes"}));
  verify->add_option("--max", max, "Suite size parameter")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (coords->parsed()) return run_coords(cfg, kind_name, n, m, grid, route);
    if (series->parsed()) {
      if ((which == "ao-gen" || which == "wk-gen") && depth < 2) throw UsageError("generating series need --depth >= 2");
      return run_series(cfg, which, depth);
    }
    if (npoint->parsed()) {
      if (degree < 2 * points) throw UsageError("--degree must be at least 2 * --points");
      return run_npoint(cfg, kind_name, points, degree);
    }
    if (tau->parsed()) return run_tau(cfg, weight, basis, false);
    if (fe->parsed()) return run_tau(cfg, weight, basis, true);
    if (verify->parsed()) return run_verify(cfg, suite, max);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
