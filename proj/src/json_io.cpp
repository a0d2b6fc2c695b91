#include "kpopen/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace kpo {

Json series_to_json(const TruncatedSeries& s) {
  Json j;
  j["vars"] = s.vars();
  j["scale"] = s.scale();
  if (!s.is_exact()) j["complete_from"] = s.total_floor();
  Json terms = Json::array();
  for (const auto& [e, c] : s.terms()) terms.push_back(Json{{"e", e}, {"c", to_string(c)}});
  j["terms"] = terms;
  return j;
}

TruncatedSeries series_from_json(const Json& j) {
  TruncatedSeries s(j.at("vars").get<std::vector<std::string>>(), j.at("scale").get<int>());
  std::vector<long> upper(s.nvars(), kNegInf);
  for (const auto& t : j.at("terms")) {
    auto e = t.at("e").get<TruncatedSeries::Exponent>();
    if (e.size() != s.nvars()) throw std::runtime_error("exponent arity does not match vars");
    for (std::size_t i = 0; i < e.size(); ++i) upper[i] = std::max<long>(upper[i], e[i]);
    s.add_term(e, parse_rational(t.at("c").get<std::string>()));
  }
  if (j.contains("complete_from")) {
    for (auto& u : upper)
      if (u == kNegInf) u = 0;
    s.set_upper(upper);
    s.truncate_total(j.at("complete_from").get<long>());
  }
  return s;
}

Json table_to_json(const CoordTable& t) {
  Json j;
  j["version"] = kCacheVersion;
  j["kind"] = to_string(t.kind());
  j["max_weight"] = t.max_weight();
  j["route"] = to_string(t.route());
  Json rows = Json::array();
  for (int n = 0; n <= t.max_weight(); ++n) {
    Json row = Json::array();
    for (int m = 0; n + m <= t.max_weight(); ++m)
      row.push_back(t.filled(n, m) ? Json(to_string(t.at(n, m))) : Json(nullptr));
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j;
}

CoordTable table_from_json(const Json& j) {
  if (!j.contains("version") || j.at("version").get<int>() != kCacheVersion)
    throw std::runtime_error("table version mismatch");
  const std::string kind = j.at("kind").get<std::string>();
  const std::string route = j.at("route").get<std::string>();
  if ((kind != "wk" && kind != "open") || (route != "closed_form" && route != "recursion"))
    throw std::runtime_error("unknown table kind or route");
  CoordTable t(kind == "wk" ? CoordKind::wk : CoordKind::open, j.at("max_weight").get<int>(),
               route == "recursion" ? CoordRoute::recursion : CoordRoute::closed_form);
  const Json& rows = j.at("rows");
  if (static_cast<int>(rows.size()) != t.max_weight() + 1) throw std::runtime_error("table has wrong row count");
  for (int n = 0; n <= t.max_weight(); ++n) {
    const Json& row = rows.at(n);
    if (static_cast<int>(row.size()) != t.max_weight() - n + 1) throw std::runtime_error("table row has wrong length");
    for (int m = 0; n + m <= t.max_weight(); ++m)
      if (!row.at(m).is_null()) t.set(n, m, parse_rational(row.at(m).get<std::string>()));
  }
  return t;
}

std::string table_to_csv(const CoordTable& t) {
  std::ostringstream os;
  os << "n,m,a\n";
  for (int w = 0; w <= t.max_weight(); ++w)
    for (int n = 0; n <= w; ++n)
      if (t.filled(n, w - n)) os << n << "," << w - n << "," << to_string(t.at(n, w - n)) << "\n";
  return os.str();
}

Json npoint_to_json(const NPointSeries& g) {
  Json j;
  j["kind"] = to_string(g.kind);
  j["points"] = g.n;
  j["degree"] = g.degree_bound;
  Json terms = Json::array();
  for (const auto& [e, c] : g.series.terms()) terms.push_back(Json{{"e", e}, {"c", to_string(c)}});
  j["terms"] = terms;
  return j;
}

std::string npoint_to_csv(const NPointSeries& g) {
  std::ostringstream os;
  for (int i = 1; i <= g.n; ++i) os << "j" << i << ",";
  os << "c\n";
  for (const auto& [e, c] : g.series.terms()) {
    for (int x : e) os << -x - 1 << ",";
    os << to_string(c) << "\n";
  }
  return os.str();
}

Json schur_to_json(const SchurExpansion& s) {
  Json j;
  j["basis"] = "schur";
  j["max_weight"] = s.max_size;
  Json terms = Json::array();
  for (int w = 0; w <= s.max_size; ++w)
    for (const Partition& mu : partitions_of(w)) {
      auto it = s.coefficients.find(mu);
      if (it != s.coefficients.end()) terms.push_back(Json{{"partition", mu.parts()}, {"c", to_string(it->second)}});
    }
  j["terms"] = terms;
  return j;
}

Json polynomial_to_json(const WeightedPolynomial& p) {
  Json j;
  j["basis"] = to_string(p.family());
  j["max_weight"] = p.max_weight();
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back(Json{{"e", e}, {"monomial", p.monomial_name(e)}, {"c", to_string(c)}});
  j["terms"] = terms;
  return j;
}

Json report_to_json(const VerificationReport& r) {
  Json j;
  j["suite"] = r.suite;
  j["range"] = r.range;
  j["checked"] = r.checked;
  j["passed"] = r.passed();
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back(Json{{"where", x.where}, {"expected", x.expected}, {"actual", x.actual}});
  j["violations"] = v;
  return j;
}

}  // namespace kpo
