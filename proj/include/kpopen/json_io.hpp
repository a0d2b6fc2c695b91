#pragma once

#include <json.hpp>
#include <string>

#include "kpopen/npoint.hpp"
#include "kpopen/report.hpp"
#include "kpopen/series.hpp"
#include "kpopen/tau.hpp"
#include "kpopen/weighted.hpp"
#include "kpopen/wk.hpp"

namespace kpo {

using Json = nlohmann::ordered_json;

// Bumped whenever a cached table could differ from a fresh computation.
inline constexpr int kCacheVersion = 1;

// {"vars":[..],"scale":s,"complete_from":f,"terms":[{"e":[..],"c":"p/q"},..]}
Json series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const Json& j);

Json table_to_json(const CoordTable& t);
// Throws std::runtime_error on a version mismatch or malformed input.
CoordTable table_from_json(const Json& j);
std::string table_to_csv(const CoordTable& t);

Json npoint_to_json(const NPointSeries& g);
std::string npoint_to_csv(const NPointSeries& g);

Json schur_to_json(const SchurExpansion& s);
Json polynomial_to_json(const WeightedPolynomial& p);

Json report_to_json(const VerificationReport& r);

}  // namespace kpo
