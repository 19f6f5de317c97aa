#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "trainlab/spherical.hpp"
#include "trainlab/verify.hpp"

namespace trainlab {

using json = nlohmann::ordered_json;

/// Reads and parses a file. Throws ParseError.
json load_json(const std::string& path);

/// "0" expands to p zeros; otherwise comma-separated integers.
MultiIndex parse_multi_index(const std::string& text, int p);
MultiIndex multi_index_from_json(const json& j);

PairConfig config_from_json(const json& j);
/// Optional "dims" of a config document (default representation sizes),
/// else 2 per color.
std::vector<int> config_dims(const json& j, const PairConfig& cfg);
json to_json(const PairConfig& cfg);

GroundPoint point_from_json(const json& j);
json to_json(const GroundPoint& pt);

GroupElement element_from_json(const json& j);
json to_json(const GroupElement& g);

/// Vertex slots are {"v": i}, tag slots {"t": i}, indices into the
/// component's vertex and tag lists. Validated and canonicalized.
Morphism morphism_from_json(const PairConfig& cfg, const json& j);
json to_json(const Morphism& m);

RepParams rep_from_json(const PairConfig& cfg, const json& j);
json to_json(const RepParams& rp);

json to_json(cd z);
json to_json(const Mat& m);
json to_json(const SphericalValue& v);
json to_json(const SurfaceComplex& s);
json to_json(const BelyiData& b);
json to_json(const std::vector<CheckResult>& report);

}  // namespace trainlab
