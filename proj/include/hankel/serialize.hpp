#pragma once

#include <json.hpp>

#include "hankel/poly.hpp"
#include "hankel/series.hpp"

namespace hankel {

using Json = nlohmann::json;

Json to_json(const Rat& r);  // "p/q" or "p"
Rat rat_from_json(const Json& j);
Json to_json(const Poly& p);  // ["c0", "c1", ...]
Poly poly_from_json(const Json& j);
Json to_json(const SeriesYX& s);  // {"order": k, "coeffs": [Poly...]}
SeriesYX series_from_json(const Json& j);

}  // namespace hankel
