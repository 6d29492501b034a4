#pragma once

#include <json.hpp>

#include "icosa/bipoly.hpp"
#include "icosa/frobsim.hpp"

namespace icosa {

using ordered_json = nlohmann::ordered_json;

// {"a": "<int>", "b": "<int>", "den": "<int>"} with decimal strings, so
// arbitrary-precision values survive the trip.
ordered_json golden_to_json(const GoldenRational& u);
GoldenRational golden_from_json(const nlohmann::json& j);

// [{"i": ..., "j": ..., "c": {...}}, ...] in ascending key order.
ordered_json bipoly_to_json(const BiPoly& f);
BiPoly bipoly_from_json(const nlohmann::json& j);

ordered_json report_to_json(const SimReport& rep);

}  // namespace icosa
