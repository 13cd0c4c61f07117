#pragma once

#include <json.hpp>

#include "multider/arrangement.hpp"

namespace multider {

// {"variables": [...], "hyperplanes": [{"form": [...], "multiplicity": n}, ...]}
nlohmann::json to_json(const Multiarrangement& ma);
Multiarrangement multiarrangement_from_json(const nlohmann::json& j);

nlohmann::json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const nlohmann::json& j);

}  // namespace multider
