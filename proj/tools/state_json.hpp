#pragma once

#include <json.hpp>

#include "sl21/affine_env.hpp"
#include "sl21/vacuum_module.hpp"

namespace sl21::cli {

using json = nlohmann::json;

inline constexpr int kStateSchema = 1;

/// [{"coeff": "p/q", "modes": [["e12", -2], ...]}, ...] in storage order.
json element_to_json(const Element& e);
Element element_from_json(const json& j);

json weight_to_json(const Weight& w);

struct SavedState {
  Level level;
  State state;
};

/// {"schema": 1, "level": "p/q", "terms": [...]}
json state_to_json(const SavedState& s);
SavedState state_from_json(const json& j);

}  // namespace sl21::cli
