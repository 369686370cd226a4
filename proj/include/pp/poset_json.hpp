#pragma once

#include <string>

#include "json.hpp"
#include "pp/poset.hpp"

namespace pp {

// Poset wire format: {"n": 3, "covers": [[1,3],[2,3]]} with 1-based labels.
// The listed pairs may be any strict relations; they are closed and reduced.
// Malformed input throws std::invalid_argument with a readable message.
Poset poset_from_json(const nlohmann::json& j);
Poset poset_from_json_text(const std::string& text);
nlohmann::ordered_json poset_to_json(const Poset& p);

}  // namespace pp
