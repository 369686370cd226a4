#include "pp/poset_json.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace pp {

Poset poset_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw std::invalid_argument("poset JSON needs an integer field \"n\"");
  int n = j["n"].get<int>();
  std::vector<std::pair<int, int>> relations;
  if (j.contains("covers")) {
    if (!j["covers"].is_array())
      throw std::invalid_argument("\"covers\" must be an array of [a,b] pairs");
    for (const auto& e : j["covers"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer())
        throw std::invalid_argument("\"covers\" entries must be integer pairs [a,b]");
      relations.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  }
  return validate(n, relations);
}

Poset poset_from_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("malformed JSON");
  return poset_from_json(j);
}

nlohmann::ordered_json poset_to_json(const Poset& p) {
  nlohmann::ordered_json j;
  j["n"] = p.n;
  auto covers = nlohmann::ordered_json::array();
  for (const auto& [a, b] : p.covers) covers.push_back({a + 1, b + 1});
  j["covers"] = std::move(covers);
  return j;
}

}  // namespace pp
