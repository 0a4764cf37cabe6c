#include "state_json.hpp"

#include <stdexcept>

namespace sl21::cli {

json element_to_json(const Element& e) {
  json terms = json::array();
  for (const auto& [w, c] : e.terms()) {
    json modes = json::array();
    for (const auto& m : w) modes.push_back({std::string(name(m.gen)), m.n});
    terms.push_back({{"coeff", to_string(c)}, {"modes", std::move(modes)}});
  }
  return terms;
}

Element element_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("terms must be an array");
  Element e;
  for (const auto& t : j) {
    const Rational c = parse_rational(t.at("coeff").get<std::string>());
    Monomial w;
    for (const auto& m : t.at("modes")) {
      if (!m.is_array() || m.size() != 2) throw std::invalid_argument("a mode is a [generator, n] pair");
      const std::string g = m[0].get<std::string>();
      const auto gen = generator_from_name(g);
      if (!gen) throw std::invalid_argument("unknown generator '" + g + "'");
      w.push_back({*gen, m[1].get<int>()});
    }
    e.add(w, c);
  }
  return e;
}

json weight_to_json(const Weight& w) {
  return {{"w1", to_string(w.w1)}, {"w2", to_string(w.w2)}, {"degree", w.degree}};
}

json state_to_json(const SavedState& s) {
  return {{"schema", kStateSchema}, {"level", to_string(s.level.k)}, {"terms", element_to_json(s.state)}};
}

SavedState state_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("state file must hold a JSON object");
  const int schema = j.at("schema").get<int>();
  if (schema != kStateSchema)
    throw std::invalid_argument("unsupported state schema " + std::to_string(schema) + " (expected " + std::to_string(kStateSchema) + ")");
  return {Level{parse_rational(j.at("level").get<std::string>())}, element_from_json(j.at("terms"))};
}

}  // namespace sl21::cli
