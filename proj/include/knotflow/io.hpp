#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "knotflow/diagram.hpp"
#include "knotflow/errors.hpp"

namespace knotflow {

// Diagram JSON schema:
//   {"components": [[arc,...],...],
//    "crossings": [{"id":int,"under_in":int,"under_out":int,
//                   "over_in":int,"over_out":int,"sign":+-1},...],
//    "free_circles": n}           // optional shorthand for n more [] entries
inline LinkDiagram parse_diagram(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput(std::string("diagram JSON: ") + e.what());
  }
  if (!j.is_object()) throw MalformedInput("diagram JSON root must be an object");
  if (!j.contains("components") || !j["components"].is_array())
    throw MalformedInput("diagram JSON needs a \"components\" array");

  std::vector<std::vector<int>> components;
  for (const auto& comp : j["components"]) {
    if (!comp.is_array()) throw MalformedInput("each component must be an array of arcs");
    std::vector<int> arcs;
    for (const auto& a : comp) {
      if (!a.is_number_integer()) throw MalformedInput("arc labels must be integers");
      arcs.push_back(a.get<int>());
    }
    components.push_back(std::move(arcs));
  }
  if (j.contains("free_circles")) {
    if (!j["free_circles"].is_number_integer() || j["free_circles"].get<int>() < 0)
      throw MalformedInput("\"free_circles\" must be a non-negative integer");
    for (int i = 0; i < j["free_circles"].get<int>(); ++i) components.push_back({});
  }

  std::vector<Crossing> crossings;
  if (j.contains("crossings")) {
    if (!j["crossings"].is_array()) throw MalformedInput("\"crossings\" must be an array");
    for (const auto& cj : j["crossings"]) {
      if (!cj.is_object()) throw MalformedInput("each crossing must be an object");
      Crossing x;
      auto need_int = [&cj](const char* field) {
        if (!cj.contains(field) || !cj[field].is_number_integer())
          throw MalformedInput(std::string("crossing needs integer field \"") + field +
                               "\"");
        return cj[field].get<int>();
      };
      x.id = need_int("id");
      x.under_in = need_int("under_in");
      x.under_out = need_int("under_out");
      x.over_in = need_int("over_in");
      x.over_out = need_int("over_out");
      x.sign = need_int("sign");
      crossings.push_back(x);
    }
  }
  return LinkDiagram(std::move(crossings), std::move(components));
}

inline nlohmann::ordered_json diagram_to_json(const LinkDiagram& d) {
  nlohmann::ordered_json j;
  j["components"] = nlohmann::ordered_json::array();
  for (const auto& comp : d.components()) j["components"].push_back(comp);
  j["crossings"] = nlohmann::ordered_json::array();
  for (const auto& x : d.crossings()) {
    nlohmann::ordered_json cj;
    cj["id"] = x.id;
    cj["under_in"] = x.under_in;
    cj["under_out"] = x.under_out;
    cj["over_in"] = x.over_in;
    cj["over_out"] = x.over_out;
    cj["sign"] = x.sign;
    j["crossings"].push_back(cj);
  }
  return j;
}

inline std::string serialize_diagram(const LinkDiagram& d) {
  return diagram_to_json(d).dump(2);
}

}  // namespace knotflow
