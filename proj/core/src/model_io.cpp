#include "epi/model_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace epi {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_json(const std::string& text, const std::string& origin) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw SchemaError(origin, "invalid JSON");
  if (!doc.is_object()) throw SchemaError(origin, "top level must be an object");
  return doc;
}

std::vector<std::string> string_list(const json& node,
                                     const std::string& location) {
  if (!node.is_array()) throw SchemaError(location, "expected an array");
  std::vector<std::string> out;
  for (const auto& item : node) {
    if (!item.is_string())
      throw SchemaError(location, "expected an array of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

Event event_from_json(const SpacePtr& space, const json& node,
                      const std::string& location) {
  try {
    return Event::from_names(space, string_list(node, location));
  } catch (const UnknownLabel& e) {
    throw SchemaError(location, e.what());
  }
}

KnowledgeOperator operator_from_json(const SpacePtr& space, const json& node,
                                     const std::string& location) {
  if (!node.is_object())
    throw SchemaError(location, "expected {\"table\": ...} or "
                                "{\"neighborhoods\": ...}");
  if (node.contains("table")) {
    const auto& rows = node["table"];
    if (!rows.is_array())
      throw SchemaError(location + ".table", "expected an array");
    std::vector<Event> images;
    for (std::size_t i = 0; i < rows.size(); ++i)
      images.push_back(event_from_json(
          space, rows[i], location + ".table[" + std::to_string(i) + "]"));
    try {
      return KnowledgeOperator::from_table(space, std::move(images));
    } catch (const WrongArity& e) {
      throw SchemaError(location + ".table", e.what());
    }
  }
  if (node.contains("neighborhoods")) {
    const auto& per_state = node["neighborhoods"];
    if (!per_state.is_object())
      throw SchemaError(location + ".neighborhoods", "expected an object");
    NeighborhoodSystem ns;
    ns.space = space;
    ns.minimal.resize(space->size());
    for (const auto& [label, family] : per_state.items()) {
      auto idx = space->index_of(label);
      if (!idx)
        throw SchemaError(location + ".neighborhoods",
                          "unknown state \"" + label + "\"");
      if (!family.is_array())
        throw SchemaError(location + ".neighborhoods." + label,
                          "expected an array of events");
      for (std::size_t i = 0; i < family.size(); ++i)
        ns.minimal[*idx].push_back(
            event_from_json(space, family[i],
                            location + ".neighborhoods." + label + "[" +
                                std::to_string(i) + "]")
                .mask());
    }
    return from_neighborhoods(ns);
  }
  throw SchemaError(location,
                    "operator needs a \"table\" or \"neighborhoods\" key");
}

SpacePtr space_from_json(const json& doc, const std::string& origin) {
  if (!doc.contains("states"))
    throw SchemaError(origin, "missing \"states\"");
  try {
    return StateSpace::make(string_list(doc["states"], origin + ".states"));
  } catch (const Error& e) {
    throw SchemaError(origin + ".states", e.what());
  }
}

}  // namespace

ModelFile parse_model(const std::string& json_text,
                      const std::string& origin) {
  const json doc = parse_json(json_text, origin);
  ModelFile out;
  out.model.space = space_from_json(doc, origin);
  const SpacePtr& space = out.model.space;

  if (doc.contains("events")) {
    const auto& events = doc["events"];
    if (!events.is_object())
      throw SchemaError(origin + ".events", "expected an object");
    for (const auto& [name, states] : events.items()) {
      if (!is_valid_identifier(name))
        throw SchemaError(origin + ".events",
                          "\"" + name + "\" is not a usable event name");
      out.model.events.emplace(
          name, event_from_json(space, states, origin + ".events." + name));
    }
  }

  const bool single = doc.contains("operator");
  const bool staged = doc.contains("operators");
  if (single == staged)
    throw SchemaError(origin,
                      "exactly one of \"operator\" and \"operators\" required");
  if (single) {
    out.model.operators.emplace(
        -1, operator_from_json(space, doc["operator"], origin + ".operator"));
  } else {
    const auto& ops = doc["operators"];
    if (!ops.is_object())
      throw SchemaError(origin + ".operators", "expected an object");
    for (const auto& [key, spec] : ops.items()) {
      if (key.size() != 2 || key[0] != 'K' || !std::isdigit(key[1]))
        throw SchemaError(origin + ".operators",
                          "operator keys must be K0..K9, got \"" + key + "\"");
      out.model.operators.emplace(
          key[1] - '0',
          operator_from_json(space, spec, origin + ".operators." + key));
    }
    if (out.model.operators.empty())
      throw SchemaError(origin + ".operators", "at least one operator needed");
  }

  if (doc.contains("assertions"))
    out.assertions = string_list(doc["assertions"], origin + ".assertions");
  return out;
}

ModelFile load_model(const std::string& path) {
  return parse_model(read_file(path), path);
}

ScenarioFile parse_scenario(const std::string& json_text,
                            const std::string& origin) {
  const json doc = parse_json(json_text, origin);
  SpacePtr space = space_from_json(doc, origin);
  if (!doc.contains("k0")) throw SchemaError(origin, "missing \"k0\"");
  KnowledgeOperator k0 =
      operator_from_json(space, doc["k0"], origin + ".k0");

  std::vector<LearningFact> facts;
  if (!doc.contains("facts") || !doc["facts"].is_array())
    throw SchemaError(origin, "missing \"facts\" array");
  const auto& fact_nodes = doc["facts"];
  for (std::size_t i = 0; i < fact_nodes.size(); ++i) {
    const auto& node = fact_nodes[i];
    const std::string loc = origin + ".facts[" + std::to_string(i) + "]";
    if (!node.is_object() || !node.contains("event"))
      throw SchemaError(loc, "expected {\"event\": [...], \"learned\": [...]}");
    Event event = event_from_json(space, node["event"], loc + ".event");
    // "learned" defaults to the full event.
    Event learned = node.contains("learned")
                        ? event_from_json(space, node["learned"],
                                          loc + ".learned")
                        : event;
    LearningFact fact{std::move(event), std::move(learned)};
    try {
      fact.validate();
    } catch (const Error& e) {
      throw SchemaError(loc, e.what());
    }
    facts.push_back(std::move(fact));
  }

  ScenarioFile out{std::move(space), std::move(k0), std::move(facts), {}};
  if (doc.contains("assertions"))
    out.assertions = string_list(doc["assertions"], origin + ".assertions");
  return out;
}

ScenarioFile load_scenario(const std::string& path) {
  return parse_scenario(read_file(path), path);
}

}  // namespace epi
