#include "blocklie/config.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "blocklie/errors.hpp"

namespace blocklie {

using nlohmann::json;

namespace {

FieldElement scalar_field(const json& j, const std::vector<std::string>* names) {
  if (j.is_number_integer()) return FieldElement(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return parse_scalar(j.get<std::string>(), names);
  throw ConfigError("scalar must be a string or an integer");
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
}

const json& require(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ConfigError(std::string("missing field \"") + key + "\"");
  return *it;
}

}  // namespace

SpecConfig parse_spec_config(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ConfigError("spec config must be a JSON object");
  SpecConfig cfg;
  try {
    if (doc.contains("indeterminates")) {
      cfg.indeterminates = doc["indeterminates"].get<std::vector<std::string>>();
      for (const auto& n : cfg.indeterminates) {
        if (!VariableTable::valid_name(n)) throw ConfigError("invalid indeterminate name \"" + n + "\"");
      }
    }
    const auto* names = &cfg.indeterminates;
    cfg.delta3 = scalar_field(require(doc, "delta3"), names);
    for (const auto& g : require(doc, "generators")) {
      if (!g.is_array() || g.size() != 4) throw ConfigError("each generator needs 4 coordinates");
      cfg.generators.push_back(GroupVector::of(scalar_field(g[0], names), scalar_field(g[1], names),
                                               scalar_field(g[2], names), scalar_field(g[3], names)));
    }
    const json& jj = require(doc, "J");
    if (!jj.is_array() || jj.size() != 4) throw ConfigError("\"J\" needs 4 entries");
    for (std::size_t p = 0; p < 4; ++p) {
      const int v = jj[p].get<int>();
      if (v != 0 && v != 1) throw ConfigError("J entries must be 0 or 1");
      cfg.j.flags[p] = v == 1;
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad spec config: ") + e.what());
  }
  return cfg;
}

IsoConfig parse_iso_config(std::string_view text, const std::vector<std::string>* names) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ConfigError("iso config must be a JSON object");
  IsoConfig cfg;
  try {
    cfg.params = IsoParams{scalar_field(require(doc, "a1"), names), scalar_field(require(doc, "a2"), names),
                           scalar_field(require(doc, "a3"), names), scalar_field(require(doc, "a4"), names)};
    if (doc.contains("chi")) {
      Chi chi;
      for (const auto& v : doc["chi"]) chi.values.push_back(scalar_field(v, names));
      cfg.chi = std::move(chi);
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad iso config: ") + e.what());
  }
  return cfg;
}

std::string spec_config_to_json(const SpecConfig& cfg) {
  json doc;
  doc["indeterminates"] = cfg.indeterminates;
  doc["delta3"] = cfg.delta3.to_string();
  json gens = json::array();
  for (const auto& g : cfg.generators) {
    json row = json::array();
    for (const auto& c : g.coords) row.push_back(c.to_string());
    gens.push_back(std::move(row));
  }
  doc["generators"] = std::move(gens);
  doc["J"] = {int(cfg.j.flags[0]), int(cfg.j.flags[1]), int(cfg.j.flags[2]), int(cfg.j.flags[3])};
  return doc.dump();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace blocklie
