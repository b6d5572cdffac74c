#include "blocklie/trace_io.hpp"

#include <nlohmann/json.hpp>

#include "blocklie/element_io.hpp"
#include "blocklie/errors.hpp"

namespace blocklie {

using nlohmann::json;

namespace {

json alpha_json(const AlphaVec& a) { return json(std::vector<std::int64_t>(a.begin(), a.end())); }

json texps_json(const TExps& i) { return json(std::vector<std::uint32_t>(i.begin(), i.end())); }

const char* side_name(Side s) { return s == Side::left ? "left" : "right"; }

json step_json(const TraceStep& step) {
  json j;
  j["kind"] = step_kind(step);
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, step::AdBy>) {
          j["element"] = print_element(s.element);
          j["source"] = s.source;
          j["side"] = side_name(s.side);
        } else if constexpr (std::is_same_v<T, step::LinearCombine>) {
          json terms = json::array();
          for (const auto& [idx, c] : s.terms) terms.push_back(json::array({idx, c.to_string()}));
          j["terms"] = std::move(terms);
        } else if constexpr (std::is_same_v<T, step::CoefficientOfK>) {
          const auto& f = s.family;
          j["family"] = {{"left_base", alpha_json(f.left_base)},
                         {"left_step", alpha_json(f.left_step)},
                         {"left_i", texps_json(f.left_i)},
                         {"right_base", alpha_json(f.right_base)},
                         {"right_step", alpha_json(f.right_step)},
                         {"right_i", texps_json(f.right_i)}};
          j["degree"] = s.degree;
          j["extract"] = s.extract;
          j["ideal_side"] = side_name(s.ideal_side);
          j["sources"] = s.sources;
        } else {
          j["c"] = s.c.to_string();
        }
      },
      step);
  return j;
}

class Reader {
 public:
  Reader(const Algebra& alg, const std::vector<std::string>* names) : alg_(alg), names_(names) {}

  ReductionTrace read(const json& doc) const {
    if (!doc.is_object()) throw ConfigError("trace must be a JSON object");
    if (doc.value("schema", 0) != kTraceSchema) {
      throw ConfigError("unsupported trace schema (expected " + std::to_string(kTraceSchema) + ")");
    }
    ReductionTrace t;
    t.start = element(doc, "start");
    t.result = element(doc, "result");
    t.route = doc.value("route", "");
    const json& steps = field(doc, "steps");
    if (!steps.is_array()) throw ConfigError("\"steps\" must be an array");
    for (const auto& s : steps) t.steps.push_back(step(s));
    return t;
  }

 private:
  static const json& field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw ConfigError(std::string("missing field \"") + key + "\"");
    return *it;
  }

  AlgebraElement element(const json& j, const char* key) const {
    return parse_element(alg_, field(j, key).get<std::string>(), names_);
  }

  FieldElement scalar(const json& j) const { return parse_scalar(j.get<std::string>(), names_); }

  static Side side(const json& j, const char* key) {
    const auto s = field(j, key).get<std::string>();
    if (s == "left") return Side::left;
    if (s == "right") return Side::right;
    throw ConfigError("side must be \"left\" or \"right\"");
  }

  AlphaVec alpha(const json& j, const char* key) const {
    const auto v = field(j, key).get<std::vector<std::int64_t>>();
    if (v.size() != alg_.rank()) throw ArityError(std::string("\"") + key + "\" has wrong length");
    return AlphaVec(v.begin(), v.end());
  }

  static TExps texps(const json& j, const char* key) {
    const auto v = field(j, key).get<std::vector<std::uint32_t>>();
    if (v.size() != 4) throw ConfigError(std::string("\"") + key + "\" must have 4 entries");
    return TExps{v[0], v[1], v[2], v[3]};
  }

  TraceStep step(const json& s) const {
    const auto kind = field(s, "kind").get<std::string>();
    if (kind == "ad") {
      return step::AdBy{element(s, "element"), field(s, "source").get<std::size_t>(), side(s, "side")};
    }
    if (kind == "combine") {
      step::LinearCombine lc;
      for (const auto& t : field(s, "terms")) {
        if (!t.is_array() || t.size() != 2) throw ConfigError("combine term must be [index, scalar]");
        lc.terms.emplace_back(t[0].get<std::size_t>(), scalar(t[1]));
      }
      return lc;
    }
    if (kind == "coefficient_of_k") {
      const json& f = field(s, "family");
      step::CoefficientOfK c;
      c.family = AffineBracketFamily{alpha(f, "left_base"),  alpha(f, "left_step"),
                                     texps(f, "left_i"),     alpha(f, "right_base"),
                                     alpha(f, "right_step"), texps(f, "right_i")};
      c.degree = field(s, "degree").get<std::size_t>();
      c.extract = field(s, "extract").get<std::size_t>();
      c.ideal_side = side(s, "ideal_side");
      c.sources = field(s, "sources").get<std::vector<std::size_t>>();
      return c;
    }
    if (kind == "scale") return step::Scale{scalar(field(s, "c"))};
    throw ConfigError("unknown step kind \"" + kind + "\"");
  }

  const Algebra& alg_;
  const std::vector<std::string>* names_;
};

}  // namespace

std::string trace_to_json(const ReductionTrace& trace, int indent) {
  json doc;
  doc["schema"] = kTraceSchema;
  doc["route"] = trace.route;
  doc["start"] = print_element(trace.start);
  json steps = json::array();
  for (const auto& s : trace.steps) steps.push_back(step_json(s));
  doc["steps"] = std::move(steps);
  doc["result"] = print_element(trace.result);
  return doc.dump(indent);
}

ReductionTrace trace_from_json(const Algebra& alg, std::string_view text,
                               const std::vector<std::string>* indeterminates) {
  json doc;
  try {
    doc = json::parse(text);
    return Reader(alg, indeterminates).read(doc);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed trace JSON: ") + e.what());
  }
}

}  // namespace blocklie
