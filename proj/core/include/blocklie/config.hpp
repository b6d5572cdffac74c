#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "blocklie/isomorphism.hpp"
#include "blocklie/lattice.hpp"

namespace blocklie {

/// {"indeterminates": [...], "delta3": "...", "generators": [[4 scalars], ...],
///  "J": [4 flags]}
struct SpecConfig {
  std::vector<std::string> indeterminates;
  FieldElement delta3{1L};
  std::vector<GroupVector> generators;
  JPattern j;

  ValidationResult validate() const { return validate_spec(generators, delta3, j); }
};

/// {"a1": "...", "a2": "...", "a3": "...", "a4": "...", "chi": [...]}
struct IsoConfig {
  IsoParams params;
  std::optional<Chi> chi;
};

/// Both loaders throw ConfigError on malformed JSON or missing fields and
/// SyntaxError on malformed scalars.
SpecConfig parse_spec_config(std::string_view json_text);
IsoConfig parse_iso_config(std::string_view json_text,
                           const std::vector<std::string>* indeterminates = nullptr);
std::string spec_config_to_json(const SpecConfig& config);

/// Reads a whole file; throws ConfigError when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace blocklie
