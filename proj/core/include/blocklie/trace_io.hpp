#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "blocklie/simplicity.hpp"

namespace blocklie {

inline constexpr int kTraceSchema = 1;

/// JSON object {"schema", "route", "start", "steps", "result"}; elements and
/// scalars are written in the element and scalar grammars.
std::string trace_to_json(const ReductionTrace& trace, int indent = -1);

/// Inverse of trace_to_json. Throws ConfigError on malformed documents.
ReductionTrace trace_from_json(const Algebra& alg, std::string_view text,
                               const std::vector<std::string>* indeterminates = nullptr);

}  // namespace blocklie
