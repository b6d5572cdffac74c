#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "blocklie/algebra.hpp"

namespace blocklie {

enum class Side { left, right };

/// k -> [x^{left_base + k*left_step, left_i}, x^{right_base + k*right_step, right_i}].
struct AffineBracketFamily {
  AlphaVec left_base;
  AlphaVec left_step;
  TExps left_i{};
  AlphaVec right_base;
  AlphaVec right_step;
  TExps right_i{};

  Monomial left_at(std::int64_t k) const;
  Monomial right_at(std::int64_t k) const;
  AlgebraElement evaluate(const Algebra& alg, std::int64_t k) const;
};

namespace step {

/// Bracket of intermediate `source` with `element`: [element, I] for
/// Side::left, [I, element] for Side::right.
struct AdBy {
  AlgebraElement element;
  std::size_t source = 0;
  Side side = Side::left;
};

struct LinearCombine {
  std::vector<std::pair<std::size_t, FieldElement>> terms;
};

/// Coefficient of k^extract of the family, interpolated from k = 0..degree.
/// `sources[k]` (k = 0..degree+1) holds the operand on `ideal_side` at k.
struct CoefficientOfK {
  AffineBracketFamily family;
  std::size_t degree = 1;
  std::size_t extract = 1;
  Side ideal_side = Side::left;
  std::vector<std::size_t> sources;
};

/// Multiplies the previous intermediate by a nonzero scalar.
struct Scale {
  FieldElement c;
};

}  // namespace step

using TraceStep = std::variant<step::AdBy, step::LinearCombine, step::CoefficientOfK, step::Scale>;

/// Intermediate 0 is `start`; intermediate n is the output of step n. The
/// last intermediate equals `result`.
struct ReductionTrace {
  AlgebraElement start;
  std::vector<TraceStep> steps;
  AlgebraElement result;
  std::string route;
};

struct ReduceOptions {
  /// 0 selects 10 * |support| + 50.
  std::size_t max_steps = 0;
};

/// Certificate that the ideal generated by u contains 1.
ReductionTrace reduce_to_one(const Algebra& alg, const AlgebraElement& u,
                             const ReduceOptions& options = {});

/// Certificate deriving `target` from the ideal member 1.
ReductionTrace saturate_from_one(const Algebra& alg, const AlgebraElement& target);

AlgebraElement coefficient_in_k(const Algebra& alg, const AffineBracketFamily& family,
                                std::size_t degree, std::size_t extract);
AlgebraElement coefficient_in_k(const std::function<AlgebraElement(std::int64_t)>& family,
                                std::size_t degree, std::size_t extract);

struct ReplayReport {
  bool ok = false;
  std::string error;
  std::vector<AlgebraElement> intermediates;
};

/// Re-executes every step with the algebra module, checking that each AdBy
/// operand lies in the derived algebra and that the final value matches.
ReplayReport replay(const Algebra& alg, const ReductionTrace& trace);

std::string step_kind(const TraceStep& s);

}  // namespace blocklie
