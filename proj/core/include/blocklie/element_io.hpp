#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "blocklie/algebra.hpp"

namespace blocklie {

/// Parses the element grammar, e.g. "1/2 x{0,1} t2^2 - a x{1,0} + 3".
/// Coordinates inside x{...} are Gamma-basis coordinates; a term without a
/// monomial is a multiple of 1.
AlgebraElement parse_element(const Algebra& alg, std::string_view text,
                             const std::vector<std::string>* indeterminates = nullptr);

/// Canonical rendering; parse_element(print_element(u)) == u.
std::string print_element(const AlgebraElement& u);
std::string print_monomial(const Monomial& m);

}  // namespace blocklie
