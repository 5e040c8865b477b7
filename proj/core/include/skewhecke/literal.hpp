#pragma once

// Text literals: elements as `[(label, coeff), ...]` or a bare scalar, Hecke
// elements as `[(g, element), ...]` with g any element of the coset.

#include <string>
#include <string_view>
#include <vector>

#include "skewhecke/hecke.hpp"

namespace skh {

/// Splits on commas outside (), [] and {}.
std::vector<std::string> split_top_level(std::string_view text, char separator = ',');
std::string trim(std::string_view text);

/// Throws std::invalid_argument with the offending fragment.
Element parse_element(const AlgebraPtr& algebra, std::string_view text);
/// Cosets not mentioned are zero; a coset may appear at most once per orbit.
HeckeElement parse_hecke(const ContextPtr& ctx, std::string_view text);

}  // namespace skh
