#pragma once

// Named small groups as permutation groups.

#include "acyc/group.hpp"

#include <string>
#include <utility>
#include <vector>

namespace acyc {

/// Accepts "trivial", "Z<n>" (or "C<n>"), "D<n>" (order 2n, n >= 3), "V4",
/// "Z2xZ2", "Z4xZ2", "Z2^3", "Z3xZ3", "Z6xZ2", "S3", "S4", "A4", "Q8",
/// "Dic3".  Throws GroupError for anything else.
FiniteGroup catalog_group(const std::string& name);

/// One group per isomorphism type of order at most `max_order` (<= 12).
std::vector<std::pair<std::string, FiniteGroup>> small_groups(std::size_t max_order);

}  // namespace acyc
