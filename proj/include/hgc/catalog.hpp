#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hgc/group.hpp"

namespace hgc {

/// Orders with a complete catalog: 1..16, 24, 40, 60, 120.
bool catalog_supported(std::size_t order);

/// One representative per isomorphism class, ids "o<order>#<k>" (1-based)
/// in construction order: named groups, abelian groups by invariant
/// factors, then P x| H with P a Sylow subgroup (p ascending). Throws Error
/// for unsupported orders. Built once and memoized.
const std::vector<GroupPtr>& catalog(std::size_t order);

/// Same construction for any order up to 120 without the completeness
/// guarantee (used for intermediate orders such as 15 and 20).
const std::vector<GroupPtr>& group_list(std::size_t order);

/// The catalog entry isomorphic to g, or nullptr when |g| has no list.
GroupPtr identify(const AbstractGroup& g);

/// Display name of an abelian group from its invariant factors, e.g.
/// (2,6) -> "C3xV4", (2,2,2) -> "E8", (2,4) -> "C2xC4".
std::string abelian_name(const std::vector<std::uint64_t>& invariants);

}  // namespace hgc
