#pragma once

#include <optional>
#include <span>
#include <vector>

#include "permclass/permutation.hpp"

namespace permclass {

/// Strictly increasing host positions whose values are order isomorphic to
/// the pattern.
struct Occurrence {
    std::vector<int> positions;

    friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

/// Returns the lexicographically least occurrence of `pattern` in `host`.
///
/// Backtracking over host positions; each candidate is tested against the
/// value window formed by the already placed pattern entries that are its
/// nearest neighbours in value.
std::optional<Occurrence> find_occurrence(const Permutation& host, const Permutation& pattern);

/// Like find_occurrence, but only considers occurrences in which the entry at
/// `position` plays the role of the pattern's maximum. Used for incremental
/// pruning after inserting a new maximum.
std::optional<Occurrence> find_occurrence_through_max(std::span<const int> host,
                                                      const Permutation& pattern,
                                                      int position);

bool contains(const Permutation& host, const Permutation& pattern);
bool avoids(const Permutation& host, const Permutation& pattern);
bool avoids_all(const Permutation& host, std::span<const Permutation> basis);

}  // namespace permclass
