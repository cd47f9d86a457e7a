#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "permclass/permutation.hpp"
#include "permclass/series.hpp"

namespace permclass {

/// Per-length counts with the source that produced them
/// ("enumeration", "series" or "structural").
struct CountTable {
    std::string source;
    std::vector<Permutation> basis;
    std::map<int, Integer> counts;

    Integer at(int n) const;
};

/// Decides whether a class member of the current length is counted.
using MemberFilter = std::function<bool(std::span<const int>)>;

/// Counts members of Av(basis) of every length 0..n_max by inserting a new
/// maximum into each gap of every member, keeping only extensions with no
/// basis occurrence through the new entry. `jobs` > 1 splits the tree below
/// length 4 across threads; the counts do not depend on it. The filter must
/// be safe to call concurrently.
CountTable enumerate_class(const std::vector<Permutation>& basis, int n_max, int jobs = 1,
                           const MemberFilter& filter = {});

/// Simple members of Av(basis) per length (1, 12 and 21 count as simple).
CountTable enumerate_simples(const std::vector<Permutation>& basis, int n_max, int jobs = 1);

/// Members of Av(basis) of length n in lexicographic order.
std::vector<Permutation> list_class(const std::vector<Permutation>& basis, int n);

/// Simple members of Av(2341, 4123, 3412) found by testing the structural
/// conditions on every member of Av(2341, 4123) of length >= 3.
CountTable structural_simple_counts(int n_max, int jobs = 1);

/// Counts of Av(basis) by filtering all n! permutations. Reference only.
CountTable enumerate_class_naive(const std::vector<Permutation>& basis, int n_max);

/// Coefficients 0..n_max of a series as a table.
CountTable series_counts(const PowerSeries& s, int n_max, std::vector<Permutation> basis = {});

}  // namespace permclass
