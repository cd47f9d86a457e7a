#pragma once

#include <vector>

#include "permclass/permutation.hpp"

namespace permclass {

/// Contiguous positions [start, start + length) whose values form a
/// contiguous set of integers.
struct IntervalSpan {
    int start = 0;
    int length = 0;

    friend auto operator<=>(const IntervalSpan&, const IntervalSpan&) = default;
};

/// All intervals of length strictly between 1 and n, ordered by (start, length).
std::vector<IntervalSpan> proper_intervals(const Permutation& p);

/// 1, 12 and 21 are simple; so is the empty permutation (no proper intervals).
bool is_simple(const Permutation& p);

enum class SumSkewStatus { sum_decomposable, skew_decomposable, indecomposable_both };

/// Throws std::invalid_argument on the empty permutation.
SumSkewStatus sum_skew_status(const Permutation& p);

/// skeleton[parts...]. Throws std::invalid_argument on arity mismatch or an
/// empty part.
Permutation inflate(const Permutation& skeleton, const std::vector<Permutation>& parts);

struct Decomposition {
    Permutation skeleton;
    std::vector<Permutation> parts;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// The unique decomposition skeleton[parts...] with a simple skeleton. For a
/// sum (skew) decomposable input the skeleton is 12 (21) and the first part
/// is sum (skew) indecomposable. A single entry decomposes as 1[1].
Decomposition substitution_decompose(const Permutation& p);

}  // namespace permclass
