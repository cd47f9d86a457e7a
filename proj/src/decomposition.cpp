#include "permclass/decomposition.hpp"

#include <algorithm>

namespace permclass {

std::vector<IntervalSpan> proper_intervals(const Permutation& p) {
    std::vector<IntervalSpan> out;
    const int n = p.size();
    for (int i = 0; i < n; ++i) {
        int lo = p[i];
        int hi = p[i];
        for (int j = i + 1; j < n; ++j) {
            lo = std::min(lo, p[j]);
            hi = std::max(hi, p[j]);
            const int length = j - i + 1;
            if (length == n) break;
            if (hi - lo + 1 == length) out.push_back({i, length});
        }
    }
    return out;
}

bool is_simple(const Permutation& p) {
    return proper_intervals(p).empty();
}

namespace {

// Length of the shortest proper prefix holding the values {1..k}, or 0.
int shortest_low_prefix(const Permutation& p) {
    int hi = 0;
    for (int k = 1; k < p.size(); ++k) {
        hi = std::max(hi, p[k - 1]);
        if (hi == k) return k;
    }
    return 0;
}

// Length of the shortest proper prefix holding the values {n-k+1..n}, or 0.
int shortest_high_prefix(const Permutation& p) {
    const int n = p.size();
    int lo = n + 1;
    for (int k = 1; k < n; ++k) {
        lo = std::min(lo, p[k - 1]);
        if (lo == n - k + 1) return k;
    }
    return 0;
}

Permutation segment_pattern(const Permutation& p, int start, int length) {
    return Permutation::pattern_of(p.values().subspan(start, length));
}

}  // namespace

SumSkewStatus sum_skew_status(const Permutation& p) {
    if (p.empty()) throw std::invalid_argument("sum_skew_status: empty permutation");
    if (shortest_low_prefix(p) > 0) return SumSkewStatus::sum_decomposable;
    if (shortest_high_prefix(p) > 0) return SumSkewStatus::skew_decomposable;
    return SumSkewStatus::indecomposable_both;
}

Permutation inflate(const Permutation& skeleton, const std::vector<Permutation>& parts) {
    if (static_cast<int>(parts.size()) != skeleton.size()) {
        throw std::invalid_argument("inflate: skeleton of length " +
                                    std::to_string(skeleton.size()) + " given " +
                                    std::to_string(parts.size()) + " parts");
    }
    // offset[v] = total size of the parts sitting at skeleton values below v
    std::vector<int> size_at_value(static_cast<std::size_t>(skeleton.size()) + 1, 0);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].empty()) throw std::invalid_argument("inflate: empty part");
        size_at_value[skeleton[i]] = parts[i].size();
    }
    std::vector<int> offset(size_at_value.size(), 0);
    for (std::size_t v = 2; v < offset.size(); ++v) {
        offset[v] = offset[v - 1] + size_at_value[v - 1];
    }
    std::vector<int> values;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (int x : parts[i]) values.push_back(offset[skeleton[i]] + x);
    }
    return Permutation(std::move(values));
}

Decomposition substitution_decompose(const Permutation& p) {
    const int n = p.size();
    if (n == 0) throw std::invalid_argument("substitution_decompose: empty permutation");
    if (n == 1) return {Permutation{1}, {Permutation{1}}};

    if (int k = shortest_low_prefix(p); k > 0) {
        return {Permutation{1, 2}, {segment_pattern(p, 0, k), segment_pattern(p, k, n - k)}};
    }
    if (int k = shortest_high_prefix(p); k > 0) {
        return {Permutation{2, 1}, {segment_pattern(p, 0, k), segment_pattern(p, k, n - k)}};
    }

    // Neither sum nor skew decomposable: the maximal proper intervals are
    // disjoint and cover every position, and the longest proper interval
    // starting at the first position of a block is that block.
    std::vector<int> longest_from(static_cast<std::size_t>(n), 1);
    for (const IntervalSpan& span : proper_intervals(p)) {
        longest_from[span.start] = std::max(longest_from[span.start], span.length);
    }
    std::vector<int> representatives;
    Decomposition out;
    for (int start = 0; start < n;) {
        const int length = longest_from[start];
        representatives.push_back(p[start]);
        out.parts.push_back(segment_pattern(p, start, length));
        start += length;
    }
    out.skeleton = Permutation::pattern_of(representatives);
    return out;
}

}  // namespace permclass
