#pragma once

#include <vector>

#include "permclass/permutation.hpp"

namespace permclass {

/// Strict partial order on elements 0..n-1 stored as a dense relation matrix.
class Poset {
public:
    Poset() = default;

    /// `less_than[a * size + b]` holds a < b. Throws std::invalid_argument
    /// unless the relation is irreflexive, antisymmetric and transitive.
    Poset(int size, std::vector<bool> less_than);

    int size() const { return size_; }
    bool less(int a, int b) const { return less_[index(a, b)]; }
    bool comparable(int a, int b) const { return less(a, b) || less(b, a); }

    /// Subposet induced on `elements`, relabelled 0..k-1 in the given order.
    Poset induced(const std::vector<int>& elements) const;
    Poset without(int element) const;

private:
    std::size_t index(int a, int b) const {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(size_) +
               static_cast<std::size_t>(b);
    }

    int size_ = 0;
    std::vector<bool> less_;
};

/// P_pi: element i-1 stands for value i, and i < j iff i < j as integers and i
/// appears to the left of j in pi.
Poset poset_from_perm(const Permutation& p);

/// True iff some induced subposet is the disjoint union of an a-chain and a
/// b-chain. Exhaustive over (a+b)-subsets.
bool contains_a_plus_b(const Poset& poset, int a, int b);

bool is_three_plus_one_free(const Poset& poset);

}  // namespace permclass
