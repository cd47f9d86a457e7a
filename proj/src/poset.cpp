#include "permclass/poset.hpp"

#include <algorithm>
#include <stdexcept>

namespace permclass {

Poset::Poset(int size, std::vector<bool> less_than) : size_(size), less_(std::move(less_than)) {
    if (size < 0 || less_.size() != static_cast<std::size_t>(size) * static_cast<std::size_t>(size)) {
        throw std::invalid_argument("Poset: relation matrix has the wrong shape");
    }
    for (int a = 0; a < size_; ++a) {
        if (less(a, a)) throw std::invalid_argument("Poset: relation is not irreflexive");
        for (int b = 0; b < size_; ++b) {
            if (!less(a, b)) continue;
            if (less(b, a)) throw std::invalid_argument("Poset: relation is not antisymmetric");
            for (int c = 0; c < size_; ++c) {
                if (less(b, c) && !less(a, c)) {
                    throw std::invalid_argument("Poset: relation is not transitive");
                }
            }
        }
    }
}

Poset Poset::induced(const std::vector<int>& elements) const {
    const int k = static_cast<int>(elements.size());
    std::vector<bool> rel(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), false);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) rel[i * k + j] = less(elements[i], elements[j]);
    }
    return Poset(k, std::move(rel));
}

Poset Poset::without(int element) const {
    std::vector<int> keep;
    for (int e = 0; e < size_; ++e) {
        if (e != element) keep.push_back(e);
    }
    return induced(keep);
}

Poset poset_from_perm(const Permutation& p) {
    const int n = p.size();
    const std::vector<int> pos = p.positions();
    std::vector<bool> rel(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), false);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (pos[i] < pos[j]) rel[i * n + j] = true;
        }
    }
    return Poset(n, std::move(rel));
}

namespace {

// Is the induced subposet on `subset` a disjoint union of an a-chain and a
// b-chain? The comparability graph must split into exactly two cliques of
// sizes a and b with no edges between them.
bool is_two_chain_union(const Poset& poset, const std::vector<int>& subset, int a, int b) {
    const int k = static_cast<int>(subset.size());
    // Component of subset[0] in the comparability graph.
    std::vector<bool> first(static_cast<std::size_t>(k), false);
    first[0] = true;
    int first_size = 1;
    for (int i = 1; i < k; ++i) {
        if (poset.comparable(subset[0], subset[i])) {
            first[i] = true;
            ++first_size;
        }
    }
    if (first_size != a && first_size != b) return false;
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            const bool same = first[i] == first[j];
            if (poset.comparable(subset[i], subset[j]) != same) return false;
        }
    }
    return true;
}

bool search(const Poset& poset, int a, int b, std::vector<int>& subset, int next) {
    const int want = a + b;
    if (static_cast<int>(subset.size()) == want) return is_two_chain_union(poset, subset, a, b);
    for (int e = next; e <= poset.size() - (want - static_cast<int>(subset.size())); ++e) {
        subset.push_back(e);
        if (search(poset, a, b, subset, e + 1)) return true;
        subset.pop_back();
    }
    return false;
}

}  // namespace

bool contains_a_plus_b(const Poset& poset, int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("contains_a_plus_b: chain sizes must be >= 1");
    if (a + b > poset.size()) return false;
    std::vector<int> subset;
    subset.reserve(static_cast<std::size_t>(a + b));
    return search(poset, a, b, subset, 0);
}

bool is_three_plus_one_free(const Poset& poset) {
    return !contains_a_plus_b(poset, 3, 1);
}

}  // namespace permclass
