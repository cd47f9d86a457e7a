#include "permclass/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <thread>

#include "permclass/decomposition.hpp"
#include "permclass/pattern.hpp"
#include "permclass/structure.hpp"

namespace permclass {

Integer CountTable::at(int n) const {
    const auto it = counts.find(n);
    if (it == counts.end()) throw std::out_of_range("CountTable: no count for length " + std::to_string(n));
    return it->second;
}

namespace {

constexpr int split_length = 4;

class Walker {
public:
    Walker(const std::vector<Permutation>& basis, int n_max, const MemberFilter& filter,
           std::vector<std::uint64_t>& tally)
        : basis_(basis), n_max_(n_max), filter_(filter), tally_(tally) {}

    // `member` is already known to lie in the class; count it and descend
    // while it is shorter than `limit`.
    void walk(std::vector<int>& member, int limit) {
        const int n = static_cast<int>(member.size());
        if (!filter_ || filter_(member)) ++tally_[n];
        if (n >= limit) return;
        for (int gap = 0; gap <= n; ++gap) {
            member.insert(member.begin() + gap, n + 1);
            if (extension_ok(member, gap)) walk(member, limit);
            member.erase(member.begin() + gap);
        }
    }

    bool extension_ok(const std::vector<int>& member, int gap) const {
        for (const Permutation& b : basis_) {
            if (b.size() <= static_cast<int>(member.size()) &&
                find_occurrence_through_max(member, b, gap)) {
                return false;
            }
        }
        return true;
    }

    int n_max() const { return n_max_; }

private:
    const std::vector<Permutation>& basis_;
    int n_max_;
    const MemberFilter& filter_;
    std::vector<std::uint64_t>& tally_;
};

// Members of length exactly n, in generation order.
void collect(const std::vector<Permutation>& basis, std::vector<int>& member, int n,
             std::vector<std::vector<int>>& out) {
    const int size = static_cast<int>(member.size());
    if (size == n) {
        out.push_back(member);
        return;
    }
    std::vector<std::uint64_t> unused;
    const MemberFilter none;
    Walker w(basis, n, none, unused);
    for (int gap = 0; gap <= size; ++gap) {
        member.insert(member.begin() + gap, size + 1);
        if (w.extension_ok(member, gap)) collect(basis, member, n, out);
        member.erase(member.begin() + gap);
    }
}

bool has_empty(const std::vector<Permutation>& basis) {
    return std::any_of(basis.begin(), basis.end(), [](const Permutation& b) { return b.empty(); });
}

}  // namespace

CountTable enumerate_class(const std::vector<Permutation>& basis, int n_max, int jobs,
                           const MemberFilter& filter) {
    if (n_max < 0) throw std::invalid_argument("enumerate_class: n_max must be >= 0");
    if (basis.empty()) throw std::invalid_argument("enumerate_class: basis must be non-empty");
    if (jobs < 1) throw std::invalid_argument("enumerate_class: jobs must be >= 1");

    CountTable table{"enumeration", basis, {}};
    std::vector<std::uint64_t> tally(static_cast<std::size_t>(n_max) + 1, 0);
    if (has_empty(basis)) {
        for (int n = 0; n <= n_max; ++n) table.counts[n] = 0;
        return table;
    }

    std::vector<int> root;
    if (jobs == 1 || n_max <= split_length) {
        Walker(basis, n_max, filter, tally).walk(root, n_max);
    } else {
        // Lengths below the split are counted here; each member at the split
        // length roots an independent subtree.
        Walker(basis, n_max, filter, tally).walk(root, split_length - 1);
        std::vector<std::vector<int>> seeds;
        collect(basis, root, split_length, seeds);

        std::vector<std::vector<std::uint64_t>> partial(
            static_cast<std::size_t>(jobs), std::vector<std::uint64_t>(tally.size(), 0));
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        for (int j = 0; j < jobs; ++j) {
            workers.emplace_back([&, j] {
                Walker w(basis, n_max, filter, partial[j]);
                for (std::size_t i = next++; i < seeds.size(); i = next++) {
                    std::vector<int> member = seeds[i];
                    w.walk(member, n_max);
                }
            });
        }
        for (auto& t : workers) t.join();
        for (const auto& part : partial) {
            for (std::size_t n = 0; n < tally.size(); ++n) tally[n] += part[n];
        }
    }
    for (int n = 0; n <= n_max; ++n) {
        table.counts[n] = Integer(static_cast<unsigned long>(tally[n]));
    }
    return table;
}

CountTable enumerate_simples(const std::vector<Permutation>& basis, int n_max, int jobs) {
    CountTable t = enumerate_class(basis, n_max, jobs, [](std::span<const int> m) {
        return !m.empty() && is_simple(Permutation::pattern_of(m));
    });
    return t;
}

std::vector<Permutation> list_class(const std::vector<Permutation>& basis, int n) {
    if (n < 0) throw std::invalid_argument("list_class: negative length");
    if (basis.empty()) throw std::invalid_argument("list_class: basis must be non-empty");
    std::vector<Permutation> out;
    if (has_empty(basis)) return out;
    std::vector<std::vector<int>> raw;
    std::vector<int> root;
    collect(basis, root, n, raw);
    out.reserve(raw.size());
    for (auto& v : raw) out.emplace_back(std::move(v));
    std::sort(out.begin(), out.end());
    return out;
}

CountTable structural_simple_counts(int n_max, int jobs) {
    static const std::vector<Permutation> basis{{2, 3, 4, 1}, {4, 1, 2, 3}};
    CountTable t = enumerate_class(basis, n_max, jobs, [](std::span<const int> m) {
        if (m.empty()) return false;
        const Permutation p = Permutation::pattern_of(m);
        if (p.size() <= 2) return true;
        return satisfies_theorem_conditions(p);
    });
    t.source = "structural";
    t.basis = {{2, 3, 4, 1}, {4, 1, 2, 3}, {3, 4, 1, 2}};
    return t;
}

CountTable enumerate_class_naive(const std::vector<Permutation>& basis, int n_max) {
    CountTable table{"enumeration", basis, {}};
    for (int n = 0; n <= n_max; ++n) {
        unsigned long count = 0;
        for (const Permutation& p : all_permutations(n)) {
            if (avoids_all(p, basis)) ++count;
        }
        table.counts[n] = Integer(count);
    }
    return table;
}

CountTable series_counts(const PowerSeries& s, int n_max, std::vector<Permutation> basis) {
    CountTable table{"series", std::move(basis), {}};
    for (int n = 0; n <= n_max; ++n) {
        const Rational& c = s[n];
        if (c.get_den() != 1) throw std::domain_error("series_counts: non-integer coefficient");
        table.counts[n] = c.get_num();
    }
    return table;
}

}  // namespace permclass
