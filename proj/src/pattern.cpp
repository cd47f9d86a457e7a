#include "permclass/pattern.hpp"

#include <algorithm>

namespace permclass {

namespace {

// For each pattern index k, the earlier indices whose values are the nearest
// below and above pattern[k] (-1 when absent). A candidate host value for
// index k only has to be compared against those two placed entries.
struct ValueWindows {
    std::vector<int> below;
    std::vector<int> above;

    explicit ValueWindows(const Permutation& pattern)
        : below(pattern.size(), -1), above(pattern.size(), -1) {
        for (int k = 0; k < pattern.size(); ++k) {
            for (int j = 0; j < k; ++j) {
                if (pattern[j] < pattern[k]) {
                    if (below[k] < 0 || pattern[j] > pattern[below[k]]) below[k] = j;
                } else if (above[k] < 0 || pattern[j] < pattern[above[k]]) {
                    above[k] = j;
                }
            }
        }
    }
};

class Matcher {
public:
    Matcher(std::span<const int> host, const Permutation& pattern, int forced_index,
            int forced_position)
        : host_(host),
          windows_(pattern),
          m_(pattern.size()),
          forced_index_(forced_index),
          forced_position_(forced_position),
          chosen_(static_cast<std::size_t>(pattern.size()), -1) {}

    std::optional<Occurrence> run() {
        if (m_ > static_cast<int>(host_.size())) return std::nullopt;
        if (!place(0, 0)) return std::nullopt;
        return Occurrence{chosen_};
    }

private:
    bool fits(int k, int position) const {
        const int v = host_[position];
        if (windows_.below[k] >= 0 && v < host_[chosen_[windows_.below[k]]]) return false;
        if (windows_.above[k] >= 0 && v > host_[chosen_[windows_.above[k]]]) return false;
        return true;
    }

    bool place(int k, int first) {
        if (k == m_) return true;
        const int n = static_cast<int>(host_.size());
        int lo = first;
        int hi = n - (m_ - k);  // leave room for the remaining entries
        if (forced_index_ >= 0) {
            if (k == forced_index_) {
                lo = hi = forced_position_;
                if (forced_position_ < first) return false;
            } else if (k < forced_index_) {
                hi = std::min(hi, forced_position_ - (forced_index_ - k));
            }
        }
        for (int p = lo; p <= hi; ++p) {
            if (!fits(k, p)) continue;
            chosen_[k] = p;
            if (place(k + 1, p + 1)) return true;
        }
        return false;
    }

    std::span<const int> host_;
    ValueWindows windows_;
    int m_;
    int forced_index_;
    int forced_position_;
    std::vector<int> chosen_;
};

}  // namespace

std::optional<Occurrence> find_occurrence(const Permutation& host, const Permutation& pattern) {
    return Matcher(host.values(), pattern, -1, -1).run();
}

std::optional<Occurrence> find_occurrence_through_max(std::span<const int> host,
                                                      const Permutation& pattern,
                                                      int position) {
    if (pattern.empty()) return Occurrence{};
    const auto max_at = std::find(pattern.begin(), pattern.end(), pattern.size());
    const int forced_index = static_cast<int>(max_at - pattern.begin());
    return Matcher(host, pattern, forced_index, position).run();
}

bool contains(const Permutation& host, const Permutation& pattern) {
    return find_occurrence(host, pattern).has_value();
}

bool avoids(const Permutation& host, const Permutation& pattern) {
    return !contains(host, pattern);
}

bool avoids_all(const Permutation& host, std::span<const Permutation> basis) {
    return std::none_of(basis.begin(), basis.end(),
                        [&](const Permutation& b) { return contains(host, b); });
}

}  // namespace permclass
