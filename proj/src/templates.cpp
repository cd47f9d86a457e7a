#include "permclass/structure.hpp"

#include <algorithm>

#include "permclass/pattern.hpp"

namespace permclass {

namespace {

int count_ascents(std::span<const int> values) {
    int ascents = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] > values[i - 1]) ++ascents;
    }
    return ascents;
}

// Given each entry's row, can the entries be cut into consecutive column
// blocks so that every entry lands in an allowed (column, row) cell and each
// cell is decreasing? A state is the column of the previous entry together
// with the position where that column's block starts.
bool columns_fit(const Permutation& p, const std::vector<int>& row_of_value, const GridTemplate& t,
                 const std::vector<std::vector<bool>>& allowed) {
    const int n = p.size();
    using States = std::vector<std::vector<bool>>;  // [column][block start]
    States current(static_cast<std::size_t>(t.columns), std::vector<bool>(n + 1, false));
    bool at_start = true;
    for (int i = 0; i < n; ++i) {
        const int v = p[i];
        const int r = row_of_value[v];
        States next(current.size(), std::vector<bool>(n + 1, false));
        bool any = false;
        bool seen_earlier = at_start;  // some state lies in a column left of c
        for (int c = 0; c < t.columns; ++c) {
            if (allowed[c][r]) {
                for (int s = 0; s < i; ++s) {
                    if (!current[c][s]) continue;
                    // The cell (c, r) so far holds the entries of row r in s..i-1.
                    int last = 0;
                    for (int j = i - 1; j >= s; --j) {
                        if (row_of_value[p[j]] == r) {
                            last = p[j];
                            break;
                        }
                    }
                    if (last == 0 || last > v) {
                        next[c][s] = true;
                        any = true;
                    }
                }
                if (seen_earlier) {
                    next[c][i] = true;
                    any = true;
                }
            }
            for (int s = 0; s < i && !seen_earlier; ++s) seen_earlier = current[c][s];
        }
        if (!any) return false;
        current = std::move(next);
        at_start = false;
    }
    return true;
}

bool search_rows(const Permutation& p, const GridTemplate& t,
                 const std::vector<std::vector<bool>>& allowed, std::vector<int>& cuts) {
    const int n = p.size();
    if (static_cast<int>(cuts.size()) == t.rows - 1) {
        // Row r holds the values in (cuts[r-1], cuts[r]].
        std::vector<int> row_of_value(static_cast<std::size_t>(n) + 1, 0);
        int r = 0;
        for (int v = 1; v <= n; ++v) {
            while (r < static_cast<int>(cuts.size()) && v > cuts[r]) ++r;
            row_of_value[v] = r;
        }
        return columns_fit(p, row_of_value, t, allowed);
    }
    const int from = cuts.empty() ? 0 : cuts.back();
    for (int cut = from; cut <= n; ++cut) {
        cuts.push_back(cut);
        if (search_rows(p, t, allowed, cuts)) return true;
        cuts.pop_back();
    }
    return false;
}

}  // namespace

std::optional<Juxtaposition> decreasing_juxtaposition(const Permutation& p) {
    if (count_ascents(p.values()) <= 1) return Juxtaposition::horizontal;
    // Cutting by value means the positions of 1..t and of t+1..n each decrease.
    const Permutation inv = p.inverse();
    if (count_ascents(inv.values()) <= 1) return Juxtaposition::vertical;
    return std::nullopt;
}

bool matches_template(const Permutation& p, const GridTemplate& t) {
    std::vector<std::vector<bool>> allowed(static_cast<std::size_t>(t.columns),
                                           std::vector<bool>(static_cast<std::size_t>(t.rows), false));
    for (auto [c, r] : t.cells) allowed[c][r] = true;
    std::vector<int> cuts;
    return search_rows(p, t, allowed, cuts);
}

const std::vector<GridTemplate>& extremal_templates(ExtremalDirection direction) {
    static const std::vector<GridTemplate> max_first{
        {"five decreasing blocks side by side", 5, 3, {{0, 0}, {1, 2}, {2, 1}, {3, 0}, {4, 2}}},
        {"two decreasing blocks stacked", 1, 2, {{0, 0}, {0, 1}}},
    };
    // Inverses of the layouts above.
    static const std::vector<GridTemplate> first_greater{
        {"five decreasing blocks stacked", 3, 5, {{0, 0}, {0, 3}, {1, 2}, {2, 1}, {2, 4}}},
        {"two decreasing blocks side by side", 2, 1, {{0, 0}, {1, 0}}},
    };
    return direction == ExtremalDirection::max_before_min ? max_first : first_greater;
}

bool matches_extremal_forms(const Permutation& p, ExtremalDirection direction) {
    const int n = p.size();
    if (n <= 2) return true;
    if (direction == ExtremalDirection::max_before_min) {
        const std::vector<int> pos = p.positions();
        if (pos[n - 1] > pos[0]) {
            throw PreconditionError("the greatest entry of " + p.to_string() +
                                    " does not precede the least entry");
        }
    } else if (p[0] < p[n - 1]) {
        throw PreconditionError("the first entry of " + p.to_string() +
                                " is not greater than the last entry");
    }
    static const std::vector<Permutation> basis{{2, 3, 4, 1}, {4, 1, 2, 3}, {3, 4, 1, 2}};
    if (!avoids_all(p, basis)) {
        throw PreconditionError(p.to_string() + " is not in Av(2341, 4123, 3412)");
    }
    const auto& templates = extremal_templates(direction);
    return std::any_of(templates.begin(), templates.end(),
                       [&](const GridTemplate& t) { return matches_template(p, t); });
}

}  // namespace permclass
