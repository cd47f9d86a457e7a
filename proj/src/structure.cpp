#include "permclass/structure.hpp"

#include <algorithm>
#include <stdexcept>

#include "permclass/decomposition.hpp"
#include "permclass/pattern.hpp"

namespace permclass {

namespace {

const std::vector<Permutation>& av_three_basis() {
    static const std::vector<Permutation> basis{{2, 3, 4, 1}, {4, 1, 2, 3}, {3, 4, 1, 2}};
    return basis;
}

const std::vector<Permutation>& av_two_basis() {
    static const std::vector<Permutation> basis{{2, 3, 4, 1}, {4, 1, 2, 3}};
    return basis;
}

bool is_decreasing_run(const Permutation& p, std::vector<int> positions) {
    std::sort(positions.begin(), positions.end());
    for (std::size_t i = 1; i < positions.size(); ++i) {
        if (p[positions[i]] > p[positions[i - 1]]) return false;
    }
    return true;
}

std::vector<int> merged(const Cell& a, const Cell& b) {
    std::vector<int> out(a.positions);
    out.insert(out.end(), b.positions.begin(), b.positions.end());
    return out;
}

bool has_enough_extrema(const ExtremaDiagram& d) {
    return d.lr_max_positions.size() >= 2 && d.rl_min_positions.size() >= 2;
}

}  // namespace

ExtremaDiagram extrema_diagram(const Permutation& p) {
    if (p.empty()) throw std::invalid_argument("extrema_diagram: empty permutation");
    ExtremaDiagram d;
    const int n = p.size();
    int best = 0;
    for (int i = 0; i < n; ++i) {
        if (p[i] > best) {
            best = p[i];
            d.lr_max_positions.push_back(i);
        }
    }
    best = n + 1;
    for (int i = n - 1; i >= 0; --i) {
        if (p[i] < best) {
            best = p[i];
            d.rl_min_positions.push_back(i);
        }
    }
    std::reverse(d.rl_min_positions.begin(), d.rl_min_positions.end());

    for (std::size_t k = 1; k < d.lr_max_positions.size(); ++k) {
        const int from = d.lr_max_positions[k - 1];
        const int to = d.lr_max_positions[k];
        d.inflections.push_back({to, p[from], PathSource::lr_max, from, to});
    }
    for (std::size_t k = 1; k < d.rl_min_positions.size(); ++k) {
        const int from = d.rl_min_positions[k - 1];
        const int to = d.rl_min_positions[k];
        d.inflections.push_back({from, p[to], PathSource::rl_min, from, to});
    }
    std::sort(d.inflections.begin(), d.inflections.end(), [](const Inflection& a, const Inflection& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    return d;
}

bool inflections_alternate(const ExtremaDiagram& d) {
    for (std::size_t i = 1; i < d.inflections.size(); ++i) {
        const Inflection& a = d.inflections[i - 1];
        const Inflection& b = d.inflections[i];
        if (b.x <= a.x || b.y <= a.y || b.source == a.source) return false;
    }
    return true;
}

bool inflections_alternate(const Permutation& p) {
    if (p.empty()) return true;
    return inflections_alternate(extrema_diagram(p));
}

// ---------------------------------------------------------------------------

const Cell* CellGrid::central_between(int corner) const {
    const int index = corner - 1;
    if (index < 0 || index >= static_cast<int>(central_cells.size())) return nullptr;
    return &central_cells[index];
}

CellGrid cell_grid(const Permutation& p) {
    if (p.empty()) throw PreconditionError("cell_grid: empty permutation");
    const ExtremaDiagram d = extrema_diagram(p);
    if (!inflections_alternate(d) || !has_enough_extrema(d)) {
        throw PreconditionError("cell_grid: inflections of " + p.to_string() +
                                " do not alternate or there are too few extrema");
    }
    const int k = static_cast<int>(d.inflections.size());
    const bool lr_first = d.inflections.front().source == PathSource::lr_max;

    // Cells are indexed by s = column + row along the staircase: s = 0 and
    // s = 2K are the end corners, odd s are the other corners, and even
    // 0 < s < 2K are central.
    CellGrid grid;
    grid.corner_cells.resize(static_cast<std::size_t>(k) + 2);
    grid.central_cells.resize(static_cast<std::size_t>(k) - 1);
    grid.corner_cells.front() = {0, 0, {}};
    grid.corner_cells.back() = {k, k, {}};
    for (int i = 0; i < k; ++i) {
        int column = i % 2 == 0 ? i + 1 : i;
        int row = i % 2 == 0 ? i : i + 1;
        if (!lr_first) std::swap(column, row);
        grid.corner_cells[i + 1] = {column, row, {}};
    }
    for (int i = 1; i < k; ++i) grid.central_cells[i - 1] = {i, i, {}};

    std::vector<bool> extremal(static_cast<std::size_t>(p.size()), false);
    for (int pos : d.lr_max_positions) extremal[pos] = true;
    for (int pos : d.rl_min_positions) extremal[pos] = true;

    for (int pos = 0; pos < p.size(); ++pos) {
        if (extremal[pos]) continue;
        int column = 0;
        int row = 0;
        for (const Inflection& f : d.inflections) {
            if (f.x < pos) ++column;
            if (f.y < p[pos]) ++row;
        }
        const int s = column + row;
        Cell* cell = nullptr;
        if (s == 0) {
            cell = &grid.corner_cells.front();
        } else if (s == 2 * k) {
            cell = &grid.corner_cells.back();
        } else if (s % 2 == 1) {
            cell = &grid.corner_cells[(s - 1) / 2 + 1];
        } else {
            cell = &grid.central_cells[s / 2 - 1];
        }
        if (cell->column != column || cell->row != row) {
            throw std::logic_error("cell_grid: entry at position " + std::to_string(pos) +
                                   " lies outside the staircase");
        }
        cell->positions.push_back(pos);
    }
    return grid;
}

bool corners_interlace(const Permutation& p, const Cell& first, const Cell& second) {
    if (first.empty() || first.positions.size() != second.positions.size()) return false;
    if (!is_decreasing_run(p, first.positions) || !is_decreasing_run(p, second.positions)) {
        return false;
    }
    const bool stacked = first.column == second.column;
    if (!stacked && first.row != second.row) return false;

    // Leading cell: the lower one for stacked cells, the left one otherwise.
    const Cell& lead = stacked ? (first.row < second.row ? first : second)
                               : (first.column < second.column ? first : second);
    std::vector<std::pair<int, bool>> entries;  // (sort key, belongs to lead)
    for (const Cell* c : {&first, &second}) {
        for (int pos : c->positions) {
            entries.emplace_back(stacked ? pos : p[pos], c == &lead);
        }
    }
    std::sort(entries.begin(), entries.end());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].second != (i % 2 == 0)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

std::string to_string(TileKind kind) {
    switch (kind) {
        case TileKind::A: return "A";
        case TileKind::J: return "J";
        case TileKind::I: return "I";
        case TileKind::R: return "R";
    }
    return "?";
}

std::string to_string(TileOrientation orientation) {
    return orientation == TileOrientation::p2413 ? "2413" : "3142";
}

std::vector<TileType> tile_types(const Permutation& p) {
    if (p.size() <= 2 || !is_simple(p) || !avoids_all(p, av_three_basis())) {
        throw PreconditionError("tile_types: " + p.to_string() +
                                " is not a simple member of Av(2341, 4123, 3412)");
    }
    const ExtremaDiagram d = extrema_diagram(p);
    const CellGrid grid = cell_grid(p);
    std::vector<TileType> tiles;
    for (std::size_t k = 0; k + 1 < d.inflections.size(); ++k) {
        const Inflection& f = d.inflections[k];
        const Inflection& g = d.inflections[k + 1];
        std::vector<int> corners{f.from, f.to, g.from, g.to};
        std::sort(corners.begin(), corners.end());
        std::vector<int> values;
        for (int pos : corners) values.push_back(p[pos]);
        const Permutation shape = Permutation::pattern_of(values);

        TileType tile;
        if (shape == Permutation{2, 4, 1, 3}) {
            tile.orientation = TileOrientation::p2413;
        } else if (shape == Permutation{3, 1, 4, 2}) {
            tile.orientation = TileOrientation::p3142;
        } else {
            throw std::logic_error("tile_types: extremal entries form " + shape.to_string());
        }

        const Cell& left = grid.corner_cells[k + 1];
        const Cell& right = grid.corner_cells[k + 2];
        const Cell& centre = grid.central_cells[k];
        const bool interlaced = corners_interlace(p, left, right);
        if (interlaced) {
            if (!centre.empty()) throw std::logic_error("tile_types: interlaced tile with a centre");
            tile.kind = tile.orientation == TileOrientation::p2413 ? TileKind::A : TileKind::I;
        } else {
            std::vector<int> run = merged(left, right);
            run.insert(run.end(), centre.positions.begin(), centre.positions.end());
            if (!is_decreasing_run(p, run)) {
                throw std::logic_error("tile_types: unclassifiable tile in " + p.to_string());
            }
            tile.kind = tile.orientation == TileOrientation::p2413 ? TileKind::J : TileKind::R;
        }
        tiles.push_back(tile);
    }
    return tiles;
}

TheoremConditions evaluate_theorem_conditions(const Permutation& p) {
    if (p.size() <= 2) {
        throw std::invalid_argument("theorem conditions need length > 2");
    }
    TheoremConditions out;
    const ExtremaDiagram d = extrema_diagram(p);
    out.alternating = inflections_alternate(d) && has_enough_extrema(d);
    if (!out.alternating) return out;

    const CellGrid grid = cell_grid(p);
    const auto& corners = grid.corner_cells;
    const int count = static_cast<int>(corners.size());

    out.corners_decreasing = std::all_of(corners.begin(), corners.end(), [&](const Cell& c) {
        return is_decreasing_run(p, c.positions);
    });

    std::vector<bool> interlaced(static_cast<std::size_t>(count) - 1);
    out.pairs_compatible = true;
    for (int i = 0; i + 1 < count; ++i) {
        interlaced[i] = corners_interlace(p, corners[i], corners[i + 1]);
        if (!interlaced[i] && !is_decreasing_run(p, merged(corners[i], corners[i + 1]))) {
            out.pairs_compatible = false;
        }
    }

    out.interlace_exactly_once = true;
    for (int i = 0; i < count; ++i) {
        if (corners[i].empty()) continue;
        const int partners = (i > 0 && interlaced[i - 1]) + (i + 1 < count && interlaced[i]);
        if (partners != 1) out.interlace_exactly_once = false;
    }

    out.centrals_valid = true;
    for (int i = 1; i + 2 < count; ++i) {
        const Cell& centre = *grid.central_between(i);
        if (centre.positions.size() > 1) {
            out.centrals_valid = false;
        } else if (interlaced[i]) {
            if (!centre.empty()) out.centrals_valid = false;
        } else {
            std::vector<int> run = merged(corners[i], corners[i + 1]);
            run.insert(run.end(), centre.positions.begin(), centre.positions.end());
            if (!is_decreasing_run(p, run)) out.centrals_valid = false;
        }
    }
    return out;
}

bool satisfies_theorem_conditions(const Permutation& p) {
    return evaluate_theorem_conditions(p).all();
}

// ---------------------------------------------------------------------------

std::string to_string(SimpleCategory category) {
    switch (category) {
        case SimpleCategory::contains123_only: return "contains 123 but not 3412";
        case SimpleCategory::contains3412_only: return "contains 3412 but not 123";
        case SimpleCategory::both_is_5274163: return "contains both 123 and 3412 (5274163)";
        case SimpleCategory::neither_parallel_alternation:
            return "avoids 123 and 3412 (parallel alternation)";
    }
    return "?";
}

SimpleCategory classify_simple(const Permutation& p) {
    if (p.size() < 4 || !is_simple(p) || !avoids_all(p, av_two_basis())) {
        throw PreconditionError("classify_simple: " + p.to_string() +
                                " is not a simple member of Av(2341, 4123) of length >= 4");
    }
    const bool has123 = contains(p, Permutation{1, 2, 3});
    const bool has3412 = contains(p, Permutation{3, 4, 1, 2});
    if (has123 && has3412) return SimpleCategory::both_is_5274163;
    if (has123) return SimpleCategory::contains123_only;
    if (has3412) return SimpleCategory::contains3412_only;
    return SimpleCategory::neither_parallel_alternation;
}

Permutation parallel_alternation(int n, Juxtaposition kind) {
    if (n < 4 || n % 2 != 0) {
        throw std::invalid_argument("parallel alternations have even length >= 4");
    }
    const int half = n / 2;
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(n));
    if (kind == Juxtaposition::horizontal) {
        for (int x = n - 1; x >= 1; x -= 2) v.push_back(x);
        for (int x = n; x >= 2; x -= 2) v.push_back(x);
    } else {
        for (int i = 0; i < half; ++i) {
            v.push_back(half - i);
            v.push_back(n - i);
        }
    }
    return Permutation(std::move(v));
}

bool is_parallel_alternation(const Permutation& p) {
    const int n = p.size();
    if (n < 4 || n % 2 != 0) return false;
    return p == parallel_alternation(n, Juxtaposition::horizontal) ||
           p == parallel_alternation(n, Juxtaposition::vertical);
}

}  // namespace permclass
