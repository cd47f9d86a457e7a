#pragma once

#include <optional>
#include <string>
#include <vector>

#include "permclass/permutation.hpp"

namespace permclass {

// ---------------------------------------------------------------------------
// Relative extrema diagram
// ---------------------------------------------------------------------------

enum class PathSource { lr_max, rl_min };

/// Interior corner of the axes-parallel path joining two consecutive
/// extrema. `x` is a position and `y` a value, so an inflection shares its
/// x-coordinate with one extremal entry and its y-coordinate with another.
/// `from`/`to` are the positions of the two extrema it joins.
struct Inflection {
    int x = 0;
    int y = 0;
    PathSource source = PathSource::lr_max;
    int from = 0;
    int to = 0;

    friend bool operator==(const Inflection&, const Inflection&) = default;
};

struct ExtremaDiagram {
    std::vector<int> lr_max_positions;
    std::vector<int> rl_min_positions;
    /// Both paths' inflections, sorted by x (then y).
    std::vector<Inflection> inflections;
};

/// Throws std::invalid_argument on the empty permutation.
ExtremaDiagram extrema_diagram(const Permutation& p);

/// The merged inflections increase strictly in both coordinates and
/// alternate between the two paths.
bool inflections_alternate(const ExtremaDiagram& diagram);
bool inflections_alternate(const Permutation& p);

// ---------------------------------------------------------------------------
// Juxtapositions and block templates
// ---------------------------------------------------------------------------

enum class Juxtaposition { horizontal, vertical };

/// horizontal: a vertical line cuts p into two decreasing sequences;
/// vertical: a horizontal line does. Horizontal wins when both apply.
std::optional<Juxtaposition> decreasing_juxtaposition(const Permutation& p);

/// A grid of `columns` x `rows` blocks in which only `cells` may be occupied,
/// each occupied block being decreasing. Cells are (column, row) with row 0 at
/// the bottom.
struct GridTemplate {
    std::string name;
    int columns = 1;
    int rows = 1;
    std::vector<std::pair<int, int>> cells;
};

/// Searches every placement of the grid lines.
bool matches_template(const Permutation& p, const GridTemplate& t);

enum class ExtremalDirection { max_before_min, first_greater_than_last };

/// The two block layouts permitted for members of Av(2341, 4123, 3412) with
/// the given positional property.
const std::vector<GridTemplate>& extremal_templates(ExtremalDirection direction);

/// Throws PreconditionError if p does not have the positional property or is
/// not in Av(2341, 4123, 3412). Lengths <= 2 match vacuously.
bool matches_extremal_forms(const Permutation& p, ExtremalDirection direction);

// ---------------------------------------------------------------------------
// Cells and tiles of an alternating diagram
// ---------------------------------------------------------------------------

/// One cell of the staircase between the two paths. `column` counts the
/// inflections to the left of the cell and `row` those below it.
struct Cell {
    int column = 0;
    int row = 0;
    std::vector<int> positions;  // increasing

    bool empty() const { return positions.empty(); }
};

/// Corner cells abut an extremal entry; central cells sit between the
/// inflections of consecutive corners. Both are ordered along the staircase.
/// With K inflections there are K + 2 corner cells and K - 1 central cells;
/// central_cells[i - 1] separates corner cells i and i + 1 (1 <= i <= K - 1).
struct CellGrid {
    std::vector<Cell> corner_cells;
    std::vector<Cell> central_cells;

    /// Central cell separating corner cells `corner` and `corner + 1`, or
    /// nullptr for the first and last pairs.
    const Cell* central_between(int corner) const;
};

/// Requires alternating inflections and at least two l-r maxima and two r-l
/// minima; throws PreconditionError otherwise.
CellGrid cell_grid(const Permutation& p);

/// Two consecutive corner cells interlace when they hold the same positive
/// number of entries arranged as a parallel alternation: stacked cells
/// alternate lower/upper from the left, side-by-side cells alternate
/// left/right from the bottom.
bool corners_interlace(const Permutation& p, const Cell& first, const Cell& second);

enum class TileKind { A, J, I, R };
enum class TileOrientation { p2413, p3142 };

struct TileType {
    TileKind kind = TileKind::J;
    TileOrientation orientation = TileOrientation::p2413;

    friend bool operator==(const TileType&, const TileType&) = default;
};

std::string to_string(TileKind kind);
std::string to_string(TileOrientation orientation);

/// One tile per pair of consecutive inflections. Requires p simple and in
/// Av(2341, 4123, 3412).
std::vector<TileType> tile_types(const Permutation& p);

/// Outcome of each structural condition; later conditions are only evaluated
/// when the diagram alternates.
struct TheoremConditions {
    bool alternating = false;           // (a)
    bool corners_decreasing = false;    // (b)
    bool pairs_compatible = false;      // (c)
    bool interlace_exactly_once = false;// (d)
    bool centrals_valid = false;        // (e)

    bool all() const {
        return alternating && corners_decreasing && pairs_compatible && interlace_exactly_once &&
               centrals_valid;
    }
};

/// Throws std::invalid_argument for length <= 2.
TheoremConditions evaluate_theorem_conditions(const Permutation& p);
bool satisfies_theorem_conditions(const Permutation& p);

// ---------------------------------------------------------------------------
// Simple members of Av(2341, 4123)
// ---------------------------------------------------------------------------

enum class SimpleCategory {
    contains123_only,
    contains3412_only,
    both_is_5274163,
    neither_parallel_alternation
};

std::string to_string(SimpleCategory category);

/// Requires p simple, in Av(2341, 4123), of length >= 4.
SimpleCategory classify_simple(const Permutation& p);

/// The 123-avoiding parallel alternation of even length n >= 4:
/// horizontal is (n-1, n-3, ..., 1, n, n-2, ..., 2),
/// vertical is (n/2, n, n/2 - 1, n - 1, ..., 1, n/2 + 1).
Permutation parallel_alternation(int n, Juxtaposition kind);

bool is_parallel_alternation(const Permutation& p);

}  // namespace permclass
