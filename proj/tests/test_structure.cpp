#include <doctest.h>

#include "oracles.hpp"
#include "permclass/decomposition.hpp"
#include "permclass/enumeration.hpp"
#include "permclass/pattern.hpp"
#include "permclass/poset.hpp"
#include "permclass/structure.hpp"

using namespace permclass;

namespace {

const std::vector<Permutation> two_basis{{2, 3, 4, 1}, {4, 1, 2, 3}};
const std::vector<Permutation> three_basis{{2, 3, 4, 1}, {4, 1, 2, 3}, {3, 4, 1, 2}};
const Permutation staircase_ten = parse_permutation("4,1,3,7,5,2,10,8,6,9");

}  // namespace

TEST_SUITE("poset") {

TEST_CASE("poset examples") {
    const Poset chain = poset_from_perm(Permutation{1, 2, 3, 4});
    for (int a = 0; a < 4; ++a) {
        for (int b = a + 1; b < 4; ++b) CHECK(chain.less(a, b));
    }
    const Poset anti = poset_from_perm(Permutation{4, 3, 2, 1});
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) CHECK_FALSE(anti.comparable(a, b));
    }
    CHECK(contains_a_plus_b(poset_from_perm(Permutation{2, 3, 4, 1}), 3, 1));
    CHECK(contains_a_plus_b(poset_from_perm(Permutation{4, 1, 2, 3}), 3, 1));
    CHECK(contains_a_plus_b(poset_from_perm(Permutation{2, 1}), 1, 1));
    for (int a = 1; a <= 3; ++a) {
        for (int b = 1; a + b <= 5; ++b) {
            CHECK_FALSE(contains_a_plus_b(poset_from_perm(Permutation::identity(5)), a, b));
        }
    }
    CHECK_THROWS(contains_a_plus_b(chain, 0, 1));
    CHECK_FALSE(contains_a_plus_b(chain, 4, 1));
}

TEST_CASE("poset construction validates the relation") {
    CHECK_THROWS(Poset(2, {true, false, false, false}));           // reflexive
    CHECK_THROWS(Poset(2, {false, true, true, false}));            // symmetric
    CHECK_THROWS(Poset(3, {false, true, false,                     // 0<1<2 without 0<2
                           false, false, true,
                           false, false, false}));
    CHECK_THROWS(Poset(2, {false}));
}

TEST_CASE("3+1 occurs exactly for 2341 and 4123 at length 4") {
    for (const Permutation& p : all_permutations(4)) {
        const bool expected = p == Permutation{2, 3, 4, 1} || p == Permutation{4, 1, 2, 3};
        CHECK(contains_a_plus_b(poset_from_perm(p), 3, 1) == expected);
    }
}

TEST_CASE("poset characterization of the class") {
    for (int n = 0; n <= 7; ++n) {
        for (const Permutation& p : all_permutations(n)) {
            const bool free = is_three_plus_one_free(poset_from_perm(p));
            CHECK(free == !oracle::poset_has_three_plus_one(p));
            CHECK(free == avoids_all(p, two_basis));
        }
    }
}

TEST_CASE("inversion preserves the comparability graph") {
    for (int n = 1; n <= 6; ++n) {
        for (const Permutation& p : all_permutations(n)) {
            const Poset a = poset_from_perm(p);
            const Poset b = poset_from_perm(p.inverse());
            const std::vector<int> pos = p.positions();
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) CHECK(a.comparable(i, j) == b.comparable(pos[i], pos[j]));
            }
        }
    }
}

TEST_CASE("removing an element never creates a 3+1") {
    for (int n = 1; n <= 6; ++n) {
        for (const Permutation& p : all_permutations(n)) {
            const Poset full = poset_from_perm(p);
            const bool has = contains_a_plus_b(full, 3, 1);
            for (int e = 0; e < n; ++e) {
                if (contains_a_plus_b(full.without(e), 3, 1)) CHECK(has);
            }
        }
    }
}

}  // TEST_SUITE poset

TEST_SUITE("structure") {

TEST_CASE("extrema diagrams") {
    const ExtremaDiagram d321 = extrema_diagram(Permutation{3, 2, 1});
    CHECK(d321.lr_max_positions == std::vector<int>{0});
    CHECK(d321.rl_min_positions == std::vector<int>{2});
    CHECK(d321.inflections.empty());

    const ExtremaDiagram d = extrema_diagram(Permutation{2, 4, 1, 3});
    CHECK(d.lr_max_positions == std::vector<int>{0, 1});
    CHECK(d.rl_min_positions == std::vector<int>{2, 3});
    REQUIRE(d.inflections.size() == 2);
    CHECK(d.inflections[0] == Inflection{1, 2, PathSource::lr_max, 0, 1});
    CHECK(d.inflections[1] == Inflection{2, 3, PathSource::rl_min, 2, 3});

    const ExtremaDiagram id = extrema_diagram(Permutation::identity(5));
    CHECK(id.lr_max_positions.size() == 5);
    CHECK(id.rl_min_positions.size() == 5);
    CHECK(id.inflections.size() == 8);
    CHECK_THROWS(extrema_diagram(Permutation{}));
}

TEST_CASE("extrema definitions hold exhaustively") {
    for (int n = 1; n <= 6; ++n) {
        for (const Permutation& p : all_permutations(n)) {
            const ExtremaDiagram d = extrema_diagram(p);
            std::vector<int> lr, rl;
            for (int j = 0; j < n; ++j) {
                bool is_max = true, is_min = true;
                for (int i = 0; i < j; ++i) is_max = is_max && p[j] > p[i];
                for (int k = j + 1; k < n; ++k) is_min = is_min && p[j] < p[k];
                if (is_max) lr.push_back(j);
                if (is_min) rl.push_back(j);
            }
            CHECK(d.lr_max_positions == lr);
            CHECK(d.rl_min_positions == rl);
            CHECK(d.inflections.size() == lr.size() + rl.size() - 2);
        }
    }
}

TEST_CASE("alternation") {
    CHECK(inflections_alternate(staircase_ten));
    CHECK(inflections_alternate(Permutation{2, 1}));
    CHECK_FALSE(inflections_alternate(Permutation::identity(3)));
    for (int n = 1; n <= 8; ++n) {
        for (const Permutation& p : list_class(three_basis, n)) {
            if (!oracle::sum_decomposable(p)) CHECK(inflections_alternate(p));
        }
    }
}

TEST_CASE("decreasing juxtaposition") {
    CHECK(decreasing_juxtaposition(Permutation{3, 2, 1}) == Juxtaposition::horizontal);
    CHECK(decreasing_juxtaposition(Permutation{2, 4, 1, 3}) == Juxtaposition::vertical);
    CHECK(decreasing_juxtaposition(Permutation{3, 1, 4, 2}) == Juxtaposition::horizontal);
    CHECK_FALSE(decreasing_juxtaposition(Permutation{1, 2, 3}).has_value());
    for (int n = 0; n <= 8; ++n) {
        for (const Permutation& p : all_permutations(n)) {
            const bool member = oracle::in_class(p, {Permutation{1, 2, 3}, Permutation{3, 4, 1, 2}});
            CHECK(decreasing_juxtaposition(p).has_value() == member);
        }
    }
}

TEST_CASE("grid templates") {
    const GridTemplate two_rows{"stacked", 1, 2, {{0, 0}, {0, 1}}};
    CHECK(matches_template(parse_permutation("35241"), two_rows));
    CHECK_FALSE(matches_template(Permutation{1, 2, 3}, two_rows));
    const GridTemplate one{"single", 1, 1, {{0, 0}}};
    CHECK(matches_template(Permutation{3, 2, 1}, one));
    CHECK_FALSE(matches_template(Permutation{1, 2}, one));
    CHECK(matches_template(Permutation{}, one));
}

TEST_CASE("extremal forms") {
    CHECK(matches_extremal_forms(Permutation{2, 1}, ExtremalDirection::max_before_min));
    CHECK_THROWS_AS(matches_extremal_forms(Permutation{3, 1, 4, 2}, ExtremalDirection::max_before_min),
                    PreconditionError);
    CHECK_THROWS_AS(matches_extremal_forms(Permutation{1, 3, 2}, ExtremalDirection::first_greater_than_last),
                    PreconditionError);
    CHECK_THROWS_AS(matches_extremal_forms(Permutation{3, 4, 1, 2}, ExtremalDirection::first_greater_than_last),
                    PreconditionError);
    for (int n = 3; n <= 7; ++n) {
        for (const Permutation& p : list_class(three_basis, n)) {
            const std::vector<int> pos = p.positions();
            if (pos[n - 1] < pos[0]) CHECK(matches_extremal_forms(p, ExtremalDirection::max_before_min));
            if (p[0] > p[n - 1]) {
                CHECK(matches_extremal_forms(p, ExtremalDirection::first_greater_than_last));
            }
        }
    }
    // The layouts for the second hypothesis are the inverses of the first.
    const auto& a = extremal_templates(ExtremalDirection::max_before_min);
    const auto& b = extremal_templates(ExtremalDirection::first_greater_than_last);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].columns == b[i].rows);
        CHECK(a[i].rows == b[i].columns);
        for (int n = 0; n <= 6; ++n) {
            for (const Permutation& p : all_permutations(n)) {
                CHECK(matches_template(p, a[i]) == matches_template(p.inverse(), b[i]));
            }
        }
    }
}

TEST_CASE("cell grids") {
    const CellGrid g = cell_grid(Permutation{2, 4, 1, 3});
    for (const Cell& c : g.corner_cells) CHECK(c.empty());
    for (const Cell& c : g.central_cells) CHECK(c.empty());
    CHECK(g.corner_cells.size() == 4);
    CHECK(g.central_cells.size() == 1);
    CHECK(g.central_between(0) == nullptr);
    CHECK(g.central_between(1) == &g.central_cells[0]);
    CHECK(g.central_between(2) == nullptr);

    // Non-extremal values 3, 5, 8 sit at positions 2, 4, 7. Each lies strictly
    // between consecutive inflections (2,2)-(4,4), (4,4)-(6,6), (7,7)-(9,9) in
    // both coordinates, so no extremum touches its cell.
    const CellGrid f = cell_grid(staircase_ten);
    for (const Cell& c : f.corner_cells) CHECK(c.empty());
    REQUIRE(f.central_cells.size() == 4);
    CHECK(f.central_cells[0].positions == std::vector<int>{2});
    CHECK(f.central_cells[1].positions == std::vector<int>{4});
    CHECK(f.central_cells[2].empty());
    CHECK(f.central_cells[3].positions == std::vector<int>{7});

    // 351624 has non-alternating inflections (and contains 3412).
    CHECK_FALSE(inflections_alternate(parse_permutation("351624")));
    CHECK_THROWS_AS(cell_grid(parse_permutation("351624")), PreconditionError);
    CHECK_THROWS_AS(cell_grid(Permutation{2, 1}), PreconditionError);
}

TEST_CASE("cells partition the non-extremal entries") {
    for (int n = 4; n <= 8; ++n) {
        for (const Permutation& p : list_class(three_basis, n)) {
            const ExtremaDiagram d = extrema_diagram(p);
            if (!inflections_alternate(d) || d.lr_max_positions.size() < 2 || d.rl_min_positions.size() < 2) {
                continue;
            }
            const CellGrid g = cell_grid(p);
            std::vector<int> seen;
            for (const auto* cells : {&g.corner_cells, &g.central_cells}) {
                for (const Cell& c : *cells) seen.insert(seen.end(), c.positions.begin(), c.positions.end());
            }
            std::sort(seen.begin(), seen.end());
            std::vector<int> expected;
            for (int i = 0; i < n; ++i) {
                const bool extremal =
                    std::count(d.lr_max_positions.begin(), d.lr_max_positions.end(), i) ||
                    std::count(d.rl_min_positions.begin(), d.rl_min_positions.end(), i);
                if (!extremal) expected.push_back(i);
            }
            CHECK(seen == expected);
            CHECK(g.corner_cells.size() == d.inflections.size() + 2);
            CHECK(g.central_cells.size() == d.inflections.size() - 1);
        }
    }
}

TEST_CASE("corner interlacing") {
    // 9 7 5 3 1 10 8 6 4 2: one tile whose flanking corners interlace.
    const Permutation h = parallel_alternation(10, Juxtaposition::horizontal);
    const CellGrid g = cell_grid(h);
    REQUIRE(g.corner_cells.size() == 4);
    CHECK(corners_interlace(h, g.corner_cells[1], g.corner_cells[2]));
    CHECK_FALSE(corners_interlace(h, g.corner_cells[0], g.corner_cells[1]));
}

TEST_CASE("tile types") {
    const auto t = tile_types(Permutation{2, 4, 1, 3});
    REQUIRE(t.size() == 1);
    CHECK(t[0] == TileType{TileKind::J, TileOrientation::p2413});

    const auto r = tile_types(Permutation{3, 1, 4, 2});
    REQUIRE(r.size() == 1);
    CHECK(r[0] == TileType{TileKind::R, TileOrientation::p3142});

    for (Juxtaposition j : {Juxtaposition::horizontal, Juxtaposition::vertical}) {
        for (const TileType& tile : tile_types(parallel_alternation(10, j))) {
            CHECK((tile.kind == TileKind::A || tile.kind == TileKind::I));
        }
    }

    const auto f = tile_types(staircase_ten);
    REQUIRE(f.size() == 4);
    for (std::size_t i = 1; i < f.size(); ++i) CHECK(f[i].orientation != f[i - 1].orientation);

    CHECK_THROWS_AS(tile_types(parse_permutation("5274163")), PreconditionError);
    CHECK_THROWS_AS(tile_types(Permutation{1, 2, 3}), PreconditionError);
}

TEST_CASE("tile kinds match orientation and alternate") {
    for (int n = 4; n <= 9; ++n) {
        for (const Permutation& p : list_class(three_basis, n)) {
            if (!is_simple(p)) continue;
            const auto tiles = tile_types(p);
            for (std::size_t i = 0; i < tiles.size(); ++i) {
                const bool first_row = tiles[i].kind == TileKind::A || tiles[i].kind == TileKind::J;
                CHECK(first_row == (tiles[i].orientation == TileOrientation::p2413));
                if (i > 0) CHECK(tiles[i].orientation != tiles[i - 1].orientation);
            }
        }
    }
}

TEST_CASE("theorem conditions") {
    CHECK(satisfies_theorem_conditions(staircase_ten));
    CHECK_FALSE(satisfies_theorem_conditions(parse_permutation("5274163")));
    CHECK(oracle::contains(parse_permutation("5274163"), Permutation{3, 4, 1, 2}));
    CHECK_THROWS_AS(satisfies_theorem_conditions(Permutation{2, 1}), std::invalid_argument);
    const TheoremConditions c = evaluate_theorem_conditions(Permutation{1, 2, 3});
    CHECK_FALSE(c.alternating);
    CHECK_FALSE(c.all());
}

TEST_CASE("theorem conditions agree with brute force up to length 8") {
    for (int n = 3; n <= 8; ++n) {
        for (const Permutation& p : all_permutations(n)) {
            const bool brute = oracle::simple(p) && oracle::in_class(p, three_basis);
            CHECK(satisfies_theorem_conditions(p) == brute);
        }
    }
}

TEST_CASE("classification") {
    CHECK(classify_simple(parse_permutation("5274163")) == SimpleCategory::both_is_5274163);
    CHECK(classify_simple(Permutation{2, 4, 1, 3}) == SimpleCategory::neither_parallel_alternation);
    CHECK(classify_simple(staircase_ten) == SimpleCategory::contains123_only);
    CHECK(oracle::contains(staircase_ten, Permutation{1, 2, 3}));
    CHECK_FALSE(oracle::contains(staircase_ten, Permutation{3, 4, 1, 2}));
    CHECK_THROWS_AS(classify_simple(Permutation{1, 2, 3}), PreconditionError);
    CHECK_THROWS_AS(classify_simple(Permutation{2, 1}), PreconditionError);
    CHECK_THROWS_AS(classify_simple(Permutation{1, 3, 2, 4}), PreconditionError);
}

TEST_CASE("parallel alternations") {
    CHECK(parallel_alternation(4, Juxtaposition::horizontal) == Permutation{3, 1, 4, 2});
    CHECK(parallel_alternation(4, Juxtaposition::vertical) == Permutation{2, 4, 1, 3});
    CHECK(parallel_alternation(10, Juxtaposition::vertical) == parse_permutation("5,10,4,9,3,8,2,7,1,6"));
    CHECK(parallel_alternation(10, Juxtaposition::horizontal) == parse_permutation("9,7,5,3,1,10,8,6,4,2"));
    CHECK(is_parallel_alternation(Permutation{2, 4, 1, 3}));
    CHECK_FALSE(is_parallel_alternation(parse_permutation("5274163")));
    CHECK_THROWS(parallel_alternation(5, Juxtaposition::horizontal));
    for (int n = 4; n <= 9; ++n) {
        int count = 0;
        for (const Permutation& p : all_permutations(n)) {
            const bool expected = oracle::simple(p) &&
                                  oracle::in_class(p, {Permutation{1, 2, 3}, Permutation{3, 4, 1, 2}});
            CHECK(is_parallel_alternation(p) == expected);
            count += is_parallel_alternation(p);
        }
        CHECK(count == (n % 2 == 0 ? 2 : 0));
    }
}

}  // TEST_SUITE structure
