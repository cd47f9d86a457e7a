#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "permclass/decomposition.hpp"
#include "permclass/pattern.hpp"
#include "permclass/permutation.hpp"

using namespace permclass;

TEST_SUITE("core") {

TEST_CASE("parse digit and list forms") {
    CHECK(parse_permutation("2341") == Permutation{2, 3, 4, 1});
    const Permutation ten = parse_permutation("10,1,2,3,4,5,6,7,8,9");
    CHECK(ten.size() == 10);
    CHECK(ten[0] == 10);
    CHECK(parse_permutation("3 1 2") == Permutation{3, 1, 2});
    CHECK(parse_permutation("4, 1, 3, 2") == Permutation{4, 1, 3, 2});
    CHECK(parse_permutation("").empty());
}

TEST_CASE("parse rejects bad input") {
    CHECK_THROWS_WITH_AS(parse_permutation("1231"), doctest::Contains("duplicate"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_permutation("1,5,2"), doctest::Contains("range"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_permutation("1,,2"), doctest::Contains("empty token"), std::invalid_argument);
    CHECK_THROWS_AS(parse_permutation("1234567891"), std::invalid_argument);
    CHECK_THROWS_AS(parse_permutation("12a"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
}

TEST_CASE("empty permutation differs from length one") {
    CHECK(Permutation{}.size() == 0);
    CHECK(Permutation{} != Permutation{1});
}

TEST_CASE("to_string round trips") {
    for (int n = 0; n <= 6; ++n) {
        for (const Permutation& p : all_permutations(n)) CHECK(parse_permutation(p.to_string()) == p);
    }
    const Permutation ten = parse_permutation("10,1,2,3,4,5,6,7,8,9");
    CHECK(parse_permutation(ten.to_string()) == ten);
}

TEST_CASE("basis parsing") {
    CHECK(parse_basis("2341,4123") == std::vector<Permutation>{{2, 3, 4, 1}, {4, 1, 2, 3}});
    CHECK(parse_basis("10,1,2,3,4,5,6,7,8,9; 21").size() == 2);
}

TEST_CASE("symmetries") {
    CHECK(apply_symmetry(Permutation{2, 3, 4, 1}, Symmetry::inverse) == Permutation{4, 1, 2, 3});
    CHECK(apply_symmetry(Permutation{3, 2, 1}, Symmetry::complement) == Permutation{1, 2, 3});
    for (int n = 0; n <= 6; ++n) {
        for (const Permutation& p : all_permutations(n)) {
            CHECK(p.reverse().reverse() == p);
            CHECK(p.complement().complement() == p);
            CHECK(p.inverse().inverse() == p);
        }
    }
}

TEST_CASE("all_permutations is lexicographic and complete") {
    const auto five = all_permutations(5);
    CHECK(five.size() == 120);
    CHECK(std::is_sorted(five.begin(), five.end()));
    CHECK(all_permutations(0).size() == 1);
}

TEST_CASE("occurrence of 51342 in 391867452") {
    const Permutation host = parse_permutation("391867452");
    const Permutation pattern = parse_permutation("51342");
    const auto occ = find_occurrence(host, pattern);
    REQUIRE(occ);
    std::vector<int> values;
    for (int i : occ->positions) values.push_back(host[i]);
    CHECK(std::ranges::equal(oracle::ranks(values), pattern.values()));
    CHECK(occ->positions == oracle::first_occurrence(host, pattern));
    // The occurrence 9,1,6,7,2 at (2,3,5,6,9) in 1-based positions is also valid.
    CHECK(std::ranges::equal(oracle::ranks({9, 1, 6, 7, 2}), pattern.values()));
}

TEST_CASE("containment edge cases") {
    CHECK_FALSE(contains(Permutation{4, 1, 2, 3}, Permutation{2, 3, 4, 1}));
    CHECK(contains(Permutation{3, 1, 2}, Permutation{1}));
    CHECK(contains(Permutation{}, Permutation{}));
    CHECK_FALSE(contains(Permutation{1, 2}, Permutation{1, 2, 3}));
}

TEST_CASE("containment agrees with subset oracle") {
    std::vector<Permutation> patterns;
    for (int k = 1; k <= 4; ++k) {
        for (auto& p : all_permutations(k)) patterns.push_back(p);
    }
    for (int n = 0; n <= 6; ++n) {
        for (const Permutation& host : all_permutations(n)) {
            for (const Permutation& pattern : patterns) {
                const auto occ = find_occurrence(host, pattern);
                REQUIRE(occ.has_value() == oracle::contains(host, pattern));
                if (occ) CHECK(occ->positions == oracle::first_occurrence(host, pattern));
            }
        }
    }
}

TEST_CASE("occurrence through the maximum") {
    const std::vector<int> host{2, 3, 5, 1, 4};
    CHECK(find_occurrence_through_max(host, Permutation{2, 3, 4, 1}, 2));
    CHECK_FALSE(find_occurrence_through_max(host, Permutation{4, 1, 2, 3}, 2));
    for (int n = 1; n <= 6; ++n) {
        for (const Permutation& p : all_permutations(n)) {
            const int top = p.positions()[n - 1];
            for (const Permutation& b : {Permutation{2, 3, 4, 1}, Permutation{4, 1, 2, 3}, Permutation{1, 3, 2}}) {
                const auto occ = find_occurrence_through_max(p.values(), b, top);
                // An occurrence through the maximum exists iff removing it loses containment.
                std::vector<int> rest;
                for (int v : p) {
                    if (v != n) rest.push_back(v);
                }
                const bool lost = oracle::contains(p, b) && !oracle::contains(Permutation(rest), b);
                if (lost) CHECK(occ.has_value());
                if (occ) {
                    CHECK(std::find(occ->positions.begin(), occ->positions.end(), top) != occ->positions.end());
                }
            }
        }
    }
}

TEST_CASE("intervals") {
    const Permutation p = parse_permutation("871329456");
    const auto spans = proper_intervals(p);
    const std::set<IntervalSpan> set(spans.begin(), spans.end());
    CHECK(set.count({0, 2}));  // 87
    CHECK(set.count({2, 3}));  // 132
    CHECK(set.count({6, 3}));  // 456
    CHECK(proper_intervals(parse_permutation("31524")).empty());
    CHECK(proper_intervals(Permutation{2, 1}).empty());
    for (int n = 0; n <= 7; ++n) {
        for (const Permutation& q : all_permutations(n)) {
            std::vector<IntervalSpan> expected;
            for (int s = 0; s < n; ++s) {
                for (int len = 2; len < n && s + len <= n; ++len) {
                    if (oracle::is_interval(q, s, len)) expected.push_back({s, len});
                }
            }
            std::sort(expected.begin(), expected.end());
            CHECK(proper_intervals(q) == expected);
            CHECK(is_simple(q) == oracle::simple(q));
        }
    }
}

TEST_CASE("simplicity examples") {
    CHECK(is_simple(parse_permutation("31524")));
    CHECK_FALSE(is_simple(parse_permutation("871329456")));
    CHECK(is_simple(parse_permutation("5274163")));
    CHECK(is_simple(Permutation{1}));
    CHECK(is_simple(Permutation{1, 2}));
    CHECK(is_simple(Permutation{2, 1}));
    CHECK_FALSE(is_simple(Permutation{1, 2, 3}));
}

TEST_CASE("sum and skew status") {
    CHECK(sum_skew_status(Permutation{1, 2, 3}) == SumSkewStatus::sum_decomposable);
    CHECK(sum_skew_status(Permutation{3, 2, 1}) == SumSkewStatus::skew_decomposable);
    CHECK(sum_skew_status(Permutation{2, 4, 1, 3}) == SumSkewStatus::indecomposable_both);
    CHECK(sum_skew_status(Permutation{1}) == SumSkewStatus::indecomposable_both);
    CHECK_THROWS(sum_skew_status(Permutation{}));
    for (int n = 1; n <= 7; ++n) {
        for (const Permutation& p : all_permutations(n)) {
            const SumSkewStatus s = sum_skew_status(p);
            CHECK((s == SumSkewStatus::sum_decomposable) == oracle::sum_decomposable(p));
            CHECK((s == SumSkewStatus::skew_decomposable) == oracle::sum_decomposable(p.complement()));
        }
    }
}

TEST_CASE("inflation") {
    const Permutation out = inflate(Permutation{3, 1, 4, 2}, {Permutation{2, 1}, Permutation{1, 3, 2},
                                                              Permutation{1}, Permutation{1, 2, 3}});
    CHECK(out == parse_permutation("871329456"));
    const Permutation a{2, 5, 1, 4, 3};
    CHECK(inflate(Permutation{1}, {a}) == a);
    CHECK(inflate(a, {Permutation{1}, Permutation{1}, Permutation{1}, Permutation{1}, Permutation{1}}) == a);
    CHECK_THROWS(inflate(Permutation{1, 2}, {Permutation{1}}));
    CHECK_THROWS(inflate(Permutation{1, 2}, {Permutation{1}, Permutation{}}));
}

TEST_CASE("substitution decomposition examples") {
    const Decomposition d = substitution_decompose(parse_permutation("871329456"));
    CHECK(d.skeleton == Permutation{3, 1, 4, 2});
    CHECK(d.parts == std::vector<Permutation>{{2, 1}, {1, 3, 2}, {1}, {1, 2, 3}});

    const Decomposition s = substitution_decompose(parse_permutation("31524"));
    CHECK(s.skeleton == parse_permutation("31524"));
    CHECK(s.parts.size() == 5);

    const Decomposition inc = substitution_decompose(Permutation{1, 2, 3});
    CHECK(inc.skeleton == Permutation{1, 2});
    CHECK(inc.parts == std::vector<Permutation>{{1}, {1, 2}});

    const Decomposition dec = substitution_decompose(Permutation{3, 2, 1});
    CHECK(dec.skeleton == Permutation{2, 1});
    CHECK(dec.parts == std::vector<Permutation>{{1}, {2, 1}});

    CHECK_THROWS(substitution_decompose(Permutation{}));
}

TEST_CASE("decomposition invariants up to length 8") {
    for (int n = 1; n <= 8; ++n) {
        for (const Permutation& p : all_permutations(n)) {
            const Decomposition d = substitution_decompose(p);
            REQUIRE(inflate(d.skeleton, d.parts) == p);
            CHECK(oracle::simple(d.skeleton));
            CHECK(d.parts.size() == static_cast<std::size_t>(d.skeleton.size()));
            if (d.skeleton == Permutation{1, 2}) CHECK_FALSE(oracle::sum_decomposable(d.parts[0]));
            if (d.skeleton == Permutation{2, 1}) {
                CHECK_FALSE(oracle::sum_decomposable(d.parts[0].complement()));
            }
            CHECK(is_simple(p) == (d.skeleton == p));
        }
    }
}

}  // TEST_SUITE
