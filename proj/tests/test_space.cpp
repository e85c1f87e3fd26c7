#include <random>

#include "doctest.h"
#include "helpers.hpp"

#include "autoshift/space.hpp"

using namespace autoshift;

namespace {

Pattern random_pattern(std::mt19937& rng, int max_cells, int alphabet_size, int dim) {
    std::uniform_int_distribution<int> ncells(1, max_cells);
    std::uniform_int_distribution<long long> coord(-3, 3);
    std::uniform_int_distribution<int> sym(0, alphabet_size - 1);
    std::vector<std::pair<Coord, Symbol>> cells;
    for (int i = 0; i < ncells(rng); ++i) {
        Coord c{coord(rng), dim == 2 ? coord(rng) : 0};
        bool dup = false;
        for (const auto& [cc, ss] : cells)
            if (cc == c) dup = true;
        if (!dup) cells.emplace_back(c, sym(rng));
    }
    return Pattern::from_cells(std::move(cells));
}

}  // namespace

TEST_CASE("shift_pattern basics") {
    const Pattern single = Pattern::from_cells({{{0, 0}, 0}});
    CHECK(shift_pattern(single, {0, 0}) == single);

    const Pattern ab = Pattern::from_cells({{{0, 0}, 0}, {{1, 0}, 1}});
    const Pattern moved = shift_pattern(ab, {1, 0});
    CHECK(moved.support() == Window({{1, 0}, {2, 0}}));
    CHECK(moved.symbols() == std::vector<Symbol>{0, 1});

    std::mt19937 rng(7);
    for (int t = 0; t < 50; ++t) {
        const Pattern w = random_pattern(rng, 5, 3, t % 2 + 1);
        const Coord g{(t % 7) - 3, (t % 5) - 2};
        CHECK(shift_pattern(shift_pattern(w, g), -g) == w);
    }
}

TEST_CASE("shift_pattern is a group action") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long long> coord(-4, 4);
    for (int t = 0; t < 100; ++t) {
        const Pattern w = random_pattern(rng, 6, 2, 2);
        const Coord g{coord(rng), coord(rng)};
        const Coord h{coord(rng), coord(rng)};
        CHECK(shift_pattern(shift_pattern(w, g), h) == shift_pattern(w, g + h));
    }
}

TEST_CASE("occurs_in") {
    CHECK(occurs_in(th::word_pattern("11"), th::word_pattern("0110")));
    CHECK_FALSE(occurs_in(th::word_pattern("11"), th::word_pattern("0101")));
    CHECK(occurs_in(Pattern{}, th::word_pattern("0")));
    CHECK(occurs_in(Pattern{}, Pattern{}));

    // translation invariance in both arguments
    std::mt19937 rng(3);
    for (int t = 0; t < 100; ++t) {
        const Pattern v = random_pattern(rng, 3, 2, 1);
        const Pattern w = random_pattern(rng, 6, 2, 1);
        const Coord g{(t % 9) - 4, 0};
        CHECK(occurs_in(shift_pattern(v, g), shift_pattern(w, g)) == occurs_in(v, w));
    }
}

TEST_CASE("enumerate_extensions") {
    const Pattern w = Pattern::from_cells({{{0, 0}, 0}});

    auto same = enumerate_extensions(w, Window({{0, 0}}), 2);
    REQUIRE(same.size() == 1);
    CHECK(same[0] == w);

    auto two = enumerate_extensions(w, Window({{0, 0}, {1, 0}}), 2);
    CHECK(two.size() == 2);
    for (const Pattern& p : two) CHECK(*p.at({0, 0}) == 0);

    const Pattern corner = Pattern::from_cells({{{0, 0}, 0}, {{1, 1}, 1}});
    auto square =
        enumerate_extensions(corner, Window({{0, 0}, {1, 0}, {0, 1}, {1, 1}}), 2);
    CHECK(square.size() == 4);

    CHECK_THROWS_AS(enumerate_extensions(corner, Window({{0, 0}}), 2),
                    std::invalid_argument);

    // counting invariant
    std::mt19937 rng(23);
    for (int t = 0; t < 20; ++t) {
        const Pattern p = random_pattern(rng, 3, 2, 1);
        Window v = p.support().united(ball(1, 3));
        const auto exts = enumerate_extensions(p, v, 2);
        std::size_t expect = 1;
        for (std::size_t i = 0; i < v.size() - p.size(); ++i) expect *= 2;
        CHECK(exts.size() == expect);
    }
}

TEST_CASE("pattern construction rejects duplicates") {
    CHECK_THROWS_AS(Pattern::from_cells({{{0, 0}, 0}, {{0, 0}, 1}}),
                    std::invalid_argument);
}

TEST_CASE("ball") {
    CHECK(ball(1, 1).cells() == std::vector<Coord>{{-1, 0}, {0, 0}, {1, 0}});
    CHECK(ball(2, 1).size() == 9);
    CHECK(ball(2, 0).cells() == std::vector<Coord>{{0, 0}});
}
