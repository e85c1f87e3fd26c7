#include <random>

#include "doctest.h"
#include "helpers.hpp"

#include "autoshift/blockmap.hpp"

using namespace autoshift;

namespace {

// 1D radius-1 XOR of the two outer neighborhood cells.
BlockMap xor_map() {
    return make_blockmap(th::binary(), th::binary(), 1, 1,
                         [](const std::vector<Symbol>& s) { return s[0] ^ s[2]; });
}

}  // namespace

TEST_CASE("apply_to_pattern") {
    const BlockMap id = identity_blockmap(th::binary(), 1);
    const Pattern w = th::word_pattern("0110");
    CHECK(apply_to_pattern(id, w) == w);

    // left+right mod 2 on "0110": interior cells 1 and 2 give 1 and 1
    const BlockMap x = xor_map();
    const Pattern out = apply_to_pattern(x, w);
    CHECK(out.support() == th::interval(1, 2));
    CHECK(out.symbols() == std::vector<Symbol>{1, 1});

    // left+current mod 2 gives "10" on {1,2}
    const BlockMap lc =
        make_blockmap(th::binary(), th::binary(), 1, 1,
                      [](const std::vector<Symbol>& s) { return s[0] ^ s[1]; });
    const Pattern out2 = apply_to_pattern(lc, w);
    CHECK(out2.support() == th::interval(1, 2));
    CHECK(out2.symbols() == std::vector<Symbol>{1, 0});

    const BlockMap const_a =
        make_blockmap(th::binary(), th::five_letters(), 1, 0,
                      [](const std::vector<Symbol>&) { return 0; });
    CHECK(apply_to_pattern(const_a, th::word_pattern("01")).symbols() ==
          std::vector<Symbol>{0, 0});

    CHECK_THROWS(apply_to_pattern(x, th::word_pattern("01")));  // erodes to nothing
}

TEST_CASE("compose against nested application") {
    const BlockMap x = xor_map();
    const BlockMap xx = compose(x, x);
    CHECK(xx.radius == 2);
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int t = 0; t < 50; ++t) {
        std::string s;
        for (int i = 0; i < 7; ++i) s.push_back('0' + bit(rng));
        const Pattern w = th::word_pattern(s);
        CHECK(apply_to_pattern(xx, w) == apply_to_pattern(x, apply_to_pattern(x, w)));
    }

    const BlockMap id = identity_blockmap(th::binary(), 1);
    CHECK(equal_syntactic(compose(id, x), x));
    CHECK(equal_syntactic(compose(x, id), x));
}

TEST_CASE("raise_radius preserves the map") {
    const BlockMap x = xor_map();
    const BlockMap x2 = raise_radius(x, 2);
    CHECK(x2.radius == 2);
    CHECK(equal_syntactic(x, x2));
    // the raised radius erodes more: the r=2 image is the restriction of
    // the r=1 image to the doubly eroded support
    const Pattern w = th::word_pattern("01101");
    CHECK(apply_to_pattern(x2, w) ==
          restrict_to(apply_to_pattern(x, w), Window({{2, 0}})));
}

TEST_CASE("canonical enumeration") {
    CHECK(ball_cell_count(1, 1) == 3);
    CHECK(ball_cell_count(2, 1) == 9);
    CHECK(blockmap_count(th::binary(), th::binary(), 1, 0) == 4);
    CHECK(blockmap_count(th::binary(), th::binary(), 1, 1) == 256);

    const auto all = enumerate_blockmaps(th::binary(), th::binary(), 1, 1);
    CHECK(all.size() == 260);
    CHECK(all[0].radius == 0);
    CHECK(all[0].table == std::vector<Symbol>{0, 0});
    CHECK(all[3].table == std::vector<Symbol>{1, 1});
    CHECK(all[4].radius == 1);
    for (std::size_t i = 0; i < all.size(); ++i) {
        std::size_t idx = 0;  // table read as a base-|out| number
        for (Symbol s : all[i].table) idx = idx * 2 + static_cast<std::size_t>(s);
        const BlockMap back = blockmap_at(th::binary(), th::binary(), 1, all[i].radius, idx);
        CHECK(back.table == all[i].table);
    }
}

TEST_CASE("equal_on the golden mean") {
    const SubshiftSpec gm = th::golden_mean();
    const BlockMap id = raise_radius(identity_blockmap(th::binary(), 1), 1);

    // flip the output only when the neighborhood contains "11"
    BlockMap g = id;
    {
        const auto cells = ball(1, 1).cells();
        std::vector<Symbol> syms(3, 0);
        for (std::size_t idx = 0; idx < g.table.size(); ++idx) {
            std::size_t t = idx;
            for (std::size_t j = syms.size(); j-- > 0;) {
                syms[j] = static_cast<Symbol>(t % 2);
                t /= 2;
            }
            if ((syms[0] && syms[1]) || (syms[1] && syms[2]))
                g.table[idx] ^= 1;
        }
    }
    CHECK_FALSE(equal_syntactic(id, g));
    CHECK(equal_on(id, g, gm).is_yes());

    // flip on an admissible neighborhood too: now genuinely different
    BlockMap h = g;
    h.table[0] ^= 1;  // neighborhood "000"
    CHECK(equal_on(id, h, gm).is_no());

    CHECK(equal_on(id, id, gm).is_yes());
}
