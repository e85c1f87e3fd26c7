#include <algorithm>
#include <set>

#include "doctest.h"
#include "helpers.hpp"

#include "autoshift/shifts.hpp"

using namespace autoshift;

TEST_CASE("golden mean language on intervals") {
    const SubshiftSpec gm = th::golden_mean();

    auto words = [&](long long n) {
        std::set<std::string> out;
        for (const Pattern& p : language_enumerate(gm, th::interval(0, n))) {
            std::string s;
            for (Symbol k : p.symbols()) s.push_back(k ? '1' : '0');
            out.insert(s);
        }
        return out;
    };

    CHECK(words(1) == std::set<std::string>{"0", "1"});
    CHECK(words(2) == std::set<std::string>{"00", "01", "10"});
    // Fibonacci counts: |L_n| = F(n+2)
    CHECK(words(3).size() == 5);
    CHECK(words(4).size() == 8);
    CHECK(words(5).size() == 13);
}

TEST_CASE("golden mean membership agrees with brute force") {
    const SubshiftSpec gm = th::golden_mean();
    for (int n = 1; n <= 7; ++n) {
        for (int v = 0; v < (1 << n); ++v) {
            std::string s;
            for (int i = 0; i < n; ++i) s.push_back((v >> i) & 1 ? '1' : '0');
            const Pattern w = th::word_pattern(s);
            const LangAnswer ans = language_contains(gm, w);
            REQUIRE_FALSE(ans.is_unknown());
            CHECK(ans.is_yes() == th::brute_in_language_1d(gm, w));
        }
    }
}

TEST_CASE("membership with gaps in the support") {
    const SubshiftSpec gm = th::golden_mean();
    // 1 _ 1 is fine (fill with 0), but 1 1 is not
    const Pattern gap = Pattern::from_cells({{{0, 0}, 1}, {{2, 0}, 1}});
    CHECK(language_contains(gm, gap).is_yes());
    CHECK(language_contains(gm, th::word_pattern("11")).is_no());

    // forbidding 00 and 11 leaves only the two alternating configurations
    const SubshiftSpec alt = SubshiftSpec::sft(
        1, th::binary(), {th::word_pattern("00"), th::word_pattern("11")});
    CHECK(language_contains(alt, th::word_pattern("0101")).is_yes());
    CHECK(language_contains(alt, th::word_pattern("0110")).is_no());
    const Pattern far = Pattern::from_cells({{{0, 0}, 0}, {{3, 0}, 0}});
    CHECK(language_contains(alt, far).is_no());  // parity forces 1 at 3
    const Pattern far_ok = Pattern::from_cells({{{0, 0}, 0}, {{3, 0}, 1}});
    CHECK(language_contains(alt, far_ok).is_yes());
}

TEST_CASE("sft with no admissible configurations") {
    // forbidding both letters as length-1 words kills everything
    const SubshiftSpec dead = SubshiftSpec::sft(
        1, th::binary(), {th::word_pattern("0"), th::word_pattern("1")});
    CHECK(language_contains(dead, th::word_pattern("0")).is_no());
    CHECK(language_contains(dead, th::word_pattern("1")).is_no());
}

TEST_CASE("sunny side up language") {
    const SubshiftSpec sun = SubshiftSpec::sunny_side_up(1, th::binary(), "_");
    const Symbol bot = sun.bottom();
    CHECK(bot == 2);
    CHECK(language_contains(sun, Pattern::from_cells({{{0, 0}, bot}})).is_yes());
    CHECK(language_contains(sun, Pattern::from_cells({{{0, 0}, 0}})).is_yes());
    CHECK(language_contains(
              sun, Pattern::from_cells({{{0, 0}, 1}, {{1, 0}, bot}}))
              .is_yes());
    CHECK(language_contains(
              sun, Pattern::from_cells({{{0, 0}, 1}, {{1, 0}, 0}}))
              .is_no());
    CHECK(language_contains(
              sun, Pattern::from_cells({{{0, 0}, 0}, {{5, 0}, 1}}))
              .is_no());

    const SubshiftSpec sun2 = SubshiftSpec::sunny_side_up(2, th::binary(), "_");
    CHECK(language_contains(
              sun2, Pattern::from_cells({{{0, 0}, 1}, {{1, 1}, bot}}))
              .is_yes());
    CHECK(language_contains(
              sun2, Pattern::from_cells({{{0, 0}, 1}, {{1, 1}, 0}}))
              .is_no());
}

TEST_CASE("checkerboard membership") {
    const SubshiftSpec cb = th::checkerboard();
    const Pattern good = Pattern::from_cells(
        {{{0, 0}, 0}, {{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 0}});
    CHECK(language_contains(cb, good).is_yes());

    const Pattern bad = Pattern::from_cells({{{0, 0}, 0}, {{1, 0}, 0}});
    CHECK(language_contains(cb, bad).is_no());

    // locally admissible, but every filling of the 3x3 square forces (1,1)=0
    const Pattern diag = Pattern::from_cells({{{0, 0}, 0}, {{1, 1}, 1}});
    const LangAnswer ans = language_contains(cb, diag, 8);
    CHECK(ans.is_no());
    CHECK(ans.window_index == 0);
}

TEST_CASE("colanguage semi-decision") {
    const SubshiftSpec gm = th::golden_mean();
    const Pattern bad = th::word_pattern("11");
    const auto flagged = colang_semidecide(gm, bad, default_schedule(gm, bad, 8));
    REQUIRE(flagged.has_value());
    CHECK(*flagged == 0);

    const Pattern ok = th::word_pattern("0101");
    CHECK_FALSE(colang_semidecide(gm, ok, default_schedule(gm, ok, 8)).has_value());
}

TEST_CASE("product spec") {
    const SubshiftSpec prod = SubshiftSpec::product(
        th::golden_mean(), SubshiftSpec::full(1, th::five_letters()));
    CHECK(prod.alphabet().size() == 10);
    CHECK(prod.alphabet().name(pair_symbol(1, 3, 5)) == "1,d");

    const Pattern left = th::word_pattern("010");
    const Pattern right =
        Pattern::from_cells({{{0, 0}, 3}, {{1, 0}, 0}, {{2, 0}, 4}});
    const Pattern both = product_pattern(left, right, 5);
    CHECK(language_contains(prod, both).is_yes());
    CHECK(project_pattern(both, 5, true) == left);
    CHECK(project_pattern(both, 5, false) == right);

    const Pattern badboth =
        product_pattern(th::word_pattern("11"),
                        Pattern::from_cells({{{0, 0}, 0}, {{1, 0}, 0}}), 5);
    CHECK(language_contains(prod, badboth).is_no());
}

TEST_CASE("alpha-permutability") {
    const Perm rot = three_cycle(5, 0, 1, 2);
    CHECK(is_alpha_permutable(SubshiftSpec::full(1, th::five_letters()), rot));

    const SubshiftSpec sun = SubshiftSpec::sunny_side_up(1, th::binary(), "_");
    CHECK(is_alpha_permutable(sun, Perm({1, 0, 2})));   // fixes bottom
    CHECK_FALSE(is_alpha_permutable(sun, three_cycle(3, 0, 1, 2)));  // moves it

    CHECK_FALSE(is_alpha_permutable(th::golden_mean(), Perm({1, 0})));
}
