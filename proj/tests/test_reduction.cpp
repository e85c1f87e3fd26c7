#include <set>

#include "doctest.h"
#include "helpers.hpp"

#include "autoshift/reduction.hpp"

using namespace autoshift;

TEST_CASE("compile params validation") {
    CompileParams p = th::default_params();
    CHECK_NOTHROW(p.validate());

    CompileParams small = p;
    small.prime = {0, 1, 2, 3};
    CHECK_THROWS(small.validate());

    CompileParams badcycle = p;
    badcycle.cycle = {0, 0, 1};
    CHECK_THROWS(badcycle.validate());
}

TEST_CASE("decompose step") {
    const CompileParams p = th::default_params();
    const DecomposeStep s = decompose_step(th::word_pattern("010"), p);
    CHECK(s.pivot == Coord{2, 0});
    CHECK(s.residual_cells == 2);
    // cycle (a,b,c) = (0,1,2); helpers d=3, e=4
    CHECK(s.phi_cycle_1 == std::array<Symbol, 3>{1, 0, 3});
    CHECK(s.phi_cycle_2 == std::array<Symbol, 3>{0, 3, 4});
    CHECK(s.psi_cycle_1 == std::array<Symbol, 3>{2, 1, 3});
    CHECK(s.psi_cycle_2 == std::array<Symbol, 3>{1, 3, 4});

    // helpers avoid the cycle members
    CompileParams q = p;
    q.cycle = {0, 3, 4};
    const DecomposeStep s2 = decompose_step(th::word_pattern("01"), q);
    CHECK(s2.phi_cycle_1 == std::array<Symbol, 3>{3, 0, 1});
    CHECK(s2.phi_cycle_2 == std::array<Symbol, 3>{0, 1, 2});
}

TEST_CASE("compiled word lengths") {
    const CompileParams p = th::default_params();
    CHECK(compile(th::word_pattern("0"), p).size() == 1);
    CHECK(compile(th::word_pattern("1"), p).size() == 1);
    CHECK(compile(th::word_pattern("01"), p).size() == 12);
    CHECK(compile(th::word_pattern("010"), p).size() == 60);
    // off-origin single cell pays for the conjugating shifts
    CHECK(compile(th::word_pattern("1", 2), p).size() == 5);
}

TEST_CASE("compile realizes the controlled map") {
    const CompileParams p = th::default_params();
    const Perm abc = three_cycle(5, 0, 1, 2);
    for (const Pattern& u : th::all_patterns_on({{0, 0}, {1, 0}}, 2)) {
        const Cpnf compiled = cpnf_of_word(compile(u, p), 2, 5, 1);
        CHECK(cpnf_equal(compiled, controlled_cpnf(u, abc, 2)));
    }
    // an off-origin and a gapped support
    for (const Pattern& u : {th::word_pattern("10", -2),
                             Pattern::from_cells({{{0, 0}, 1}, {{2, 0}, 0}})}) {
        const Cpnf compiled = cpnf_of_word(compile(u, p), 2, 5, 1);
        CHECK(cpnf_equal(compiled, controlled_cpnf(u, abc, 2)));
    }
}

TEST_CASE("compile is injective on small supports") {
    const CompileParams p = th::default_params();
    std::vector<GenWord> words;
    for (const Pattern& u : th::all_patterns_on({{0, 0}, {1, 0}, {2, 0}}, 2))
        words.push_back(compile(u, p));
    CHECK(words.size() == 26);  // sum of 2^|S| over nonempty S within 3 cells
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j)
            CHECK_FALSE(words[i] == words[j]);
}

TEST_CASE("trace reports the recursion tree") {
    const CompileParams p = th::default_params();
    std::vector<std::string> trace;
    compile(th::word_pattern("01"), p, &trace);
    CHECK_FALSE(trace.empty());
    CHECK(trace[0].find("pivot") != std::string::npos);
}

TEST_CASE("reduction decides golden mean membership") {
    const SubshiftSpec gm = th::golden_mean();
    const SubshiftSpec full = SubshiftSpec::full(1, th::five_letters());
    const CompileParams p = th::default_params();

    CHECK(word_is_identity(reduction_map(th::word_pattern("11"), p), gm, full).is_yes());
    CHECK(word_is_identity(reduction_map(th::word_pattern("01"), p), gm, full).is_no());
    CHECK(word_is_identity(reduction_map(th::word_pattern("010"), p), gm, full).is_no());
    CHECK(word_is_identity(reduction_map(th::word_pattern("0110"), p), gm, full).is_yes());
    CHECK(word_is_identity({}, gm, full).is_yes());
}
