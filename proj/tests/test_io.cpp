#include "doctest.h"
#include "helpers.hpp"

#include "autoshift/io.hpp"

using namespace autoshift;

TEST_CASE("pattern json round trip") {
    const Pattern w = th::word_pattern("010");
    const Json j = pattern_to_json(w, 1, th::binary());
    CHECK(pattern_from_json(j, 1, th::binary()) == w);

    const Json j2d = Json::parse(R"({"cells":[{"at":[0,0],"sym":"1"},{"at":[1,1],"sym":"0"}]})");
    const Pattern p = pattern_from_json(j2d, 2, th::binary());
    CHECK(p == Pattern::from_cells({{{0, 0}, 1}, {{1, 1}, 0}}));
    CHECK(pattern_from_json(pattern_to_json(p, 2, th::binary()), 2, th::binary()) == p);

    CHECK_THROWS_AS(
        pattern_from_json(Json::parse(R"({"cells":[{"at":[0],"sym":"x"}]})"), 1,
                          th::binary()),
        DataError);
    CHECK_THROWS_AS(
        pattern_from_json(
            Json::parse(R"({"cells":[{"at":[0],"sym":"1"},{"at":[0],"sym":"0"}]})"), 1,
            th::binary()),
        DataError);
}

TEST_CASE("pattern json with inferred alphabet") {
    int dim = 0;
    const Json j = Json::parse(R"({"cells":[{"at":[0],"sym":"b"},{"at":[1],"sym":"a"}]})");
    const auto [p, alpha] = pattern_from_json_inferred(j, dim);
    CHECK(dim == 1);
    CHECK(alpha.names() == std::vector<std::string>{"b", "a"});
    CHECK(p.symbols() == std::vector<Symbol>{0, 1});
}

TEST_CASE("spec json round trip") {
    const Json gm = Json::parse(R"({
        "dim": 1, "kind": "sft", "alphabet": ["0", "1"],
        "forbidden": [{"cells": [{"at": [0], "sym": "1"}, {"at": [1], "sym": "1"}]}]
    })");
    const SubshiftSpec spec = spec_from_json(gm);
    CHECK(spec.kind() == SubshiftSpec::Kind::Sft);
    CHECK(language_contains(spec, th::word_pattern("11")).is_no());
    CHECK(spec_from_json(spec_to_json(spec)).forbidden() == spec.forbidden());

    const Json sunny = Json::parse(
        R"({"dim": 1, "kind": "sunny", "prime": ["a","b"], "bottom": "_"})");
    const SubshiftSpec sun = spec_from_json(sunny);
    CHECK(sun.kind() == SubshiftSpec::Kind::SunnySideUp);
    CHECK(sun.alphabet().size() == 3);
    CHECK(spec_to_json(spec_from_json(spec_to_json(sun))) == spec_to_json(sun));

    const Json prod = Json::parse(R"({
        "dim": 1, "kind": "product",
        "left": {"dim": 1, "kind": "full", "alphabet": ["0","1"]},
        "right": {"dim": 1, "kind": "full", "alphabet": ["a","b","c","d","e"]}
    })");
    CHECK(spec_from_json(prod).alphabet().size() == 10);

    CHECK_THROWS_AS(spec_from_json(Json::parse(R"({"dim":3,"kind":"full","alphabet":["0"]})")),
                    DataError);
}

TEST_CASE("blockmap json round trip") {
    const BlockMap id = identity_blockmap(th::binary(), 1);
    const BlockMap back = blockmap_from_json(blockmap_to_json(id));
    CHECK(equal_syntactic(id, back));
    CHECK(back.in_alphabet == id.in_alphabet);

    Json bad = blockmap_to_json(id);
    bad["table"] = Json::array({"0"});  // wrong length
    CHECK_THROWS_AS(blockmap_from_json(bad), DataError);
}

TEST_CASE("genword json round trip") {
    const Alphabet A = th::binary();
    const Alphabet B = th::five_letters();
    const GenWord w = {GenLetter::make_shift({1, 0}),
                       GenLetter::make_ctrl(1, three_cycle(5, 0, 1, 2)),
                       GenLetter::make_shift({-1, 0})};
    const Json j = genword_to_json(w, 1, A, B);
    CHECK(genword_from_json(j, 1, A, B) == w);

    // byte-identical serialization
    CHECK(genword_to_json(genword_from_json(j, 1, A, B), 1, A, B).dump() == j.dump());

    const Json notcycle = Json::parse(
        R"({"letters":[{"ctrl":{"sym":"0","cycle":["a","a","b"]}}]})");
    CHECK_THROWS_AS(genword_from_json(notcycle, 1, A, B), DataError);
}

TEST_CASE("render_pattern") {
    CHECK(render_pattern(th::word_pattern("01"), 1, th::binary()) ==
          "{(0)=0,(1)=1}");
    CHECK(render_pattern(Pattern::from_cells({{{1, -1}, 0}}), 2, th::binary()) ==
          "{(1,-1)=0}");
}
