#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "autoshift/autgroup.hpp"
#include "autoshift/blockmap.hpp"
#include "autoshift/shifts.hpp"
#include "autoshift/space.hpp"

namespace autoshift {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent input data (CLI exit code 65).
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json load_json_file(const std::string& path);

// Pattern: {"cells": [{"at": [x] or [x,y], "sym": "<symbol>"}, ...]}
Pattern pattern_from_json(const Json& j, int dim, const Alphabet& alphabet);
Json pattern_to_json(const Pattern& w, int dim, const Alphabet& alphabet);

/// Parses a pattern without a declared alphabet; the inferred alphabet lists
/// the distinct symbols in order of first occurrence. Also reports the
/// dimension read off the "at" arrays.
std::pair<Pattern, Alphabet> pattern_from_json_inferred(const Json& j, int& dim);

// Subshift spec: {"dim": 1|2, "kind": "full"|"sft"|"sunny"|"product", ...}
SubshiftSpec spec_from_json(const Json& j);
Json spec_to_json(const SubshiftSpec& spec);

// Block map: {"in": [...], "out": [...], "dim": d, "radius": r, "table": [...]}
BlockMap blockmap_from_json(const Json& j);
Json blockmap_to_json(const BlockMap& f);

// Generator word:
// {"letters": [{"shift": [..]} | {"ctrl": {"sym": "...", "cycle": [a,b,c]}}, ...]}
GenWord genword_from_json(const Json& j, int dim, const Alphabet& a, const Alphabet& b);
Json genword_to_json(const GenWord& w, int dim, const Alphabet& a, const Alphabet& b);

/// Compact one-line rendering like {(0)=0,(1)=1}, for reports.
std::string render_pattern(const Pattern& w, int dim, const Alphabet& alphabet);

}  // namespace autoshift
