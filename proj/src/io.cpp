#include "autoshift/io.hpp"

#include <fstream>
#include <sstream>

namespace autoshift {

namespace {

Coord coord_from_json(const Json& j, int dim) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        throw DataError("\"at\" must be an array of " + std::to_string(dim) +
                        " integer(s)");
    for (const auto& v : j)
        if (!v.is_number_integer()) throw DataError("coordinates must be integers");
    Coord c{j[0].get<long long>(), 0};
    if (dim == 2) c.y = j[1].get<long long>();
    return c;
}

Json coord_to_json(const Coord& c, int dim) {
    Json j = Json::array();
    j.push_back(c.x);
    if (dim == 2) j.push_back(c.y);
    return j;
}

Alphabet alphabet_from_json(const Json& j, const char* field) {
    if (!j.is_array() || j.empty())
        throw DataError(std::string(field) + " must be a nonempty array of symbols");
    std::vector<std::string> names;
    for (const auto& v : j) {
        if (!v.is_string()) throw DataError("alphabet symbols must be strings");
        names.push_back(v.get<std::string>());
    }
    try {
        return Alphabet(std::move(names));
    } catch (const std::invalid_argument& e) {
        throw DataError(e.what());
    }
}

Json alphabet_to_json(const Alphabet& a) {
    Json j = Json::array();
    for (const auto& n : a.names()) j.push_back(n);
    return j;
}

Symbol symbol_from_json(const Json& j, const Alphabet& alphabet) {
    if (!j.is_string()) throw DataError("\"sym\" must be a string");
    auto s = alphabet.index(j.get<std::string>());
    if (!s) throw DataError("unknown symbol \"" + j.get<std::string>() + "\"");
    return *s;
}

}  // namespace

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open file: " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw DataError(std::string("JSON parse error in ") + path + ": " + e.what());
    }
}

Pattern pattern_from_json(const Json& j, int dim, const Alphabet& alphabet) {
    if (!j.is_object() || !j.contains("cells") || !j["cells"].is_array())
        throw DataError("pattern must be an object with a \"cells\" array");
    std::vector<std::pair<Coord, Symbol>> cells;
    for (const auto& cell : j["cells"]) {
        if (!cell.is_object() || !cell.contains("at") || !cell.contains("sym"))
            throw DataError("each cell needs \"at\" and \"sym\"");
        cells.emplace_back(coord_from_json(cell["at"], dim),
                           symbol_from_json(cell["sym"], alphabet));
    }
    try {
        return Pattern::from_cells(std::move(cells));
    } catch (const std::invalid_argument& e) {
        throw DataError(e.what());
    }
}

Json pattern_to_json(const Pattern& w, int dim, const Alphabet& alphabet) {
    Json cells = Json::array();
    for (std::size_t i = 0; i < w.size(); ++i) {
        Json cell;
        cell["at"] = coord_to_json(w.support().cells()[i], dim);
        cell["sym"] = alphabet.name(w.symbols()[i]);
        cells.push_back(std::move(cell));
    }
    Json j;
    j["cells"] = std::move(cells);
    return j;
}

std::pair<Pattern, Alphabet> pattern_from_json_inferred(const Json& j, int& dim) {
    if (!j.is_object() || !j.contains("cells") || !j["cells"].is_array() ||
        j["cells"].empty())
        throw DataError("pattern must be an object with a nonempty \"cells\" array");
    dim = static_cast<int>(j["cells"][0]["at"].size());
    if (dim != 1 && dim != 2) throw DataError("\"at\" must have 1 or 2 components");
    std::vector<std::string> names;
    for (const auto& cell : j["cells"]) {
        if (!cell.is_object() || !cell.contains("at") || !cell.contains("sym") ||
            !cell["sym"].is_string())
            throw DataError("each cell needs \"at\" and a string \"sym\"");
        const std::string name = cell["sym"].get<std::string>();
        if (std::find(names.begin(), names.end(), name) == names.end())
            names.push_back(name);
    }
    Alphabet alphabet{names};
    return {pattern_from_json(j, dim, alphabet), alphabet};
}

SubshiftSpec spec_from_json(const Json& j) {
    if (!j.is_object()) throw DataError("spec must be a JSON object");
    if (!j.contains("kind") || !j["kind"].is_string())
        throw DataError("spec needs a string \"kind\"");
    const std::string kind = j["kind"].get<std::string>();
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw DataError("spec needs an integer \"dim\"");
    const int dim = j["dim"].get<int>();
    if (dim != 1 && dim != 2) throw DataError("\"dim\" must be 1 or 2");

    try {
        if (kind == "full")
            return SubshiftSpec::full(dim, alphabet_from_json(j.at("alphabet"), "alphabet"));
        if (kind == "sft") {
            Alphabet a = alphabet_from_json(j.at("alphabet"), "alphabet");
            std::vector<Pattern> forbidden;
            if (j.contains("forbidden"))
                for (const auto& f : j["forbidden"])
                    forbidden.push_back(pattern_from_json(f, dim, a));
            return SubshiftSpec::sft(dim, std::move(a), std::move(forbidden));
        }
        if (kind == "sunny") {
            if (!j.contains("bottom") || !j["bottom"].is_string())
                throw DataError("sunny spec needs a string \"bottom\"");
            return SubshiftSpec::sunny_side_up(dim,
                                               alphabet_from_json(j.at("prime"), "prime"),
                                               j["bottom"].get<std::string>());
        }
        if (kind == "product") {
            SubshiftSpec left = spec_from_json(j.at("left"));
            SubshiftSpec right = spec_from_json(j.at("right"));
            if (left.dim() != dim || right.dim() != dim)
                throw DataError("product component dimensions must match \"dim\"");
            return SubshiftSpec::product(std::move(left), std::move(right));
        }
    } catch (const Json::exception& e) {
        throw DataError(std::string("malformed spec: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw DataError(e.what());
    }
    throw DataError("unknown spec kind \"" + kind + "\"");
}

Json spec_to_json(const SubshiftSpec& spec) {
    Json j;
    j["dim"] = spec.dim();
    switch (spec.kind()) {
        case SubshiftSpec::Kind::Full:
            j["kind"] = "full";
            j["alphabet"] = alphabet_to_json(spec.alphabet());
            break;
        case SubshiftSpec::Kind::Sft: {
            j["kind"] = "sft";
            j["alphabet"] = alphabet_to_json(spec.alphabet());
            Json fs = Json::array();
            for (const Pattern& f : spec.forbidden())
                fs.push_back(pattern_to_json(f, spec.dim(), spec.alphabet()));
            j["forbidden"] = std::move(fs);
            break;
        }
        case SubshiftSpec::Kind::SunnySideUp: {
            j["kind"] = "sunny";
            Json prime = Json::array();
            for (Symbol s = 0; s < spec.alphabet().size() - 1; ++s)
                prime.push_back(spec.alphabet().name(s));
            j["prime"] = std::move(prime);
            j["bottom"] = spec.alphabet().name(spec.bottom());
            break;
        }
        case SubshiftSpec::Kind::Product:
            j["kind"] = "product";
            j["left"] = spec_to_json(spec.left());
            j["right"] = spec_to_json(spec.right());
            break;
    }
    return j;
}

BlockMap blockmap_from_json(const Json& j) {
    try {
        Alphabet in = alphabet_from_json(j.at("in"), "in");
        Alphabet out = alphabet_from_json(j.at("out"), "out");
        const int dim = j.at("dim").get<int>();
        const int radius = j.at("radius").get<int>();
        if (dim != 1 && dim != 2) throw DataError("\"dim\" must be 1 or 2");
        if (radius < 0) throw DataError("\"radius\" must be nonnegative");
        const auto& table = j.at("table");
        if (!table.is_array()) throw DataError("\"table\" must be an array");
        std::vector<std::string> entries;
        for (const auto& v : table) entries.push_back(v.get<std::string>());
        BlockMap f = make_blockmap(in, out, dim, radius,
                                   [&](const std::vector<Symbol>&) { return 0; });
        if (entries.size() != f.table.size())
            throw DataError("\"table\" must have exactly " +
                            std::to_string(f.table.size()) + " entries");
        for (std::size_t i = 0; i < entries.size(); ++i) {
            auto s = out.index(entries[i]);
            if (!s) throw DataError("unknown output symbol \"" + entries[i] + "\"");
            f.table[i] = *s;
        }
        return f;
    } catch (const Json::exception& e) {
        throw DataError(std::string("malformed block map: ") + e.what());
    } catch (const std::length_error& e) {
        throw DataError(e.what());
    }
}

Json blockmap_to_json(const BlockMap& f) {
    Json j;
    j["in"] = alphabet_to_json(f.in_alphabet);
    j["out"] = alphabet_to_json(f.out_alphabet);
    j["dim"] = f.dim;
    j["radius"] = f.radius;
    Json table = Json::array();
    for (Symbol s : f.table) table.push_back(f.out_alphabet.name(s));
    j["table"] = std::move(table);
    return j;
}

GenWord genword_from_json(const Json& j, int dim, const Alphabet& a, const Alphabet& b) {
    if (!j.is_object() || !j.contains("letters") || !j["letters"].is_array())
        throw DataError("word must be an object with a \"letters\" array");
    GenWord w;
    for (const auto& letter : j["letters"]) {
        if (letter.is_object() && letter.contains("shift")) {
            w.push_back(GenLetter::make_shift(coord_from_json(letter["shift"], dim)));
        } else if (letter.is_object() && letter.contains("ctrl")) {
            const auto& ctrl = letter["ctrl"];
            if (!ctrl.is_object() || !ctrl.contains("sym") || !ctrl.contains("cycle") ||
                !ctrl["cycle"].is_array() || ctrl["cycle"].size() != 3)
                throw DataError("\"ctrl\" needs \"sym\" and a 3-element \"cycle\"");
            const Symbol sym = symbol_from_json(ctrl["sym"], a);
            Symbol cyc[3];
            for (int k = 0; k < 3; ++k) cyc[k] = symbol_from_json(ctrl["cycle"][k], b);
            try {
                w.push_back(GenLetter::make_ctrl(
                    sym, three_cycle(b.size(), cyc[0], cyc[1], cyc[2])));
            } catch (const std::invalid_argument& e) {
                throw DataError(e.what());
            }
        } else {
            throw DataError("each letter must carry \"shift\" or \"ctrl\"");
        }
    }
    return w;
}

Json genword_to_json(const GenWord& w, int dim, const Alphabet& a, const Alphabet& b) {
    Json letters = Json::array();
    for (const GenLetter& l : w) {
        Json jl;
        if (l.kind == GenLetter::Kind::Shift) {
            jl["shift"] = coord_to_json(l.shift, dim);
        } else {
            auto cyc = l.perm.as_three_cycle();
            if (!cyc)
                throw DataError("only 3-cycle control letters are serializable");
            Json ctrl;
            ctrl["sym"] = a.name(l.sym);
            ctrl["cycle"] = Json::array({b.name((*cyc)[0]), b.name((*cyc)[1]),
                                         b.name((*cyc)[2])});
            jl["ctrl"] = std::move(ctrl);
        }
        letters.push_back(std::move(jl));
    }
    Json j;
    j["letters"] = std::move(letters);
    return j;
}

std::string render_pattern(const Pattern& w, int dim, const Alphabet& alphabet) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ",";
        const Coord& c = w.support().cells()[i];
        os << "(" << c.x;
        if (dim == 2) os << "," << c.y;
        os << ")=" << alphabet.name(w.symbols()[i]);
    }
    os << "}";
    return os.str();
}

}  // namespace autoshift
