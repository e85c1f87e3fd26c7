#pragma once

#include <string>
#include <vector>

#include "autoshift/reduction.hpp"
#include "autoshift/shifts.hpp"
#include "autoshift/space.hpp"

namespace th {

using namespace autoshift;

inline Alphabet binary() { return Alphabet({"0", "1"}); }
inline Alphabet five_letters() { return Alphabet({"a", "b", "c", "d", "e"}); }

/// 1D word pattern "0110" placed on {start, ..., start+len-1}.
inline Pattern word_pattern(const std::string& digits, long long start = 0) {
    std::vector<std::pair<Coord, Symbol>> cells;
    for (std::size_t i = 0; i < digits.size(); ++i)
        cells.emplace_back(Coord{start + static_cast<long long>(i), 0},
                           static_cast<Symbol>(digits[i] - '0'));
    return Pattern::from_cells(std::move(cells));
}

/// The interval {start, ..., start+len-1} x {0}.
inline Window interval(long long start, long long len) {
    std::vector<Coord> cells;
    for (long long x = start; x < start + len; ++x) cells.push_back({x, 0});
    return Window(std::move(cells));
}

/// The golden mean shift: binary 1D SFT forbidding "11".
inline SubshiftSpec golden_mean() {
    return SubshiftSpec::sft(1, binary(), {word_pattern("11")});
}

/// 2D binary SFT forbidding equal horizontally or vertically adjacent cells.
inline SubshiftSpec checkerboard() {
    std::vector<Pattern> forbidden;
    for (Symbol s : {0, 1}) {
        forbidden.push_back(Pattern::from_cells({{{0, 0}, s}, {{1, 0}, s}}));
        forbidden.push_back(Pattern::from_cells({{{0, 0}, s}, {{0, 1}, s}}));
    }
    return SubshiftSpec::sft(2, binary(), std::move(forbidden));
}

/// Brute-force 1D language oracle, independent of the block-graph path:
/// w is accepted iff it has a locally admissible extension to its bounding
/// interval widened by diameter*6 on both sides.
inline bool brute_in_language_1d(const SubshiftSpec& spec, const Pattern& w) {
    if (w.empty()) return true;
    long long diameter = 1;
    for (const Pattern& f : spec.forbidden()) {
        const auto& cs = f.support().cells();
        diameter = std::max(diameter, cs.back().x - cs.front().x + 1);
    }
    const long long lo = w.support().cells().front().x - diameter * 2;
    long long hi = w.support().cells().front().x;
    for (const Coord& c : w.support().cells()) hi = std::max(hi, c.x);
    hi += diameter * 2;
    std::vector<Coord> cells;
    for (long long x = lo; x <= hi; ++x) cells.push_back({x, 0});
    const Window V(cells);

    // streamed odometer over the free cells, stopping at the first
    // admissible extension
    const int nsym = spec.alphabet().size();
    std::vector<Symbol> syms(V.size(), -1);
    std::vector<std::size_t> free_pos;
    for (std::size_t j = 0; j < V.size(); ++j) {
        if (auto s = w.at(V.cells()[j]))
            syms[j] = *s;
        else
            free_pos.push_back(j);
    }
    std::vector<Symbol> digits(free_pos.size(), 0);
    while (true) {
        for (std::size_t j = 0; j < free_pos.size(); ++j) syms[free_pos[j]] = digits[j];
        if (locally_admissible(spec, Pattern(V, syms))) return true;
        std::size_t j = digits.size();
        while (j-- > 0) {
            if (++digits[j] < nsym) break;
            digits[j] = 0;
        }
        if (j == std::size_t(-1)) return false;
    }
}

inline CompileParams default_params(int b_size = 5, int dim = 1) {
    CompileParams p;
    p.prime = {0, 1, 2, 3, 4};
    p.cycle = {0, 1, 2};
    p.b_size = b_size;
    p.dim = dim;
    return p;
}

/// All nonempty patterns whose support is a subset of the given cells.
inline std::vector<Pattern> all_patterns_on(const std::vector<Coord>& cells,
                                            int alphabet_size) {
    std::vector<Pattern> out;
    const std::size_t n = cells.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        std::vector<Coord> supp;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) supp.push_back(cells[i]);
        Window w{supp};
        std::vector<Symbol> digits(w.size(), 0);
        while (true) {
            out.emplace_back(w, digits);
            std::size_t j = digits.size();
            bool done = true;
            while (j-- > 0) {
                if (++digits[j] < alphabet_size) {
                    done = false;
                    break;
                }
                digits[j] = 0;
            }
            if (done) break;
        }
    }
    return out;
}

}  // namespace th
