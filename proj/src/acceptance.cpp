#include "autoshift/acceptance.hpp"

#include <array>
#include <chrono>
#include <ostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "autoshift/io.hpp"
#include "autoshift/reduction.hpp"

namespace autoshift {

namespace {

Alphabet bin() { return Alphabet({"0", "1"}); }
Alphabet five() { return Alphabet({"a", "b", "c", "d", "e"}); }

SubshiftSpec golden_mean() {
    return SubshiftSpec::sft(
        1, bin(), {Pattern::from_cells({{{0, 0}, 1}, {{1, 0}, 1}})});
}

SubshiftSpec checkerboard() {
    std::vector<Pattern> forbidden;
    for (Symbol s : {0, 1}) {
        forbidden.push_back(Pattern::from_cells({{{0, 0}, s}, {{1, 0}, s}}));
        forbidden.push_back(Pattern::from_cells({{{0, 0}, s}, {{0, 1}, s}}));
    }
    return SubshiftSpec::sft(2, bin(), std::move(forbidden));
}

CompileParams params_for(int dim) {
    CompileParams p;
    p.prime = {0, 1, 2, 3, 4};
    p.cycle = {0, 1, 2};
    p.b_size = 5;
    p.dim = dim;
    return p;
}

/// All nonempty patterns with support contained in the given cells.
std::vector<Pattern> all_patterns_on(const std::vector<Coord>& cells, int nsym) {
    std::vector<Pattern> out;
    const std::size_t n = cells.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        std::vector<Coord> supp;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) supp.push_back(cells[i]);
        const Window w{supp};
        std::vector<Symbol> digits(w.size(), 0);
        while (true) {
            out.emplace_back(w, digits);
            std::size_t j = digits.size();
            while (j-- > 0) {
                if (++digits[j] < nsym) break;
                digits[j] = 0;
            }
            if (j == std::size_t(-1)) break;
        }
    }
    return out;
}

/// Contiguous 1D words of the lengths 1..maxlen over nsym symbols.
std::vector<Pattern> all_words_upto(int maxlen, int nsym) {
    std::vector<Pattern> out;
    for (int n = 1; n <= maxlen; ++n) {
        std::vector<Coord> cells;
        for (long long x = 0; x < n; ++x) cells.push_back({x, 0});
        for (Pattern& p : all_patterns_on(cells, nsym))
            if (p.size() == static_cast<std::size_t>(n) &&
                p.support().cells().front().x == 0)
                out.push_back(std::move(p));
    }
    return out;
}

std::vector<std::array<Symbol, 3>> all_ordered_cycles_of_five() {
    std::vector<std::array<Symbol, 3>> out;
    for (Symbol a = 0; a < 5; ++a)
        for (Symbol b = 0; b < 5; ++b)
            for (Symbol c = 0; c < 5; ++c)
                if (a != b && b != c && a != c) out.push_back({a, b, c});
    return out;
}

// --- 1. The recursive decomposition compiles every controlled 3-cycle exactly.

bool decomposition_exactness() {
    const auto cycles = all_ordered_cycles_of_five();

    const std::vector<Coord> line{{0, 0}, {1, 0}, {2, 0}};
    for (const Pattern& u : all_patterns_on(line, 2)) {
        for (const auto& cyc : cycles) {
            CompileParams p = params_for(1);
            p.cycle = cyc;
            const Cpnf compiled = cpnf_of_word(compile(u, p), 2, 5, 1);
            if (!cpnf_equal(compiled,
                            controlled_cpnf(u, three_cycle(5, cyc[0], cyc[1], cyc[2]), 2)))
                return false;
        }
    }

    const std::vector<Coord> square{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    for (const Pattern& u : all_patterns_on(square, 2)) {
        for (const auto& cyc : cycles) {
            CompileParams p = params_for(2);
            p.cycle = cyc;
            const Cpnf compiled = cpnf_of_word(compile(u, p), 2, 5, 2);
            if (!cpnf_equal(compiled,
                            controlled_cpnf(u, three_cycle(5, cyc[0], cyc[1], cyc[2]), 2)))
                return false;
        }
    }
    return true;
}

// --- 2. (b c)(d e) after (a b)(d e) is the cycle a -> c -> b -> a; squared
//        it is a -> b -> c -> a.

bool involution_identity() {
    const Perm phi = double_swap(5, 0, 1, 3, 4);
    const Perm psi = double_swap(5, 1, 2, 3, 4);
    const Perm prod = compose(psi, phi);
    return prod == three_cycle(5, 0, 2, 1) &&
           compose(prod, prod) == three_cycle(5, 0, 1, 2);
}

// --- 3. The compiled word is the identity exactly on non-language patterns.

bool reduction_correctness() {
    const SubshiftSpec y = SubshiftSpec::full(1, five());
    const CompileParams p = params_for(1);
    const SubshiftSpec families[] = {golden_mean(),
                                     SubshiftSpec::sunny_side_up(1, bin(), "_")};
    for (const SubshiftSpec& x : families) {
        for (const Pattern& u : all_words_upto(6, 2)) {
            const LangAnswer in_lang = language_contains(x, u);
            const LangAnswer ident = word_is_identity(reduction_map(u, p), x, y);
            if (in_lang.is_unknown() || ident.is_unknown()) return false;
            if (ident.is_yes() != in_lang.is_no()) return false;
        }
    }
    return true;
}

// --- 4. Compiled words are pairwise distinct, byte for byte.

bool reduction_injective() {
    const CompileParams p = params_for(1);
    std::set<std::string> seen;
    std::size_t count = 0;
    for (const Pattern& u : all_patterns_on({{0, 0}, {1, 0}, {2, 0}}, 2)) {
        ++count;
        if (!seen.insert(genword_to_json(reduction_map(u, p), 1, bin(), five()).dump())
                 .second)
            return false;
    }
    return count == 26 && seen.size() == count;
}

// --- 5. Controlled-map algebra: first-layer preservation, shift
//        conjugation, inverses, and the identity criterion.

bool controlled_suite() {
    const Alphabet a = bin();
    const Alphabet b = five();
    const Perm abc = three_cycle(5, 0, 1, 2);
    const CompileParams p = params_for(1);

    std::vector<Pattern> small;  // at most 2 cells within {0,1,2}
    for (const Pattern& u : all_patterns_on({{0, 0}, {1, 0}, {2, 0}}, 2))
        if (u.size() <= 2) small.push_back(u);

    // first layer untouched by any compiled (net-shift-zero) word
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> xa(0, 1), yb(0, 4);
    for (const Pattern& u : small) {
        const GenWord w = compile(u, p);
        std::vector<BlockMap> letters;
        long long r = 0;
        for (const GenLetter& l : w) {
            letters.push_back(letter_blockmap(l, a, b, 1));
            if (l.kind == GenLetter::Kind::Shift) r += l.shift.max_norm();
        }
        if (cpnf_of_word(w, 2, 5, 1).shift != Coord{0, 0}) return false;
        const Window supp = ball(1, r);
        for (int t = 0; t < 20; ++t) {
            std::vector<Symbol> syms;
            for (std::size_t i = 0; i < supp.size(); ++i)
                syms.push_back(pair_symbol(xa(rng), yb(rng), 5));
            const Pattern in(supp, syms);
            Pattern cur = in;
            for (auto it = letters.rbegin(); it != letters.rend(); ++it)
                cur = apply_to_pattern(*it, cur);
            for (const Coord& c : cur.support().cells())
                if (pair_left(*cur.at(c), 5) != pair_left(*in.at(c), 5)) return false;
        }
    }

    // conjugating by a partial shift relocates the condition window
    for (const Pattern& u : small) {
        for (const Coord& g : {Coord{1, 0}, Coord{-1, 0}}) {
            const Cpnf conj = cpnf_compose(
                cpnf_of_letter(GenLetter::make_shift(g), 2, 5),
                cpnf_compose(controlled_cpnf(shift_pattern(u, g), abc, 2),
                             cpnf_of_letter(GenLetter::make_shift(-g), 2, 5)));
            if (!cpnf_equal(controlled_cpnf(u, abc, 2), conj)) return false;
        }
    }

    // C_{u,alpha} and C_{u,alpha^{-1}} compose to the identity
    const Perm alphas[] = {abc, three_cycle(5, 2, 3, 4), three_cycle(5, 1, 3, 4),
                           double_swap(5, 0, 1, 2, 3), double_swap(5, 0, 2, 1, 4)};
    const BlockMap id_prod = identity_blockmap(product_alphabet(a, b), 1);
    for (const Pattern& u : all_patterns_on({{0, 0}, {1, 0}}, 2)) {
        for (const Perm& alpha : alphas) {
            const BlockMap f = controlled_map(u, alpha, a, b, 1);
            const BlockMap g = controlled_map(u, alpha.inverse(), a, b, 1);
            if (!equal_syntactic(compose(f, g), id_prod)) return false;
        }
    }

    // a single controlled map is the identity on X x Full iff its condition
    // is outside the language of X
    const SubshiftSpec gm = golden_mean();
    const SubshiftSpec y = SubshiftSpec::full(1, b);
    for (const Pattern& u : all_words_upto(5, 2)) {
        const LangAnswer ident = is_identity_on(controlled_cpnf(u, abc, 2), gm, y);
        if (ident.is_unknown()) return false;
        if (ident.is_yes() != language_contains(gm, u).is_no()) return false;
    }
    return true;
}

// --- 6. equal_on matches brute-force agreement on the radius-2 language.

bool equality_decision() {
    const SubshiftSpec gm = golden_mean();
    const std::vector<Pattern> lang2 = language_enumerate(gm, ball(1, 2));
    auto oracle = [&](const BlockMap& f, const BlockMap& g) {
        const BlockMap f2 = raise_radius(f, 2);
        const BlockMap g2 = raise_radius(g, 2);
        for (const Pattern& p : lang2)
            if (!(apply_to_pattern(f2, p) == apply_to_pattern(g2, p))) return false;
        return true;
    };
    auto agree = [&](const BlockMap& f, const BlockMap& g) {
        const LangAnswer ans = equal_on(f, g, gm);
        return !ans.is_unknown() && ans.is_yes() == oracle(f, g);
    };

    const std::vector<BlockMap> maps = enumerate_blockmaps(bin(), bin(), 1, 1);
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, maps.size() - 1);
    for (int t = 0; t < 200; ++t)
        if (!agree(maps[pick(rng)], maps[pick(rng)])) return false;

    // every radius-1 map against all its one-entry modifications
    for (std::size_t i = 4; i < maps.size(); ++i) {
        for (std::size_t k = 0; k < maps[i].table.size(); ++k) {
            BlockMap g = maps[i];
            g.table[k] ^= 1;
            if (!agree(maps[i], g)) return false;
        }
    }
    return true;
}

// --- 7. Colanguage flags appear at the first window, and never on
//        language members.

bool colanguage_semidecision() {
    const SubshiftSpec cb = checkerboard();
    const Pattern diag = Pattern::from_cells({{{0, 0}, 0}, {{1, 1}, 1}});
    std::vector<Window> schedule{Window({{0, 0}, {1, 0}, {0, 1}, {1, 1}})};
    for (Window& v : default_schedule(cb, diag, 8)) schedule.push_back(std::move(v));
    if (colang_semidecide(cb, diag, schedule) != std::optional<int>(0)) return false;

    const SubshiftSpec gm = golden_mean();
    const Pattern ones = Pattern::from_cells({{{0, 0}, 1}, {{1, 0}, 1}});
    if (colang_semidecide(gm, ones, default_schedule(gm, ones, 8)) !=
        std::optional<int>(0))
        return false;

    for (const Pattern& w : all_patterns_on({{0, 0}, {1, 0}, {2, 0}, {3, 0}}, 2)) {
        if (!language_contains(gm, w).is_yes()) continue;
        if (colang_semidecide(gm, w, default_schedule(gm, w, 8))) return false;
    }
    return true;
}

// --- 8. The normal-form evaluator agrees with sequential local-rule
//        application on every admissible input.

bool evaluator_crosscheck() {
    const Alphabet a = bin();
    const SubshiftSpec x = golden_mean();
    const SubshiftSpec y = SubshiftSpec::sunny_side_up(1, five(), "_");
    const Alphabet b = y.alphabet();  // a..e plus bottom
    const Symbol bot = y.bottom();

    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> len_d(1, 12), kind_d(0, 3), dir_d(0, 1);
    std::uniform_int_distribution<int> sym_d(0, 1), letter_d(0, 4);

    int done = 0;
    while (done < 500) {
        GenWord w;
        int shifts = 0;
        const int len = len_d(rng);
        for (int i = 0; i < len; ++i) {
            if (kind_d(rng) == 0 && shifts < 4) {
                ++shifts;
                w.push_back(GenLetter::make_shift({dir_d(rng) ? 1 : -1, 0}));
            } else {
                Symbol p = letter_d(rng), q = letter_d(rng), r = letter_d(rng);
                if (p == q || q == r || p == r) {
                    p = 0;
                    q = 1;
                    r = 2;
                }
                w.push_back(
                    GenLetter::make_ctrl(sym_d(rng), three_cycle(b.size(), p, q, r)));
            }
        }

        const Cpnf n = cpnf_of_word(w, a.size(), b.size(), 1);
        if (n.window.size() > 3) continue;  // resample: condition window too wide
        ++done;

        long long r = 0;
        std::vector<BlockMap> letters;
        for (const GenLetter& l : w) {
            letters.push_back(letter_blockmap(l, a, b, 1));
            if (l.kind == GenLetter::Kind::Shift) r += l.shift.max_norm();
        }
        const Window supp = ball(1, r);

        // admissible inputs: golden-mean left layers times sunny right layers
        const std::vector<Pattern> lefts = language_enumerate(x, supp);
        std::vector<Pattern> rights;
        rights.emplace_back(supp, std::vector<Symbol>(supp.size(), bot));
        for (std::size_t i = 0; i < supp.size(); ++i)
            for (Symbol s = 0; s < bot; ++s) {
                std::vector<Symbol> syms(supp.size(), bot);
                syms[i] = s;
                rights.emplace_back(supp, std::move(syms));
            }

        for (const Pattern& left : lefts) {
            for (const Pattern& right : rights) {
                const Pattern in = product_pattern(left, right, b.size());
                Pattern cur = in;
                for (auto it = letters.rbegin(); it != letters.rend(); ++it)
                    cur = apply_to_pattern(*it, cur);
                const Pattern via = apply_cpnf_to_pattern(n, in);
                for (const Coord& c : cur.support().cells()) {
                    auto s = via.at(c);
                    if (!s || *s != *cur.at(c)) return false;
                }
            }
        }
    }
    return true;
}

// --- 9. Letter counts follow the decomposition recurrence.

bool length_recurrence() {
    const CompileParams p = params_for(1);
    const std::size_t expected[] = {1, 12, 60};
    for (int n = 1; n <= 3; ++n) {
        std::vector<Coord> cells;
        for (long long x = 0; x < n; ++x) cells.push_back({x, 0});
        for (const Pattern& u : all_patterns_on(cells, 2)) {
            if (u.size() != static_cast<std::size_t>(n)) continue;
            if (compile(u, p).size() != expected[n - 1]) return false;
        }
    }
    return true;
}

}  // namespace

bool run_acceptance(std::ostream& out) {
    struct Criterion {
        const char* name;
        bool (*fn)();
    };
    const Criterion criteria[] = {
        {"decomposition compiles every controlled 3-cycle exactly", decomposition_exactness},
        {"involution product is the expected 3-cycle", involution_identity},
        {"compiled word is the identity iff the pattern is outside the language",
         reduction_correctness},
        {"pattern-to-word map is injective", reduction_injective},
        {"controlled-map algebra (layers, conjugation, inverses, identity criterion)",
         controlled_suite},
        {"map equality decision matches the brute-force language oracle",
         equality_decision},
        {"colanguage flags at the first window and spares language members",
         colanguage_semidecision},
        {"normal-form and sequential evaluators agree", evaluator_crosscheck},
        {"compiled word lengths are 1, 12, 60", length_recurrence},
    };

    bool all = true;
    int i = 0;
    for (const Criterion& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        const bool ok = c.fn();
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
        out << ++i << ". " << c.name << ": " << (ok ? "PASS" : "FAIL") << " (" << ms
            << " ms)\n";
        all = all && ok;
    }
    return all;
}

}  // namespace autoshift
