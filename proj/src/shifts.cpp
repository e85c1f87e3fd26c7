#include "autoshift/shifts.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace autoshift {

namespace {

void check_symbols(const SubshiftSpec& spec, const Pattern& w) {
    if (w.max_symbol() >= spec.alphabet().size())
        throw std::invalid_argument("pattern symbol outside the spec alphabet");
}

std::size_t checked_pow(std::size_t base, std::size_t exp, std::size_t limit) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (r > limit / base) return limit + 1;
        r *= base;
    }
    return r;
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw std::invalid_argument("alphabet must have at least 1 symbol");
    std::set<std::string> seen;
    for (const auto& n : names_)
        if (!seen.insert(n).second)
            throw std::invalid_argument("alphabet symbols must be distinct");
}

std::optional<Symbol> Alphabet::index(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<Symbol>(i);
    return std::nullopt;
}

Alphabet product_alphabet(const Alphabet& left, const Alphabet& right) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(left.size()) * right.size());
    for (const auto& l : left.names())
        for (const auto& r : right.names()) names.push_back(l + "," + r);
    return Alphabet(std::move(names));
}

Pattern project_pattern(const Pattern& w, int right_size, bool keep_left) {
    std::vector<Symbol> syms;
    syms.reserve(w.size());
    for (Symbol s : w.symbols())
        syms.push_back(keep_left ? pair_left(s, right_size) : pair_right(s, right_size));
    return Pattern(w.support(), std::move(syms));
}

Pattern product_pattern(const Pattern& left, const Pattern& right, int right_size) {
    if (left.support() != right.support())
        throw std::invalid_argument("product pattern components must share a support");
    std::vector<Symbol> syms;
    syms.reserve(left.size());
    for (std::size_t i = 0; i < left.size(); ++i)
        syms.push_back(pair_symbol(left.symbols()[i], right.symbols()[i], right_size));
    return Pattern(left.support(), std::move(syms));
}

// ---------------------------------------------------------------------------
// 1D SFT decision: forbidden patterns are completed to words, then the
// transition graph on admissible (m-1)-blocks answers membership by
// bi-infinite extendability.
// ---------------------------------------------------------------------------

namespace detail {

struct Sft1dOracle {
    int nsym = 0;
    int m = 1;  // max forbidden word length
    int k = 0;  // block size m-1
    std::vector<std::vector<Symbol>> forbidden_words;
    std::vector<char> fwd_inf;  // block starts some forward-infinite admissible ray
    std::vector<char> bwd_inf;  // block ends some backward-infinite admissible ray

    bool word_dirty(const std::vector<Symbol>& w) const {
        for (const auto& f : forbidden_words) {
            if (f.size() > w.size()) continue;
            for (std::size_t i = 0; i + f.size() <= w.size(); ++i) {
                bool hit = true;
                for (std::size_t j = 0; j < f.size(); ++j)
                    if (w[i + j] != f[j]) {
                        hit = false;
                        break;
                    }
                if (hit) return true;
            }
        }
        return false;
    }

    std::size_t block_index(const std::vector<Symbol>& w, std::size_t from) const {
        std::size_t idx = 0;
        for (int j = 0; j < k; ++j)
            idx = idx * static_cast<std::size_t>(nsym) +
                  static_cast<std::size_t>(w[from + static_cast<std::size_t>(j)]);
        return idx;
    }

    bool word_in_language(const std::vector<Symbol>& w) const {
        if (word_dirty(w)) return false;
        if (k == 0) return true;  // every clean word extends freely
        if (static_cast<int>(w.size()) < k)
            throw std::logic_error("query word shorter than block size");
        return bwd_inf[block_index(w, 0)] != 0 &&
               fwd_inf[block_index(w, w.size() - static_cast<std::size_t>(k))] != 0;
    }
};

namespace {

std::unique_ptr<Sft1dOracle> build_sft1d(const Alphabet& alphabet,
                                         const std::vector<Pattern>& forbidden) {
    auto o = std::make_unique<Sft1dOracle>();
    o->nsym = alphabet.size();

    // Complete each forbidden pattern (possibly with gaps) to contiguous words.
    std::set<std::vector<Symbol>> words;
    for (const Pattern& f : forbidden) {
        long long lo = f.support().cells().front().x;
        long long hi = f.support().cells().back().x;
        std::vector<Coord> interval;
        for (long long x = lo; x <= hi; ++x) interval.push_back({x, 0});
        for (const Pattern& ext : enumerate_extensions(f, Window(interval), o->nsym))
            words.insert(ext.symbols());
    }
    o->forbidden_words.assign(words.begin(), words.end());
    for (const auto& w : o->forbidden_words)
        o->m = std::max(o->m, static_cast<int>(w.size()));
    o->k = o->m - 1;
    if (o->k == 0) return o;

    const std::size_t nblocks =
        checked_pow(static_cast<std::size_t>(o->nsym), static_cast<std::size_t>(o->k),
                    std::size_t{1} << 24);
    if (nblocks > (std::size_t{1} << 24))
        throw std::length_error("1D SFT block graph too large");

    std::vector<char> ok(nblocks, 0);
    {
        std::vector<Symbol> digits(static_cast<std::size_t>(o->k), 0);
        for (std::size_t idx = 0; idx < nblocks; ++idx) {
            ok[idx] = !o->word_dirty(digits);
            for (std::size_t j = digits.size(); j-- > 0;) {
                if (++digits[j] < o->nsym) break;
                digits[j] = 0;
            }
        }
    }

    // A block admits an infinite continuation iff it survives iterated
    // removal of blocks without an admissible successor (resp. predecessor).
    auto prune = [&](bool forward) {
        std::vector<char> alive = ok;
        std::vector<Symbol> digits(static_cast<std::size_t>(o->k));
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t idx = 0; idx < nblocks; ++idx) {
                if (!alive[idx]) continue;
                std::size_t t = idx;
                for (std::size_t j = digits.size(); j-- > 0;) {
                    digits[j] = static_cast<Symbol>(t % static_cast<std::size_t>(o->nsym));
                    t /= static_cast<std::size_t>(o->nsym);
                }
                bool has_step = false;
                for (Symbol s = 0; s < o->nsym && !has_step; ++s) {
                    std::vector<Symbol> word;
                    word.reserve(digits.size() + 1);
                    if (forward) {
                        word.assign(digits.begin(), digits.end());
                        word.push_back(s);
                    } else {
                        word.push_back(s);
                        word.insert(word.end(), digits.begin(), digits.end());
                    }
                    if (o->word_dirty(word)) continue;
                    const std::size_t next = o->block_index(word, forward ? 1 : 0);
                    if (alive[next]) has_step = true;
                }
                if (!has_step) {
                    alive[idx] = 0;
                    changed = true;
                }
            }
        }
        return alive;
    };
    o->fwd_inf = prune(true);
    o->bwd_inf = prune(false);
    return o;
}

}  // namespace
}  // namespace detail

// ---------------------------------------------------------------------------
// SubshiftSpec factories
// ---------------------------------------------------------------------------

SubshiftSpec SubshiftSpec::full(int dim, Alphabet alphabet) {
    if (dim != 1 && dim != 2) throw std::invalid_argument("dimension must be 1 or 2");
    SubshiftSpec s;
    s.kind_ = Kind::Full;
    s.dim_ = dim;
    s.alphabet_ = std::move(alphabet);
    return s;
}

SubshiftSpec SubshiftSpec::sft(int dim, Alphabet alphabet, std::vector<Pattern> forbidden) {
    if (dim != 1 && dim != 2) throw std::invalid_argument("dimension must be 1 or 2");
    for (const Pattern& f : forbidden) {
        if (f.empty()) throw std::invalid_argument("forbidden patterns must be nonempty");
        if (f.max_symbol() >= alphabet.size())
            throw std::invalid_argument("forbidden pattern symbol outside alphabet");
        if (dim == 1)
            for (const Coord& c : f.support().cells())
                if (c.y != 0) throw std::invalid_argument("1D pattern with 2D support");
    }
    SubshiftSpec s;
    s.kind_ = Kind::Sft;
    s.dim_ = dim;
    s.alphabet_ = std::move(alphabet);
    s.forbidden_ = std::move(forbidden);
    if (dim == 1) s.oracle_ = detail::build_sft1d(s.alphabet_, s.forbidden_);
    return s;
}

SubshiftSpec SubshiftSpec::sunny_side_up(int dim, Alphabet prime, std::string bottom) {
    if (dim != 1 && dim != 2) throw std::invalid_argument("dimension must be 1 or 2");
    if (prime.index(bottom))
        throw std::invalid_argument("bottom symbol must not belong to the prime alphabet");
    std::vector<std::string> names = prime.names();
    names.push_back(std::move(bottom));
    SubshiftSpec s;
    s.kind_ = Kind::SunnySideUp;
    s.dim_ = dim;
    s.alphabet_ = Alphabet(std::move(names));
    s.bottom_ = s.alphabet_.size() - 1;
    return s;
}

SubshiftSpec SubshiftSpec::product(SubshiftSpec left, SubshiftSpec right) {
    if (left.dim() != right.dim())
        throw std::invalid_argument("product components must share the dimension");
    SubshiftSpec s;
    s.kind_ = Kind::Product;
    s.dim_ = left.dim();
    s.alphabet_ = product_alphabet(left.alphabet(), right.alphabet());
    s.left_ = std::make_shared<SubshiftSpec>(std::move(left));
    s.right_ = std::make_shared<SubshiftSpec>(std::move(right));
    return s;
}

bool SubshiftSpec::language_exact() const {
    switch (kind_) {
        case Kind::Full:
        case Kind::SunnySideUp:
            return true;
        case Kind::Sft:
            return dim_ == 1;
        case Kind::Product:
            return left_->language_exact() && right_->language_exact();
    }
    return false;
}

// ---------------------------------------------------------------------------
// Oracles
// ---------------------------------------------------------------------------

bool locally_admissible(const SubshiftSpec& spec, const Pattern& w) {
    check_symbols(spec, w);
    switch (spec.kind()) {
        case SubshiftSpec::Kind::Full:
            return true;
        case SubshiftSpec::Kind::Sft:
            for (const Pattern& f : spec.forbidden())
                if (occurs_in(f, w)) return false;
            return true;
        case SubshiftSpec::Kind::SunnySideUp: {
            int prime_cells = 0;
            for (Symbol s : w.symbols())
                if (s != spec.bottom()) ++prime_cells;
            return prime_cells <= 1;
        }
        case SubshiftSpec::Kind::Product: {
            const int rs = spec.right().alphabet().size();
            return locally_admissible(spec.left(), project_pattern(w, rs, true)) &&
                   locally_admissible(spec.right(), project_pattern(w, rs, false));
        }
    }
    return false;
}

namespace {

// Searches for an (h, v)-periodic admissible completion of w for periods
// up to 4; a hit certifies language membership of a 2D SFT pattern.
bool periodic_extension_exists(const SubshiftSpec& spec, const Pattern& w) {
    const int nsym = spec.alphabet().size();
    for (long long h = 1; h <= 4; ++h) {
        for (long long v = 1; v <= 4; ++v) {
            std::vector<Symbol> torus(static_cast<std::size_t>(h * v), -1);
            auto cell = [&](long long x, long long y) -> Symbol& {
                const long long mx = ((x % h) + h) % h;
                const long long my = ((y % v) + v) % v;
                return torus[static_cast<std::size_t>(mx * v + my)];
            };
            bool consistent = true;
            for (std::size_t i = 0; i < w.size() && consistent; ++i) {
                Symbol& t = cell(w.support().cells()[i].x, w.support().cells()[i].y);
                if (t >= 0 && t != w.symbols()[i]) consistent = false;
                t = w.symbols()[i];
            }
            if (!consistent) continue;

            std::vector<std::size_t> free_pos;
            for (std::size_t i = 0; i < torus.size(); ++i)
                if (torus[i] < 0) free_pos.push_back(i);
            const std::size_t total = checked_pow(static_cast<std::size_t>(nsym),
                                                  free_pos.size(), std::size_t{1} << 16);
            if (total > (std::size_t{1} << 16)) continue;

            auto admissible = [&]() {
                for (const Pattern& f : spec.forbidden()) {
                    for (long long ox = 0; ox < h; ++ox) {
                        for (long long oy = 0; oy < v; ++oy) {
                            bool hit = true;
                            for (std::size_t i = 0; i < f.size() && hit; ++i) {
                                const Coord& c = f.support().cells()[i];
                                if (cell(c.x + ox, c.y + oy) != f.symbols()[i]) hit = false;
                            }
                            if (hit) return false;
                        }
                    }
                }
                return true;
            };

            std::vector<Symbol> digits(free_pos.size(), 0);
            for (std::size_t it = 0; it < total; ++it) {
                for (std::size_t j = 0; j < free_pos.size(); ++j)
                    torus[free_pos[j]] = digits[j];
                if (admissible()) return true;
                for (std::size_t j = digits.size(); j-- > 0;) {
                    if (++digits[j] < nsym) break;
                    digits[j] = 0;
                }
            }
        }
    }
    return false;
}

}  // namespace

std::vector<Window> default_schedule(const SubshiftSpec& spec, const Pattern& w,
                                     int budget) {
    long long rw = 0;
    for (const Coord& c : w.support().cells()) rw = std::max(rw, c.max_norm());
    std::vector<Window> schedule;
    for (int i = 0; i < budget; ++i)
        schedule.push_back(w.support().united(ball(spec.dim(), rw + i)));
    return schedule;
}

std::optional<int> colang_semidecide(const SubshiftSpec& spec, const Pattern& w,
                                     const std::vector<Window>& schedule) {
    check_symbols(spec, w);
    const int nsym = spec.alphabet().size();
    for (std::size_t i = 0; i < schedule.size(); ++i) {
        const Window& V = schedule[i];
        if (!V.contains_all(w.support()))
            throw std::invalid_argument("schedule window must contain the support");
        if (i > 0 && !V.contains_all(schedule[i - 1]))
            throw std::invalid_argument("schedule must be increasing");

        const std::size_t total = checked_pow(static_cast<std::size_t>(nsym),
                                              V.size() - w.size(), std::size_t{1} << 22);
        if (total > (std::size_t{1} << 22)) return std::nullopt;

        const auto& cells = V.cells();
        std::vector<Symbol> syms(cells.size(), -1);
        std::vector<std::size_t> free_pos;
        for (std::size_t j = 0; j < cells.size(); ++j) {
            if (auto s = w.at(cells[j]))
                syms[j] = *s;
            else
                free_pos.push_back(j);
        }
        std::vector<Symbol> digits(free_pos.size(), 0);
        bool all_inadmissible = true;
        for (std::size_t it = 0; it < total && all_inadmissible; ++it) {
            for (std::size_t j = 0; j < free_pos.size(); ++j) syms[free_pos[j]] = digits[j];
            if (locally_admissible(spec, Pattern(V, syms))) all_inadmissible = false;
            for (std::size_t j = digits.size(); j-- > 0;) {
                if (++digits[j] < nsym) break;
                digits[j] = 0;
            }
        }
        if (all_inadmissible) return static_cast<int>(i);
    }
    return std::nullopt;
}

LangAnswer language_contains(const SubshiftSpec& spec, const Pattern& w, int budget) {
    check_symbols(spec, w);
    if (w.empty()) return LangAnswer::yes();
    switch (spec.kind()) {
        case SubshiftSpec::Kind::Full:
            return LangAnswer::yes();
        case SubshiftSpec::Kind::SunnySideUp:
            return locally_admissible(spec, w) ? LangAnswer::yes() : LangAnswer::no(0);
        case SubshiftSpec::Kind::Product: {
            const int rs = spec.right().alphabet().size();
            LangAnswer l = language_contains(spec.left(), project_pattern(w, rs, true), budget);
            LangAnswer r = language_contains(spec.right(), project_pattern(w, rs, false), budget);
            if (l.is_no()) return l;
            if (r.is_no()) return r;
            if (l.is_unknown()) return l;
            if (r.is_unknown()) return r;
            return LangAnswer::yes();
        }
        case SubshiftSpec::Kind::Sft: {
            if (spec.dim() == 1) {
                const auto& o = *spec.oracle_;
                const long long lo = w.support().cells().front().x;
                long long hi = lo;
                for (const Coord& c : w.support().cells()) hi = std::max(hi, c.x);
                const long long n = hi - lo + 1;
                const long long len = std::max<long long>(n, o.k);
                std::vector<Coord> interval;
                for (long long x = lo; x < lo + len; ++x) interval.push_back({x, 0});
                for (const Pattern& ext :
                     enumerate_extensions(w, Window(interval), o.nsym))
                    if (o.word_in_language(ext.symbols())) return LangAnswer::yes();
                return LangAnswer::no();
            }
            if (!locally_admissible(spec, w)) return LangAnswer::no(0);
            if (periodic_extension_exists(spec, w)) return LangAnswer::yes();
            if (auto idx = colang_semidecide(spec, w, default_schedule(spec, w, budget)))
                return LangAnswer::no(*idx);
            return LangAnswer::unknown(budget);
        }
    }
    return LangAnswer::unknown();
}

std::vector<Pattern> language_enumerate(const SubshiftSpec& spec, const Window& V,
                                        int budget) {
    const int nsym = spec.alphabet().size();
    const std::size_t total =
        checked_pow(static_cast<std::size_t>(nsym), V.size(), std::size_t{1} << 22);
    if (total > (std::size_t{1} << 22))
        throw std::length_error("language enumeration window too large");
    std::vector<Pattern> out;
    std::vector<Symbol> digits(V.size(), 0);
    for (std::size_t it = 0; it < total; ++it) {
        Pattern p(V, digits);
        LangAnswer a = language_contains(spec, p, budget);
        if (a.is_unknown())
            throw std::runtime_error("language oracle exhausted its budget during enumeration");
        if (a.is_yes()) out.push_back(std::move(p));
        for (std::size_t j = digits.size(); j-- > 0;) {
            if (++digits[j] < nsym) break;
            digits[j] = 0;
        }
    }
    return out;
}

bool is_alpha_permutable(const SubshiftSpec& spec, const Perm& alpha) {
    if (alpha.degree() != spec.alphabet().size())
        throw std::invalid_argument("permutation degree must match the alphabet");
    switch (spec.kind()) {
        case SubshiftSpec::Kind::Full:
            return true;
        case SubshiftSpec::Kind::SunnySideUp:
            return alpha(spec.bottom()) == spec.bottom();
        default:
            return false;  // not decided for general kinds
    }
}

}  // namespace autoshift
