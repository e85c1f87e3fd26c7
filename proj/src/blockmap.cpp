#include "autoshift/blockmap.hpp"

#include <algorithm>
#include <stdexcept>

namespace autoshift {

namespace {

std::size_t checked_pow(std::size_t base, std::size_t exp, std::size_t limit) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && r > limit / base) return limit + 1;
        r *= base;
    }
    return r;
}

std::size_t table_size_or_throw(int nsym, int dim, int radius) {
    const std::size_t cells = ball_cell_count(dim, radius);
    if (cells > kMaxBallCells)
        throw std::length_error("block map radius cap exceeded");
    const std::size_t size =
        checked_pow(static_cast<std::size_t>(nsym), cells, kMaxTableSize);
    if (size > kMaxTableSize) throw std::length_error("block map table too large");
    return size;
}

void check_same_alphabets(const BlockMap& f, const BlockMap& g) {
    if (f.in_alphabet != g.in_alphabet || f.out_alphabet != g.out_alphabet ||
        f.dim != g.dim)
        throw std::invalid_argument("block map alphabet mismatch");
}

}  // namespace

std::size_t ball_cell_count(int dim, int radius) {
    const std::size_t side = 2 * static_cast<std::size_t>(radius) + 1;
    return dim == 1 ? side : side * side;
}

BlockMap make_blockmap(Alphabet in, Alphabet out, int dim, int radius,
                       const std::function<Symbol(const std::vector<Symbol>&)>& rule) {
    const std::size_t size = table_size_or_throw(in.size(), dim, radius);
    BlockMap f{std::move(in), std::move(out), dim, radius, {}};
    f.table.reserve(size);
    const std::size_t ncells = ball_cell_count(dim, radius);
    std::vector<Symbol> digits(ncells, 0);
    for (std::size_t idx = 0; idx < size; ++idx) {
        Symbol s = rule(digits);
        if (s < 0 || s >= f.out_alphabet.size())
            throw std::invalid_argument("block map rule produced an out-of-range symbol");
        f.table.push_back(s);
        for (std::size_t j = digits.size(); j-- > 0;) {
            if (++digits[j] < f.in_alphabet.size()) break;
            digits[j] = 0;
        }
    }
    return f;
}

BlockMap identity_blockmap(const Alphabet& a, int dim) {
    return make_blockmap(a, a, dim, 0,
                         [](const std::vector<Symbol>& syms) { return syms[0]; });
}

std::size_t encode_neighborhood(const BlockMap& f, const std::vector<Symbol>& syms) {
    std::size_t idx = 0;
    for (Symbol s : syms)
        idx = idx * static_cast<std::size_t>(f.in_alphabet.size()) +
              static_cast<std::size_t>(s);
    return idx;
}

Pattern apply_to_pattern(const BlockMap& f, const Pattern& w) {
    if (w.max_symbol() >= f.in_alphabet.size())
        throw std::invalid_argument("pattern symbol outside the input alphabet");
    const Window nb = ball(f.dim, f.radius);
    std::vector<std::pair<Coord, Symbol>> out;
    std::vector<Symbol> syms(nb.size());
    for (const Coord& i : w.support().cells()) {
        bool covered = true;
        for (std::size_t k = 0; k < nb.size() && covered; ++k) {
            auto s = w.at(i + nb.cells()[k]);
            if (!s)
                covered = false;
            else
                syms[k] = *s;
        }
        if (covered) out.emplace_back(i, f.table[encode_neighborhood(f, syms)]);
    }
    if (out.empty()) throw std::invalid_argument("pattern support too small to apply block map");
    return Pattern::from_cells(std::move(out));
}

BlockMap compose(const BlockMap& f, const BlockMap& g) {
    if (g.out_alphabet != f.in_alphabet || f.dim != g.dim)
        throw std::invalid_argument("block map composition alphabet mismatch");
    const int r = f.radius + g.radius;
    const Window nb = ball(f.dim, r);
    return make_blockmap(g.in_alphabet, f.out_alphabet, f.dim, r,
                         [&](const std::vector<Symbol>& syms) {
                             Pattern p(nb, syms);
                             Pattern mid = apply_to_pattern(g, p);
                             Pattern outp = apply_to_pattern(f, mid);
                             return outp.symbols()[0];
                         });
}

BlockMap raise_radius(const BlockMap& f, int r2) {
    if (r2 < f.radius) throw std::invalid_argument("cannot lower a block map radius");
    if (r2 == f.radius) return f;
    const Window big = ball(f.dim, r2);
    const Window small = ball(f.dim, f.radius);
    std::vector<std::size_t> pos;
    pos.reserve(small.size());
    for (const Coord& c : small.cells()) {
        auto it = std::lower_bound(big.cells().begin(), big.cells().end(), c);
        pos.push_back(static_cast<std::size_t>(it - big.cells().begin()));
    }
    std::vector<Symbol> inner(small.size());
    return make_blockmap(f.in_alphabet, f.out_alphabet, f.dim, r2,
                         [&](const std::vector<Symbol>& syms) {
                             for (std::size_t k = 0; k < pos.size(); ++k)
                                 inner[k] = syms[pos[k]];
                             return f.table[encode_neighborhood(f, inner)];
                         });
}

bool equal_syntactic(const BlockMap& f, const BlockMap& g) {
    check_same_alphabets(f, g);
    const int r = std::max(f.radius, g.radius);
    return raise_radius(f, r).table == raise_radius(g, r).table;
}

LangAnswer equal_on(const BlockMap& f, const BlockMap& g, const SubshiftSpec& spec,
                    int budget) {
    check_same_alphabets(f, g);
    if (spec.alphabet() != f.in_alphabet)
        throw std::invalid_argument("spec alphabet must match the block map input");
    const int r = std::max(f.radius, g.radius);
    const BlockMap fr = raise_radius(f, r);
    const BlockMap gr = raise_radius(g, r);
    const Window nb = ball(f.dim, r);

    bool unknown = false;
    std::vector<Symbol> digits(nb.size(), 0);
    for (std::size_t idx = 0; idx < fr.table.size(); ++idx) {
        if (fr.table[idx] != gr.table[idx]) {
            LangAnswer a = language_contains(spec, Pattern(nb, digits), budget);
            if (a.is_yes()) return LangAnswer::no();
            if (a.is_unknown()) unknown = true;
        }
        for (std::size_t j = digits.size(); j-- > 0;) {
            if (++digits[j] < fr.in_alphabet.size()) break;
            digits[j] = 0;
        }
    }
    return unknown ? LangAnswer::unknown() : LangAnswer::yes();
}

std::size_t blockmap_count(const Alphabet& in, const Alphabet& out, int dim, int radius) {
    const std::size_t inputs = table_size_or_throw(in.size(), dim, radius);
    const std::size_t count = checked_pow(static_cast<std::size_t>(out.size()), inputs,
                                          std::size_t{1} << 30);
    if (count > (std::size_t{1} << 30))
        throw std::length_error("too many block maps to enumerate");
    return count;
}

BlockMap blockmap_at(const Alphabet& in, const Alphabet& out, int dim, int radius,
                     std::size_t idx) {
    const std::size_t inputs = table_size_or_throw(in.size(), dim, radius);
    BlockMap f{in, out, dim, radius, std::vector<Symbol>(inputs, 0)};
    // idx is the table read as a base-|out| number, first entry most significant.
    for (std::size_t k = inputs; k-- > 0;) {
        f.table[k] = static_cast<Symbol>(idx % static_cast<std::size_t>(out.size()));
        idx /= static_cast<std::size_t>(out.size());
    }
    if (idx != 0) throw std::out_of_range("block map index out of range");
    return f;
}

std::vector<BlockMap> enumerate_blockmaps(const Alphabet& in, const Alphabet& out,
                                          int dim, int max_radius) {
    std::vector<BlockMap> maps;
    for (int r = 0; r <= max_radius; ++r) {
        const std::size_t count = blockmap_count(in, out, dim, r);
        if (count > (std::size_t{1} << 20))
            throw std::length_error("too many block maps to materialize");
        for (std::size_t i = 0; i < count; ++i)
            maps.push_back(blockmap_at(in, out, dim, r, i));
    }
    return maps;
}

}  // namespace autoshift
