#include "autoshift/autgroup.hpp"

#include <algorithm>
#include <stdexcept>

namespace autoshift {

namespace {

std::size_t pow_sz(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    while (exp--) r *= base;
    return r;
}

std::vector<std::size_t> positions_in(const Window& big, const Window& sub) {
    std::vector<std::size_t> pos;
    pos.reserve(sub.size());
    for (const Coord& c : sub.cells()) {
        auto it = std::lower_bound(big.cells().begin(), big.cells().end(), c);
        if (it == big.cells().end() || *it != c)
            throw std::logic_error("window position lookup failed");
        pos.push_back(static_cast<std::size_t>(it - big.cells().begin()));
    }
    return pos;
}

void check_compatible(const Cpnf& n1, const Cpnf& n2) {
    if (n1.a_size != n2.a_size || n1.b_size != n2.b_size)
        throw std::invalid_argument("CPNF alphabet mismatch");
}

/// Table over the (larger) window W with entries read off n's own window.
Cpnf cpnf_raise(const Cpnf& n, const Window& w) {
    if (!w.contains_all(n.window))
        throw std::invalid_argument("cannot raise CPNF to a smaller window");
    const std::size_t total = pow_sz(static_cast<std::size_t>(n.a_size), w.size());
    const auto pos = positions_in(w, n.window);
    Cpnf out{n.shift, w, n.a_size, n.b_size, {}};
    out.rho.reserve(total);
    std::vector<Symbol> digits(w.size(), 0);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t sub = 0;
        for (std::size_t p : pos)
            sub = sub * static_cast<std::size_t>(n.a_size) +
                  static_cast<std::size_t>(digits[p]);
        out.rho.push_back(n.rho[sub]);
        for (std::size_t j = digits.size(); j-- > 0;) {
            if (++digits[j] < n.a_size) break;
            digits[j] = 0;
        }
    }
    return out;
}

}  // namespace

GenWord invert_word(const GenWord& w) {
    GenWord out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (it->kind == GenLetter::Kind::Shift)
            out.push_back(GenLetter::make_shift(-it->shift));
        else
            out.push_back(GenLetter::make_ctrl(it->sym, it->perm.inverse()));
    }
    return out;
}

BlockMap controlled_map(const Pattern& u, const Perm& alpha, const Alphabet& a,
                        const Alphabet& b, int dim) {
    if (u.max_symbol() >= a.size())
        throw std::invalid_argument("condition pattern symbol outside the X alphabet");
    if (alpha.degree() != b.size())
        throw std::invalid_argument("permutation degree must match the Y alphabet");
    long long r = 0;
    for (const Coord& c : u.support().cells()) r = std::max(r, c.max_norm());
    const Window nb = ball(dim, r);
    const auto pos = positions_in(nb, u.support());
    const auto origin = positions_in(nb, Window({Coord{0, 0}}))[0];
    const Alphabet prod = product_alphabet(a, b);
    const int bs = b.size();
    return make_blockmap(prod, prod, dim, static_cast<int>(r),
                         [&](const std::vector<Symbol>& syms) {
                             bool match = true;
                             for (std::size_t k = 0; k < pos.size() && match; ++k)
                                 if (pair_left(syms[pos[k]], bs) != u.symbols()[k])
                                     match = false;
                             const Symbol x0 = pair_left(syms[origin], bs);
                             const Symbol y0 = pair_right(syms[origin], bs);
                             return pair_symbol(x0, match ? alpha(y0) : y0, bs);
                         });
}

BlockMap partial_shift(const Coord& g, const Alphabet& a, const Alphabet& b, int dim) {
    const Window nb = ball(dim, g.max_norm());
    const auto at_g = positions_in(nb, Window({g}))[0];
    const auto origin = positions_in(nb, Window({Coord{0, 0}}))[0];
    const Alphabet prod = product_alphabet(a, b);
    const int bs = b.size();
    return make_blockmap(prod, prod, dim, static_cast<int>(g.max_norm()),
                         [&](const std::vector<Symbol>& syms) {
                             return pair_symbol(pair_left(syms[at_g], bs),
                                                pair_right(syms[origin], bs), bs);
                         });
}

BlockMap letter_blockmap(const GenLetter& l, const Alphabet& a, const Alphabet& b,
                         int dim) {
    if (l.kind == GenLetter::Kind::Shift) return partial_shift(l.shift, a, b, dim);
    return controlled_map(Pattern::from_cells({{Coord{0, 0}, l.sym}}), l.perm, a, b, dim);
}

Cpnf cpnf_identity(int a_size, int b_size) {
    return Cpnf{Coord{0, 0}, Window{}, a_size, b_size, {Perm::identity(b_size)}};
}

Cpnf controlled_cpnf(const Pattern& u, const Perm& alpha, int a_size) {
    if (u.max_symbol() >= a_size)
        throw std::invalid_argument("condition pattern symbol outside the X alphabet");
    const std::size_t total = pow_sz(static_cast<std::size_t>(a_size), u.size());
    Cpnf n{Coord{0, 0}, u.support(), a_size, alpha.degree(),
           std::vector<Perm>(total, Perm::identity(alpha.degree()))};
    std::size_t idx = 0;
    for (Symbol s : u.symbols())
        idx = idx * static_cast<std::size_t>(a_size) + static_cast<std::size_t>(s);
    n.rho[idx] = alpha;
    return cpnf_trim(n);
}

Cpnf cpnf_of_letter(const GenLetter& l, int a_size, int b_size) {
    if (l.kind == GenLetter::Kind::Shift) {
        Cpnf n = cpnf_identity(a_size, b_size);
        n.shift = l.shift;
        return n;
    }
    if (l.sym < 0 || l.sym >= a_size)
        throw std::invalid_argument("control symbol outside the X alphabet");
    if (l.perm.degree() != b_size)
        throw std::invalid_argument("control permutation degree mismatch");
    return controlled_cpnf(Pattern::from_cells({{Coord{0, 0}, l.sym}}), l.perm, a_size);
}

Cpnf cpnf_trim(const Cpnf& n) {
    if (n.window.empty()) return n;
    const std::size_t a = static_cast<std::size_t>(n.a_size);
    const std::size_t nc = n.window.size();
    const std::size_t total = n.rho.size();

    std::vector<std::size_t> stride(nc, 1);
    for (std::size_t k = nc; k-- > 1;) stride[k - 1] = stride[k] * a;

    std::vector<char> essential(nc, 0);
    for (std::size_t k = 0; k < nc; ++k) {
        for (std::size_t idx = 0; idx < total && !essential[k]; ++idx) {
            if ((idx / stride[k]) % a != 0) continue;
            for (std::size_t v = 1; v < a; ++v)
                if (!(n.rho[idx] == n.rho[idx + v * stride[k]])) {
                    essential[k] = 1;
                    break;
                }
        }
    }
    if (std::all_of(essential.begin(), essential.end(), [](char e) { return e != 0; }))
        return n;

    std::vector<Coord> kept;
    std::vector<std::size_t> kept_stride;
    for (std::size_t k = 0; k < nc; ++k) {
        if (essential[k]) {
            kept.push_back(n.window.cells()[k]);
            kept_stride.push_back(stride[k]);
        }
    }
    Cpnf out{n.shift, Window(kept), n.a_size, n.b_size, {}};
    const std::size_t newtotal = pow_sz(a, kept.size());
    out.rho.reserve(newtotal);
    std::vector<Symbol> digits(kept.size(), 0);
    for (std::size_t idx = 0; idx < newtotal; ++idx) {
        std::size_t old = 0;  // inessential cells pinned to symbol 0
        for (std::size_t k = 0; k < kept.size(); ++k)
            old += static_cast<std::size_t>(digits[k]) * kept_stride[k];
        out.rho.push_back(n.rho[old]);
        for (std::size_t j = digits.size(); j-- > 0;) {
            if (++digits[j] < n.a_size) break;
            digits[j] = 0;
        }
    }
    return out;
}

Cpnf cpnf_compose(const Cpnf& n1, const Cpnf& n2) {
    check_compatible(n1, n2);
    // pure-shift operands only move the other table's condition window
    if (n1.window.empty() && n1.rho[0].is_identity())
        return Cpnf{n1.shift + n2.shift, n2.window, n2.a_size, n2.b_size, n2.rho};
    if (n2.window.empty() && n2.rho[0].is_identity())
        return Cpnf{n1.shift + n2.shift, n1.window.translated(n2.shift), n1.a_size,
                    n1.b_size, n1.rho};
    const Window w1t = n1.window.translated(n2.shift);
    const Window w = w1t.united(n2.window);
    if (w.size() > kMaxCpnfWindow)
        throw std::length_error("CPNF window cap exceeded");
    const auto pos1 = positions_in(w, w1t);
    const auto pos2 = positions_in(w, n2.window);
    const std::size_t a = static_cast<std::size_t>(n1.a_size);
    const std::size_t total = pow_sz(a, w.size());

    Cpnf out{n1.shift + n2.shift, w, n1.a_size, n1.b_size, {}};
    out.rho.reserve(total);
    std::vector<Symbol> digits(w.size(), 0);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t i1 = 0, i2 = 0;
        for (std::size_t p : pos1) i1 = i1 * a + static_cast<std::size_t>(digits[p]);
        for (std::size_t p : pos2) i2 = i2 * a + static_cast<std::size_t>(digits[p]);
        out.rho.push_back(compose(n1.rho[i1], n2.rho[i2]));
        for (std::size_t j = digits.size(); j-- > 0;) {
            if (++digits[j] < n1.a_size) break;
            digits[j] = 0;
        }
    }
    return cpnf_trim(out);
}

bool cpnf_equal(const Cpnf& n1, const Cpnf& n2) {
    check_compatible(n1, n2);
    const Cpnf t1 = cpnf_trim(n1);
    const Cpnf t2 = cpnf_trim(n2);
    if (t1.shift != t2.shift) return false;
    const Window w = t1.window.united(t2.window);
    return cpnf_raise(t1, w).rho == cpnf_raise(t2, w).rho;
}

Cpnf cpnf_of_word(const GenWord& w, int a_size, int b_size, int dim) {
    Cpnf acc = cpnf_identity(a_size, b_size);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (dim == 1 && it->kind == GenLetter::Kind::Shift && it->shift.y != 0)
            throw std::invalid_argument("2D shift letter in a 1D workspace");
        acc = cpnf_compose(cpnf_of_letter(*it, a_size, b_size), acc);
    }
    return acc;
}

LangAnswer is_identity_on(const Cpnf& n, const SubshiftSpec& x, const SubshiftSpec& y,
                          int budget) {
    if (y.kind() != SubshiftSpec::Kind::Full &&
        y.kind() != SubshiftSpec::Kind::SunnySideUp)
        throw std::invalid_argument("identity test supports Full or SunnySideUp Y only");
    if (n.a_size != x.alphabet().size() || n.b_size != y.alphabet().size())
        throw std::invalid_argument("CPNF alphabets must match the specs");

    const Cpnf t = cpnf_trim(n);
    if (t.shift != Coord{0, 0}) return LangAnswer::no();

    // Every symbol of B appears in Y for the supported kinds, so "trivial on
    // the letters appearing in Y" is plain identity.
    bool unknown = false;
    std::vector<Symbol> digits(t.window.size(), 0);
    for (std::size_t idx = 0; idx < t.rho.size(); ++idx) {
        if (!t.rho[idx].is_identity()) {
            LangAnswer a = language_contains(x, Pattern(t.window, digits), budget);
            if (a.is_yes()) return LangAnswer::no();
            if (a.is_unknown()) unknown = true;
        }
        for (std::size_t j = digits.size(); j-- > 0;) {
            if (++digits[j] < t.a_size) break;
            digits[j] = 0;
        }
    }
    return unknown ? LangAnswer::unknown() : LangAnswer::yes();
}

Pattern evaluate_word_naive(const GenWord& w, const Pattern& p, const Alphabet& a,
                            const Alphabet& b, int dim) {
    Pattern cur = p;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        cur = apply_to_pattern(letter_blockmap(*it, a, b, dim), cur);
    return cur;
}

Pattern apply_cpnf_to_pattern(const Cpnf& n, const Pattern& p) {
    const int bs = n.b_size;
    std::vector<std::pair<Coord, Symbol>> out;
    for (const Coord& i : p.support().cells()) {
        auto shifted = p.at(i + n.shift);
        if (!shifted) continue;
        std::size_t idx = 0;
        bool covered = true;
        for (const Coord& c : n.window.cells()) {
            auto s = p.at(i + c);
            if (!s) {
                covered = false;
                break;
            }
            idx = idx * static_cast<std::size_t>(n.a_size) +
                  static_cast<std::size_t>(pair_left(*s, bs));
        }
        if (!covered) continue;
        const Symbol x_out = pair_left(*shifted, bs);
        const Symbol y_out = n.rho[idx](pair_right(*p.at(i), bs));
        out.emplace_back(i, pair_symbol(x_out, y_out, bs));
    }
    if (out.empty())
        throw std::invalid_argument("pattern support too small to apply CPNF");
    return Pattern::from_cells(std::move(out));
}

}  // namespace autoshift
