#include "autoshift/space.hpp"

#include <algorithm>
#include <stdexcept>

namespace autoshift {

Coord Coord::operator+(const Coord& o) const {
    Coord r;
    if (__builtin_add_overflow(x, o.x, &r.x) || __builtin_add_overflow(y, o.y, &r.y))
        throw std::overflow_error("coordinate overflow");
    return r;
}

long long Coord::max_norm() const {
    const long long ax = x < 0 ? -x : x;
    const long long ay = y < 0 ? -y : y;
    return ax > ay ? ax : ay;
}

long long Coord::l1_norm() const {
    return (x < 0 ? -x : x) + (y < 0 ? -y : y);
}

Window::Window(std::vector<Coord> cells) : cells_(std::move(cells)) {
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

bool Window::contains(const Coord& c) const {
    return std::binary_search(cells_.begin(), cells_.end(), c);
}

bool Window::contains_all(const Window& other) const {
    return std::includes(cells_.begin(), cells_.end(), other.cells_.begin(),
                         other.cells_.end());
}

Window Window::translated(const Coord& g) const {
    std::vector<Coord> out;
    out.reserve(cells_.size());
    for (const Coord& c : cells_) out.push_back(c + g);
    return Window(std::move(out));
}

Window Window::united(const Window& other) const {
    std::vector<Coord> out;
    out.reserve(cells_.size() + other.cells_.size());
    std::merge(cells_.begin(), cells_.end(), other.cells_.begin(), other.cells_.end(),
               std::back_inserter(out));
    return Window(std::move(out));
}

Window ball(int dim, long long r) {
    if (dim != 1 && dim != 2) throw std::invalid_argument("dimension must be 1 or 2");
    if (r < 0) throw std::invalid_argument("ball radius must be nonnegative");
    std::vector<Coord> cells;
    if (dim == 1) {
        for (long long x = -r; x <= r; ++x) cells.push_back({x, 0});
    } else {
        for (long long x = -r; x <= r; ++x)
            for (long long y = -r; y <= r; ++y) cells.push_back({x, y});
    }
    return Window(std::move(cells));
}

Pattern::Pattern(Window support, std::vector<Symbol> symbols)
    : support_(std::move(support)), symbols_(std::move(symbols)) {
    if (support_.size() != symbols_.size())
        throw std::invalid_argument("pattern assignment must cover exactly the support");
    for (Symbol s : symbols_)
        if (s < 0) throw std::invalid_argument("negative symbol index");
}

Pattern Pattern::from_cells(std::vector<std::pair<Coord, Symbol>> cells) {
    std::sort(cells.begin(), cells.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Coord> coords;
    std::vector<Symbol> syms;
    coords.reserve(cells.size());
    syms.reserve(cells.size());
    for (const auto& [c, s] : cells) {
        if (!coords.empty() && coords.back() == c)
            throw std::invalid_argument("duplicate coordinate in pattern");
        coords.push_back(c);
        syms.push_back(s);
    }
    return Pattern(Window(std::move(coords)), std::move(syms));
}

std::optional<Symbol> Pattern::at(const Coord& c) const {
    const auto& cs = support_.cells();
    auto it = std::lower_bound(cs.begin(), cs.end(), c);
    if (it == cs.end() || *it != c) return std::nullopt;
    return symbols_[static_cast<std::size_t>(it - cs.begin())];
}

Symbol Pattern::max_symbol() const {
    Symbol m = -1;
    for (Symbol s : symbols_) m = std::max(m, s);
    return m;
}

Pattern shift_pattern(const Pattern& w, const Coord& g) {
    // Support moves to g + W; sorted order is preserved by translation.
    return Pattern(w.support().translated(g), w.symbols());
}

bool occurs_in(const Pattern& v, const Pattern& w) {
    if (v.empty()) return true;
    if (v.size() > w.size()) return false;
    const Coord anchor = v.support().cells().front();
    for (const Coord& target : w.support().cells()) {
        const Coord g = target - anchor;
        bool ok = true;
        for (std::size_t k = 0; k < v.size(); ++k) {
            auto s = w.at(v.support().cells()[k] + g);
            if (!s || *s != v.symbols()[k]) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

std::vector<Pattern> enumerate_extensions(const Pattern& w, const Window& V,
                                          int alphabet_size) {
    if (alphabet_size < 1) throw std::invalid_argument("alphabet must be nonempty");
    if (!V.contains_all(w.support()))
        throw std::invalid_argument("extension window must contain the pattern support");

    const auto& cells = V.cells();
    std::vector<Symbol> base(cells.size(), -1);
    std::vector<std::size_t> free_pos;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (auto s = w.at(cells[i]))
            base[i] = *s;
        else
            free_pos.push_back(i);
    }

    std::vector<Pattern> out;
    std::vector<Symbol> digits(free_pos.size(), 0);
    while (true) {
        std::vector<Symbol> syms = base;
        for (std::size_t k = 0; k < free_pos.size(); ++k) syms[free_pos[k]] = digits[k];
        out.emplace_back(V, std::move(syms));
        // odometer, last free cell fastest
        std::size_t k = free_pos.size();
        while (k > 0) {
            --k;
            if (++digits[k] < alphabet_size) break;
            digits[k] = 0;
            if (k == 0) return out;
        }
        if (free_pos.empty()) return out;
    }
}

Pattern restrict_to(const Pattern& w, const Window& V) {
    if (!w.support().contains_all(V))
        throw std::invalid_argument("restriction window must lie inside the support");
    std::vector<Symbol> syms;
    syms.reserve(V.size());
    for (const Coord& c : V.cells()) syms.push_back(*w.at(c));
    return Pattern(V, std::move(syms));
}

}  // namespace autoshift
