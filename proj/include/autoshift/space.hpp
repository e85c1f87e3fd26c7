#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace autoshift {

/// Index of a symbol in its alphabet (declaration order).
using Symbol = int;

/// A lattice offset in Z^d. One-dimensional workspaces keep y == 0.
struct Coord {
    long long x = 0;
    long long y = 0;

    friend auto operator<=>(const Coord&, const Coord&) = default;

    Coord operator+(const Coord& o) const;
    Coord operator-() const { return Coord{-x, -y}; }
    Coord operator-(const Coord& o) const { return *this + (-o); }

    long long max_norm() const;
    long long l1_norm() const;
};

/// A finite set of coordinates, kept sorted and deduplicated.
class Window {
public:
    Window() = default;
    explicit Window(std::vector<Coord> cells);

    const std::vector<Coord>& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }

    bool contains(const Coord& c) const;
    bool contains_all(const Window& other) const;
    Window translated(const Coord& g) const;
    Window united(const Window& other) const;

    friend bool operator==(const Window&, const Window&) = default;

private:
    std::vector<Coord> cells_;
};

/// All coordinates with max-norm <= r (segment for d=1, square for d=2).
Window ball(int dim, long long r);

/// A finite pattern: a total assignment of symbols on a finite support.
class Pattern {
public:
    Pattern() = default;
    Pattern(Window support, std::vector<Symbol> symbols);

    /// Builds from (coordinate, symbol) pairs; duplicate coordinates are an error.
    static Pattern from_cells(std::vector<std::pair<Coord, Symbol>> cells);

    const Window& support() const { return support_; }
    const std::vector<Symbol>& symbols() const { return symbols_; }
    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }

    std::optional<Symbol> at(const Coord& c) const;
    Symbol max_symbol() const;

    friend bool operator==(const Pattern&, const Pattern&) = default;

private:
    Window support_;
    std::vector<Symbol> symbols_;  // aligned with support_.cells()
};

/// Translates the support by g, carrying symbols along, so that the
/// cylinder identity [shift_pattern(w, g)] = sigma^{-g}[w] holds under
/// the configuration convention sigma^g(x)_j = x_{g+j}.
Pattern shift_pattern(const Pattern& w, const Coord& g);

/// True iff some translate of v is a restriction of w.
bool occurs_in(const Pattern& v, const Pattern& w);

/// All patterns with support V that agree with w on supp w.
/// Requires V to contain the support; count is |alphabet|^(|V| - |supp w|).
std::vector<Pattern> enumerate_extensions(const Pattern& w, const Window& V,
                                          int alphabet_size);

/// Restriction of w to V; requires V to be a subset of supp w.
Pattern restrict_to(const Pattern& w, const Window& V);

}  // namespace autoshift
