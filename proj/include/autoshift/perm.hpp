#pragma once

#include <array>
#include <optional>
#include <vector>

#include "autoshift/space.hpp"

namespace autoshift {

/// A bijection of {0, ..., n-1}, acting on symbol indices of one alphabet.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<Symbol> images);

    static Perm identity(int n);

    int degree() const { return static_cast<int>(images_.size()); }
    Symbol operator()(Symbol s) const { return images_[static_cast<std::size_t>(s)]; }
    const std::vector<Symbol>& images() const { return images_; }

    bool is_identity() const;
    Perm inverse() const;

    /// If the permutation is a single 3-cycle, returns it as (a, b, c) with
    /// a -> b -> c -> a and a the smallest moved symbol.
    std::optional<std::array<Symbol, 3>> as_three_cycle() const;

    friend bool operator==(const Perm&, const Perm&) = default;

private:
    std::vector<Symbol> images_;
};

/// p after q: (compose(p, q))(s) = p(q(s)).
Perm compose(const Perm& p, const Perm& q);

/// The 3-cycle a -> b -> c -> a on an alphabet of size n, fixing the rest.
Perm three_cycle(int n, Symbol a, Symbol b, Symbol c);

/// The involution (a b)(c d) on an alphabet of size n.
Perm double_swap(int n, Symbol a, Symbol b, Symbol c, Symbol d);

}  // namespace autoshift
