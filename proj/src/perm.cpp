#include "autoshift/perm.hpp"

#include <stdexcept>

namespace autoshift {

Perm::Perm(std::vector<Symbol> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (Symbol s : images_) {
        if (s < 0 || static_cast<std::size_t>(s) >= images_.size() || seen[s])
            throw std::invalid_argument("permutation images must be a bijection");
        seen[s] = true;
    }
}

Perm Perm::identity(int n) {
    std::vector<Symbol> im(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) im[static_cast<std::size_t>(i)] = i;
    return Perm(std::move(im));
}

bool Perm::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != static_cast<Symbol>(i)) return false;
    return true;
}

Perm Perm::inverse() const {
    std::vector<Symbol> im(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        im[static_cast<std::size_t>(images_[i])] = static_cast<Symbol>(i);
    return Perm(std::move(im));
}

std::optional<std::array<Symbol, 3>> Perm::as_three_cycle() const {
    Symbol first = -1;
    int moved = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i] != static_cast<Symbol>(i)) {
            if (first < 0) first = static_cast<Symbol>(i);
            ++moved;
        }
    }
    if (moved != 3) return std::nullopt;
    const Symbol a = first;
    const Symbol b = (*this)(a);
    const Symbol c = (*this)(b);
    if ((*this)(c) != a || b == a || c == a || c == b) return std::nullopt;
    return std::array<Symbol, 3>{a, b, c};
}

Perm compose(const Perm& p, const Perm& q) {
    if (p.degree() != q.degree())
        throw std::invalid_argument("permutation degree mismatch");
    std::vector<Symbol> im(static_cast<std::size_t>(p.degree()));
    for (int s = 0; s < p.degree(); ++s) im[static_cast<std::size_t>(s)] = p(q(s));
    return Perm(std::move(im));
}

Perm three_cycle(int n, Symbol a, Symbol b, Symbol c) {
    if (a == b || b == c || a == c)
        throw std::invalid_argument("3-cycle requires distinct symbols");
    if (a < 0 || b < 0 || c < 0 || a >= n || b >= n || c >= n)
        throw std::invalid_argument("3-cycle symbol out of range");
    Perm id = Perm::identity(n);
    std::vector<Symbol> im = id.images();
    im[static_cast<std::size_t>(a)] = b;
    im[static_cast<std::size_t>(b)] = c;
    im[static_cast<std::size_t>(c)] = a;
    return Perm(std::move(im));
}

Perm double_swap(int n, Symbol a, Symbol b, Symbol c, Symbol d) {
    Perm id = Perm::identity(n);
    std::vector<Symbol> im = id.images();
    std::swap(im[static_cast<std::size_t>(a)], im[static_cast<std::size_t>(b)]);
    std::swap(im[static_cast<std::size_t>(c)], im[static_cast<std::size_t>(d)]);
    return Perm(std::move(im));
}

}  // namespace autoshift
