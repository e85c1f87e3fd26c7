#pragma once

#include <vector>

#include "autoshift/blockmap.hpp"
#include "autoshift/perm.hpp"
#include "autoshift/shifts.hpp"
#include "autoshift/space.hpp"

namespace autoshift {

/// One generator of the subgroup acting on a product shift: a partial shift
/// of the first layer, or a single-cell controlled permutation of the second
/// layer conditioned on the first-layer symbol at the origin.
struct GenLetter {
    enum class Kind { Shift, Ctrl };

    Kind kind = Kind::Shift;
    Coord shift{};     // Shift
    Symbol sym = -1;   // Ctrl: condition symbol of the first-layer alphabet
    Perm perm{};       // Ctrl: permutation of the second-layer alphabet

    static GenLetter make_shift(Coord g) { return {Kind::Shift, g, -1, {}}; }
    static GenLetter make_ctrl(Symbol sym, Perm perm) {
        return {Kind::Ctrl, {}, sym, std::move(perm)};
    }

    friend bool operator==(const GenLetter&, const GenLetter&) = default;
};

/// The word l1 l2 ... lk denotes the composition l1 ∘ l2 ∘ ... ∘ lk
/// (rightmost letter applied first).
using GenWord = std::vector<GenLetter>;

/// Reversed word with every letter inverted; composing with the original
/// yields the identity.
GenWord invert_word(const GenWord& w);

/// The controlled map C_{u,alpha} over (A x B)^{Z^d}: first layer copied,
/// second layer permuted by alpha at every cell where the first layer
/// matches u at the corresponding offsets.
BlockMap controlled_map(const Pattern& u, const Perm& alpha, const Alphabet& a,
                        const Alphabet& b, int dim);

/// The partial shift sigma^g_1: first layer shifted by g, second untouched.
BlockMap partial_shift(const Coord& g, const Alphabet& a, const Alphabet& b, int dim);

/// Block map realization of a single generator letter.
BlockMap letter_blockmap(const GenLetter& l, const Alphabet& a, const Alphabet& b,
                         int dim);

/// Conditional-permutation normal form: the action (x, y) -> (sigma^shift x, y')
/// with y'_i = rho(x|_{i+window})(y_i). rho is a dense table over first-layer
/// patterns on the window (mixed-radix encoding, cells sorted, first cell most
/// significant). Canonical after trimming: the window holds only cells the
/// table actually depends on.
struct Cpnf {
    Coord shift{};
    Window window;
    int a_size = 0;
    int b_size = 0;
    std::vector<Perm> rho;
};

/// Window growth beyond this many cells is a hard error (rho is |A|^|W|).
inline constexpr std::size_t kMaxCpnfWindow = 16;

Cpnf cpnf_identity(int a_size, int b_size);

/// Direct normal form of C_{u,alpha}: window = supp u, rho(u) = alpha,
/// everything else identity (trimmed).
Cpnf controlled_cpnf(const Pattern& u, const Perm& alpha, int a_size);

Cpnf cpnf_of_letter(const GenLetter& l, int a_size, int b_size);

/// Drops window cells the table does not depend on.
Cpnf cpnf_trim(const Cpnf& n);

/// Normal form of n1 ∘ n2 (trimmed).
Cpnf cpnf_compose(const Cpnf& n1, const Cpnf& n2);

/// Equality as maps on the full product shift: equal shift parts and equal
/// tables after aligning the windows.
bool cpnf_equal(const Cpnf& n1, const Cpnf& n2);

/// Normal form of a generator word, folded letter by letter.
Cpnf cpnf_of_word(const GenWord& w, int a_size, int b_size, int dim);

/// Is n the identity over X x Y? Requires Y Full or SunnySideUp (every
/// second-layer letter appears in Y). Yes iff the shift part is zero and
/// rho(p) is trivial for every window pattern not excluded by the X oracle.
LangAnswer is_identity_on(const Cpnf& n, const SubshiftSpec& x, const SubshiftSpec& y,
                          int budget = 8);

/// Sequentially applies the letters' block maps, rightmost first; the
/// independent cross-check oracle for the CPNF engine.
Pattern evaluate_word_naive(const GenWord& w, const Pattern& p, const Alphabet& a,
                            const Alphabet& b, int dim);

/// Applies the CPNF semantics to a finite product pattern, on every cell
/// whose required first-layer context is present.
Pattern apply_cpnf_to_pattern(const Cpnf& n, const Pattern& p);

}  // namespace autoshift
