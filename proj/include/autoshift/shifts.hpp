#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "autoshift/perm.hpp"
#include "autoshift/space.hpp"

namespace autoshift {

/// An ordered finite list of distinct symbol names. The declaration order
/// is the total order every lexicographic enumeration derives from.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(Symbol s) const { return names_[static_cast<std::size_t>(s)]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<Symbol> index(const std::string& name) const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<std::string> names_;
};

/// Cartesian product alphabet; symbol (i, j) is encoded as i*|right|+j and
/// named "<left>,<right>".
Alphabet product_alphabet(const Alphabet& left, const Alphabet& right);

inline Symbol pair_symbol(Symbol left, Symbol right, int right_size) {
    return left * right_size + right;
}
inline Symbol pair_left(Symbol s, int right_size) { return s / right_size; }
inline Symbol pair_right(Symbol s, int right_size) { return s % right_size; }

/// Verdict of a language oracle. Yes/No are certain; Unknown carries the
/// window index at which the budget ran out. A No produced by the
/// semi-decision procedure carries the certifying window index.
struct LangAnswer {
    enum class Value { Yes, No, Unknown };
    Value value = Value::Unknown;
    int window_index = -1;

    static LangAnswer yes() { return {Value::Yes, -1}; }
    static LangAnswer no(int window = -1) { return {Value::No, window}; }
    static LangAnswer unknown(int window = -1) { return {Value::Unknown, window}; }

    bool is_yes() const { return value == Value::Yes; }
    bool is_no() const { return value == Value::No; }
    bool is_unknown() const { return value == Value::Unknown; }
};

namespace detail {
struct Sft1dOracle;
}

/// A describable subshift bundled with its language oracle.
class SubshiftSpec {
public:
    enum class Kind { Full, Sft, SunnySideUp, Product };

    static SubshiftSpec full(int dim, Alphabet alphabet);
    static SubshiftSpec sft(int dim, Alphabet alphabet, std::vector<Pattern> forbidden);
    /// Alphabet is prime ++ [bottom]; bottom must not appear in prime.
    static SubshiftSpec sunny_side_up(int dim, Alphabet prime, std::string bottom);
    static SubshiftSpec product(SubshiftSpec left, SubshiftSpec right);

    Kind kind() const { return kind_; }
    int dim() const { return dim_; }
    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<Pattern>& forbidden() const { return forbidden_; }
    Symbol bottom() const { return bottom_; }
    const SubshiftSpec& left() const { return *left_; }
    const SubshiftSpec& right() const { return *right_; }

    /// Exact language decision for every pattern (no Unknown possible).
    bool language_exact() const;

private:
    SubshiftSpec() = default;

    Kind kind_ = Kind::Full;
    int dim_ = 1;
    Alphabet alphabet_;
    std::vector<Pattern> forbidden_;           // Sft
    Symbol bottom_ = -1;                       // SunnySideUp
    std::shared_ptr<const SubshiftSpec> left_, right_;  // Product
    std::shared_ptr<const detail::Sft1dOracle> oracle_; // Sft, dim 1

    friend LangAnswer language_contains(const SubshiftSpec&, const Pattern&, int);
};

/// True iff no forbidden pattern of spec occurs in w.
bool locally_admissible(const SubshiftSpec& spec, const Pattern& w);

/// Does w extend to a full configuration of spec? Exact for full shifts,
/// sunny-side-up, 1D SFTs and products of these; 2D SFTs may answer Unknown
/// after `budget` growing windows.
LangAnswer language_contains(const SubshiftSpec& spec, const Pattern& w, int budget = 8);

/// Growing-window default schedule: V_i = supp w united with ball(r_w + i).
std::vector<Window> default_schedule(const SubshiftSpec& spec, const Pattern& w,
                                     int budget);

/// First index i at which every extension of w to schedule[i] is locally
/// inadmissible (certifying w in the colanguage), or nullopt.
std::optional<int> colang_semidecide(const SubshiftSpec& spec, const Pattern& w,
                                     const std::vector<Window>& schedule);

/// Exactly the patterns with support V that belong to the language.
/// Throws if a 2D oracle call comes back Unknown within the budget.
std::vector<Pattern> language_enumerate(const SubshiftSpec& spec, const Window& V,
                                        int budget = 8);

/// Whether replacing one cell's symbol by its alpha-image preserves
/// membership: true for full shifts, true for sunny-side-up iff alpha fixes
/// bottom, conservatively false for the other kinds.
bool is_alpha_permutable(const SubshiftSpec& spec, const Perm& alpha);

/// Componentwise projection of a pattern over a product alphabet.
Pattern project_pattern(const Pattern& w, int right_size, bool keep_left);

/// Zips two patterns with equal support into one over the product alphabet.
Pattern product_pattern(const Pattern& left, const Pattern& right, int right_size);

}  // namespace autoshift
