#pragma once

#include <array>
#include <string>
#include <vector>

#include "autoshift/autgroup.hpp"
#include "autoshift/shifts.hpp"
#include "autoshift/space.hpp"

namespace autoshift {

/// Parameters of the pattern-to-word compiler. The prime alphabet must have
/// at least 5 symbols; all cycle and helper symbols are drawn from it.
/// Pivot rule: lexicographically largest coordinate of the support.
/// Helper rule: the two smallest prime symbols outside the current cycle.
struct CompileParams {
    std::vector<Symbol> prime;     // B-symbol indices, distinct, |prime| >= 5
    std::array<Symbol, 3> cycle;   // (a, b, c), distinct members of prime
    int b_size = 0;                // size of the full second-layer alphabet B
    int dim = 1;

    void validate() const;
};

/// One recursion step of the compiler, reported for tracing.
struct DecomposeStep {
    Coord pivot;
    std::size_t residual_cells = 0;
    std::array<Symbol, 3> cycle{};
    std::array<Symbol, 3> phi_cycle_1{};  // (b, a, d)
    std::array<Symbol, 3> phi_cycle_2{};  // (a, d, e)
    std::array<Symbol, 3> psi_cycle_1{};  // (c, b, d)
    std::array<Symbol, 3> psi_cycle_2{};  // (b, d, e)
};

/// The pivot cell and residual pattern of one decomposition step, plus the
/// cycles handed to Phi and to the two recursive calls.
DecomposeStep decompose_step(const Pattern& u, const CompileParams& params);

/// Compiles C_{u,alpha_abc} into a word over partial unit shifts and
/// single-cell controlled 3-cycles. Deterministic and injective on patterns.
GenWord compile(const Pattern& u, const CompileParams& params,
                std::vector<std::string>* trace = nullptr);

/// The one-one reduction: u is mapped to a word that is the identity on
/// X x Y exactly when u is outside the language of X.
GenWord reduction_map(const Pattern& u, const CompileParams& params);

/// Decides the word problem through the CPNF engine.
LangAnswer word_is_identity(const GenWord& w, const SubshiftSpec& x,
                            const SubshiftSpec& y, int budget = 8);

}  // namespace autoshift
