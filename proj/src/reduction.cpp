#include "autoshift/reduction.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace autoshift {

namespace {

/// sigma^g_1 as unit-shift letters, x axis before y.
void emit_shifts(GenWord& out, const Coord& g) {
    const long long sx = g.x < 0 ? -1 : 1;
    for (long long i = 0; i < (g.x < 0 ? -g.x : g.x); ++i)
        out.push_back(GenLetter::make_shift(Coord{sx, 0}));
    const long long sy = g.y < 0 ? -1 : 1;
    for (long long i = 0; i < (g.y < 0 ? -g.y : g.y); ++i)
        out.push_back(GenLetter::make_shift(Coord{0, sy}));
}

/// Conjugates a word conditioned at the origin so that its conditions sit at
/// cell g instead.
void emit_conjugated(GenWord& out, const Coord& g, const GenWord& inner) {
    emit_shifts(out, -g);
    out.insert(out.end(), inner.begin(), inner.end());
    emit_shifts(out, g);
}

std::pair<Symbol, Symbol> helper_pair(const CompileParams& params,
                                      const std::array<Symbol, 3>& cycle) {
    std::vector<Symbol> rest;
    for (Symbol s : params.prime)
        if (s != cycle[0] && s != cycle[1] && s != cycle[2]) rest.push_back(s);
    // prime order, two smallest
    return {rest[0], rest[1]};
}

GenWord compile_cycle(const Pattern& u, const CompileParams& params,
                      const std::array<Symbol, 3>& cycle,
                      std::vector<std::string>* trace);

/// Phi of the decomposition: the involution (a b)(d e) on the second layer,
/// conditioned on the pivot cell carrying u_g.
GenWord phi_word(Symbol pivot_sym, const Coord& g, const DecomposeStep& step,
                 const CompileParams& params) {
    const int n = params.b_size;
    GenWord inner;
    inner.push_back(GenLetter::make_ctrl(
        pivot_sym, three_cycle(n, step.phi_cycle_1[0], step.phi_cycle_1[1],
                               step.phi_cycle_1[2])));
    inner.push_back(GenLetter::make_ctrl(
        pivot_sym, three_cycle(n, step.phi_cycle_2[0], step.phi_cycle_2[1],
                               step.phi_cycle_2[2])));
    GenWord out;
    emit_conjugated(out, g, inner);
    return out;
}

GenWord compile_cycle(const Pattern& u, const CompileParams& params,
                      const std::array<Symbol, 3>& cycle,
                      std::vector<std::string>* trace) {
    if (u.size() == 1) {
        const Coord g = u.support().cells()[0];
        GenWord inner{GenLetter::make_ctrl(
            u.symbols()[0], three_cycle(params.b_size, cycle[0], cycle[1], cycle[2]))};
        GenWord out;
        emit_conjugated(out, g, inner);
        return out;
    }

    CompileParams sub = params;
    sub.cycle = cycle;
    const DecomposeStep step = decompose_step(u, sub);
    if (trace) {
        std::ostringstream os;
        os << "pivot=(" << step.pivot.x;
        if (params.dim == 2) os << "," << step.pivot.y;
        os << ") residual=" << step.residual_cells << " cycle=(" << cycle[0] << ","
           << cycle[1] << "," << cycle[2] << ") phi=(" << step.phi_cycle_1[0] << ","
           << step.phi_cycle_1[1] << "," << step.phi_cycle_1[2] << ")("
           << step.phi_cycle_2[0] << "," << step.phi_cycle_2[1] << ","
           << step.phi_cycle_2[2] << ") psi=(" << step.psi_cycle_1[0] << ","
           << step.psi_cycle_1[1] << "," << step.psi_cycle_1[2] << ")("
           << step.psi_cycle_2[0] << "," << step.psi_cycle_2[1] << ","
           << step.psi_cycle_2[2] << ")";
        trace->push_back(os.str());
    }

    // residual v = u without the pivot cell
    std::vector<std::pair<Coord, Symbol>> v_cells;
    Symbol pivot_sym = -1;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u.support().cells()[i] == step.pivot)
            pivot_sym = u.symbols()[i];
        else
            v_cells.emplace_back(u.support().cells()[i], u.symbols()[i]);
    }
    const Pattern v = Pattern::from_cells(std::move(v_cells));

    const GenWord phi = phi_word(pivot_sym, step.pivot, step, params);
    GenWord psi = compile_cycle(v, params, step.psi_cycle_1, trace);
    {
        GenWord psi2 = compile_cycle(v, params, step.psi_cycle_2, trace);
        psi.insert(psi.end(), psi2.begin(), psi2.end());
    }

    // (Psi Phi)^2
    GenWord out;
    out.reserve(2 * (psi.size() + phi.size()));
    for (int rep = 0; rep < 2; ++rep) {
        out.insert(out.end(), psi.begin(), psi.end());
        out.insert(out.end(), phi.begin(), phi.end());
    }
    return out;
}

}  // namespace

void CompileParams::validate() const {
    if (prime.size() < 5)
        throw std::invalid_argument("prime alphabet must have at least 5 symbols");
    std::set<Symbol> seen;
    for (Symbol s : prime) {
        if (s < 0 || s >= b_size)
            throw std::invalid_argument("prime symbol outside the Y alphabet");
        if (!seen.insert(s).second)
            throw std::invalid_argument("prime symbols must be distinct");
    }
    for (Symbol s : cycle)
        if (!seen.count(s))
            throw std::invalid_argument("cycle symbols must belong to the prime alphabet");
    if (cycle[0] == cycle[1] || cycle[1] == cycle[2] || cycle[0] == cycle[2])
        throw std::invalid_argument("cycle symbols must be distinct");
    if (dim != 1 && dim != 2) throw std::invalid_argument("dimension must be 1 or 2");
}

DecomposeStep decompose_step(const Pattern& u, const CompileParams& params) {
    params.validate();
    if (u.size() < 2)
        throw std::invalid_argument("decomposition requires at least 2 cells");

    DecomposeStep step;
    step.pivot = *std::max_element(u.support().cells().begin(), u.support().cells().end());
    step.residual_cells = u.size() - 1;
    step.cycle = params.cycle;
    const auto [a, b, c] = params.cycle;
    const auto [d, e] = helper_pair(params, params.cycle);
    step.phi_cycle_1 = {b, a, d};
    step.phi_cycle_2 = {a, d, e};
    step.psi_cycle_1 = {c, b, d};
    step.psi_cycle_2 = {b, d, e};
    return step;
}

GenWord compile(const Pattern& u, const CompileParams& params,
                std::vector<std::string>* trace) {
    params.validate();
    if (u.empty()) throw std::invalid_argument("cannot compile the empty pattern");
    return compile_cycle(u, params, params.cycle, trace);
}

GenWord reduction_map(const Pattern& u, const CompileParams& params) {
    return compile(u, params);
}

LangAnswer word_is_identity(const GenWord& w, const SubshiftSpec& x,
                            const SubshiftSpec& y, int budget) {
    const Cpnf n = cpnf_of_word(w, x.alphabet().size(), y.alphabet().size(), x.dim());
    return is_identity_on(n, x, y, budget);
}

}  // namespace autoshift
