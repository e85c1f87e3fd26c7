#pragma once

#include <functional>
#include <vector>

#include "autoshift/shifts.hpp"
#include "autoshift/space.hpp"

namespace autoshift {

/// Block maps are kept materializable: at most this many cells in the
/// neighborhood ball, and a bounded dense table. Exceeding either is a hard
/// error; long compositions must go through the CPNF engine instead.
inline constexpr std::size_t kMaxBallCells = 12;
inline constexpr std::size_t kMaxTableSize = std::size_t{1} << 22;

/// A radius-r local rule: a dense table from in-alphabet patterns on
/// ball(r) to out-alphabet symbols. Table entries are indexed by the
/// mixed-radix encoding of the ball contents, cells sorted lexicographically
/// by coordinate, first cell most significant.
struct BlockMap {
    Alphabet in_alphabet;
    Alphabet out_alphabet;
    int dim = 1;
    int radius = 0;
    std::vector<Symbol> table;
};

std::size_t ball_cell_count(int dim, int radius);

/// Builds a block map by evaluating `rule` on every neighborhood; the
/// argument lists the symbols on ball(radius) in sorted cell order.
BlockMap make_blockmap(Alphabet in, Alphabet out, int dim, int radius,
                       const std::function<Symbol(const std::vector<Symbol>&)>& rule);

BlockMap identity_blockmap(const Alphabet& a, int dim);

std::size_t encode_neighborhood(const BlockMap& f, const std::vector<Symbol>& syms);

/// Applies f on the eroded support {i : i + ball(r) inside supp w}.
Pattern apply_to_pattern(const BlockMap& f, const Pattern& w);

/// f after g, radius r_f + r_g.
BlockMap compose(const BlockMap& f, const BlockMap& g);

/// Same homomorphism presented with a larger radius (extra cells ignored).
BlockMap raise_radius(const BlockMap& f, int r2);

/// Table equality after raising both maps to the larger radius.
bool equal_syntactic(const BlockMap& f, const BlockMap& g);

/// Do f and g represent the same homomorphism on spec? Yes iff every
/// neighborhood on which the tables disagree lies in the colanguage.
LangAnswer equal_on(const BlockMap& f, const BlockMap& g, const SubshiftSpec& spec,
                    int budget = 8);

/// Number of block maps of exactly this radius: |out|^(|in|^|ball(r)|).
/// Throws if not representable.
std::size_t blockmap_count(const Alphabet& in, const Alphabet& out, int dim, int radius);

/// The idx-th block map of the given radius in the canonical order
/// (lexicographic by table values under the alphabet order).
BlockMap blockmap_at(const Alphabet& in, const Alphabet& out, int dim, int radius,
                     std::size_t idx);

/// All block maps of radius 0..max_radius in canonical order: increasing
/// radius, then lexicographic by table.
std::vector<BlockMap> enumerate_blockmaps(const Alphabet& in, const Alphabet& out,
                                          int dim, int max_radius);

}  // namespace autoshift
