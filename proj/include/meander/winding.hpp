#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "meander/meander.hpp"

namespace meander {

enum class MoveKind {
    VerticalFlip,        // F_v
    ComponentElimination, // C(c)
    RotationContraction, // R
    BlockElimination,    // B
    PureContraction,     // P
    HorizontalFlip,      // F_h, never emitted by wind_step
};

struct Move {
    MoveKind kind;
    int block = 0; // eliminated block size, set for ComponentElimination only

    bool operator==(const Move&) const = default;
};

/// Frozen spellings: F_v, C(c), R, B, P, F_h.
std::string to_string(const Move& m);

struct WindingStep {
    Move move;
    SeaweedType result;
};

struct WindingTrace {
    SeaweedType start;
    std::vector<WindingStep> steps; // last result is the empty type
};

/// Applies the unique move determined by the leading blocks:
///   a1 < b1        -> F_v   swap top and bottom
///   a1 = b1 = c    -> C(c)  drop both leading blocks
///   b1 < a1 < 2b1  -> R     b1|a2|...  /  (2b1-a1)|b2|...
///   a1 = 2b1       -> B     b1|a2|...  /  b2|...
///   a1 > 2b1       -> P     (a1-2b1)|b1|a2|...  /  b2|...
/// Rejects the empty type.
std::pair<Move, SeaweedType> wind_step(const SeaweedType& s);

/// Iterates wind_step until the empty type. Throws invariant_error if the
/// 10*n step cap is exceeded.
WindingTrace wind_down(const SeaweedType& s);

/// Index reconstructed from the wind-down: each C(c) step contributes
/// 2*floor(c/2) + (c mod 2), and the total minus 1 is the index.
int index_via_winding(const SeaweedType& s);

/// Same computation on raw block lists; top and bottom must have equal sums.
int winding_index(std::span<const int> top, std::span<const int> bottom);

/// Both compositions reversed. Preserves the index.
SeaweedType horizontal_flip(const SeaweedType& s);

/// One step per line: `MOVE kind=<F_v|C(c)|R|B|P|F_h> result=<type string>`.
std::string trace_to_text(const WindingTrace& t);

/// JSON array of {"kind": ..., "result": ...} objects, one per step.
std::string trace_to_json(const WindingTrace& t);

namespace detail {

/// Core loop on reversed block buffers (back() is the leading block). The
/// buffers are consumed. Assumes equal sums; n is the common weight.
int winding_index_inplace(std::vector<int>& top_rev, std::vector<int>& bottom_rev, int n);

} // namespace detail

} // namespace meander
