#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "meander/partition.hpp"

namespace meander {

/// A seaweed type: a pair of compositions of the same weight n. Both
/// compositions empty (n = 0) is representable; it is the terminal state of
/// the winding engine.
class SeaweedType {
public:
    SeaweedType() = default;
    /// Throws std::invalid_argument on a weight mismatch.
    SeaweedType(Composition top, Composition bottom);

    const Composition& top() const noexcept { return top_; }
    const Composition& bottom() const noexcept { return bottom_; }
    int n() const noexcept { return top_.weight(); }
    bool empty() const noexcept { return top_.empty() && bottom_.empty(); }

    bool operator==(const SeaweedType&) const = default;

private:
    Composition top_;
    Composition bottom_;
};

/// Planar meander graph on n collinear vertices (1-indexed), with nested top
/// arcs from the top composition's blocks and bottom arcs from the bottom's.
struct Meander {
    int n = 0;
    std::vector<std::pair<int, int>> top_arcs;
    std::vector<std::pair<int, int>> bottom_arcs;
};

struct ComponentSummary {
    int cycles = 0;
    int paths = 0; // isolated vertices count as paths
};

/// Builds the meander of a seaweed type. Within a block of size a starting
/// after offset s, vertices j and k are joined iff j + k = 2s + a + 1 and
/// j != k; odd blocks leave their middle vertex unmatched on that side.
Meander build_meander(const SeaweedType& s);

/// Exact cycle/path component counts. A component is a cycle iff every vertex
/// in it has degree 2; singletons are paths.
ComponentSummary components(const Meander& m);

/// Index of the seaweed via its meander: 2C + P - 1. Rejects n = 0.
int index_dk(const SeaweedType& s);

/// Closed form for the type a|b over a+b.
int index_formula_2parts(int a, int b);

enum class ThreePartShape {
    OverN,       // a|b|c over n
    SplitBottom, // a|b over c|(n-c)
};

/// Closed form gcd(a+b, b+c) - 1, valid for both three-part shapes. For
/// SplitBottom additionally requires c < a + b.
int index_formula_3parts(int a, int b, int c, ThreePartShape shape);

/// True iff index_dk(s) == 0.
bool is_frobenius(const SeaweedType& s);

/// Parses `top "/" bottom` with `|`-separated parts and optional surrounding
/// whitespace, e.g. "17|3/10|4|6". The single string "/" parses as the empty
/// type. Error messages name the failing side.
SeaweedType parse_seaweed_type(std::string_view text);

/// "2|4/1|2|3"; the empty type renders as "/".
std::string to_string(const SeaweedType& s);

} // namespace meander
