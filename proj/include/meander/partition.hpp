#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace meander {

/// Integer partition: non-increasing positive parts. The empty partition is
/// valid and has weight 0.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and
    /// non-increasing.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int weight() const noexcept { return weight_; }
    std::size_t size() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// Composition: ordered positive parts, no monotonicity requirement.
class Composition {
public:
    Composition() = default;
    /// Throws std::invalid_argument unless all parts are positive.
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int weight() const noexcept { return weight_; }
    std::size_t size() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }

    auto operator<=>(const Composition&) const = default;

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

enum class Color : std::uint8_t { Blue = 0, Red = 1 };

struct ColoredPart {
    int value;
    Color color;
    auto operator<=>(const ColoredPart&) const = default;
};

/// Partition whose parts carry one of two colors. Parts are stored in
/// canonical order: value descending, blue before red at equal value.
/// Two colored partitions compare equal iff their part/color multisets do.
class ColoredPartition {
public:
    ColoredPartition() = default;
    explicit ColoredPartition(std::vector<ColoredPart> parts);

    const std::vector<ColoredPart>& parts() const noexcept { return parts_; }
    int weight() const noexcept { return weight_; }
    bool empty() const noexcept { return parts_.empty(); }

    auto operator<=>(const ColoredPartition&) const = default;

private:
    std::vector<ColoredPart> parts_;
    int weight_ = 0;
};

namespace detail {

template <typename F>
void partitions_rec(int remaining, int max_part, std::vector<int>& cur, F& visit) {
    if (remaining == 0) {
        visit(static_cast<const std::vector<int>&>(cur));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, visit);
        cur.pop_back();
    }
}

} // namespace detail

/// Visits every partition of n with parts <= max_part, in reverse
/// lexicographic order. The callback receives a scratch vector that is reused
/// between visits; copy it if it must outlive the call. n = 0 visits the
/// empty partition exactly once.
template <typename F>
void for_each_partition(int n, int max_part, F&& visit) {
    if (n < 0) throw std::invalid_argument("partition weight must be non-negative");
    if (max_part < 1) throw std::invalid_argument("max_part must be positive");
    std::vector<int> cur;
    cur.reserve(static_cast<std::size_t>(n));
    detail::partitions_rec(n, max_part, cur, visit);
}

/// All partitions of n (optionally with parts <= max_part) in reverse
/// lexicographic order.
std::vector<Partition> enumerate_partitions(int n, std::optional<int> max_part = std::nullopt);

/// All two-colored partitions of i, each exactly once.
std::vector<ColoredPartition> enumerate_colored_partitions(int i);

/// Ferrers-diagram transpose. An involution.
Partition conjugate(const Partition& p);

/// Parts in reversed order, as a composition of the same weight.
Composition reverse(const Partition& p);

/// Blue part v maps to 2v+1, red part v to 2v. The result is a partition with
/// every part >= 2; the map is injective.
Partition phi(const ColoredPartition& c);

/// Removes all parts equal to 1.
Partition psi(const Partition& p);

/// Accepts "4,2,1" (comma-separated, non-increasing) or the frequency form
/// "1^2 2^1 4^3". Whitespace-only input parses as the empty partition.
Partition parse_partition(std::string_view text);

/// Accepts "1|2|3". Empty input parses as the empty composition.
Composition parse_composition(std::string_view text);

std::string to_string(const Partition& p);
std::string to_string(const Composition& c);

} // namespace meander
