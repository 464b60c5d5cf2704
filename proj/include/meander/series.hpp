#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace meander {

/// Formal power series truncated at a fixed order, with exact 64-bit integer
/// coefficients. Arithmetic never reads beyond the order and throws
/// std::overflow_error instead of wrapping.
class TruncatedSeries {
public:
    /// Zero series of the given order (coefficients c0..cN).
    explicit TruncatedSeries(int order);

    static TruncatedSeries one(int order);

    int order() const noexcept { return order_; }
    std::int64_t coeff(int i) const;
    void set_coeff(int i, std::int64_t value);
    const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }

    bool operator==(const TruncatedSeries&) const = default;

private:
    int order_ = 0;
    std::vector<std::int64_t> coeffs_;
};

/// Cauchy product truncated at the common order. Orders must match.
TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b);

/// Describes the factor (1 + sign*q^exponent)^{-1}.
struct FactorSpec {
    int sign;     // +1 or -1
    int exponent; // >= 1
};

/// Expands the product of (1 + s_i q^{e_i})^{-1} up to the given order.
/// Factors with exponent beyond the order contribute nothing and are skipped.
TruncatedSeries expand_inverse_product(std::span<const FactorSpec> factors, int order);

/// prod_{m>=1} (1 - x^m)^{-2}: counts partitions into parts of two kinds.
TruncatedSeries two_colored_gf(int order);

/// prod_{k>=1} (1 + (-1)^k q^{2k-1})^{-1}, i.e.
/// 1/((1-q)(1+q^3)(1-q^5)(1+q^7)...).
TruncatedSeries a300574_gf(int order);

} // namespace meander
