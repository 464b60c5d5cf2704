#include "meander/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace meander {

namespace {

std::int64_t add_checked(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("series coefficient overflowed 64 bits");
    return out;
}

std::int64_t sub_checked(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_sub_overflow(a, b, &out))
        throw std::overflow_error("series coefficient overflowed 64 bits");
    return out;
}

std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("series coefficient overflowed 64 bits");
    return out;
}

} // namespace

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, 0);
}

TruncatedSeries TruncatedSeries::one(int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

std::int64_t TruncatedSeries::coeff(int i) const {
    if (i < 0 || i > order_) throw std::out_of_range("coefficient index out of range");
    return coeffs_[static_cast<std::size_t>(i)];
}

void TruncatedSeries::set_coeff(int i, std::int64_t value) {
    if (i < 0 || i > order_) throw std::out_of_range("coefficient index out of range");
    coeffs_[static_cast<std::size_t>(i)] = value;
}

TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("series orders must match");
    TruncatedSeries out(a.order());
    for (int i = 0; i <= a.order(); ++i) {
        if (a.coeff(i) == 0) continue;
        for (int j = 0; i + j <= a.order(); ++j) {
            if (b.coeff(j) == 0) continue;
            out.set_coeff(i + j, add_checked(out.coeff(i + j), mul_checked(a.coeff(i), b.coeff(j))));
        }
    }
    return out;
}

TruncatedSeries expand_inverse_product(std::span<const FactorSpec> factors, int order) {
    TruncatedSeries out = TruncatedSeries::one(order);
    for (const FactorSpec& f : factors) {
        if (f.sign != 1 && f.sign != -1)
            throw std::invalid_argument("factor sign must be +1 or -1");
        if (f.exponent < 1)
            throw std::invalid_argument("factor exponent must be positive");
        if (f.exponent > order) continue;
        // dividing by (1 + s q^e): c'_i = c_i - s * c'_{i-e}
        for (int i = f.exponent; i <= order; ++i) {
            const std::int64_t lagged = mul_checked(f.sign, out.coeff(i - f.exponent));
            out.set_coeff(i, sub_checked(out.coeff(i), lagged));
        }
    }
    return out;
}

TruncatedSeries two_colored_gf(int order) {
    std::vector<FactorSpec> factors;
    factors.reserve(2 * static_cast<std::size_t>(std::max(order, 0)));
    for (int m = 1; m <= order; ++m) {
        factors.push_back({-1, m});
        factors.push_back({-1, m});
    }
    return expand_inverse_product(factors, order);
}

TruncatedSeries a300574_gf(int order) {
    std::vector<FactorSpec> factors;
    for (int k = 1; 2 * k - 1 <= order; ++k)
        factors.push_back({k % 2 == 0 ? 1 : -1, 2 * k - 1});
    return expand_inverse_product(factors, order);
}

} // namespace meander
