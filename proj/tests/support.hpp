#pragma once

// Test-only oracles, kept independent of the library paths they check.

#include <cstdint>
#include <random>
#include <vector>

namespace testsupport {

// Partition counts by the classic bounded-part recurrence:
// count(n, k) = partitions of n into parts <= k.
inline std::int64_t partition_count(int n, int max_part) {
    std::vector<std::vector<std::int64_t>> table(
        static_cast<std::size_t>(n) + 1,
        std::vector<std::int64_t>(static_cast<std::size_t>(max_part) + 1, 0));
    for (int k = 0; k <= max_part; ++k) table[0][static_cast<std::size_t>(k)] = 1;
    for (int m = 1; m <= n; ++m) {
        for (int k = 1; k <= max_part; ++k) {
            table[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] =
                table[static_cast<std::size_t>(m)][static_cast<std::size_t>(k - 1)];
            if (m >= k)
                table[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] +=
                    table[static_cast<std::size_t>(m - k)][static_cast<std::size_t>(k)];
        }
    }
    return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(max_part)];
}

inline std::int64_t partition_count(int n) { return partition_count(n, n == 0 ? 1 : n); }

// All compositions of n, by the break-point bitmask.
inline std::vector<std::vector<int>> all_compositions(int n) {
    std::vector<std::vector<int>> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    const unsigned masks = 1u << (n - 1);
    for (unsigned mask = 0; mask < masks; ++mask) {
        std::vector<int> parts;
        int run = 1;
        for (int gap = 0; gap < n - 1; ++gap) {
            if (mask & (1u << gap)) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        out.push_back(std::move(parts));
    }
    return out;
}

inline std::vector<int> random_composition(int n, std::mt19937& rng) {
    std::vector<int> parts;
    int run = 1;
    for (int gap = 0; gap < n - 1; ++gap) {
        if (rng() & 1u) {
            parts.push_back(run);
            run = 1;
        } else {
            ++run;
        }
    }
    parts.push_back(run);
    return parts;
}

inline std::int64_t divisor_count(int n) {
    std::int64_t count = 0;
    for (int k = 1; k <= n; ++k)
        if (n % k == 0) ++count;
    return count;
}

} // namespace testsupport
