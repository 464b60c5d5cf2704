#include "meander/stats.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "meander/errors.hpp"
#include "meander/meander.hpp"
#include "meander/winding.hpp"

namespace meander {

namespace {

int arcs_of(std::span<const int> parts) {
    int arcs = 0;
    for (int p : parts) arcs += p / 2;
    return arcs;
}

bool sum_filter(std::span<const int> parts) {
    // Balanced prefix/suffix split with a non-empty gap: some prefix sum over
    // parts[0..i-1] equals some suffix sum over parts[j-1..m-1] with i < j-1
    // (1-based). Both sum sequences are strictly increasing, so a two-pointer
    // merge finds the first collision; once a collision fails the gap
    // condition every later one does too.
    const std::size_t m = parts.size();
    if (m < 3) return false;
    std::size_t i = 1;
    std::size_t j = m;
    long prefix = parts[0];
    long suffix = parts[m - 1];
    for (;;) {
        if (prefix == suffix) return i + 1 < j;
        if (prefix < suffix) {
            if (i == m) return false;
            prefix += parts[i++];
        } else {
            if (j == 1) return false;
            --j;
            suffix += parts[j - 1];
        }
    }
}

bool odd_filter(std::span<const int> parts) {
    int odd = 0;
    for (int p : parts)
        if (p % 2 != 0 && ++odd >= 3) return true;
    return false;
}

} // namespace

int ind_ones(const Partition& p) {
    if (p.weight() < 1) throw std::invalid_argument("statistic undefined for the empty partition");
    return p.weight() - 1 - arcs_of(p.parts());
}

int ind_maxpar(const Partition& p) {
    if (p.weight() < 1) throw std::invalid_argument("statistic undefined for the empty partition");
    const int bottom[1] = {p.weight()};
    return winding_index(p.parts(), bottom);
}

std::vector<std::int64_t> ones_index_counts(int n) {
    if (n < 1) throw std::invalid_argument("weight must be positive");
    std::vector<std::int64_t> counts(static_cast<std::size_t>(n), 0);
    for_each_partition(n, n, [&](const std::vector<int>& parts) {
        const int index = n - 1 - arcs_of(parts);
        ++counts[static_cast<std::size_t>(index)];
    });
    return counts;
}

OnesTable ones_table(int n_max, int i_max) {
    if (n_max < 1 || i_max < 1) throw std::invalid_argument("table bounds must be positive");
    OnesTable table;
    table.n_max = n_max;
    table.i_max = i_max;
    table.cells.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        const std::vector<std::int64_t> counts = ones_index_counts(n);
        std::vector<std::int64_t> row(static_cast<std::size_t>(i_max), 0);
        for (int i = 0; i < i_max && i < n; ++i)
            row[static_cast<std::size_t>(i)] = counts[static_cast<std::size_t>(i)];
        table.cells.push_back(std::move(row));
    }
    return table;
}

std::int64_t stabilized_c(int i) {
    if (i < 1) throw std::invalid_argument("i must be positive");
    const int lo = std::max(3 * i - 3, 1);
    const int hi = 3 * i + 5;
    std::int64_t value = 0;
    for (int n = lo; n <= hi; ++n) {
        const std::vector<std::int64_t> counts = ones_index_counts(n);
        const int target = n - i;
        const std::int64_t c =
            (target >= 0 && target < n) ? counts[static_cast<std::size_t>(target)] : 0;
        if (n == lo) {
            value = c;
        } else if (c != value) {
            throw verification_error("stabilization window [" + std::to_string(lo) + "," +
                                     std::to_string(hi) + "] is not constant for i=" +
                                     std::to_string(i));
        }
    }
    return value;
}

bool lemma_sum_applies(const Partition& p) { return sum_filter(p.parts()); }

bool lemma_odd_applies(const Partition& p) { return odd_filter(p.parts()); }

FrobeniusCount frobenius_count(int n, int d) {
    if (n < 1 || d < 1) throw std::invalid_argument("bounds must be positive");
    FrobeniusCount result{n, d, 0};
    std::vector<int> top_rev;
    std::vector<int> bottom_rev;
    for_each_partition(n, std::min(d, n), [&](const std::vector<int>& parts) {
        if (odd_filter(parts) || sum_filter(parts)) return;
        top_rev.assign(parts.rbegin(), parts.rend());
        bottom_rev.assign(1, n);
        if (detail::winding_index_inplace(top_rev, bottom_rev, n) == 0)
            ++result.count;
    });
    return result;
}

std::vector<std::int64_t> frobenius_counts(int d, int n_max) {
    if (n_max < 1) throw std::invalid_argument("n_max must be positive");
    std::vector<std::int64_t> counts;
    counts.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n)
        counts.push_back(frobenius_count(n, d).count);
    return counts;
}

std::optional<PeriodReport> detect_period(std::span<const std::int64_t> values,
                                          int first_n, int min_repeats) {
    if (min_repeats < 1) throw std::invalid_argument("min_repeats must be positive");
    const int len = static_cast<int>(values.size());
    const int last_n = first_n + len - 1;
    for (int period = 1; period * min_repeats <= len; ++period) {
        for (int onset = first_n; last_n - onset + 1 >= period * min_repeats; ++onset) {
            bool ok = true;
            for (int n = onset; n + period <= last_n; ++n) {
                const auto k = static_cast<std::size_t>(n - first_n);
                if (values[k] != values[k + static_cast<std::size_t>(period)]) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            PeriodReport report;
            report.onset = onset;
            report.period = period;
            report.verified_up_to = last_n;
            const auto base = static_cast<std::size_t>(onset - first_n);
            report.values.assign(values.begin() + static_cast<std::ptrdiff_t>(base),
                                 values.begin() + static_cast<std::ptrdiff_t>(base) +
                                     static_cast<std::ptrdiff_t>(period));
            return report;
        }
    }
    return std::nullopt;
}

std::optional<PeriodReport> frobenius_period(int d, int n_max, int min_repeats) {
    const std::vector<std::int64_t> counts = frobenius_counts(d, n_max);
    auto report = detect_period(counts, 1, min_repeats);
    if (report) report->d = d;
    return report;
}

std::int64_t rev_statistic(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    std::int64_t count = 0;
    for_each_partition(n, n, [&](const std::vector<int>& parts) {
        std::vector<int> reversed(parts.rbegin(), parts.rend());
        const SeaweedType s(Composition(parts), Composition(std::move(reversed)));
        if (index_dk(s) == n - 1) ++count;
    });
    return count;
}

std::int64_t conj_statistic(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    std::int64_t count = 0;
    for_each_partition(n, n, [&](const std::vector<int>& parts) {
        const Partition p{std::vector<int>(parts)};
        const SeaweedType s(Composition(parts), Composition(conjugate(p).parts()));
        if (index_dk(s) == n - 1) ++count;
    });
    return count;
}

namespace {

template <typename F>
void odd_partitions_rec(int remaining, int max_part, std::vector<int>& cur, F& visit) {
    if (remaining == 0) {
        visit(static_cast<const std::vector<int>&>(cur));
        return;
    }
    int p = std::min(remaining, max_part);
    if (p % 2 == 0) --p;
    for (; p >= 1; p -= 2) {
        cur.push_back(p);
        odd_partitions_rec(remaining - p, p, cur, visit);
        cur.pop_back();
    }
}

} // namespace

ParityTally conjecture_tally(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    ParityTally tally;
    tally.n = n;
    std::vector<int> cur;
    std::vector<int> top_rev;
    std::vector<int> bottom_rev;
    auto visit = [&](const std::vector<int>& parts) {
        top_rev.assign(parts.rbegin(), parts.rend());
        bottom_rev.assign(1, n);
        const int index = detail::winding_index_inplace(top_rev, bottom_rev, n);
        if (index % 2 == 0)
            ++tally.even_count;
        else
            ++tally.odd_count;
    };
    odd_partitions_rec(n, n, cur, visit);
    return tally;
}

} // namespace meander
