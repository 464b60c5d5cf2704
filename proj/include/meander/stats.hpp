#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "meander/partition.hpp"

namespace meander {

/// Index of the seaweed lambda over 1|1|...|1, by the closed form
/// w - 1 - sum(floor(part/2)). Rejects the empty partition.
int ind_ones(const Partition& p);

/// Index of the maximal parabolic seaweed lambda over w(lambda), computed via
/// the winding engine. Rejects the empty partition.
int ind_maxpar(const Partition& p);

/// cell(n, i) = number of partitions of n whose all-ones index equals i,
/// for 1 <= n <= n_max and 0 <= i < i_max.
struct OnesTable {
    int n_max = 0;
    int i_max = 0;
    std::vector<std::vector<std::int64_t>> cells; // cells[n-1][i]

    std::int64_t cell(int n, int i) const { return cells.at(n - 1).at(i); }
};

OnesTable ones_table(int n_max, int i_max);

/// Per-partition tally of the all-ones index over all partitions of n;
/// entry [v] counts partitions with index v (v ranges over 0..n-1).
std::vector<std::int64_t> ones_index_counts(int n);

/// The stabilized count of partitions of n with all-ones index n - i,
/// evaluated at n = max(3i-3, 1) and verified constant on the window
/// [max(3i-3, 1), 3i+5]. Throws verification_error if the window is not flat.
std::int64_t stabilized_c(int i);

/// True iff some prefix sum (over parts a_1..a_i) equals some suffix sum
/// (over a_j..a_m) with i < j - 1. Implies a positive maximal-parabolic index.
bool lemma_sum_applies(const Partition& p);

/// True iff the partition has three or more odd parts. Implies a positive
/// maximal-parabolic index.
bool lemma_odd_applies(const Partition& p);

struct FrobeniusCount {
    int n = 0;
    int d = 0;
    std::int64_t count = 0;
};

/// Number of partitions of n with all parts <= d whose maximal-parabolic
/// index is zero.
FrobeniusCount frobenius_count(int n, int d);

/// frobenius_count(n, d).count for n = 1..n_max.
std::vector<std::int64_t> frobenius_counts(int d, int n_max);

struct PeriodReport {
    int d = 0;
    int onset = 0;
    int period = 0;
    std::vector<std::int64_t> values; // length == period
    int verified_up_to = 0;
};

/// Finds the smallest period p (ties broken by smallest onset) such that the
/// tail of the sequence from the onset is p-periodic and spans at least
/// min_repeats full repetitions. values[k] is the term at n = first_n + k.
/// The d field of the report is left 0 for the caller to fill.
std::optional<PeriodReport> detect_period(std::span<const std::int64_t> values,
                                          int first_n, int min_repeats);

/// Frobenius counts for part bound d over n = 1..n_max, fed to detect_period.
std::optional<PeriodReport> frobenius_period(int d, int n_max, int min_repeats = 3);

/// Number of partitions of n whose index against their own reverse is n - 1.
std::int64_t rev_statistic(int n);

/// Number of partitions of n whose index against their own conjugate is n - 1.
std::int64_t conj_statistic(int n);

struct ParityTally {
    int n = 0;
    std::int64_t even_count = 0; // odd-part partitions with even maximal-parabolic index
    std::int64_t odd_count = 0;  // ... with odd index
};

/// Classifies the partitions of n into odd parts by the parity of their
/// maximal-parabolic index.
ParityTally conjecture_tally(int n);

} // namespace meander
