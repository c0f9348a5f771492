#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "selfloc/bits.hpp"
#include "selfloc/pattern.hpp"

namespace selfloc {

// Per-bit reading model: each bit is read correctly with probability p,
// independently. Bounded mode caps the errors per row and per column.
struct NoiseSpec {
    double correct_bit_prob = 1.0;
    enum class Mode { iid, bounded } mode = Mode::iid;
    int row_max = 0;
    int col_max = 0;
    uint64_t seed = 0;
};

// Probability that one n-bit row carries strictly fewer than n/4 errors.
double row_condition_prob(int n, double p);

// Probability that all k rows do; the square-window table is the k = n case.
double all_rows_prob(int k, int n, double p);

// Probability that a column of the given length carries at least half its
// bits in error.
double column_fail_prob(int column_bits, double p);

// Probability that at least one of the n columns (each k bits) fails.
double any_column_fail_prob(int k, int n, double p);

// Product of the row and column conditions: a sufficient-condition bound on
// exact decoding, not the exact success probability.
double decode_success_bound(int k, int n, double p);

BitMatrix generate_iid_error(size_t k, size_t n, double p, SplitMix64& rng);

// Error matrix with at most row_max errors per row (counts drawn uniformly)
// and at most col_max per column, met by redrawing the placement. The
// rejection count is reported so the bias of the scheme stays visible.
BitMatrix generate_bounded_error(size_t k, size_t n, int row_max, int col_max,
                                 SplitMix64& rng, size_t* rejections = nullptr);

// Dispatch on the noise model.
BitMatrix generate_error(size_t k, size_t n, const NoiseSpec& spec, SplitMix64& rng,
                         size_t* rejections = nullptr);

struct SimulationResult {
    size_t trials = 0;
    size_t successes = 0;
    double rate = 0.0;
    double ci_low = 0.0;   // 95% binomial interval, normal approximation
    double ci_high = 0.0;
    double analytic = 0.0;  // sufficient-condition bound for the same (k, n, p)
};

// Random positions, iid noise, full decode; success means status ok and the
// exact true origin. Trial t draws from an independent stream of `seed`, so
// results do not depend on evaluation order.
SimulationResult monte_carlo_success_rate(int k, int n, double p, size_t trials,
                                          uint64_t seed);

struct TableEntry {
    double p;
    int n;
    double value;
};

// All-rows probabilities over p = 0.90..0.99 and n in {8, 16, 32, 64}.
std::vector<TableEntry> reproduce_table1();

// Renders the table with rows indexed by p and columns by n; values above
// 0.9999 print as ">0.9999".
std::string format_table1(const std::vector<TableEntry>& entries);

std::string simulation_csv_header();
std::string simulation_csv_row(double p, int n, const SimulationResult& r);

}  // namespace selfloc
