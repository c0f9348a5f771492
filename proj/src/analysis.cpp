#include "selfloc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "selfloc/decode.hpp"

namespace selfloc {

namespace {

void check_np(int n, double p) {
    if (n < 1) throw std::invalid_argument("window size must be positive");
    if (!(p > 0.0) || p > 1.0) throw std::invalid_argument("p must be in (0, 1]");
}

// C(n, i) * q^i * p^(n-i), evaluated in extended precision.
long double binomial_term(int n, int i, long double p, long double q) {
    long double c = 1.0L;
    for (int j = 1; j <= i; ++j) c = c * static_cast<long double>(n - j + 1) / j;
    return c * std::pow(q, i) * std::pow(p, n - i);
}

}  // namespace

double row_condition_prob(int n, double p) {
    check_np(n, p);
    // Strictly fewer than n/4 errors: at most ceil(n/4) - 1.
    int max_errors = (n + 3) / 4 - 1;
    long double q = 1.0L - static_cast<long double>(p);
    long double sum = 0.0L;
    for (int i = 0; i <= max_errors; ++i) sum += binomial_term(n, i, p, q);
    return static_cast<double>(sum);
}

double all_rows_prob(int k, int n, double p) {
    check_np(n, p);
    if (k < 1) throw std::invalid_argument("row count must be positive");
    return static_cast<double>(
        std::pow(static_cast<long double>(row_condition_prob(n, p)), k));
}

double column_fail_prob(int column_bits, double p) {
    check_np(column_bits, p);
    // At least half the column in error, counted with error probability 1-p.
    int m = column_bits;
    long double q = 1.0L - static_cast<long double>(p);
    long double sum = 0.0L;
    for (int i = (m + 1) / 2; i <= m; ++i) sum += binomial_term(m, i, p, q);
    return static_cast<double>(sum);
}

double any_column_fail_prob(int k, int n, double p) {
    long double q = static_cast<long double>(column_fail_prob(k, p));
    return static_cast<double>(1.0L - std::pow(1.0L - q, n));
}

double decode_success_bound(int k, int n, double p) {
    return all_rows_prob(k, n, p) * (1.0 - any_column_fail_prob(k, n, p));
}

BitMatrix generate_iid_error(size_t k, size_t n, double p, SplitMix64& rng) {
    BitMatrix e(k, n);
    double flip = 1.0 - p;
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < n; ++j)
            if (rng.chance(flip)) e.set(i, j, 1);
    return e;
}

BitMatrix generate_bounded_error(size_t k, size_t n, int row_max, int col_max,
                                 SplitMix64& rng, size_t* rejections) {
    if (row_max < 0 || col_max < 0) throw std::invalid_argument("negative error bound");
    if (static_cast<size_t>(row_max) > n)
        throw std::invalid_argument("row bound exceeds the row length");
    size_t rejected = 0;
    for (;;) {
        BitMatrix e(k, n);
        std::vector<int> col_load(n, 0);
        bool ok = true;
        for (size_t i = 0; i < k && ok; ++i) {
            int count = static_cast<int>(rng.below(static_cast<uint64_t>(row_max) + 1));
            // Distinct columns for this row's errors.
            std::vector<size_t> cols;
            while (static_cast<int>(cols.size()) < count) {
                size_t c = rng.below(n);
                bool dup = false;
                for (size_t seen : cols) dup |= seen == c;
                if (!dup) cols.push_back(c);
            }
            for (size_t c : cols) {
                e.set(i, c, 1);
                if (++col_load[c] > col_max) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            if (rejections) *rejections = rejected;
            return e;
        }
        ++rejected;
    }
}

BitMatrix generate_error(size_t k, size_t n, const NoiseSpec& spec, SplitMix64& rng,
                         size_t* rejections) {
    if (!(spec.correct_bit_prob > 0.0) || spec.correct_bit_prob > 1.0)
        throw std::invalid_argument("p must be in (0, 1]");
    if (spec.mode == NoiseSpec::Mode::iid) {
        if (rejections) *rejections = 0;
        return generate_iid_error(k, n, spec.correct_bit_prob, rng);
    }
    return generate_bounded_error(k, n, spec.row_max, spec.col_max, rng, rejections);
}

SimulationResult monte_carlo_success_rate(int k, int n, double p, size_t trials,
                                          uint64_t seed) {
    check_np(n, p);
    if (trials < 1) throw std::invalid_argument("at least one trial required");
    BitSequence vertical = make_half_de_bruijn(k);
    BitSequence horizontal = make_de_bruijn(n);
    Locator vloc = Locator::table(vertical);
    Locator hloc = Locator::table(horizontal);
    const size_t rows = vertical.length(), cols = horizontal.length();

    size_t successes = 0;
    for (size_t t = 0; t < trials; ++t) {
        SplitMix64 rng = SplitMix64::stream(seed, t);
        size_t r = rng.below(rows);
        size_t c = rng.below(cols);
        RectSample sample = sample_window(vertical, horizontal, r, c, k, n);
        double flip = 1.0 - p;
        if (flip > 0.0)
            for (size_t i = 0; i < static_cast<size_t>(k); ++i)
                for (size_t j = 0; j < static_cast<size_t>(n); ++j)
                    if (rng.chance(flip)) sample.bits.flip(i, j);
        DecodeReport rep = robust_decode(sample, vloc, hloc);
        if (rep.status == DecodeStatus::ok && rep.location &&
            rep.location->row == r && rep.location->col == c)
            ++successes;
    }

    SimulationResult res;
    res.trials = trials;
    res.successes = successes;
    res.rate = static_cast<double>(successes) / static_cast<double>(trials);
    double half = 1.959963985 * std::sqrt(res.rate * (1.0 - res.rate) /
                                          static_cast<double>(trials));
    res.ci_low = std::max(0.0, res.rate - half);
    res.ci_high = std::min(1.0, res.rate + half);
    res.analytic = decode_success_bound(k, n, p);
    return res;
}

std::vector<TableEntry> reproduce_table1() {
    std::vector<TableEntry> entries;
    for (int pp = 90; pp <= 99; ++pp)
        for (int n : {8, 16, 32, 64})
            entries.push_back({pp / 100.0, n, all_rows_prob(n, n, pp / 100.0)});
    return entries;
}

std::string format_table1(const std::vector<TableEntry>& entries) {
    std::ostringstream out;
    out << "p \\ n        8       16       32       64\n";
    for (int pp = 90; pp <= 99; ++pp) {
        out << "0." << pp;
        for (int n : {8, 16, 32, 64}) {
            double v = 0.0;
            for (const auto& e : entries)
                if (e.n == n && std::lround(e.p * 100) == pp) v = e.value;
            char buf[16];
            if (v > 0.9999)
                std::snprintf(buf, sizeof buf, "%8s", ">0.9999");
            else if (v >= 0.9905)
                std::snprintf(buf, sizeof buf, "%8.4f", v);
            else
                std::snprintf(buf, sizeof buf, "%8.3f", v);
            out << ' ' << buf;
        }
        out << '\n';
    }
    return out.str();
}

std::string simulation_csv_header() {
    return "p,n,analytic,empirical,ci_low,ci_high,trials";
}

std::string simulation_csv_row(double p, int n, const SimulationResult& r) {
    std::ostringstream out;
    out.precision(10);
    out << p << ',' << n << ',' << r.analytic << ',' << r.rate << ',' << r.ci_low << ','
        << r.ci_high << ',' << r.trials;
    return out.str();
}

}  // namespace selfloc
