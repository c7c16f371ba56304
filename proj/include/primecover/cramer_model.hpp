// cramer_model.hpp
// Monte Carlo simulation of the Cramer random model: each m >= 3 is "prime"
// independently with probability 1/ln m. A trial picks n in [X, 2X) and
// counts model primes in (n, n + H], H = floor(lambda ln X).
//
// Random streams: trial i of a run seeded with s uses a SplitMix64 stream
// whose initial state is mix(s ^ mix(i + golden)). The first draw picks n
// (multiply-shift reduction of a 64-bit word onto [0, X)); subsequent draws
// are compared as 53-bit uniforms u < 1/ln m for m = n+1, ..., n+H.
// This derivation is frozen: reports depend only on (X, lambda, trials, seed).

#pragma once

#include "primecover/interval_stats.hpp"

#include <vector>

namespace primecover {

class TrialStream {
public:
    TrialStream(u64 seed, u64 trial);

    u64 next();
    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    /// Uniform on [0, bound) via the high half of a 64x64 product.
    u64 below(u64 bound);

    static u64 mix(u64 z);

private:
    u64 state_;
};

struct SimReport {
    u64 x = 0;
    double lambda = 0;
    u64 trials = 0;
    u64 seed = 0;
    bool exhaustive = false;
    u64 shift_cap = 0;
    std::vector<u64> counts;  // counts[k] = trials with k model primes
    double poisson_linf = 0;  // max_k |P_k - poisson_pmf(lambda, k)|
    double poisson_tv = 0;    // total variation distance to Poisson(lambda)

    bool operator==(const SimReport&) const = default;
};

/// Random-n simulation. Requires x >= 10, trials >= 1, lambda ln X >= 1.
SimReport simulate(u64 x, double lambda, u64 trials, u64 seed, unsigned threads = 0);

/// Every n in [X, 2X) exactly once (trials = X); only the indicators are random.
SimReport simulate_exhaustive(u64 x, double lambda, u64 seed, unsigned threads = 0);

struct PoissonDistance {
    double linf = 0;
    double tv = 0;
};

/// Distances between the empirical law counts/total and Poisson(lambda).
PoissonDistance poisson_distance(const std::vector<u64>& counts, double lambda);

struct ComparisonRow {
    u64 k = 0;
    double model = 0;
    double true_primes = 0;
    double poisson = 0;

    bool operator==(const ComparisonRow&) const = default;
};

struct Comparison {
    u64 x = 0;
    double lambda = 0;
    u64 shift_cap = 0;
    u64 trials = 0;
    u64 seed = 0;
    std::vector<ComparisonRow> rows;  // k = 0 .. max(H, 50)
    double model_covered = 0;         // sum_{k >= 1} of each column
    double true_covered = 0;
    double poisson_covered = 0;
    double paper_lower_bound = 0;

    bool operator==(const Comparison&) const = default;
};

inline constexpr u64 kComparisonMinRows = 51;

Comparison compare_true_primes(const SimReport& model, const IntervalHistogram& hist);
Comparison compare_true_primes(u64 x, double lambda, u64 trials, u64 seed, unsigned threads = 0);

}  // namespace primecover
