// interval_stats.hpp
// Prime counts in short intervals (n, n + H], n in [X, 2X), H = floor(lambda ln X).
//
// I_n    = #{p prime : n < p <= n + H}
// P_k    = #{n : I_n = k} / X
// R_X    = #{n : I_n >= 1}
// A(h1,h2) = #{n in [X, 2X) : n + h1 and n + h2 both prime}
//
// Shifts run over {1, ..., H}; pairs (h1, h2) are ordered throughout, so
//   sum_n I_n^2 = sum_{h1,h2} A(h1,h2)  exactly.

#pragma once

#include "primecover/sieve.hpp"

#include <vector>

namespace primecover {

/// floor(lambda * ln x); throws std::domain_error("shift window empty") when 0.
u64 shift_cap(u64 x, double lambda);

/// lambda / (4 lambda + 1), the asymptotic lower bound on R_X / X.
double coverage_lower_bound(double lambda);

struct IntervalHistogram {
    u64 x = 0;
    double lambda = 0;
    u64 shift_cap = 0;
    std::vector<u64> counts;  // counts[k] = #{n : I_n = k}, k = 0..shift_cap

    u64 total() const;
    u64 moment1() const;  // sum_n I_n
    u64 moment2() const;  // sum_n I_n^2
    u64 covered() const;  // R_X

    bool operator==(const IntervalHistogram&) const = default;
};

/// Histogram of I_n over n in [X, 2X) from one sieve pass over [X+1, 2X+H).
/// Requires x >= 10, lambda > 0, H >= 1 and 2X + H within the sieve ceiling.
IntervalHistogram interval_histogram(u64 x, double lambda, unsigned threads = 0);

/// counts[k] / X, zero for k beyond the histogram.
double p_k(const IntervalHistogram& hist, u64 k);

/// A(X, h1, h2) counted exactly. Requires x >= 10.
u64 pair_count(u64 x, u64 h1, u64 h2);

struct MomentDecomposition {
    u64 diagonal = 0;     // sum_h A(h, h)
    u64 offdiagonal = 0;  // sum_{h1 != h2} A(h1, h2), ordered
};

/// Splits sum_n I_n^2 into the diagonal and off-diagonal pair counts,
/// computed from pair correlations rather than from the histogram.
MomentDecomposition second_moment_decomposition(u64 x, double lambda);

/// Finite-X slack applied when comparing A(X, h1, h2) against the main term.
inline constexpr double kSelbergSlack = 1.5;

struct SelbergBound {
    i64 shift = 0;             // h1 - h2
    double singular = 0;       // S(h1 - h2)
    double main_term = 0;      // 4 S(h) X / (ln X)^2
    double error_constant = 0; // C
    double error_factor = 0;   // 1 + C (lnln 3X + lnln 3|h|) / ln X

    bool operator==(const SelbergBound&) const = default;
};

/// Upper-bound sieve main term for A(X, h1, h2). Throws if h1 == h2.
SelbergBound selberg_bound(u64 x, i64 h1, i64 h2, double error_constant = 1.0);

struct CoverageReport {
    u64 x = 0;
    double lambda = 0;
    u64 shift_cap = 0;
    u64 r_x = 0;
    double fraction = 0;
    double paper_lower_bound = 0;
    u64 moment1 = 0;
    u64 moment2 = 0;
    u64 cauchy_lhs = 0;  // R_X * moment2
    u64 cauchy_rhs = 0;  // moment1^2
    bool cauchy_holds = false;

    bool operator==(const CoverageReport&) const = default;
};

CoverageReport coverage(const IntervalHistogram& hist);
CoverageReport coverage(u64 x, double lambda, unsigned threads = 0);

/// e^-lambda lambda^k / k!
double poisson_pmf(double lambda, u64 k);

}  // namespace primecover
