#include "primecover/interval_stats.hpp"

#include "primecover/parallel.hpp"
#include "primecover/singular_series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace primecover {

namespace {

constexpr u64 kHistogramBlock = u64{1} << 16;

u64 checked_mul(u64 a, u64 b, const char* what) {
    const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    if (p > std::numeric_limits<u64>::max()) throw std::overflow_error(std::string(what) + " overflows 64 bits");
    return static_cast<u64>(p);
}

void check_interval_args(u64 x, double lambda, u64 H) {
    if (x < 10) throw std::domain_error("X must be >= 10");
    if (2 * x + H + 1 > kSieveCeiling) throw std::out_of_range("2X + H exceeds the sieve ceiling");
    (void)lambda;
}

}  // namespace

u64 shift_cap(u64 x, double lambda) {
    if (!(lambda > 0) || !std::isfinite(lambda)) throw std::domain_error("lambda must be positive and finite");
    if (x < 2) throw std::domain_error("shift window empty: X < 2");
    const double h = std::floor(lambda * std::log(static_cast<double>(x)));
    if (h < 1) throw std::domain_error("shift window empty: lambda * ln X < 1");
    return static_cast<u64>(h);
}

double coverage_lower_bound(double lambda) { return lambda / (4 * lambda + 1); }

u64 IntervalHistogram::total() const {
    u64 s = 0;
    for (u64 c : counts) s += c;
    return s;
}

u64 IntervalHistogram::moment1() const {
    u64 s = 0;
    for (u64 k = 0; k < counts.size(); ++k) s += k * counts[k];
    return s;
}

u64 IntervalHistogram::moment2() const {
    u64 s = 0;
    for (u64 k = 0; k < counts.size(); ++k) s += k * k * counts[k];
    return s;
}

u64 IntervalHistogram::covered() const { return counts.empty() ? 0 : total() - counts[0]; }

IntervalHistogram interval_histogram(u64 x, double lambda, unsigned threads) {
    const u64 H = shift_cap(x, lambda);
    check_interval_args(x, lambda, H);

    const SievedRange table = sieve_range(x + 1, 2 * x + H, threads);
    const u64 blocks = (x + kHistogramBlock - 1) / kHistogramBlock;
    std::vector<std::vector<u64>> partial(blocks, std::vector<u64>(H + 1, 0));

    parallel_blocks(blocks, threads, [&](u64 b) {
        const u64 n_begin = x + b * kHistogramBlock;
        const u64 n_end = std::min(2 * x, n_begin + kHistogramBlock);
        auto& local = partial[b];
        // window holds I_n = #{p in (n, n + H]}
        u64 window = table.count(n_begin + 1, n_begin + H + 1);
        for (u64 n = n_begin;; ++n) {
            ++local[window];
            if (n + 1 == n_end) break;
            window -= table.is_prime(n + 1);
            window += table.is_prime(n + H + 1);
        }
    });

    IntervalHistogram hist;
    hist.x = x;
    hist.lambda = lambda;
    hist.shift_cap = H;
    hist.counts.assign(H + 1, 0);
    for (const auto& local : partial)
        for (u64 k = 0; k <= H; ++k) hist.counts[k] += local[k];
    return hist;
}

double p_k(const IntervalHistogram& hist, u64 k) {
    if (k >= hist.counts.size() || hist.x == 0) return 0.0;
    return static_cast<double>(hist.counts[k]) / static_cast<double>(hist.x);
}

u64 pair_count(u64 x, u64 h1, u64 h2) {
    if (x < 10) throw std::domain_error("X must be >= 10");
    const u64 lo_shift = std::min(h1, h2), hi_shift = std::max(h1, h2);
    if (2 * x + hi_shift > kSieveCeiling) throw std::out_of_range("2X + h exceeds the sieve ceiling");
    const SievedRange table = sieve_range(x + lo_shift, 2 * x + hi_shift);
    if (h1 == h2) return table.count();
    u64 total = 0;
    for (u64 n = x; n < 2 * x; ++n) total += table.is_prime(n + h1) && table.is_prime(n + h2);
    return total;
}

MomentDecomposition second_moment_decomposition(u64 x, double lambda) {
    const u64 H = shift_cap(x, lambda);
    check_interval_args(x, lambda, H);

    // flag[j] = 1 iff x + 1 + j is prime, j in [0, X + H - 1)
    const SievedRange table = sieve_range(x + 1, 2 * x + H);
    const u64 span_len = x + H - 1;
    std::vector<std::uint8_t> flag(span_len, 0);
    table.for_each_prime([&](u64 p) { flag[p - x - 1] = 1; });

    MomentDecomposition out;
    // A(h, h) = primes in [x + h, 2x + h)
    for (u64 h = 1; h <= H; ++h) out.diagonal += table.count(x + h, 2 * x + h);

    // A(h1, h1 + d) = #{m in [x + h1, 2x + h1) : m, m + d prime}
    std::vector<u64> prefix(span_len + 1, 0);
    for (u64 d = 1; d < H; ++d) {
        prefix[0] = 0;
        for (u64 j = 0; j < span_len; ++j) {
            const bool both = flag[j] && j + d < span_len && flag[j + d];
            prefix[j + 1] = prefix[j] + both;
        }
        for (u64 h1 = 1; h1 + d <= H; ++h1) {
            const u64 from = h1 - 1;  // index of x + h1
            out.offdiagonal += 2 * (prefix[from + x] - prefix[from]);
        }
    }
    return out;
}

SelbergBound selberg_bound(u64 x, i64 h1, i64 h2, double error_constant) {
    if (h1 == h2) throw std::domain_error("selberg_bound: diagonal pairs h1 == h2 are excluded");
    if (x < 10) throw std::domain_error("X must be >= 10");
    SelbergBound out;
    out.shift = h1 - h2;
    out.singular = singular_series(out.shift).value;
    const double lx = std::log(static_cast<double>(x));
    out.main_term = 4.0 * out.singular * static_cast<double>(x) / (lx * lx);
    out.error_constant = error_constant;
    const double shift_mag = std::fabs(static_cast<double>(out.shift));
    out.error_factor =
        1.0 + error_constant * (std::log(std::log(3.0 * x)) + std::log(std::log(3.0 * shift_mag))) / lx;
    return out;
}

CoverageReport coverage(const IntervalHistogram& hist) {
    CoverageReport r;
    r.x = hist.x;
    r.lambda = hist.lambda;
    r.shift_cap = hist.shift_cap;
    r.r_x = hist.covered();
    r.fraction = static_cast<double>(r.r_x) / static_cast<double>(hist.x);
    r.paper_lower_bound = coverage_lower_bound(hist.lambda);
    r.moment1 = hist.moment1();
    r.moment2 = hist.moment2();
    r.cauchy_lhs = checked_mul(r.r_x, r.moment2, "R_X * moment2");
    r.cauchy_rhs = checked_mul(r.moment1, r.moment1, "moment1^2");
    r.cauchy_holds = r.cauchy_lhs >= r.cauchy_rhs;
    return r;
}

CoverageReport coverage(u64 x, double lambda, unsigned threads) {
    return coverage(interval_histogram(x, lambda, threads));
}

double poisson_pmf(double lambda, u64 k) {
    if (!(lambda > 0)) throw std::domain_error("poisson_pmf: lambda must be positive");
    const double kd = static_cast<double>(k);
    return std::exp(-lambda + kd * std::log(lambda) - std::lgamma(kd + 1.0));
}

}  // namespace primecover
