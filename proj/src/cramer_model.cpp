#include "primecover/cramer_model.hpp"

#include "primecover/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace primecover {

namespace {

constexpr u64 kGolden = 0x9e3779b97f4a7c15ULL;
constexpr u64 kTrialBlock = u64{1} << 14;

u64 model_count(TrialStream& rng, u64 n, u64 H) {
    u64 k = 0;
    for (u64 m = n + 1; m <= n + H; ++m) k += rng.uniform() < 1.0 / std::log(static_cast<double>(m));
    return k;
}

SimReport run(u64 x, double lambda, u64 trials, u64 seed, bool exhaustive, unsigned threads) {
    const u64 H = shift_cap(x, lambda);
    if (x < 10) throw std::domain_error("X must be >= 10");
    if (trials < 1) throw std::domain_error("trials must be >= 1");

    const u64 blocks = (trials + kTrialBlock - 1) / kTrialBlock;
    std::vector<std::vector<u64>> partial(blocks, std::vector<u64>(H + 1, 0));
    parallel_blocks(blocks, threads, [&](u64 b) {
        const u64 end = std::min(trials, (b + 1) * kTrialBlock);
        for (u64 i = b * kTrialBlock; i < end; ++i) {
            TrialStream rng(seed, i);
            const u64 n = exhaustive ? x + i : x + rng.below(x);
            ++partial[b][model_count(rng, n, H)];
        }
    });

    SimReport r;
    r.x = x;
    r.lambda = lambda;
    r.trials = trials;
    r.seed = seed;
    r.exhaustive = exhaustive;
    r.shift_cap = H;
    r.counts.assign(H + 1, 0);
    for (const auto& local : partial)
        for (u64 k = 0; k <= H; ++k) r.counts[k] += local[k];
    const PoissonDistance d = poisson_distance(r.counts, lambda);
    r.poisson_linf = d.linf;
    r.poisson_tv = d.tv;
    return r;
}

}  // namespace

u64 TrialStream::mix(u64 z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

TrialStream::TrialStream(u64 seed, u64 trial) : state_(mix(seed ^ mix(trial + kGolden))) {}

u64 TrialStream::next() {
    state_ += kGolden;
    return mix(state_);
}

double TrialStream::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

u64 TrialStream::below(u64 bound) {
    return static_cast<u64>((static_cast<unsigned __int128>(next()) * bound) >> 64);
}

PoissonDistance poisson_distance(const std::vector<u64>& counts, double lambda) {
    u64 total = 0;
    for (u64 c : counts) total += c;
    if (total == 0) throw std::domain_error("poisson_distance: empty histogram");

    PoissonDistance d;
    double abs_sum = 0, mass = 0;
    const u64 kmax = counts.size() + 64;
    for (u64 k = 0; k < kmax; ++k) {
        const double pmf = poisson_pmf(lambda, k);
        const double emp = k < counts.size() ? static_cast<double>(counts[k]) / static_cast<double>(total) : 0.0;
        const double diff = std::fabs(emp - pmf);
        d.linf = std::max(d.linf, diff);
        abs_sum += diff;
        mass += pmf;
    }
    abs_sum += std::max(0.0, 1.0 - mass);  // Poisson tail beyond kmax
    d.tv = std::min(1.0, 0.5 * abs_sum);
    return d;
}

SimReport simulate(u64 x, double lambda, u64 trials, u64 seed, unsigned threads) {
    return run(x, lambda, trials, seed, false, threads);
}

SimReport simulate_exhaustive(u64 x, double lambda, u64 seed, unsigned threads) {
    return run(x, lambda, x, seed, true, threads);
}

Comparison compare_true_primes(const SimReport& model, const IntervalHistogram& hist) {
    if (model.x != hist.x || model.lambda != hist.lambda)
        throw std::invalid_argument("compare_true_primes: model and histogram parameters differ");
    Comparison c;
    c.x = hist.x;
    c.lambda = hist.lambda;
    c.shift_cap = hist.shift_cap;
    c.trials = model.trials;
    c.seed = model.seed;
    c.paper_lower_bound = coverage_lower_bound(hist.lambda);
    const u64 rows = std::max<u64>(hist.shift_cap + 1, kComparisonMinRows);
    for (u64 k = 0; k < rows; ++k) {
        ComparisonRow row;
        row.k = k;
        row.model = k < model.counts.size()
                        ? static_cast<double>(model.counts[k]) / static_cast<double>(model.trials)
                        : 0.0;
        row.true_primes = p_k(hist, k);
        row.poisson = poisson_pmf(hist.lambda, k);
        if (k >= 1) {
            c.model_covered += row.model;
            c.true_covered += row.true_primes;
            c.poisson_covered += row.poisson;
        }
        c.rows.push_back(row);
    }
    return c;
}

Comparison compare_true_primes(u64 x, double lambda, u64 trials, u64 seed, unsigned threads) {
    return compare_true_primes(simulate(x, lambda, trials, seed, threads), interval_histogram(x, lambda, threads));
}

}  // namespace primecover
