#include "primecover/congruence_stats.hpp"

#include "primecover/parallel.hpp"
#include "primecover/singular_series.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace primecover {

namespace {

/// Dense primality bitset for [0, X) answering
///   count(d) = #{y : y and y + d prime, y + d < X}.
class PairCorrelator {
public:
    explicit PairCorrelator(const SievedRange& table, u64 x) : x_(x), bits_((x + 63) / 64 + 1, 0) {
        table.for_each_prime([&](u64 p) { bits_[p / 64] |= u64{1} << (p % 64); });
    }

    u64 count(u64 d) const {
        if (d >= x_) return 0;
        const u64 limit = x_ - d;  // y < limit
        const u64 words = (limit + 63) / 64;
        u64 total = 0;
        for (u64 w = 0; w < words; ++w) {
            const u64 s = 64 * w + d;
            const u64 sw = s / 64, sb = s % 64;
            u64 shifted = bits_[sw] >> sb;
            if (sb != 0 && sw + 1 < bits_.size()) shifted |= bits_[sw + 1] << (64 - sb);
            u64 both = bits_[w] & shifted;
            if (w + 1 == words && limit % 64 != 0) both &= (u64{1} << (limit % 64)) - 1;
            total += static_cast<u64>(std::popcount(both));
        }
        return total;
    }

private:
    u64 x_;
    std::vector<u64> bits_;
};

void check_modulus(u64 x, u64 q) {
    if (q < 2) throw std::domain_error("q must be >= 2");
    if (x < 3) throw std::domain_error("X must be >= 3");
    if (x > kSieveCeiling) throw std::out_of_range("X exceeds the sieve ceiling");
}

ResidueCoverage residue_coverage_from(const SievedRange& table, u64 x, u64 q) {
    ResidueCoverage r;
    r.x = x;
    r.q = q;
    r.per_class.assign(q, 0);
    table.for_each_prime([&](u64 p) { ++r.per_class[p % q]; });
    r.phi_q = euler_phi(q);
    for (u64 a = 0; a < q; ++a) {
        const u64 c = r.per_class[a];
        if (c == 0) continue;
        ++r.covered;
        if (std::gcd(a, q) == 1) ++r.units_covered;
        r.prime_count += c;
        r.second_moment += c * c;
    }
    r.lambda_effective = static_cast<double>(x) / (static_cast<double>(r.phi_q) * std::log(static_cast<double>(q)));
    return r;
}

u64 identity_lhs(const SievedRange& table, u64 x, u64 q) {
    const PairCorrelator corr(table, x);
    u64 total = corr.count(0);
    for (u64 d = q; d < x; d += q) total += 2 * corr.count(d);
    return total;
}

}  // namespace

u64 euler_phi(u64 q) {
    if (q == 0) throw std::domain_error("euler_phi: q must be positive");
    u64 phi = q;
    for (const auto& f : factorize(q)) phi = phi / f.prime * (f.prime - 1);
    return phi;
}

ResidueCoverage residue_coverage(u64 x, u64 q) {
    check_modulus(x, q);
    return residue_coverage_from(sieve_range(2, x), x, q);
}

u64 shifted_pair_count(u64 x, i64 t, u64 q) {
    check_modulus(x, q);
    const u64 mag = t < 0 ? 0 - static_cast<u64>(t) : static_cast<u64>(t);
    if (mag != 0 && (mag >= x || mag * q >= x))
        throw std::domain_error("shifted_pair_count: need |t| < X/q");
    const SievedRange table = sieve_range(2, x);
    return PairCorrelator(table, x).count(mag * q);
}

MomentIdentity verify_moment_identity(u64 x, u64 q) {
    check_modulus(x, q);
    const SievedRange table = sieve_range(2, x);
    MomentIdentity out;
    out.lhs = identity_lhs(table, x, q);
    out.rhs = residue_coverage_from(table, x, q).second_moment;
    out.equal = out.lhs == out.rhs;
    return out;
}

CauchyBound cauchy_lower_bound(const ResidueCoverage& cov) {
    CauchyBound out;
    out.covered = cov.covered;
    out.prime_count = cov.prime_count;
    out.second_moment = cov.second_moment;
    if (cov.second_moment == 0) {
        out.degenerate = true;
        out.holds = true;
        return out;
    }
    out.r_lower = static_cast<double>(cov.prime_count) * static_cast<double>(cov.prime_count) /
                  static_cast<double>(cov.second_moment);
    const unsigned __int128 lhs = static_cast<unsigned __int128>(cov.covered) * cov.second_moment;
    const unsigned __int128 rhs = static_cast<unsigned __int128>(cov.prime_count) * cov.prime_count;
    out.holds = lhs >= rhs;
    return out;
}

CauchyBound cauchy_lower_bound(u64 x, u64 q) { return cauchy_lower_bound(residue_coverage(x, q)); }

std::string to_string(FactorBoundStatus s) {
    switch (s) {
        case FactorBoundStatus::holds: return "holds";
        case FactorBoundStatus::fails: return "fails";
        case FactorBoundStatus::inapplicable: return "inapplicable";
    }
    return "unknown";
}

FactorBoundCheck factor_bound_check(i64 t, u64 q) {
    if (t == 0) throw std::domain_error("factor_bound_check: t must be nonzero");
    if (q < 2) throw std::domain_error("factor_bound_check: q must be >= 2");
    const u64 mag = t < 0 ? 0 - static_cast<u64>(t) : static_cast<u64>(t);
    if (mag > kSieveCeiling / q) throw std::out_of_range("factor_bound_check: |t| q exceeds 2^40");

    FactorBoundCheck out;
    out.t = t;
    out.q = q;
    const SingularValue s_tq = singular_series(t * static_cast<i64>(q));
    const SingularValue s_t = singular_series(t);

    long double factor = static_cast<long double>(q) / static_cast<long double>(euler_phi(q));
    for (const auto& f : factorize(q)) {
        if (f.prime == 2) {
            out.even_modulus = true;
            continue;
        }
        const long double p = static_cast<long double>(f.prime);
        factor *= 1.0L + 1.0L / (p * (p - 2.0L));
    }
    out.lhs = s_tq.value;
    out.lhs_error = s_tq.abs_error;
    out.rhs = static_cast<double>(factor * s_t.value);
    out.rhs_error = static_cast<double>(factor * s_t.abs_error);

    if (s_t.value == 0.0 && s_tq.value > 0.0)
        out.status = FactorBoundStatus::inapplicable;
    else
        out.status = out.lhs - out.lhs_error <= out.rhs + out.rhs_error ? FactorBoundStatus::holds
                                                                         : FactorBoundStatus::fails;
    return out;
}

LinnikScan linnik_scan(double lambda, std::span<const u64> moduli, unsigned threads) {
    if (!(lambda > 0) || !std::isfinite(lambda)) throw std::domain_error("lambda must be positive and finite");
    LinnikScan scan;
    scan.lambda = lambda;
    std::vector<std::optional<LinnikRow>> rows(moduli.size());
    std::vector<std::string> notes(moduli.size());

    parallel_blocks(moduli.size(), threads, [&](u64 i) {
        const u64 q = moduli[i];
        if (q < 3) {
            notes[i] = "q=" + std::to_string(q) + ": modulus must be >= 3";
            return;
        }
        const u64 phi = euler_phi(q);
        const double target = std::ceil(lambda * static_cast<double>(phi) * std::log(static_cast<double>(q)));
        if (target >= static_cast<double>(kSieveCeiling) || target / 8 > static_cast<double>(sieve_budget())) {
            notes[i] = "q=" + std::to_string(q) + ": X exceeds the sieve ceiling";
            return;
        }
        const u64 x = std::max<u64>(3, static_cast<u64>(target));
        const SievedRange table = sieve_range(2, x);
        const ResidueCoverage cov = residue_coverage_from(table, x, q);
        LinnikRow row;
        row.q = q;
        row.phi_q = phi;
        row.x = x;
        row.covered = cov.covered;
        row.units_covered = cov.units_covered;
        row.fraction = static_cast<double>(cov.units_covered) / static_cast<double>(phi);
        row.pi_x = cov.prime_count;
        row.second_moment = cov.second_moment;
        row.identity_ok = identity_lhs(table, x, q) == cov.second_moment;
        rows[i] = row;
    });

    for (std::size_t i = 0; i < moduli.size(); ++i) {
        if (rows[i])
            scan.rows.push_back(*rows[i]);
        else
            scan.skipped.push_back(notes[i]);
    }
    return scan;
}

std::vector<u64> prime_powers_in(u64 lo, u64 hi) {
    std::vector<u64> out;
    if (hi < 2 || lo > hi) return out;
    sieve_range(2, hi + 1).for_each_prime([&](u64 p) {
        for (u64 pk = p;; pk *= p) {
            if (pk >= lo) out.push_back(pk);
            if (pk > hi / p) break;
        }
    });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace primecover
