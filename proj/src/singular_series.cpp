#include "primecover/singular_series.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace primecover {

int nu_p(i64 h, u64 p) {
    if (!is_prime_trial(p)) throw std::invalid_argument("nu_p: p must be prime");
    const u64 mag = h < 0 ? 0 - static_cast<u64>(h) : static_cast<u64>(h);
    return mag % p == 0 ? 1 : 2;
}

TwinPrimeConstant twin_prime_constant(u64 cutoff) {
    if (cutoff < 3) throw std::invalid_argument("twin_prime_constant: cutoff must be >= 3");
    long double product = 2.0L;
    for (std::uint32_t p : *base_primes(cutoff)) {
        if (p == 2) continue;
        if (p > cutoff) break;
        const long double pm1 = static_cast<long double>(p) - 1.0L;
        product *= 1.0L - 1.0L / (pm1 * pm1);
    }
    // Tail: sum_{p > c} 1/(p-1)^2 <= 2/(c ln c). The omitted factors lie in
    // (0, 1), so the truncated product overshoots by at most value * tail.
    const double c = static_cast<double>(cutoff);
    const double tail = 2.0 / (c * std::log(c));
    TwinPrimeConstant out;
    out.value = static_cast<double>(product);
    out.abs_error = out.value * tail;
    out.cutoff = cutoff;
    return out;
}

const TwinPrimeConstant& default_twin_prime_constant() {
    static const TwinPrimeConstant constant = twin_prime_constant(kDefaultTwinPrimeCutoff);
    return constant;
}

std::vector<PrimePower> factorize(u64 n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    if (n > kSieveCeiling) throw std::out_of_range("factorize: n exceeds 2^40");
    std::vector<PrimePower> out;
    const auto base = base_primes(isqrt(n));
    for (std::uint32_t p32 : *base) {
        const u64 p = p32;
        if (p * p > n) break;
        if (n % p != 0) continue;
        PrimePower pp{p, 0};
        while (n % p == 0) {
            n /= p;
            ++pp.exponent;
        }
        out.push_back(pp);
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

SingularValue singular_series(i64 h) { return singular_series(h, default_twin_prime_constant()); }

SingularValue singular_series(i64 h, const TwinPrimeConstant& constant) {
    if (h == 0) throw std::invalid_argument("singular_series: h must be nonzero");
    SingularValue out;
    out.h = h;
    const u64 mag = h < 0 ? 0 - static_cast<u64>(h) : static_cast<u64>(h);
    out.factors = factorize(mag);
    if (mag % 2 != 0) return out;

    long double local = 1.0L;
    for (const auto& f : out.factors) {
        if (f.prime == 2) continue;
        const long double p = static_cast<long double>(f.prime);
        local *= (p - 1.0L) / (p - 2.0L);
    }
    out.value = static_cast<double>(local * constant.value);
    out.abs_error = static_cast<double>(local * constant.abs_error);
    return out;
}

double gallagher_pair_sum(u64 H) {
    if (H < 1) throw std::invalid_argument("gallagher_pair_sum: H must be >= 1");
    const TwinPrimeConstant& constant = default_twin_prime_constant();
    long double sum = 0;
    for (u64 d = 2; d < H; d += 2) {
        sum += static_cast<long double>(H - d) * singular_series(static_cast<i64>(d), constant).value;
    }
    return static_cast<double>(2.0L * sum);
}

}  // namespace primecover
