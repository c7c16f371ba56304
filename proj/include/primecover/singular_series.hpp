// singular_series.hpp
// Hardy-Littlewood singular series for prime pairs {0, h}.
//
//   S(h) = prod_p (1 - nu_p(h)/p) (1 - 1/p)^-2,   nu_p(h) = 1 if p | h else 2
//
// For odd h the p = 2 factor vanishes. For even h the product factors as
//   S(h) = 2*C2 * prod_{p | h, p > 2} (p - 1)/(p - 2),
//   2*C2 = 2 * prod_{p > 2} (1 - 1/(p - 1)^2)  (twin-prime constant),
// so only the constant is a floating approximation.

#pragma once

#include "primecover/sieve.hpp"

#include <vector>

namespace primecover {

inline constexpr u64 kDefaultTwinPrimeCutoff = 1'000'000;

/// 1 if p | h (including h == 0), 2 otherwise. Throws if p is not prime.
int nu_p(i64 h, u64 p);

struct TwinPrimeConstant {
    double value = 0;      // 2 * prod_{2 < p <= cutoff} (1 - 1/(p-1)^2)
    double abs_error = 0;  // value - true constant lies in [0, abs_error]
    u64 cutoff = 0;

    bool operator==(const TwinPrimeConstant&) const = default;
};

/// Truncated Euler product for 2*C2. cutoff >= 3.
TwinPrimeConstant twin_prime_constant(u64 cutoff);

/// The constant at kDefaultTwinPrimeCutoff, computed on first use.
const TwinPrimeConstant& default_twin_prime_constant();

struct PrimePower {
    u64 prime = 0;
    unsigned exponent = 0;
    bool operator==(const PrimePower&) const = default;
};

/// Factorization of n >= 1 by trial division against the base primes.
std::vector<PrimePower> factorize(u64 n);

struct SingularValue {
    i64 h = 0;
    double value = 0;
    double abs_error = 0;
    std::vector<PrimePower> factors;  // of |h|

    bool operator==(const SingularValue&) const = default;
};

/// S(h) for h != 0 via the closed form.
SingularValue singular_series(i64 h);
SingularValue singular_series(i64 h, const TwinPrimeConstant& constant);

/// Sum of S(h1 - h2) over ordered pairs h1 != h2 in {1..H}:
///   2 * sum_{d=1}^{H-1} (H - d) S(d).
double gallagher_pair_sum(u64 H);

}  // namespace primecover
