// sieve.hpp
// Exact prime enumeration over integer ranges.
//
// A SievedRange holds primality flags for [lo, hi) in an odd-only bitmap:
//   bit i  <->  odd number first_odd + 2*i,   first_odd = lo | 1
// The prime 2 is tracked separately. Memory is (hi - lo) / 16 bytes plus
// the shared base-prime table up to sqrt(hi).
//
// Counting conventions differ on purpose:
//   pi(x)                counts p <= x   (so pi(n + H) - pi(n) counts (n, n + H])
//   pi_progression(x..)  counts p <  x   (residue-class statistics use p < X)

#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <vector>

namespace primecover {

using u64 = std::uint64_t;
using i64 = std::int64_t;

/// Largest exclusive upper bound accepted by sieve_range.
inline constexpr u64 kSieveCeiling = u64{1} << 40;

/// Segment length in 64-bit words (128 KiB, about one L2 cache).
inline constexpr u64 kSegmentWords = u64{1} << 14;

/// Default memory budget for a single SievedRange bitmap, in bytes.
/// Overridden by the PRIMECOVER_SIEVE_BUDGET environment variable.
inline constexpr u64 kDefaultSieveBudget = u64{1} << 30;

/// Current bitmap budget in bytes (environment override or default).
u64 sieve_budget();

/// floor(sqrt(n)) computed exactly.
u64 isqrt(u64 n);

/// All primes <= limit. Computed once and grown on demand; the returned
/// table is immutable and may be shared between threads.
std::shared_ptr<const std::vector<std::uint32_t>> base_primes(u64 limit);

/// Trial-division primality test, used for argument validation only.
bool is_prime_trial(u64 n);

class SievedRange {
public:
    SievedRange() = default;

    u64 lo() const { return lo_; }
    u64 hi() const { return hi_; }

    /// Primality of n; n must lie in [lo, hi).
    bool is_prime(u64 n) const;

    /// Number of primes in [a, b) intersected with [lo, hi).
    u64 count(u64 a, u64 b) const;

    /// Total number of primes in [lo, hi).
    u64 count() const { return count(lo_, hi_); }

    std::vector<u64> primes() const;

    template <class Fn>
    void for_each_prime(Fn&& fn) const {
        if (has_two_) fn(u64{2});
        for (std::size_t w = 0; w < bits_.size(); ++w) {
            u64 word = bits_[w];
            while (word != 0) {
                const int b = __builtin_ctzll(word);
                fn(first_odd_ + 2 * (64 * w + static_cast<u64>(b)));
                word &= word - 1;
            }
        }
    }

    /// Raw odd-only bitmap; bits past hi are zero.
    std::span<const u64> words() const { return bits_; }
    u64 first_odd() const { return first_odd_; }

    /// Binary dump: lo and hi as 8-byte little-endian, then the bitmap words
    /// as 8-byte little-endian (bit layout as described at the top of this file).
    void write(std::ostream& out) const;
    static SievedRange read(std::istream& in);

    bool operator==(const SievedRange&) const = default;

private:
    friend SievedRange sieve_range(u64 lo, u64 hi, unsigned threads);

    u64 lo_ = 0;
    u64 hi_ = 0;
    u64 first_odd_ = 0;
    u64 odd_count_ = 0;
    bool has_two_ = false;
    std::vector<u64> bits_;
};

/// Sieve [lo, hi). Requires 2 <= lo < hi <= kSieveCeiling and a bitmap that
/// fits in sieve_budget(). threads == 0 means all available cores; the result
/// does not depend on it.
SievedRange sieve_range(u64 lo, u64 hi, unsigned threads = 0);

/// #{p prime : p <= x}.
u64 pi(u64 x);

/// #{p prime : p < x, p = a (mod q)}. Requires q >= 1 and a < q.
u64 pi_progression(u64 x, u64 q, u64 a);

/// Strictly increasing list of primes in [lo, hi).
std::vector<u64> primes_in(u64 lo, u64 hi);

}  // namespace primecover
