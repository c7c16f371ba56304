#include "primecover/sieve.hpp"

#include "primecover/parallel.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <string>

namespace primecover {

namespace {

u64 odd_index_ceil(u64 first_odd, u64 n) {
    // number of odd m with first_odd <= m < n
    return n <= first_odd ? 0 : (n - first_odd + 1) / 2;
}

u64 popcount_range(std::span<const u64> words, u64 from, u64 to) {
    if (from >= to) return 0;
    u64 wf = from / 64, wt = to / 64;
    const u64 head_mask = ~u64{0} << (from % 64);
    if (wf == wt) {
        const u64 tail_mask = (u64{1} << (to % 64)) - 1;
        return static_cast<u64>(std::popcount(words[wf] & head_mask & tail_mask));
    }
    u64 total = static_cast<u64>(std::popcount(words[wf] & head_mask));
    for (u64 w = wf + 1; w < wt; ++w) total += static_cast<u64>(std::popcount(words[w]));
    if (to % 64 != 0) total += static_cast<u64>(std::popcount(words[wt] & ((u64{1} << (to % 64)) - 1)));
    return total;
}

void put_le64(std::ostream& out, u64 v) {
    char buf[8];
    for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    out.write(buf, 8);
}

u64 get_le64(std::istream& in) {
    unsigned char buf[8];
    if (!in.read(reinterpret_cast<char*>(buf), 8)) throw std::runtime_error("sieve dump truncated");
    u64 v = 0;
    for (int i = 0; i < 8; ++i) v |= u64{buf[i]} << (8 * i);
    return v;
}

std::mutex g_base_mutex;
std::shared_ptr<const std::vector<std::uint32_t>> g_base;
u64 g_base_limit = 0;

std::vector<std::uint32_t> simple_sieve(u64 limit) {
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint32_t> out;
    for (u64 i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(static_cast<std::uint32_t>(i));
        for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
}

}  // namespace

u64 sieve_budget() {
    const char* env = std::getenv("PRIMECOVER_SIEVE_BUDGET");
    if (env == nullptr || *env == '\0') return kDefaultSieveBudget;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
        throw std::invalid_argument(std::string("PRIMECOVER_SIEVE_BUDGET is not a positive decimal: ") + env);
    return static_cast<u64>(v);
}

u64 isqrt(u64 n) {
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::shared_ptr<const std::vector<std::uint32_t>> base_primes(u64 limit) {
    if (limit > (u64{1} << 32)) throw std::out_of_range("base prime limit exceeds 2^32");
    std::lock_guard lock(g_base_mutex);
    if (!g_base || g_base_limit < limit) {
        const u64 target = std::max<u64>({limit, 2 * g_base_limit, 1 << 16});
        g_base = std::make_shared<const std::vector<std::uint32_t>>(simple_sieve(target));
        g_base_limit = target;
    }
    return g_base;
}

bool is_prime_trial(u64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (u64 d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

bool SievedRange::is_prime(u64 n) const {
    if (n < lo_ || n >= hi_) throw std::out_of_range("is_prime: n outside sieved range");
    if (n == 2) return has_two_;
    if (n % 2 == 0) return false;
    const u64 i = (n - first_odd_) / 2;
    return (bits_[i / 64] >> (i % 64)) & 1;
}

u64 SievedRange::count(u64 a, u64 b) const {
    a = std::max(a, lo_);
    b = std::min(b, hi_);
    if (a >= b) return 0;
    u64 total = (has_two_ && a <= 2 && 2 < b) ? 1 : 0;
    total += popcount_range(bits_, odd_index_ceil(first_odd_, a), odd_index_ceil(first_odd_, b));
    return total;
}

std::vector<u64> SievedRange::primes() const {
    std::vector<u64> out;
    for_each_prime([&](u64 p) { out.push_back(p); });
    return out;
}

void SievedRange::write(std::ostream& out) const {
    put_le64(out, lo_);
    put_le64(out, hi_);
    for (u64 w : bits_) put_le64(out, w);
    if (!out) throw std::runtime_error("failed to write sieve dump");
}

SievedRange SievedRange::read(std::istream& in) {
    SievedRange r;
    r.lo_ = get_le64(in);
    r.hi_ = get_le64(in);
    if (r.lo_ < 2 || r.lo_ >= r.hi_ || r.hi_ > kSieveCeiling) throw std::runtime_error("sieve dump has invalid header");
    r.first_odd_ = r.lo_ | 1;
    r.odd_count_ = odd_index_ceil(r.first_odd_, r.hi_);
    r.has_two_ = r.lo_ <= 2;
    r.bits_.resize((r.odd_count_ + 63) / 64);
    for (u64& w : r.bits_) w = get_le64(in);
    return r;
}

SievedRange sieve_range(u64 lo, u64 hi, unsigned threads) {
    if (lo < 2 || lo >= hi) throw std::invalid_argument("sieve_range: need 2 <= lo < hi");
    if (hi > kSieveCeiling) throw std::out_of_range("sieve_range: hi exceeds sieve ceiling 2^40");

    SievedRange r;
    r.lo_ = lo;
    r.hi_ = hi;
    r.first_odd_ = lo | 1;
    r.has_two_ = lo <= 2;
    r.odd_count_ = odd_index_ceil(r.first_odd_, hi);
    const u64 words = (r.odd_count_ + 63) / 64;
    if (words * 8 > sieve_budget())
        throw std::length_error("sieve_range: bitmap of " + std::to_string(words * 8) +
                                " bytes exceeds memory budget");
    r.bits_.assign(words, ~u64{0});
    if (r.odd_count_ % 64 != 0) r.bits_.back() = (u64{1} << (r.odd_count_ % 64)) - 1;
    if (words == 0) return r;

    const u64 root = isqrt(hi - 1);
    const auto base = base_primes(root);
    const u64 first_odd = r.first_odd_;
    const u64 odd_count = r.odd_count_;
    const u64 segments = (words + kSegmentWords - 1) / kSegmentWords;
    u64* bits = r.bits_.data();

    parallel_blocks(segments, threads, [&](u64 seg) {
        const u64 i_begin = seg * kSegmentWords * 64;
        const u64 i_end = std::min(odd_count, (seg + 1) * kSegmentWords * 64);
        const u64 n_begin = first_odd + 2 * i_begin;  // smallest odd in segment
        for (std::uint32_t p32 : *base) {
            const u64 p = p32;
            if (p == 2) continue;
            if (p > root) break;
            u64 m = std::max(p * p, (n_begin + p - 1) / p * p);
            if (m % 2 == 0) m += p;
            for (u64 i = (m - first_odd) / 2; i < i_end; i += p) bits[i / 64] &= ~(u64{1} << (i % 64));
        }
    });
    return r;
}

u64 pi(u64 x) {
    if (x < 2) return 0;
    return sieve_range(2, x + 1).count();
}

u64 pi_progression(u64 x, u64 q, u64 a) {
    if (q == 0) throw std::invalid_argument("pi_progression: q must be positive");
    if (a >= q) throw std::invalid_argument("pi_progression: need 0 <= a < q");
    if (x <= 2) return 0;
    u64 total = 0;
    sieve_range(2, x).for_each_prime([&](u64 p) { total += (p % q == a); });
    return total;
}

std::vector<u64> primes_in(u64 lo, u64 hi) { return sieve_range(lo, hi).primes(); }

}  // namespace primecover
