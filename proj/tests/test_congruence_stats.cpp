#include "oracles.hpp"
#include "primecover/congruence_stats.hpp"
#include "primecover/singular_series.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

using namespace primecover;

TEST_CASE("euler phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(2) == 1);
    CHECK(euler_phi(4) == 2);
    CHECK(euler_phi(30) == 8);
    CHECK(euler_phi(101) == 100);
    CHECK(euler_phi(1024) == 512);
    for (u64 q = 1; q <= 300; ++q) {
        u64 brute = 0;
        for (u64 a = 1; a <= q; ++a) brute += std::gcd(a, q) == 1;
        REQUIRE(euler_phi(q) == brute);
    }
}

TEST_CASE("residue coverage examples") {
    const auto r = residue_coverage(20, 4);
    CHECK(r.per_class == std::vector<u64>{0, 3, 1, 4});
    CHECK(r.covered == 3);
    CHECK(r.units_covered == 2);
    CHECK(r.second_moment == 26);
    CHECK(r.prime_count == 8);
    CHECK(r.phi_q == 2);

    const auto single = residue_coverage(3, 2);
    CHECK(single.per_class == std::vector<u64>{1, 0});
    CHECK(single.covered == 1);

    const auto big = residue_coverage(1'000'000, 101);
    CHECK(big.covered == 101);  // every unit class plus 101 itself
    CHECK(big.units_covered == 100);
    CHECK(big.prime_count == 78498);
    CHECK(big.lambda_effective == doctest::Approx(1e6 / (100 * std::log(101.0))));

    CHECK_THROWS(residue_coverage(20, 1));
    CHECK_THROWS(residue_coverage(2, 5));
}

TEST_CASE("residue coverage invariants against trial division") {
    std::mt19937_64 rng(1234);
    for (int i = 0; i < 40; ++i) {
        const u64 x = 3 + rng() % 10'000;
        const u64 q = 2 + rng() % 500;
        const auto r = residue_coverage(x, q);
        const auto expected = oracle::residue_counts(x, q);
        CAPTURE(x);
        CAPTURE(q);
        CHECK(r.per_class == expected);
        u64 covered = 0, sum = 0, sq = 0;
        for (u64 c : expected) {
            covered += c > 0;
            sum += c;
            sq += c * c;
        }
        CHECK(r.covered == covered);
        CHECK(r.prime_count == sum);
        CHECK(r.second_moment == sq);
        CHECK(r.covered <= std::min<u64>(q, sum));
    }
}

TEST_CASE("shifted pair counts") {
    CHECK(shifted_pair_count(20, 0, 4) == 8);
    CHECK(shifted_pair_count(20, 1, 4) == 3);
    CHECK(shifted_pair_count(20, -1, 4) == 3);
    CHECK(shifted_pair_count(20, 4, 4) == 1);  // (19, 3)
    CHECK_THROWS_AS(shifted_pair_count(20, 5, 4), std::domain_error);
    CHECK_THROWS_AS(shifted_pair_count(20, -5, 4), std::domain_error);

    std::mt19937_64 rng(3);
    for (int i = 0; i < 60; ++i) {
        const u64 x = 3 + rng() % 3000;
        const u64 q = 2 + rng() % 60;
        const i64 tmax = static_cast<i64>((x - 1) / q);
        const i64 t = tmax == 0 ? 0 : static_cast<i64>(rng() % (2 * tmax + 1)) - tmax;
        CHECK(shifted_pair_count(x, t, q) == oracle::prime_pairs_with_difference(x, t * static_cast<i64>(q)));
        CHECK(shifted_pair_count(x, t, q) == shifted_pair_count(x, -t, q));
    }
}

TEST_CASE("moment identity") {
    const auto small = verify_moment_identity(20, 4);
    CHECK(small.lhs == 26);
    CHECK(small.rhs == 26);
    CHECK(small.equal);
    CHECK(verify_moment_identity(10, 3).equal);

    for (u64 x : {3ULL, 17ULL, 500ULL, 2000ULL})
        for (u64 q : {2ULL, 3ULL, 10ULL, 97ULL, 3000ULL}) {
            const auto id = verify_moment_identity(x, q);
            CHECK(id.equal);
            CHECK(id.lhs == oracle::congruent_prime_pairs(x, q));
        }

    // sampled grid up to X = 10^6, q = 10^4
    for (u64 x : {100'000ULL, 1'000'000ULL})
        for (u64 q : {1000ULL, 4096ULL, 9999ULL}) CHECK(verify_moment_identity(x, q).equal);
    CHECK(verify_moment_identity(100'000, 30).equal);
}

TEST_CASE("cauchy lower bound") {
    const auto c = cauchy_lower_bound(20, 4);
    CHECK(c.r_lower == doctest::Approx(64.0 / 26.0));
    CHECK(c.covered == 3);
    CHECK(c.holds);

    const auto one = cauchy_lower_bound(3, 5);
    CHECK(one.r_lower == 1.0);
    CHECK(one.covered == 1);
    CHECK(one.holds);

    ResidueCoverage empty;
    empty.q = 5;
    const auto degenerate = cauchy_lower_bound(empty);
    CHECK(degenerate.degenerate);
    CHECK(degenerate.r_lower == 0.0);

    std::mt19937_64 rng(17);
    for (int i = 0; i < 30; ++i) {
        const u64 x = 3 + rng() % 200'000;
        const u64 q = 2 + rng() % 2000;
        const auto b = cauchy_lower_bound(x, q);
        CHECK(b.holds);
        CHECK(static_cast<double>(b.covered) >= b.r_lower * (1 - 1e-12));
    }
}

TEST_CASE("factor bound check") {
    const auto eq = factor_bound_check(2, 3);
    CHECK(eq.status == FactorBoundStatus::holds);
    CHECK(eq.lhs == doctest::Approx(2 * singular_series(2).value));
    CHECK(eq.rhs == doctest::Approx(eq.lhs).epsilon(1e-14));

    const auto odd = factor_bound_check(1, 2);
    CHECK(odd.status == FactorBoundStatus::inapplicable);
    CHECK(odd.even_modulus);

    const auto c = factor_bound_check(4, 9);
    CHECK(c.lhs == doctest::Approx(singular_series(36).value));
    CHECK(c.rhs == doctest::Approx(1.5 * singular_series(4).value * (4.0 / 3.0)));
    CHECK(c.status == FactorBoundStatus::holds);

    CHECK(factor_bound_check(3, 5).status == FactorBoundStatus::holds);  // 0 <= 0
    CHECK_THROWS(factor_bound_check(0, 5));
    CHECK_THROWS(factor_bound_check(3, 1));

    for (i64 t = -60; t <= 60; ++t) {
        if (t == 0) continue;
        for (u64 q = 2; q <= 120; ++q) {
            const auto r = factor_bound_check(t, q);
            REQUIRE(r.status != FactorBoundStatus::fails);
            if (r.status == FactorBoundStatus::inapplicable) REQUIRE((t % 2 != 0 && q % 2 == 0));
        }
    }
}

TEST_CASE("linnik scan") {
    const std::vector<u64> one = {101};
    const auto scan = linnik_scan(2.0, one);
    REQUIRE(scan.rows.size() == 1);
    const auto& row = scan.rows[0];
    CHECK(row.x == 924);
    CHECK(row.phi_q == 100);
    CHECK(row.units_covered == 89);  // frozen from a sieve run
    CHECK(row.fraction == doctest::Approx(0.89));
    CHECK(row.pi_x == oracle::primes(2, 924).size());
    CHECK(row.covered <= row.pi_x);
    CHECK(row.identity_ok);

    const std::vector<u64> mixed = {2, 3, 10, 1024, 1999};
    const auto many = linnik_scan(1.0, mixed, 3);
    CHECK(many.rows.size() == 4);
    CHECK(many.skipped.size() == 1);
    for (const auto& r : many.rows) {
        CHECK(r.fraction > 0.0);
        CHECK(r.fraction <= 1.0);
        CHECK(r.covered <= r.pi_x);
        CHECK(r.identity_ok);
    }
    CHECK(many == linnik_scan(1.0, mixed, 1));
    CHECK_THROWS(linnik_scan(0.0, mixed));
}

TEST_CASE("prime powers") {
    CHECK(prime_powers_in(3, 30) == std::vector<u64>{3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29});
    CHECK(prime_powers_in(1, 2) == std::vector<u64>{2});
    CHECK(prime_powers_in(5, 4).empty());
}
