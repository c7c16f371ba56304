#include "oracles.hpp"
#include "primecover/cramer_model.hpp"
#include "primecover/report_io.hpp"

#include <doctest.h>

#include <cmath>

using namespace primecover;

TEST_CASE("trial streams are reproducible and well ranged") {
    TrialStream a(42, 7), b(42, 7), c(42, 8);
    bool differs = false;
    for (int i = 0; i < 100; ++i) {
        const u64 va = a.next();
        CHECK(va == b.next());
        differs |= va != c.next();
    }
    CHECK(differs);

    TrialStream s(1, 0);
    for (int i = 0; i < 1000; ++i) {
        const double u = s.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        CHECK(s.below(17) < 17);
    }
}

TEST_CASE("simulate is deterministic and thread independent") {
    const auto r1 = simulate(10'000, 1.0, 50'000, 99, 1);
    const auto r2 = simulate(10'000, 1.0, 50'000, 99, 1);
    const auto r3 = simulate(10'000, 1.0, 50'000, 99, 4);
    CHECK(r1 == r2);
    CHECK(r1 == r3);
    CHECK(json(r1).dump() == json(r3).dump());
    CHECK(simulate(10'000, 1.0, 50'000, 100, 1) != r1);

    u64 total = 0;
    for (u64 c : r1.counts) total += c;
    CHECK(total == 50'000);
    CHECK(r1.shift_cap == 9);
    CHECK(r1.poisson_tv >= 0.0);
    CHECK(r1.poisson_tv <= 1.0);
}

TEST_CASE("simulate rejects bad parameters") {
    CHECK_THROWS_WITH(simulate(5, 0.1, 10, 1), doctest::Contains("shift window empty"));
    CHECK_THROWS(simulate(10'000, 1.0, 0, 1));
    CHECK_THROWS(simulate(10'000, -1.0, 10, 1));
}

TEST_CASE("model histogram converges to the exact model law") {
    const auto exact = oracle::cramer_exact(10'000, 4);  // lambda 0.5
    CHECK(exact[0] == doctest::Approx(0.643828).epsilon(1e-5));

    const auto r = simulate(10'000, 0.5, 1'000'000, 7);
    REQUIRE(r.shift_cap == 4);
    const double p0 = static_cast<double>(r.counts[0]) / 1e6;
    CHECK(std::fabs(p0 - exact[0]) < 3e-3);
    for (u64 k = 0; k <= 4; ++k)
        CHECK(std::fabs(static_cast<double>(r.counts[k]) / 1e6 - exact[k]) < 3e-3);

    // distance to Poisson(lambda) is dominated by the model's own bias
    double bias = 0;
    for (u64 k = 0; k <= 4; ++k) bias = std::max(bias, std::fabs(exact[k] - poisson_pmf(0.5, k)));
    CHECK(std::fabs(r.poisson_linf - bias) < 3e-3);
}

TEST_CASE("exhaustive mode visits every n once") {
    const auto r = simulate_exhaustive(2000, 1.0, 5);
    CHECK(r.exhaustive);
    CHECK(r.trials == 2000);
    u64 total = 0;
    for (u64 c : r.counts) total += c;
    CHECK(total == 2000);
    CHECK(r == simulate_exhaustive(2000, 1.0, 5, 3));
}

TEST_CASE("poisson distance") {
    const std::vector<u64> point_mass = {10};
    const auto d = poisson_distance(point_mass, 1.0);
    CHECK(d.linf == doctest::Approx(1 - std::exp(-1.0)));
    CHECK(d.tv == doctest::Approx(1 - std::exp(-1.0)));

    // histogram proportional to the pmf itself
    std::vector<u64> near;
    for (u64 k = 0; k < 20; ++k) near.push_back(static_cast<u64>(std::llround(1e9 * poisson_pmf(2.0, k))));
    const auto e = poisson_distance(near, 2.0);
    CHECK(e.linf < 1e-8);
    CHECK(e.tv < 1e-7);
    CHECK_THROWS(poisson_distance(std::vector<u64>{0, 0}, 1.0));
}

TEST_CASE("comparison against true primes") {
    const auto cmp = compare_true_primes(1'000'000, 1.0, 100'000, 3);
    CHECK(cmp.rows.size() == 51);
    double poisson_sum = 0;
    for (const auto& r : cmp.rows) poisson_sum += r.poisson;
    CHECK(std::fabs(poisson_sum - 1) < 1e-9);

    const auto hist = interval_histogram(1'000'000, 1.0);
    for (const auto& r : cmp.rows) CHECK(r.true_primes == p_k(hist, r.k));
    CHECK(cmp.true_covered == doctest::Approx(coverage(hist).fraction).epsilon(1e-12));
    CHECK(cmp.model_covered >= cmp.paper_lower_bound);
    CHECK(cmp.poisson_covered == doctest::Approx(1 - std::exp(-1.0)).epsilon(1e-9));

    const auto model = simulate(1'000'000, 1.0, 100'000, 3);
    CHECK(compare_true_primes(model, hist) == cmp);
    CHECK_THROWS(compare_true_primes(model, interval_histogram(1'000'000, 2.0)));
}
