// congruence_stats.hpp
// Primes below X distributed over residue classes mod q. All counts use the
// strict bound p < X.
//
//   pi(X, a, q)  = #{p < X : p = a mod q}
//   R(X, q)      = #{a in [0, q) : pi(X, a, q) >= 1}
//   A(X, tq)     = #{(x, y) primes : 0 < x, y < X, x = y + t q}   (t signed)
//
// sum_{|t| < X/q} A(X, tq) = sum_a pi(X, a, q)^2 holds exactly.

#pragma once

#include "primecover/sieve.hpp"

#include <span>
#include <string>
#include <vector>

namespace primecover {

u64 euler_phi(u64 q);

struct ResidueCoverage {
    u64 x = 0;
    u64 q = 0;
    std::vector<u64> per_class;  // index a in [0, q)
    u64 covered = 0;             // over all residues
    u64 units_covered = 0;       // over residues coprime to q
    u64 phi_q = 0;
    u64 prime_count = 0;         // #{p < X}
    u64 second_moment = 0;
    double lambda_effective = 0; // X / (phi(q) ln q)

    bool operator==(const ResidueCoverage&) const = default;
};

/// Requires q >= 2, x >= 3.
ResidueCoverage residue_coverage(u64 x, u64 q);

/// A(X, tq). Requires q >= 2 and |t| q < X.
u64 shifted_pair_count(u64 x, i64 t, u64 q);

struct MomentIdentity {
    u64 lhs = 0;  // sum over t of A(X, tq)
    u64 rhs = 0;  // sum_a pi(X, a, q)^2
    bool equal = false;

    bool operator==(const MomentIdentity&) const = default;
};

/// Both sides computed independently: lhs from prime-pair correlations,
/// rhs from the residue-class histogram.
MomentIdentity verify_moment_identity(u64 x, u64 q);

struct CauchyBound {
    u64 covered = 0;
    u64 prime_count = 0;
    u64 second_moment = 0;
    double r_lower = 0;  // prime_count^2 / second_moment
    bool holds = false;  // covered * second_moment >= prime_count^2
    bool degenerate = false;

    bool operator==(const CauchyBound&) const = default;
};

CauchyBound cauchy_lower_bound(u64 x, u64 q);
CauchyBound cauchy_lower_bound(const ResidueCoverage& cov);

enum class FactorBoundStatus { holds, fails, inapplicable };

std::string to_string(FactorBoundStatus s);

struct FactorBoundCheck {
    i64 t = 0;
    u64 q = 0;
    double lhs = 0;  // S(tq)
    double rhs = 0;  // (q/phi(q)) S(t) prod_{odd p | q} (1 + 1/(p(p-2)))
    double lhs_error = 0;
    double rhs_error = 0;
    FactorBoundStatus status = FactorBoundStatus::holds;
    bool even_modulus = false;  // p = 2 divides q; excluded from the product
};

/// S(tq) against the factor bound. Returns inapplicable when S(t) = 0 < S(tq).
FactorBoundCheck factor_bound_check(i64 t, u64 q);

struct LinnikRow {
    u64 q = 0;
    u64 phi_q = 0;
    u64 x = 0;  // ceil(lambda phi(q) ln q)
    u64 covered = 0;
    u64 units_covered = 0;
    double fraction = 0;  // units_covered / phi(q)
    u64 pi_x = 0;         // #{p < X}
    u64 second_moment = 0;
    bool identity_ok = false;

    bool operator==(const LinnikRow&) const = default;
};

struct LinnikScan {
    double lambda = 0;
    std::vector<LinnikRow> rows;
    std::vector<std::string> skipped;  // one diagnostic per dropped q

    bool operator==(const LinnikScan&) const = default;
};

/// One row per q >= 3; rows whose X falls outside the sieve are skipped.
LinnikScan linnik_scan(double lambda, std::span<const u64> moduli, unsigned threads = 0);

/// Primes and prime powers in [lo, hi].
std::vector<u64> prime_powers_in(u64 lo, u64 hi);

}  // namespace primecover
