// report_io.hpp
// JSON and CSV emission for every report type. JSON conversions are
// lossless (parse(emit(r)) == r); CSV floats use 12 significant digits.

#pragma once

#include "primecover/congruence_stats.hpp"
#include "primecover/cramer_model.hpp"
#include "primecover/interval_stats.hpp"
#include "primecover/singular_series.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace primecover {

using json = nlohmann::json;

/// A(X, h1, h2) next to its upper-bound-sieve main term.
struct PairReport {
    u64 x = 0;
    u64 h1 = 0;
    u64 h2 = 0;
    u64 count = 0;
    bool diagonal = false;  // h1 == h2; no bound applies
    SelbergBound bound;
    double slack = kSelbergSlack;
    bool within_slack = true;  // count <= slack * main_term

    bool operator==(const PairReport&) const = default;
};

PairReport pair_report(u64 x, u64 h1, u64 h2, double slack = kSelbergSlack, double error_constant = 1.0);

struct SingularReport {
    SingularValue value;
    TwinPrimeConstant constant;

    bool operator==(const SingularReport&) const = default;
};

struct GallagherReport {
    u64 shift_cap = 0;
    double pair_sum = 0;
    double ratio = 0;  // pair_sum / H^2

    bool operator==(const GallagherReport&) const = default;
};

GallagherReport gallagher_report(u64 H);

struct IdentityReport {
    u64 x = 0;
    u64 q = 0;
    MomentIdentity identity;
    CauchyBound cauchy;

    bool operator==(const IdentityReport&) const = default;
};

IdentityReport identity_report(u64 x, u64 q);

void to_json(json& j, const IntervalHistogram& v);
void from_json(const json& j, IntervalHistogram& v);
void to_json(json& j, const CoverageReport& v);
void from_json(const json& j, CoverageReport& v);
void to_json(json& j, const PrimePower& v);
void from_json(const json& j, PrimePower& v);
void to_json(json& j, const SingularReport& v);
void from_json(const json& j, SingularReport& v);
void to_json(json& j, const SelbergBound& v);
void from_json(const json& j, SelbergBound& v);
void to_json(json& j, const PairReport& v);
void from_json(const json& j, PairReport& v);
void to_json(json& j, const GallagherReport& v);
void from_json(const json& j, GallagherReport& v);
void to_json(json& j, const IdentityReport& v);
void from_json(const json& j, IdentityReport& v);
void to_json(json& j, const LinnikRow& v);
void from_json(const json& j, LinnikRow& v);
void to_json(json& j, const LinnikScan& v);
void from_json(const json& j, LinnikScan& v);
void to_json(json& j, const SimReport& v);
void from_json(const json& j, SimReport& v);
void to_json(json& j, const ComparisonRow& v);
void from_json(const json& j, ComparisonRow& v);
void to_json(json& j, const Comparison& v);
void from_json(const json& j, Comparison& v);

/// Decimal-dot float with 12 significant digits.
std::string csv_real(double v);

void write_csv(std::ostream& out, const IntervalHistogram& v);
void write_csv(std::ostream& out, const CoverageReport& v);
void write_csv(std::ostream& out, const SingularReport& v);
void write_csv(std::ostream& out, const PairReport& v);
void write_csv(std::ostream& out, const GallagherReport& v);
void write_csv(std::ostream& out, const IdentityReport& v);
void write_csv(std::ostream& out, const LinnikScan& v);
void write_csv(std::ostream& out, const SimReport& v);
void write_csv(std::ostream& out, const Comparison& v);

}  // namespace primecover
