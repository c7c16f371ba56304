#include "primecover/report_io.hpp"

#include <cstdio>
#include <ostream>

namespace primecover {

PairReport pair_report(u64 x, u64 h1, u64 h2, double slack, double error_constant) {
    PairReport r;
    r.x = x;
    r.h1 = h1;
    r.h2 = h2;
    r.count = pair_count(x, h1, h2);
    r.slack = slack;
    r.diagonal = h1 == h2;
    if (!r.diagonal) {
        r.bound = selberg_bound(x, static_cast<i64>(h1), static_cast<i64>(h2), error_constant);
        r.within_slack = static_cast<double>(r.count) <= slack * r.bound.main_term;
    }
    return r;
}

GallagherReport gallagher_report(u64 H) {
    GallagherReport r;
    r.shift_cap = H;
    r.pair_sum = gallagher_pair_sum(H);
    r.ratio = r.pair_sum / (static_cast<double>(H) * static_cast<double>(H));
    return r;
}

IdentityReport identity_report(u64 x, u64 q) {
    IdentityReport r;
    r.x = x;
    r.q = q;
    r.identity = verify_moment_identity(x, q);
    r.cauchy = cauchy_lower_bound(x, q);
    return r;
}

// ---- JSON -------------------------------------------------------------------

void to_json(json& j, const IntervalHistogram& v) {
    j = json{{"x", v.x}, {"lambda", v.lambda}, {"shift_cap", v.shift_cap}, {"counts", v.counts}};
}

void from_json(const json& j, IntervalHistogram& v) {
    j.at("x").get_to(v.x);
    j.at("lambda").get_to(v.lambda);
    j.at("shift_cap").get_to(v.shift_cap);
    j.at("counts").get_to(v.counts);
}

void to_json(json& j, const CoverageReport& v) {
    j = json{{"x", v.x},
             {"lambda", v.lambda},
             {"shift_cap", v.shift_cap},
             {"r_x", v.r_x},
             {"fraction", v.fraction},
             {"paper_lower_bound", v.paper_lower_bound},
             {"moment1", v.moment1},
             {"moment2", v.moment2},
             {"cauchy_lhs", v.cauchy_lhs},
             {"cauchy_rhs", v.cauchy_rhs},
             {"cauchy_holds", v.cauchy_holds}};
}

void from_json(const json& j, CoverageReport& v) {
    j.at("x").get_to(v.x);
    j.at("lambda").get_to(v.lambda);
    j.at("shift_cap").get_to(v.shift_cap);
    j.at("r_x").get_to(v.r_x);
    j.at("fraction").get_to(v.fraction);
    j.at("paper_lower_bound").get_to(v.paper_lower_bound);
    j.at("moment1").get_to(v.moment1);
    j.at("moment2").get_to(v.moment2);
    j.at("cauchy_lhs").get_to(v.cauchy_lhs);
    j.at("cauchy_rhs").get_to(v.cauchy_rhs);
    j.at("cauchy_holds").get_to(v.cauchy_holds);
}

void to_json(json& j, const PrimePower& v) { j = json{{"prime", v.prime}, {"exponent", v.exponent}}; }

void from_json(const json& j, PrimePower& v) {
    j.at("prime").get_to(v.prime);
    j.at("exponent").get_to(v.exponent);
}

void to_json(json& j, const SingularReport& v) {
    j = json{{"h", v.value.h},
             {"value", v.value.value},
             {"abs_error", v.value.abs_error},
             {"factors", v.value.factors},
             {"twin_prime_constant", v.constant.value},
             {"twin_prime_abs_error", v.constant.abs_error},
             {"cutoff", v.constant.cutoff}};
}

void from_json(const json& j, SingularReport& v) {
    j.at("h").get_to(v.value.h);
    j.at("value").get_to(v.value.value);
    j.at("abs_error").get_to(v.value.abs_error);
    j.at("factors").get_to(v.value.factors);
    j.at("twin_prime_constant").get_to(v.constant.value);
    j.at("twin_prime_abs_error").get_to(v.constant.abs_error);
    j.at("cutoff").get_to(v.constant.cutoff);
}

void to_json(json& j, const SelbergBound& v) {
    j = json{{"shift", v.shift},
             {"singular", v.singular},
             {"main_term", v.main_term},
             {"error_constant", v.error_constant},
             {"error_factor", v.error_factor}};
}

void from_json(const json& j, SelbergBound& v) {
    j.at("shift").get_to(v.shift);
    j.at("singular").get_to(v.singular);
    j.at("main_term").get_to(v.main_term);
    j.at("error_constant").get_to(v.error_constant);
    j.at("error_factor").get_to(v.error_factor);
}

void to_json(json& j, const PairReport& v) {
    j = json{{"x", v.x},         {"h1", v.h1},       {"h2", v.h2},
             {"count", v.count}, {"diagonal", v.diagonal}, {"bound", v.bound},
             {"slack", v.slack}, {"within_slack", v.within_slack}};
}

void from_json(const json& j, PairReport& v) {
    j.at("x").get_to(v.x);
    j.at("h1").get_to(v.h1);
    j.at("h2").get_to(v.h2);
    j.at("count").get_to(v.count);
    j.at("diagonal").get_to(v.diagonal);
    j.at("bound").get_to(v.bound);
    j.at("slack").get_to(v.slack);
    j.at("within_slack").get_to(v.within_slack);
}

void to_json(json& j, const GallagherReport& v) {
    j = json{{"shift_cap", v.shift_cap}, {"pair_sum", v.pair_sum}, {"ratio", v.ratio}};
}

void from_json(const json& j, GallagherReport& v) {
    j.at("shift_cap").get_to(v.shift_cap);
    j.at("pair_sum").get_to(v.pair_sum);
    j.at("ratio").get_to(v.ratio);
}

void to_json(json& j, const IdentityReport& v) {
    j = json{{"x", v.x},
             {"q", v.q},
             {"lhs", v.identity.lhs},
             {"rhs", v.identity.rhs},
             {"equal", v.identity.equal},
             {"covered", v.cauchy.covered},
             {"prime_count", v.cauchy.prime_count},
             {"second_moment", v.cauchy.second_moment},
             {"r_lower", v.cauchy.r_lower},
             {"cauchy_holds", v.cauchy.holds},
             {"degenerate", v.cauchy.degenerate}};
}

void from_json(const json& j, IdentityReport& v) {
    j.at("x").get_to(v.x);
    j.at("q").get_to(v.q);
    j.at("lhs").get_to(v.identity.lhs);
    j.at("rhs").get_to(v.identity.rhs);
    j.at("equal").get_to(v.identity.equal);
    j.at("covered").get_to(v.cauchy.covered);
    j.at("prime_count").get_to(v.cauchy.prime_count);
    j.at("second_moment").get_to(v.cauchy.second_moment);
    j.at("r_lower").get_to(v.cauchy.r_lower);
    j.at("cauchy_holds").get_to(v.cauchy.holds);
    j.at("degenerate").get_to(v.cauchy.degenerate);
}

void to_json(json& j, const LinnikRow& v) {
    j = json{{"q", v.q},
             {"phi_q", v.phi_q},
             {"x", v.x},
             {"covered", v.covered},
             {"units_covered", v.units_covered},
             {"fraction", v.fraction},
             {"pi_x", v.pi_x},
             {"second_moment", v.second_moment},
             {"identity_ok", v.identity_ok}};
}

void from_json(const json& j, LinnikRow& v) {
    j.at("q").get_to(v.q);
    j.at("phi_q").get_to(v.phi_q);
    j.at("x").get_to(v.x);
    j.at("covered").get_to(v.covered);
    j.at("units_covered").get_to(v.units_covered);
    j.at("fraction").get_to(v.fraction);
    j.at("pi_x").get_to(v.pi_x);
    j.at("second_moment").get_to(v.second_moment);
    j.at("identity_ok").get_to(v.identity_ok);
}

void to_json(json& j, const LinnikScan& v) {
    j = json{{"lambda", v.lambda}, {"rows", v.rows}, {"skipped", v.skipped}};
}

void from_json(const json& j, LinnikScan& v) {
    j.at("lambda").get_to(v.lambda);
    j.at("rows").get_to(v.rows);
    j.at("skipped").get_to(v.skipped);
}

void to_json(json& j, const SimReport& v) {
    j = json{{"x", v.x},
             {"lambda", v.lambda},
             {"trials", v.trials},
             {"seed", v.seed},
             {"exhaustive", v.exhaustive},
             {"shift_cap", v.shift_cap},
             {"counts", v.counts},
             {"poisson_linf", v.poisson_linf},
             {"poisson_tv", v.poisson_tv}};
}

void from_json(const json& j, SimReport& v) {
    j.at("x").get_to(v.x);
    j.at("lambda").get_to(v.lambda);
    j.at("trials").get_to(v.trials);
    j.at("seed").get_to(v.seed);
    j.at("exhaustive").get_to(v.exhaustive);
    j.at("shift_cap").get_to(v.shift_cap);
    j.at("counts").get_to(v.counts);
    j.at("poisson_linf").get_to(v.poisson_linf);
    j.at("poisson_tv").get_to(v.poisson_tv);
}

void to_json(json& j, const ComparisonRow& v) {
    j = json{{"k", v.k}, {"model", v.model}, {"true", v.true_primes}, {"poisson", v.poisson}};
}

void from_json(const json& j, ComparisonRow& v) {
    j.at("k").get_to(v.k);
    j.at("model").get_to(v.model);
    j.at("true").get_to(v.true_primes);
    j.at("poisson").get_to(v.poisson);
}

void to_json(json& j, const Comparison& v) {
    j = json{{"x", v.x},
             {"lambda", v.lambda},
             {"shift_cap", v.shift_cap},
             {"trials", v.trials},
             {"seed", v.seed},
             {"rows", v.rows},
             {"model_covered", v.model_covered},
             {"true_covered", v.true_covered},
             {"poisson_covered", v.poisson_covered},
             {"paper_lower_bound", v.paper_lower_bound}};
}

void from_json(const json& j, Comparison& v) {
    j.at("x").get_to(v.x);
    j.at("lambda").get_to(v.lambda);
    j.at("shift_cap").get_to(v.shift_cap);
    j.at("trials").get_to(v.trials);
    j.at("seed").get_to(v.seed);
    j.at("rows").get_to(v.rows);
    j.at("model_covered").get_to(v.model_covered);
    j.at("true_covered").get_to(v.true_covered);
    j.at("poisson_covered").get_to(v.poisson_covered);
    j.at("paper_lower_bound").get_to(v.paper_lower_bound);
}

// ---- CSV --------------------------------------------------------------------

std::string csv_real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void write_csv(std::ostream& out, const IntervalHistogram& v) {
    out << "k,count,p_k,poisson\n";
    for (u64 k = 0; k < v.counts.size(); ++k)
        out << k << ',' << v.counts[k] << ',' << csv_real(p_k(v, k)) << ',' << csv_real(poisson_pmf(v.lambda, k))
            << '\n';
}

void write_csv(std::ostream& out, const CoverageReport& v) {
    out << "x,lambda,shift_cap,r_x,fraction,paper_lower_bound,moment1,moment2,cauchy_lhs,cauchy_rhs,cauchy_holds\n";
    out << v.x << ',' << csv_real(v.lambda) << ',' << v.shift_cap << ',' << v.r_x << ',' << csv_real(v.fraction)
        << ',' << csv_real(v.paper_lower_bound) << ',' << v.moment1 << ',' << v.moment2 << ',' << v.cauchy_lhs
        << ',' << v.cauchy_rhs << ',' << (v.cauchy_holds ? "true" : "false") << '\n';
}

void write_csv(std::ostream& out, const SingularReport& v) {
    out << "h,value,abs_error,twin_prime_constant,twin_prime_abs_error,cutoff\n";
    out << v.value.h << ',' << csv_real(v.value.value) << ',' << csv_real(v.value.abs_error) << ','
        << csv_real(v.constant.value) << ',' << csv_real(v.constant.abs_error) << ',' << v.constant.cutoff << '\n';
}

void write_csv(std::ostream& out, const PairReport& v) {
    out << "x,h1,h2,count,main_term,error_factor,slack,within_slack\n";
    out << v.x << ',' << v.h1 << ',' << v.h2 << ',' << v.count << ',' << csv_real(v.bound.main_term) << ','
        << csv_real(v.bound.error_factor) << ',' << csv_real(v.slack) << ',' << (v.within_slack ? "true" : "false")
        << '\n';
}

void write_csv(std::ostream& out, const GallagherReport& v) {
    out << "shift_cap,pair_sum,ratio\n";
    out << v.shift_cap << ',' << csv_real(v.pair_sum) << ',' << csv_real(v.ratio) << '\n';
}

void write_csv(std::ostream& out, const IdentityReport& v) {
    out << "x,q,lhs,rhs,equal,covered,r_lower,cauchy_holds\n";
    out << v.x << ',' << v.q << ',' << v.identity.lhs << ',' << v.identity.rhs << ','
        << (v.identity.equal ? "true" : "false") << ',' << v.cauchy.covered << ',' << csv_real(v.cauchy.r_lower)
        << ',' << (v.cauchy.holds ? "true" : "false") << '\n';
}

void write_csv(std::ostream& out, const LinnikScan& v) {
    out << "q,phi_q,x,covered,fraction,pi_x,second_moment,identity_ok\n";
    for (const auto& r : v.rows)
        out << r.q << ',' << r.phi_q << ',' << r.x << ',' << r.covered << ',' << csv_real(r.fraction) << ','
            << r.pi_x << ',' << r.second_moment << ',' << (r.identity_ok ? "true" : "false") << '\n';
}

void write_csv(std::ostream& out, const SimReport& v) {
    out << "k,count,model,poisson\n";
    for (u64 k = 0; k < v.counts.size(); ++k)
        out << k << ',' << v.counts[k] << ','
            << csv_real(static_cast<double>(v.counts[k]) / static_cast<double>(v.trials)) << ','
            << csv_real(poisson_pmf(v.lambda, k)) << '\n';
}

void write_csv(std::ostream& out, const Comparison& v) {
    out << "k,model,true,poisson\n";
    for (const auto& r : v.rows)
        out << r.k << ',' << csv_real(r.model) << ',' << csv_real(r.true_primes) << ',' << csv_real(r.poisson)
            << '\n';
}

}  // namespace primecover
