#include "primecover/cli.hpp"

#include "primecover/report_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

namespace primecover {

namespace {

struct Params {
    u64 x = 0;
    double lambda = 1.0;
    u64 q = 0;
    std::vector<u64> q_list;
    u64 q_max = 0;
    u64 h = 0;
    u64 h1 = 0;
    u64 h2 = 0;
    u64 trials = 1'000'000;
    u64 seed = 0;
    u64 cutoff = kDefaultTwinPrimeCutoff;
    double slack = kSelbergSlack;
    double selberg_c = 1.0;
    bool exhaustive = false;
    unsigned threads = 0;
    std::string format = "json";
    std::string output;
};

template <class Report>
std::string render(const Report& report, const std::string& format) {
    std::ostringstream s;
    if (format == "csv") {
        write_csv(s, report);
    } else {
        s << json(report).dump(2) << '\n';
    }
    return s.str();
}

void add_common(CLI::App* cmd, Params& p) {
    cmd->add_option("--format", p.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--output", p.output, "Write the report to this path instead of stdout");
    cmd->add_option("--threads", p.threads, "Worker threads (0 = all cores); results do not depend on it");
}

void add_x(CLI::App* cmd, Params& p) { cmd->add_option("--x", p.x, "Base point X")->required(); }

void add_lambda(CLI::App* cmd, Params& p) {
    cmd->add_option("--lambda", p.lambda, "Interval length in units of ln X")->required();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Short-interval and residue-class prime statistics", "primecover"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    Params p;
    std::function<std::string()> action;

    auto* interval = app.add_subcommand("interval", "Histogram of prime counts I_n over n in [X, 2X)");
    add_x(interval, p);
    add_lambda(interval, p);
    add_common(interval, p);
    interval->callback([&] { action = [&] { return render(interval_histogram(p.x, p.lambda, p.threads), p.format); }; });

    auto* cov = app.add_subcommand("coverage", "Fraction of short intervals containing a prime, with moments");
    add_x(cov, p);
    add_lambda(cov, p);
    add_common(cov, p);
    cov->callback([&] { action = [&] { return render(coverage(p.x, p.lambda, p.threads), p.format); }; });

    auto* pairs = app.add_subcommand("pairs", "Pair count A(X, h1, h2) against the upper-bound sieve main term");
    add_x(pairs, p);
    pairs->add_option("--h1", p.h1, "First shift")->required();
    pairs->add_option("--h2", p.h2, "Second shift")->required();
    pairs->add_option("--slack", p.slack, "Finite-X slack on the main term")->capture_default_str();
    pairs->add_option("--selberg-c", p.selberg_c, "Constant in the reported error factor")->capture_default_str();
    add_common(pairs, p);
    pairs->callback([&] {
        action = [&] { return render(pair_report(p.x, p.h1, p.h2, p.slack, p.selberg_c), p.format); };
    });

    auto* singular = app.add_subcommand("singular", "Singular series S(h) for the pair {0, h}");
    singular->add_option("--h", p.h, "Shift h (nonzero)")->required();
    singular->add_option("--cutoff", p.cutoff, "Euler product cutoff for the twin-prime constant")
        ->capture_default_str();
    add_common(singular, p);
    singular->callback([&] {
        action = [&] {
            SingularReport r;
            r.constant = twin_prime_constant(p.cutoff);
            r.value = singular_series(static_cast<i64>(p.h), r.constant);
            return render(r, p.format);
        };
    });

    auto* gallagher = app.add_subcommand("gallagher", "Sum of S(h1 - h2) over ordered pairs in {1..H}");
    gallagher->add_option("--h", p.h, "Shift cap H")->required();
    add_common(gallagher, p);
    gallagher->callback([&] { action = [&] { return render(gallagher_report(p.h), p.format); }; });

    auto* linnik = app.add_subcommand("linnik", "Residue classes covered by primes below lambda phi(q) ln q");
    add_lambda(linnik, p);
    auto* q_opt = linnik->add_option("--q", p.q_list, "Moduli (comma separated)")->delimiter(',');
    auto* qmax_opt = linnik->add_option("--q-max", p.q_max, "Scan all primes and prime powers 3 <= q <= N");
    q_opt->excludes(qmax_opt);
    add_common(linnik, p);
    linnik->callback([&] {
        if (p.q_list.empty() && p.q_max == 0) throw CLI::ValidationError("linnik", "one of --q or --q-max is required");
        action = [&] {
            const std::vector<u64> moduli = p.q_max != 0 ? prime_powers_in(3, p.q_max) : p.q_list;
            return render(linnik_scan(p.lambda, moduli, p.threads), p.format);
        };
    });

    auto* identity = app.add_subcommand("identity", "Check sum_t A(X, tq) = sum_a pi(X, a, q)^2 and the Cauchy bound");
    add_x(identity, p);
    identity->add_option("--q", p.q, "Modulus q")->required();
    add_common(identity, p);
    identity->callback([&] { action = [&] { return render(identity_report(p.x, p.q), p.format); }; });

    auto* simulate_cmd = app.add_subcommand("simulate", "Cramer random model histogram against Poisson");
    add_x(simulate_cmd, p);
    add_lambda(simulate_cmd, p);
    simulate_cmd->add_option("--trials", p.trials, "Number of random intervals")->capture_default_str();
    simulate_cmd->add_option("--seed", p.seed, "64-bit seed")->capture_default_str();
    simulate_cmd->add_flag("--exhaustive", p.exhaustive, "Use every n in [X, 2X) once instead of sampling");
    add_common(simulate_cmd, p);
    simulate_cmd->callback([&] {
        action = [&] {
            const SimReport r = p.exhaustive ? simulate_exhaustive(p.x, p.lambda, p.seed, p.threads)
                                             : simulate(p.x, p.lambda, p.trials, p.seed, p.threads);
            return render(r, p.format);
        };
    });

    auto* compare = app.add_subcommand("compare", "Model, true-prime and Poisson laws side by side");
    add_x(compare, p);
    add_lambda(compare, p);
    compare->add_option("--trials", p.trials, "Number of model trials")->capture_default_str();
    compare->add_option("--seed", p.seed, "64-bit seed")->capture_default_str();
    add_common(compare, p);
    compare->callback([&] {
        action = [&] { return render(compare_true_primes(p.x, p.lambda, p.trials, p.seed, p.threads), p.format); };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    std::string text;
    try {
        text = action();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    }

    if (p.output.empty()) {
        out << text;
        out.flush();
        if (!out) {
            err << "error: failed to write report\n";
            return kExitOutput;
        }
        return kExitOk;
    }
    std::ofstream file(p.output, std::ios::binary);
    file << text;
    file.close();
    if (!file) {
        err << "error: cannot write " << p.output << '\n';
        return kExitOutput;
    }
    return kExitOk;
}

}  // namespace primecover
