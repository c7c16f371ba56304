#include "primecover/cli.hpp"
#include "primecover/report_io.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace primecover;

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int status = run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

// parse(emit(r)) == r for the report type the command emits
template <class Report>
void check_round_trip(const std::string& text) {
    const json parsed = json::parse(text);
    const Report report = parsed.get<Report>();
    CHECK(json(report) == parsed);
    CHECK(json(report).dump(2) + "\n" == text);
}

}  // namespace

TEST_CASE("coverage command emits the report") {
    const auto r = run({"coverage", "--x", "1000000", "--lambda", "1.0", "--format", "json"});
    REQUIRE(r.status == kExitOk);
    const json j = json::parse(r.out);
    for (const char* key :
         {"x", "lambda", "shift_cap", "r_x", "fraction", "paper_lower_bound", "moment1", "moment2"})
        CHECK(j.contains(key));
    CHECK(j["x"].is_number_unsigned());
    CHECK(j["r_x"] == 657319);
}

TEST_CASE("identity command") {
    const auto r = run({"identity", "--x", "20", "--q", "4"});
    REQUIRE(r.status == kExitOk);
    const json j = json::parse(r.out);
    CHECK(j["lhs"] == 26);
    CHECK(j["rhs"] == 26);
    CHECK(j["equal"] == true);
}

TEST_CASE("exit statuses") {
    const auto empty = run({"coverage", "--x", "5", "--lambda", "0.1"});
    CHECK(empty.status == kExitDomain);
    CHECK(empty.err.find("shift window empty") != std::string::npos);
    CHECK(empty.err.find('\n') == empty.err.size() - 1);

    CHECK(run({"coverage", "--x", "100"}).status == kExitUsage);
    CHECK(run({"coverage", "--x", "100", "--lambda", "1", "--bogus", "3"}).status == kExitUsage);
    CHECK(run({"frobnicate"}).status == kExitUsage);
    CHECK(run({}).status == kExitUsage);
    CHECK(run({"coverage", "--x", "abc", "--lambda", "1"}).status == kExitUsage);
    CHECK(run({"coverage", "--x", "100", "--lambda", "1", "--format", "xml"}).status == kExitUsage);
    CHECK(run({"linnik", "--lambda", "2"}).status == kExitUsage);
    CHECK(run({"linnik", "--lambda", "2", "--q", "5", "--q-max", "9"}).status == kExitUsage);
    CHECK(run({"singular", "--h", "0"}).status == kExitDomain);

    const auto bad = run({"coverage", "--x", "100", "--lambda", "1", "--output", "/nonexistent-dir/x.json"});
    CHECK(bad.status == kExitOutput);
}

TEST_CASE("help lists every flag") {
    const auto top = run({"--help"});
    CHECK(top.status == kExitOk);
    for (const char* cmd : {"interval", "coverage", "pairs", "singular", "gallagher", "linnik", "identity",
                            "simulate", "compare"})
        CHECK(top.out.find(cmd) != std::string::npos);

    const auto sim = run({"simulate", "--help"});
    CHECK(sim.status == kExitOk);
    for (const char* flag : {"--x", "--lambda", "--trials", "--seed", "--exhaustive", "--threads", "--format",
                             "--output"})
        CHECK(sim.out.find(flag) != std::string::npos);

    const auto pairs = run({"pairs", "--help"});
    for (const char* flag : {"--h1", "--h2", "--slack", "--selberg-c"}) CHECK(pairs.out.find(flag) != std::string::npos);
}

TEST_CASE("output file") {
    const auto path = std::filesystem::temp_directory_path() / "primecover_cli_test.csv";
    const auto r = run({"interval", "--x", "100", "--lambda", "1", "--format", "csv", "--output", path.string()});
    REQUIRE(r.status == kExitOk);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "k,count,p_k,poisson");
    std::filesystem::remove(path);
}

TEST_CASE("every subcommand is deterministic and round-trips") {
    const std::vector<std::vector<std::string>> commands = {
        {"interval", "--x", "10000", "--lambda", "1.5"},
        {"coverage", "--x", "10000", "--lambda", "0.5"},
        {"pairs", "--x", "10000", "--h1", "0", "--h2", "6"},
        {"pairs", "--x", "10000", "--h1", "3", "--h2", "3"},
        {"singular", "--h", "30"},
        {"gallagher", "--h", "100"},
        {"linnik", "--lambda", "2", "--q", "7,9,101"},
        {"identity", "--x", "5000", "--q", "30"},
        {"simulate", "--x", "10000", "--lambda", "1", "--trials", "20000", "--seed", "5"},
        {"compare", "--x", "10000", "--lambda", "1", "--trials", "20000", "--seed", "5"},
    };
    for (const auto& cmd : commands) {
        CAPTURE(cmd[0]);
        const auto a = run(cmd);
        auto with_threads = cmd;
        with_threads.insert(with_threads.end(), {"--threads", "3"});
        const auto b = run(with_threads);
        REQUIRE(a.status == kExitOk);
        CHECK(a.out == b.out);

        const std::string& name = cmd[0];
        if (name == "interval") check_round_trip<IntervalHistogram>(a.out);
        if (name == "coverage") check_round_trip<CoverageReport>(a.out);
        if (name == "pairs") check_round_trip<PairReport>(a.out);
        if (name == "singular") check_round_trip<SingularReport>(a.out);
        if (name == "gallagher") check_round_trip<GallagherReport>(a.out);
        if (name == "linnik") check_round_trip<LinnikScan>(a.out);
        if (name == "identity") check_round_trip<IdentityReport>(a.out);
        if (name == "simulate") check_round_trip<SimReport>(a.out);
        if (name == "compare") check_round_trip<Comparison>(a.out);

        auto csv = cmd;
        csv.insert(csv.end(), {"--format", "csv"});
        const auto c1 = run(csv), c2 = run(csv);
        CHECK(c1.status == kExitOk);
        CHECK(c1.out == c2.out);
    }
}

TEST_CASE("struct round trip through JSON") {
    const auto cov = coverage(50'000, 1.0);
    CHECK(json(cov).get<CoverageReport>() == cov);
    const auto sim = simulate(10'000, 2.0, 1000, 1);
    CHECK(json(sim).get<SimReport>() == sim);
    const std::vector<u64> qs = {5, 8};
    const auto scan = linnik_scan(1.5, qs);
    CHECK(json::parse(json(scan).dump()).get<LinnikScan>() == scan);
}

TEST_CASE("csv formatting") {
    CHECK(csv_real(0.1) == "0.1");
    CHECK(csv_real(1.0 / 3.0) == "0.333333333333");
    CHECK(csv_real(1234567.891011121) == "1234567.89101");

    const auto r = run({"linnik", "--lambda", "2", "--q", "101", "--format", "csv"});
    CHECK(r.out == "q,phi_q,x,covered,fraction,pi_x,second_moment,identity_ok\n"
                   "101,100,924,90,0.89,157,321,true\n");
}
