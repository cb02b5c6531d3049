// End-to-end driver for the CLI binary: runs subcommands through a shell,
// checks exit codes, JSON payloads and determinism.

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

using json = nlohmann::json;

namespace {

int g_failures = 0;

#define EXPECT(cond, what)                                                        \
    do {                                                                          \
        if (!(cond)) {                                                            \
            std::cerr << "[FAIL] " << __LINE__ << ": " << what << "\n";           \
            ++g_failures;                                                         \
        }                                                                         \
    } while (0)

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& cli, const std::string& args, bool merge_stderr = false)
{
    std::string cmd = cli + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    std::array<char, 4096> buf{};
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        std::cerr << "popen failed for: " << cmd << "\n";
        std::exit(1);
    }
    while (fgets(buf.data(), buf.size(), pipe))
        res.output += buf.data();
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

json parse_json(const RunResult& r)
{
    return json::parse(r.output);
}

} // namespace

int main(int argc, char** argv)
{
    if (argc < 2) {
        std::cerr << "usage: test_cli_io <path-to-cli>\n";
        return 1;
    }
    std::string cli = argv[1];

    // hodge quadruple, json output, determinism
    RunResult h1 = run(cli, "hodge --g 2 --lambda 5,5 --c 10 --format json");
    EXPECT(h1.exit_code == 0, "hodge exit code");
    EXPECT(parse_json(h1)["weights"] == json::array({0, 6, 7, 13}), "hodge weights");
    RunResult h2 = run(cli, "hodge --g 2 --lambda 5,5 --c 10 --format json");
    EXPECT(h1.output == h2.output, "identical requests give byte-identical JSON");

    // central coordinate defaults to the coordinate sum
    RunResult h3 = run(cli, "hodge --g 2 --lambda 3,3 --format json");
    EXPECT(h3.exit_code == 0, "default central");
    EXPECT(parse_json(h3)["weights"] == json::array({0, 4, 5, 9}), "hodge weights at (3,3;6)");

    // strata dims
    RunResult s = run(cli, "strata --g 2 --format json");
    EXPECT(s.exit_code == 0, "strata exit code");
    EXPECT(parse_json(s)["dims"] == json::array({3, 1, 0}), "strata dims");

    // lattice report
    RunResult l = run(cli, "lattice --g 2 --lambda 1,1 --p 7 --format json");
    EXPECT(l.exit_code == 0, "lattice exit code");
    json lj = parse_json(l);
    EXPECT(lj["rank"] == 5, "lattice rank");
    EXPECT(lj["p_free"]["7"] == true, "lattice p-freeness");

    // usage errors exit 1 with distinct messages
    RunResult parity = run(cli, "hodge --g 2 --lambda 5,5 --c 9", true);
    EXPECT(parity.exit_code == 1, "parity violation exits 1");
    EXPECT(parity.output.find("parity") != std::string::npos, "parity message");

    RunResult nondom = run(cli, "hodge --g 2 --lambda 1,2", true);
    EXPECT(nondom.exit_code == 1, "non-dominant weight exits 1");

    RunResult budget = run(cli, "traceless --g 2 --s 12", true);
    EXPECT(budget.exit_code == 1, "budget breach exits 1");
    EXPECT(budget.output.find("budget") != std::string::npos, "budget message");

    // claim checks pass and exit 0
    RunResult c84 = run(cli, "claim84 --g 2 --lambda 5,5 --c 10 --r 1");
    EXPECT(c84.exit_code == 0, "claim84 exit code");

    // slope arithmetic round trip over the CLI strings
    RunResult sl = run(cli, "slopes --g 2 --t -7,-6 --z 13/2 --format json");
    EXPECT(sl.exit_code == 0, "slopes exit code");
    EXPECT(parse_json(sl)["slopes"]["{1,2}"] == "13", "slope at the full subset");

    RunResult solve = run(cli, "solve-slopes --g 2 --slopes 0,6,7,13 --format json");
    EXPECT(solve.exit_code == 0, "solve exit code");
    json sj = parse_json(solve);
    EXPECT(sj["solution"]["t"] == json::array({"-7", "-6"}), "solved theta valuations");
    EXPECT(sj["solution"]["z"] == "13/2", "solved central valuation");

    RunResult ao = run(cli, "ao --g 2 --lambda 5,5 --c 10 --vals 5,0 --format json");
    EXPECT(ao.exit_code == 0, "ao exit code");
    EXPECT(parse_json(ao)["ao"] == true, "ao verdict");

    RunResult sat = run(cli, "satake --g 2 --exps 0,1,1,2 --r 1 --format json");
    EXPECT(sat.exit_code == 0, "satake exit code");
    EXPECT(parse_json(sat)["image"]["exponents"] == json::array({1, 1}), "satake image");

    // table format renders
    RunResult table = run(cli, "bgg --g 2 --lambda 5,5 --c 10 --p 31");
    EXPECT(table.exit_code == 0, "bgg table exit code");
    EXPECT(table.output.find("13") != std::string::npos, "bgg table contains the top jump");

    RunResult roots = run(cli, "roots --g 3");
    EXPECT(roots.exit_code == 0, "roots table exit code");

    // verify-all prints one line per criterion; the known-red criterion 5
    // (see the acceptance suite) makes the whole run exit 2
    RunResult verify = run(cli, "verify-all --g 2 --format json");
    json vj = parse_json(verify);
    EXPECT(vj["criteria"].size() == 9, "verify-all criterion count");
    bool all = true;
    for (const auto& c : vj["criteria"])
        if (!c["pass"].get<bool>())
            all = false;
    EXPECT(verify.exit_code == (all ? 0 : 2), "verify-all exit code matches its verdict");

    if (g_failures == 0) {
        std::cout << "cli io: all checks passed\n";
        return 0;
    }
    std::cout << "cli io: " << g_failures << " checks failed\n";
    return 1;
}
