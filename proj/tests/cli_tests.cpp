// Drives the installed csp binary end to end: exit codes, summary lines,
// solution files, and --jobs determinism of the CSV output.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& command) {
    RunResult result;
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

const std::string kBin = CSP_CLI_PATH;

fs::path scratch_dir() {
    const fs::path dir = fs::temp_directory_path() / "csp_cli_tests";
    fs::create_directories(dir);
    return dir;
}

std::string write_scratch(const std::string& name, const std::string& text) {
    const fs::path path = scratch_dir() / name;
    std::ofstream out(path, std::ios::binary);
    out << text;
    return path.string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// drops the time_ns column (index 9) from every CSV line
std::string strip_time_column(const std::string& csv) {
    std::istringstream in(csv);
    std::string out;
    std::string line;
    while (std::getline(in, line)) {
        int field = 0;
        std::string kept;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= line.size(); ++i) {
            if (i == line.size() || line[i] == ',') {
                if (field != 9) {
                    if (!kept.empty()) kept += ',';
                    kept += line.substr(start, i - start);
                }
                ++field;
                start = i + 1;
            }
        }
        out += kept + '\n';
    }
    return out;
}

const char* kBaseText = "l=4\nAAAABBBB\nBBBBAAAA\nAAAABBBA\nBBBBAAAA\n";
const char* kExtendedText = "l=4\nAAAABBBB\nBBBBAAAA\nAAAABBBA\nBBBBAAAA\nBBBBBBBB\n";
const char* kAddedText = "l=4\nBBBBBBBB\n";

}  // namespace

TEST_CASE("solve: exact methods on the worked example") {
    const std::string ext = write_scratch("ext.txt", kExtendedText);
    const std::string sol_path = (scratch_dir() / "opt_ext.txt").string();

    const RunResult exact = run(kBin + " solve --input " + ext + " --out " + sol_path);
    CHECK(exact.exit_code == 0);
    CHECK(exact.out.substr(0, 13) == "exact 1 BBBB ");
    CHECK(slurp(sol_path) ==
          "cost=1\npattern=BBBB\nocc 0 4\nocc 1 0\nocc 2 3\nocc 3 0\nocc 4 0\n");

    const RunResult patterns = run(kBin + " solve --input " + ext + " --method exact-patterns");
    CHECK(patterns.exit_code == 0);
    CHECK(patterns.out.substr(0, 22) == "exact-patterns 1 BBBB ");
}

TEST_CASE("solve: ptas with r = t is exact on the base example") {
    const std::string base = write_scratch("base.txt", kBaseText);
    const RunResult res = run(kBin + " solve --input " + base + " --method ptas --r 4");
    CHECK(res.exit_code == 0);
    CHECK(res.out.substr(0, 12) == "ptas 0 AAAA ");

    const RunResult no_r = run(kBin + " solve --input " + base + " --method ptas");
    CHECK(no_r.exit_code == 2);
}

TEST_CASE("solve: input and budget failures") {
    const std::string ragged = write_scratch("ragged.txt", "l=4\nAAAABBBB\nBBB\n");
    CHECK(run(kBin + " solve --input " + ragged).exit_code == 2);

    const std::string missing = (scratch_dir() / "nonexistent.txt").string();
    CHECK(run(kBin + " solve --input " + missing).exit_code == 2);

    const std::string base = write_scratch("base.txt", kBaseText);
    CHECK(run("CSP_BUDGET=10 " + kBin + " solve --input " + base).exit_code == 3);
}

TEST_CASE("reopt: greedy extension and the sampling branch") {
    const std::string base = write_scratch("base.txt", kBaseText);
    const std::string added = write_scratch("added.txt", kAddedText);
    const std::string opt = write_scratch(
        "opt_base.txt", "cost=0\npattern=AAAA\nocc 0 0\nocc 1 4\nocc 2 0\nocc 3 4\n");

    const RunResult greedy =
        run(kBin + " reopt --base " + base + " --added " + added + " --opt " + opt +
            " --method best-align");
    CHECK(greedy.exit_code == 0);
    CHECK(greedy.out.substr(0, 18) == "best-align 4 AAAA ");
    CHECK(greedy.out.find("gap 3 bound 4\n") != std::string::npos);

    const RunResult sampling =
        run(kBin + " reopt --base " + base + " --added " + added + " --opt " + opt +
            " --method reopt-ptas");
    CHECK(sampling.exit_code == 0);
    CHECK(sampling.out.substr(0, 18) == "reopt-ptas 1 BBBB ");
    CHECK(sampling.out.find("branch SOL_B cost_a 4 cost_a_realigned 4 cost_b 1\n") !=
          std::string::npos);
    CHECK(sampling.out.find("gap 0 bound 4\n") != std::string::npos);
}

TEST_CASE("reopt: optimality verification gates the run") {
    const std::string base = write_scratch("base.txt", kBaseText);
    const std::string added = write_scratch("added.txt", kAddedText);
    // self-consistent but suboptimal: all occurrences shifted to position 1
    const std::string shifted = write_scratch(
        "opt_shifted.txt", "cost=8\npattern=AAAA\nocc 0 1\nocc 1 1\nocc 2 1\nocc 3 1\n");

    const std::string cmd =
        kBin + " reopt --base " + base + " --added " + added + " --opt " + shifted;
    CHECK(run(cmd).exit_code == 4);
    CHECK(run(cmd + " --no-verify-opt").exit_code == 0);

    // inconsistent file: recorded cost does not match the occurrences
    const std::string broken = write_scratch(
        "opt_broken.txt", "cost=5\npattern=AAAA\nocc 0 1\nocc 1 1\nocc 2 1\nocc 3 1\n");
    CHECK(run(kBin + " reopt --base " + base + " --added " + added + " --opt " + broken)
              .exit_code == 2);
}

TEST_CASE("bench: csv output is jobs-invariant up to timing") {
    const std::string csv1 = (scratch_dir() / "sweep1.csv").string();
    const std::string csv4 = (scratch_dir() / "sweep4.csv").string();
    const std::string common =
        " bench --suite ratio-sweep --seeds 3 --t 4 --n 8 --l 3 --sigma 2 --r 3 --out ";

    const RunResult lone = run(kBin + common + csv1 + " --jobs 1");
    CHECK(lone.exit_code == 0);
    const RunResult wide = run(kBin + common + csv4 + " --jobs 4");
    CHECK(wide.exit_code == 0);

    CHECK(lone.out == wide.out);  // summaries carry no timing
    const std::string a = slurp(csv1);
    CHECK(a.substr(0, 58) == "instance,method,r,k,cost,exact_cost,ratio,gap,samples,time");
    CHECK(strip_time_column(a) == strip_time_column(slurp(csv4)));
}

TEST_CASE("verify: property suites pass") {
    const RunResult res = run(kBin + " verify --suite self-reducibility --seeds 5 --dump-dir " +
                              scratch_dir().string());
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("PASS decompose-additivity") != std::string::npos);
    CHECK(res.out.find("PASS extension-identity") != std::string::npos);
    CHECK(res.out.find("FAIL") == std::string::npos);
}

TEST_CASE("graph: edge list dump") {
    const std::string tiny = write_scratch("tiny.txt", "l=1\nAB\nBA\n");
    const RunResult res = run(kBin + " graph --input " + tiny);
    CHECK(res.exit_code == 0);
    CHECK(res.out == "0 0 1 0 1\n0 0 1 1 0\n0 1 1 0 0\n0 1 1 1 1\n");

    // with --out, the two objectives are reported side by side
    const std::string edges = (scratch_dir() / "edges.txt").string();
    const RunResult summary = run(kBin + " graph --input " + tiny + " --out " + edges);
    CHECK(summary.exit_code == 0);
    CHECK(summary.out == "min_clique_weight 0 exact_consensus_cost 0\n");
    CHECK(slurp(edges) == res.out);
}

TEST_CASE("usage errors exit with the input-error code") {
    CHECK(run(kBin + " solve").exit_code == 2);
    CHECK(run(kBin + " frobnicate").exit_code == 2);
    CHECK(run(kBin + " --help").exit_code == 0);
}
