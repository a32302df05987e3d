#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Runs the installed binary with the given arguments, capturing stdout;
// stderr is folded in so diagnostics show up in failure logs.
RunResult run(const std::string& args) {
    const char* bin = std::getenv("VSCGW_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "VSCGW_BIN must point at the CLI binary");
    auto out_path = std::filesystem::temp_directory_path() / "vscgw-cli-out.txt";
    std::string cmd = std::string(bin) + " " + args + " > " + out_path.string() + " 2>&1";
    int status = std::system(cmd.c_str());
    RunResult r{WEXITSTATUS(status), slurp(out_path)};
    std::filesystem::remove(out_path);
    return r;
}

}  // namespace

TEST_CASE("structure constant rows") {
    auto r = run("vsc --N 5 --k 5 --d 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "120 770 1345 770 120\n");

    r = run("vsc --N 3 --k 2 --d 2 --n 0 --pipeline both");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "4\n");

    // empty window
    r = run("vsc --N 7 --k 2 --d 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "\n");

    r = run("vsc --N 4 --k 4 --d 2 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "N,k,d,n,value\n4,4,2,0,2520\n4,4,2,1,19560\n4,4,2,2,19560\n4,4,2,3,2520\n");
}

TEST_CASE("two point invariants") {
    auto r = run("gw --N 5 --k 5 --d 1 --a 1 --b 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "2875\n");

    r = run("gw --N 5 --k 5 --d 1 --a 2 --b 0");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0\n");

    r = run("gw --N 5 --k 5 --d 2 --n 2 --pipeline both");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "4876875/2\n");

    auto seed1 = run("gw --N 4 --k 3 --d 2 --n 1 --pipeline equivariant --lambda-seed 1");
    auto seed2 = run("gw --N 4 --k 3 --d 2 --n 1 --pipeline equivariant --lambda-seed 2");
    CHECK(seed1.exit_code == 0);
    CHECK(seed1.out == seed2.out);
    CHECK(seed1.out == "162\n");
}

TEST_CASE("machine output is deterministic") {
    std::string args = "verify theorem2 --N 5 --k 6 --d 1 --format json";
    auto first = run(args);
    auto second = run(args);
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
    CHECK(first.out.find("\"pass\": true") != std::string::npos);

    auto row1 = run("vsc --N 6 --k 6 --d 2 --format json");
    auto row2 = run("vsc --N 6 --k 6 --d 2 --format json");
    CHECK(row1.out == row2.out);
}

TEST_CASE("verification targets") {
    auto r = run("verify identities");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("identities: PASS (10 checks)") != std::string::npos);

    r = run("verify theorem1 --k-max 2 --d-max 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("theorem1: PASS") != std::string::npos);
    CHECK(r.out.find("reflection: PASS") != std::string::npos);

    r = run("verify theorem2 --N 6 --k 5 --d 1");
    CHECK(r.exit_code == 0);
}

TEST_CASE("cache workflow") {
    auto path = std::filesystem::temp_directory_path() / "vscgw-cli-cache.json";
    std::filesystem::remove(path);

    auto r = run("cache build --out " + path.string() + " --k-max 2 --d-max 2");
    CHECK(r.exit_code == 0);

    r = run("cache info " + path.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("schema vscgw-vsc-cache version 1") != std::string::npos);

    // the vsc subcommand appends its rows through the same schema
    auto other = std::filesystem::temp_directory_path() / "vscgw-cli-row.json";
    r = run("vsc --N 5 --k 5 --d 1 --cache " + other.string());
    CHECK(r.exit_code == 0);
    r = run("cache info " + other.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("5 entries") != std::string::npos);

    r = run("cache info " + path.string() + "-does-not-exist");
    CHECK(r.exit_code == 2);

    std::filesystem::remove(path);
    std::filesystem::remove(other);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run("vsc --k 5 --d 1").exit_code == 2);                      // missing --N
    CHECK(run("vsc --N 5 --k 5 --d 4").exit_code == 2);                // degree out of range
    CHECK(run("gw --N 5 --k 5 --d 1 --a 1").exit_code == 2);           // --b missing
    CHECK(run("gw --N 5 --k 5 --d 1 --n 1 --a 1 --b 1").exit_code == 2);
    CHECK(run("verify nothing").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("cache").exit_code == 2);                                // needs a subcommand
    CHECK(run("--help").exit_code == 0);
}
