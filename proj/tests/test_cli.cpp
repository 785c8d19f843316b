// End-to-end exercises of the command-line binary: exit codes, verdict
// rendering, curve-file round trips.  EGR_CLI_PATH is injected by the build.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <doctest.h>

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(EGR_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    REQUIRE(bool(f));
    f << text;
}

}  // namespace

TEST_CASE("good-d table and usage errors") {
    RunResult r = run_cli("good-d --a-max 3 --format csv");
    CHECK(r.code == 0);
    CHECK(r.out == "A,D,t,d1,d2,epsilon\n-1,-1729,1,3,1,-1\n1,-1727,1,3,1,1\n");

    r = run_cli("good-d --a-max 3");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "D=-1729"));
    CHECK(contains(r.out, "D=-1727"));

    r = run_cli("good-d --a-max 40 --format csv");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "\n20,2,"));
    CHECK(contains(r.out, "\n16,37,"));
    CHECK(contains(r.out, "\n-15,-7,"));
    CHECK(contains(r.out, "\n-32,-11,"));
    CHECK(contains(r.out, "\n39,79,"));

    CHECK(run_cli("good-d --a-max 0").code == 2);
    CHECK(run_cli("good-d --a-max banana").code == 2);
}

TEST_CASE("decide verdicts and exit codes") {
    RunResult r = run_cli("decide 6 --a-max 100");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "m = 6: YES"));
    CHECK(contains(r.out, "D = 2  q = 3"));

    r = run_cli("decide -3 --a-max 100");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "m = -3: NO"));
    CHECK(contains(r.out, "fail D="));

    r = run_cli("decide 6 --a-max 100 --format json");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "\"status\": \"YES\""));
    CHECK(contains(r.out, "\"j\": \"8000\""));

    r = run_cli("decide 6 --a-max 100 --format csv");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "m,status,D,q,A,u\n6,YES,2,3,20,"));

    // 37 passes its own divisor conditions but A_max = 15 leaves the table
    // without D = 37, so the verdict is unknown
    r = run_cli("decide 37 --a-max 15");
    CHECK(r.code == 3);
    CHECK(contains(r.out, "m = 37: UNKNOWN"));
    CHECK(contains(r.out, "unresolved"));

    CHECK(run_cli("decide 12").code == 2);
    CHECK(run_cli("decide 0").code == 2);
    CHECK(run_cli("decide 1").code == 2);
    CHECK(run_cli("decide x").code == 2);
    CHECK(run_cli("decide").code == 2);
}

TEST_CASE("construct emits a verified curve file") {
    RunResult r = run_cli("construct 6 --a-max 100");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "m = 6: YES"));
    CHECK(contains(r.out, "j = 8000"));
    CHECK(contains(r.out, "curve:"));

    r = run_cli("construct -259 --a-max 100");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "j = 4096"));

    r = run_cli("construct 3 --a-max 100");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "m = 3: NO"));
    CHECK(!contains(r.out, "curve:"));

    r = run_cli("construct 6 --a-max 100 --out cli_witness_6.txt");
    CHECK(r.code == 0);
    std::ifstream f("cli_witness_6.txt");
    REQUIRE(bool(f));
    std::stringstream buf;
    buf << f.rdbuf();
    CHECK(contains(buf.str(), "m 6\n"));

    RunResult v = run_cli("verify cli_witness_6.txt");
    CHECK(v.code == 0);
    CHECK(contains(v.out, "EGR: true"));
    std::remove("cli_witness_6.txt");
}

TEST_CASE("verify reports, tampering, and parse errors") {
    // unit-discriminant curve over Q(sqrt(29)): y^2 + xy + a^2 y = x^3,
    // a = (5 + sqrt(29))/2, so a^2 = 27/2 + 5/2 sqrt(29)
    write_file("cli_intro.txt", "m 29\n1 0\n0 0\n27/2 5/2\n0 0\n0 0\n0 0\n");
    RunResult r = run_cli("verify cli_intro.txt");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "EGR: true"));
    CHECK(contains(r.out, "unit discriminant"));

    r = run_cli("verify cli_intro.txt --format json");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "\"egr\": true"));

    // flip a6 by +1: good reduction must break somewhere
    write_file("cli_tampered.txt", "m 29\n1 0\n0 0\n27/2 5/2\n0 0\n0 0\n1 0\n");
    r = run_cli("verify cli_tampered.txt");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "EGR: false"));
    CHECK(contains(r.out, "type="));

    write_file("cli_broken.txt", "m 29\n1 0\n");
    CHECK(run_cli("verify cli_broken.txt").code == 2);
    CHECK(run_cli("verify cli_no_such_file.txt").code == 2);

    std::remove("cli_intro.txt");
    std::remove("cli_tampered.txt");
    std::remove("cli_broken.txt");
}

TEST_CASE("count families and aggregates") {
    RunResult r = run_cli("count 2 1e5 --format csv");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "X,count,normalized"));
    CHECK(contains(r.out, "\n10,1,"));

    r = run_cli("count 2 --x-max 1e5 --format csv");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "\n10,1,"));

    r = run_cli("count R 1e5");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "R"));
    CHECK(contains(r.out, "alpha"));

    r = run_cli("count I 1e5 --format json");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "\"family\": \"I\""));

    CHECK(run_cli("count 1 100").code == 2);
    CHECK(run_cli("count -1 100").code == 2);
    CHECK(run_cli("count 12 100").code == 2);
    CHECK(run_cli("count 2").code == 2);
    CHECK(run_cli("count 2 5").code == 2);
    CHECK(run_cli("count 2 junk").code == 2);
}

TEST_CASE("command-level usage errors") {
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("decide --help").code == 0);
}
