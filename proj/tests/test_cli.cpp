#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using std::string;

namespace {

struct RunResult {
    int code = -1;
    string out;
};

string cli() {
    const char* path = std::getenv("DODGSON_CLI");
    REQUIRE(path != nullptr);
    return string("'") + path + "'";
}

string fixture(const string& name) {
    const char* dir = std::getenv("DODGSON_FIXTURES");
    REQUIRE(dir != nullptr);
    return string("'") + dir + "/" + name + "'";
}

RunResult run(const string& args, bool keep_stderr = false) {
    string cmd = cli() + " " + args + (keep_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// drops the wall_ms column so timing noise cannot break byte comparisons
string strip_timing(const string& csv) {
    std::istringstream in(csv);
    string line, out;
    while (std::getline(in, line)) {
        std::vector<string> fields;
        std::istringstream ls(line);
        string f;
        while (std::getline(ls, f, ',')) fields.push_back(f);
        if (fields.size() == 6) fields[2] = "_";
        string joined;
        for (size_t i = 0; i < fields.size(); ++i)
            joined += (i ? "," : "") + fields[i];
        out += joined + "\n";
    }
    return out;
}

}  // namespace

TEST_CASE("det computes the fixture determinants under every method") {
    CHECK(run("det " + fixture("mat3.txt")).out == "-3\n");
    CHECK(run("det " + fixture("mat3.txt") + " --method bareiss").out == "-3\n");
    CHECK(run("det " + fixture("mat3.txt") + " --method leibniz").out == "-3\n");
    CHECK(run("det " + fixture("identity6.txt")).out == "1\n");
    CHECK(run("det " + fixture("rational.txt")).out == "7217/60\n");
    CHECK(run("det " + fixture("mat12.txt")).out == "-797337548336\n");
    CHECK(run("det " + fixture("mat12.txt") + " --method bareiss --threads 0").out ==
          "-797337548336\n");
}

TEST_CASE("det reads stdin when the path is a dash") {
    RunResult r = run("det - < " + fixture("mat3.txt"));
    CHECK(r.code == 0);
    CHECK(r.out == "-3\n");
}

TEST_CASE("det writes a condensation trace on request") {
    string trace_path = string(std::getenv("DODGSON_SCRATCH") ? std::getenv("DODGSON_SCRATCH")
                                                              : "/tmp") +
                        "/cli_trace.json";
    RunResult r = run("det " + fixture("mat3.txt") + " --trace '" + trace_path + "'");
    CHECK(r.code == 0);
    CHECK(r.out == "-3\n");
    std::ifstream in(trace_path);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str().find("\"value\": \"-3\"") != string::npos);
    CHECK(buf.str().find("\"fallback_used\": false") != string::npos);
    std::remove(trace_path.c_str());
}

TEST_CASE("verify --formal prints the class census and PASS") {
    RunResult r = run("verify --n 3 --formal");
    CHECK(r.code == 0);
    CHECK(r.out == "n=3 |A|=6 |B|=4 |C|=4 bad=1+1 lhs_terms=6 rhs_terms=6\nPASS\n");

    RunResult r4 = run("verify --n 4 --formal --threads 0");
    CHECK(r4.code == 0);
    CHECK(r4.out == "n=4 |A|=48 |B|=36 |C|=36 bad=12+12 lhs_terms=46 rhs_terms=46\nPASS\n");
}

TEST_CASE("verify --random reports PASS and exits zero") {
    RunResult r = run("verify --n 4 --random 25 --bound 9 --seed 7");
    CHECK(r.code == 0);
    CHECK(r.out == "n=4 trials=25 bound=9 seed=7\nPASS\n");
}

TEST_CASE("map T output piped into Tinv restores the input pairing") {
    RunResult once = run("map --op T --input " + fixture("pairing_a3.json"));
    CHECK(once.code == 0);
    CHECK(once.out.find("\"class\": \"C\"") != string::npos);

    string cmd = cli() + " map --op T --input " + fixture("pairing_a3.json") + " | " + cli() +
                 " map --op Tinv --input -";
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    REQUIRE(pipe != nullptr);
    string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    REQUIRE(WEXITSTATUS(pclose(pipe)) == 0);

    // the round trip's output block must list the original three marriages
    CHECK(out.find("\"class\": \"A\"") != string::npos);
    CHECK(out.find("\"3\": 1") != string::npos);

    // mapping twice is deterministic byte for byte
    CHECK(run("map --op T --input " + fixture("pairing_a3.json")).out == once.out);
}

TEST_CASE("map S swaps the bad classes in both directions") {
    RunResult b = run("map --op S --input " + fixture("pairing_bad_b3.json"));
    CHECK(b.code == 0);
    CHECK(b.out.find("\"class\": \"C\"") != string::npos);

    RunResult c = run("map --op S --input " + fixture("pairing_bad_c3.json"));
    CHECK(c.code == 0);
    CHECK(c.out.find("\"class\": \"B\"") != string::npos);
}

TEST_CASE("enumerate lists members in both formats") {
    RunResult table = run("enumerate --n 3 --class B");
    CHECK(table.code == 0);
    CHECK(table.out.find("index") != string::npos);
    CHECK(table.out.find("weight") != string::npos);

    RunResult bad = run("enumerate --n 3 --class B --only-bad --format json");
    CHECK(bad.code == 0);
    CHECK(bad.out.find("\"tag\":\"bad\"") != string::npos);
    // exactly one bad member of B(3): a single output line
    CHECK(std::count(bad.out.begin(), bad.out.end(), '\n') == 1);

    RunResult a = run("enumerate --n 2 --class A --format json");
    CHECK(a.code == 0);
    CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 2);
}

TEST_CASE("bench digests agree across methods and reruns are stable") {
    string args = "bench --sizes 4,6 --methods condensation,bareiss,leibniz"
                  " --entry-bits 8 --seed 42";
    RunResult first = run(args);
    CHECK(first.code == 0);

    std::istringstream in(first.out);
    string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "n,method,wall_ms,repairs,fallbacks,digest");
    string digest4, digest6;
    while (std::getline(in, line)) {
        std::vector<string> fields;
        std::istringstream ls(line);
        string f;
        while (std::getline(ls, f, ',')) fields.push_back(f);
        REQUIRE(fields.size() == 6);
        string& expected = fields[0] == "4" ? digest4 : digest6;
        if (expected.empty())
            expected = fields[5];
        else
            CHECK(fields[5] == expected);
    }
    CHECK_FALSE(digest4.empty());
    CHECK_FALSE(digest6.empty());

    RunResult second = run(args);
    CHECK(strip_timing(second.out) == strip_timing(first.out));
}

TEST_CASE("exit code contract: bad input and guards exit 2") {
    CHECK(run("det /nonexistent/matrix.txt").code == 2);
    CHECK(run("det " + fixture("mat12.txt") + " --method leibniz").code == 2);
    CHECK(run("det " + fixture("mat3.txt") + " --method gauss").code == 2);
    CHECK(run("det " + fixture("mat3.txt") + " --method bareiss --trace /tmp/x.json").code == 2);
    CHECK(run("verify --n 1 --formal").code == 2);
    CHECK(run("verify --n 99 --formal").code == 2);
    CHECK(run("verify --n 3").code == 2);
    CHECK(run("verify --n 3 --formal --random 5").code == 2);
    CHECK(run("map --op T --input " + fixture("pairing_invalid.json")).code == 2);
    CHECK(run("map --op T --input " + fixture("pairing_bad_b3.json")).code == 2);
    CHECK(run("map --op X --input " + fixture("pairing_a3.json")).code == 2);
    CHECK(run("enumerate --n 3 --class D").code == 2);
    CHECK(run("enumerate --n 3 --class A --only-bad").code == 2);
    CHECK(run("enumerate --n 99 --class A").code == 2);
    CHECK(run("bench --sizes 12 --methods leibniz").code == 2);
    CHECK(run("bench --sizes 4 --methods gauss").code == 2);
    CHECK(run("nosuchcommand").code == 2);
}

TEST_CASE("exit code contract: domain errors exit 3") {
    CHECK(run("map --op Tinv --input " + fixture("pairing_bad_b3.json")).code == 3);
    CHECK(run("map --op Tinv --input " + fixture("pairing_bad_c3.json")).code == 3);

    // S on a good member: feed a good pairing through a T trace
    string cmd = cli() + " map --op T --input " + fixture("pairing_a3.json") + " | " + cli() +
                 " map --op S --input - 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    while (fread(buf, 1, sizeof buf, pipe) > 0) {
    }
    CHECK(WEXITSTATUS(pclose(pipe)) == 3);
}

TEST_CASE("help exits zero") {
    CHECK(run("--help").code == 0);
    CHECK(run("det --help").code == 0);
}
