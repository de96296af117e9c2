#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

std::string g_bin;

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = g_bin + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
    const int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

const std::string kQuinticTriple = "\"(t-1)^2\" \"t^5-t^4-t^2\" \"-t^5+t^4+t\"";

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("mu on the quintic") {
    const RunResult r = run("mu --field q " + kQuinticTriple);
    CHECK(r.status == 0);
    CHECK(contains(r.out, "mu = 1"));
    CHECK(contains(r.out, "(t, t - 1, t - 1)"));
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("mu --field q \"t\" \"1\"").status == 2);
    CHECK(run("mu --field r \"t\" \"1\" \"1\"").status == 2);          // bad field spec
    CHECK(run("mu --field q \"t + %\" \"1\" \"1\"").status == 2);      // syntax error
    CHECK(run("mu --field q \"x\" \"1\" \"1\"").status == 2);          // wrong variable
    CHECK(run("bogus-subcommand").status == 2);
    CHECK(run("").status == 2);
    CHECK(run("verify").status == 2);                                   // missing --file
}

TEST_CASE("mathematical failures exit 1") {
    // mu = floor(n/2): the deformation hypothesis fails
    CHECK(run("approx --field q \"t^2\" \"1\" \"t\"").status == 1);
    // triple with a common factor
    CHECK(run("mu --field q \"t\" \"2t\" \"t^2\"").status == 1);
}

TEST_CASE("approx reproduces the worked family") {
    const RunResult r =
        run("approx --field q --candidates \"2\" " + kQuinticTriple);
    CHECK(r.status == 0);
    CHECK(contains(r.out, "-1/12t^4 - 1/12t^3 - 1/6t^2 + 3/4t - 1/2"));
    CHECK(contains(r.out, "mu_eps=2"));
    CHECK(contains(r.out, "verdict: ok"));
}

TEST_CASE("structured output is byte-identical across runs") {
    const std::string cmd = "approx --field q --candidates \"2\" --json " + kQuinticTriple;
    const RunResult a = run(cmd);
    const RunResult b = run(cmd);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());

    const std::string cen = "census --field fp:101 --n 3 --count 40 --seed 9 --json";
    CHECK(run(cen).out == run(cen).out);

    const std::string sam = "sample --field fp:101 --n 4 --seed 5 --json";
    const RunResult s1 = run(sam);
    CHECK(s1.out == run(sam).out);
    CHECK(s1.out != run("sample --field fp:101 --n 4 --seed 6 --json").out);
}

TEST_CASE("emitted documents round-trip through verify and probe") {
    const RunResult doc =
        run("approx --field q --candidates \"2\" --json " + kQuinticTriple);
    REQUIRE(doc.status == 0);
    const std::string path = "cli_roundtrip_tmp.json";
    {
        std::ofstream out(path);
        out << doc.out;
    }
    const RunResult v = run("verify --file " + path);
    CHECK(v.status == 0);
    CHECK(contains(v.out, "verdict: ok"));

    const RunResult p = run("probe --file " + path + " --eps \"1,5\"");
    CHECK(p.status == 0);
    CHECK(contains(p.out, "eps = 0: mu = 1"));
    CHECK(contains(p.out, "eps = 1: mu = 2"));
    CHECK(contains(p.out, "eps = 5: mu = 2"));
    std::remove(path.c_str());
}

TEST_CASE("shear and decompose") {
    const RunResult s = run("shear --field q --lambda \"-1/12\" " + kQuinticTriple);
    CHECK(s.status == 0);
    CHECK(contains(s.out, "-1/12t^5 + 1/12t^4 + 13/12t^2 - 2t + 1"));

    const RunResult d = run("decompose --field q " + kQuinticTriple + " \"t^4\" \"1\" \"t\"");
    CHECK(d.status == 0);
    CHECK(contains(d.out, "h1 ="));
    CHECK(contains(d.out, "h2 = 1"));

    // a vector that is not a syzygy
    CHECK(run("decompose --field q " + kQuinticTriple + " \"1\" \"1\" \"1\"").status == 1);
}

TEST_CASE("census over a prime field") {
    const RunResult r = run("census --field fp:101 --n 4 --count 80 --seed 42 --jobs 2");
    CHECK(r.status == 0);
    CHECK(contains(r.out, "mu = 2"));
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <path-to-binary>\n");
        return 1;
    }
    g_bin = argv[1];
    doctest::Context ctx;
    ctx.applyCommandLine(1, argv);
    return ctx.run();
}
