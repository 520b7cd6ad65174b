#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "gtest/gtest.h"

namespace {

struct CliResult {
    int status = -1;
    std::string out;
};

// Runs the CLI through the shell; stdout is captured, stderr optionally folded in.
CliResult run(const std::string& args, bool with_stderr = false) {
    std::string cmd = std::string("'") + COXETER_CLI_PATH + "' " + args;
    cmd += with_stderr ? " 2>&1" : " 2>/dev/null";
    CliResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string write_input(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / ("coxeter_cli_test_" + name);
    std::ofstream(path) << content;
    return path.string();
}

TEST(CliNpTest, ZeroVector) {
    const CliResult r = run("np --n 2 --m 3 --alg linear " + write_input("zero", "0 0 0\n"));
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "u=[0,0,0] x=[0.000000000000,0.000000000000,0.000000000000] d2=0.000000000000\n");
}

TEST(CliNpTest, CommaSeparatedFromStdin) {
    const CliResult r = run("np --n 2 --m 3 --alg linear < " + write_input("comma", "# query\n0.6,0.1,-0.3\n"));
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out.rfind("u=[0,0,0] ", 0), 0u) << r.out;
    EXPECT_NE(r.out.find("d2=0.406666666667"), std::string::npos) << r.out;
}

TEST(CliNpTest, AlgorithmsAgree) {
    const std::string in = write_input("algs", "0.6,0.1,-0.3\n1.2 -3.4 0.7\n");
    const std::string expected = run("np --n 2 --m 3 --alg oracle " + in).out;
    for (const char* alg : {"linear", "loglinear", "glue", "an", "an-loglinear"}) {
        const CliResult r = run(std::string("np --n 2 --m 3 --alg ") + alg + " " + in);
        EXPECT_EQ(r.status, 0) << alg;
        EXPECT_EQ(r.out, expected) << alg;
    }
}

TEST(CliNpTest, LengthErrorExitsOne) {
    const CliResult r = run("np --n 2 --m 3 " + write_input("short", "1 2\n0 0 0\n"), true);
    EXPECT_EQ(r.status, 1);
    EXPECT_NE(r.out.find("line 1"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("u=[0,0,0]"), std::string::npos) << r.out;
}

TEST(CliNpTest, MalformedLineExitsOne) {
    EXPECT_EQ(run("np --n 2 --m 3 " + write_input("bad", "1,,2\n")).status, 1);
}

TEST(CliNpTest, ArgumentErrors) {
    EXPECT_NE(run("np --n 2 --alg linear " + write_input("zero", "0 0 0\n")).status, 0);
    EXPECT_NE(run("np --n 2 --m 1 --alg an " + write_input("zero", "0 0 0\n")).status, 0);
    EXPECT_NE(run("np --n 2 --m 3 --alg nonsense " + write_input("zero", "0 0 0\n")).status, 0);
    EXPECT_NE(run("np --n 2 --m 3 /nonexistent/input").status, 0);
}

TEST(CliBenchTest, HeaderAndRows) {
    const CliResult r = run("bench --dims 7,8 --trials 20 --alg linear,glue");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out.rfind("n,m,algorithm,trials,total_seconds,mean_ns\n7,4,linear,20,", 0), 0u) << r.out;
    EXPECT_NE(r.out.find("\n7,4,glue,20,"), std::string::npos);
    EXPECT_EQ(r.out.find("\n8,"), std::string::npos);
}

TEST(CliBenchTest, ZeroTrialsHeaderOnly) {
    const CliResult r = run("bench --dims 7 --trials 0");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "n,m,algorithm,trials,total_seconds,mean_ns\n");
}

TEST(CliBenchTest, RejectsBadOrderRule) {
    EXPECT_EQ(run("bench --order-rule sideways:3").status, 1);
}

TEST(CliVerifyTest, PassesAndFailsWithInjectedFault) {
    const CliResult ok = run("verify --max-n 4 --trials 10");
    EXPECT_EQ(ok.status, 0);
    EXPECT_NE(ok.out.find("all properties passed"), std::string::npos) << ok.out;
    const CliResult bad = run("verify --max-n 4 --trials 10 --inject-fault");
    EXPECT_EQ(bad.status, 2);
    EXPECT_NE(bad.out.find("FAIL"), std::string::npos);
}

TEST(CliVerifyTest, RejectsInvalidArguments) {
    EXPECT_EQ(run("verify --max-n 9").status, 1);
    EXPECT_EQ(run("verify --trials 0").status, 1);
}

} // namespace
