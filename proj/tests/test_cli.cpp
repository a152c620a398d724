#include <gtest/gtest.h>

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Outcome {
    int code;
    std::string out;
};

Outcome run(const std::string& args) {
    std::string cmd = std::string(AMHS_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* f = popen(cmd.c_str(), "r");
    if (!f) return {-1, ""};
    std::string out;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, f)) out.append(buf, n);
    int status = pclose(f);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string last_line(const std::string& s) {
    std::string t = s;
    while (!t.empty() && t.back() == '\n') t.pop_back();
    auto nl = t.rfind('\n');
    return nl == std::string::npos ? t : t.substr(nl + 1);
}

}  // namespace

TEST(Cli, EvalExact) {
    Outcome r = run("eval H 1,-3 6");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "4769/51840\n");
    EXPECT_EQ(run("eval H 1,1 0").out, "0\n");
}

TEST(Cli, EvalResidue) {
    Outcome r = run("eval H 1,-3 6 --prime 7");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "6 (mod 7)\n");
    EXPECT_EQ(run("eval H -1,-3 6 -p 7 -k 2").out.find("(mod 7^2)") != std::string::npos, true);
}

TEST(Cli, EvalErrors) {
    EXPECT_EQ(run("eval H 1,0 6").code, 2);
    EXPECT_EQ(run("eval H 1,-3 7 --prime 7").code, 2);
    EXPECT_EQ(run("eval X 1 6").code, 2);
    EXPECT_EQ(run("eval H 1,x 6").code, 2);
}

TEST(Cli, Stuffle) {
    Outcome r = run("stuffle 1 1");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "2·(1,1) + 1·(2)\n");
    EXPECT_EQ(run("stuffle 1 \"\"").out, "1·(1)\n");
    std::string five = run("stuffle -2 -3,2").out;
    for (const char* term : {"(-2,-3,2)", "(-3,-2,2)", "(-3,2,-2)", "(5,2)", "(-3,-4)"})
        EXPECT_NE(five.find(term), std::string::npos) << term;
    EXPECT_EQ(run("stuffle 1 2,,3").code, 2);
}

TEST(Cli, VerifyUsageErrors) {
    EXPECT_EQ(run("verify --primes 4..10").code, 2);
    EXPECT_EQ(run("verify --primes 20..10").code, 2);
    EXPECT_EQ(run("verify --primes 7-10").code, 2);
    EXPECT_EQ(run("verify --jobs 0").code, 2);
    EXPECT_EQ(run("").code, 2);
}

TEST(Cli, VerifyKnownFail) {
    Outcome r = run("verify --primes 7..7 --suite C08.known-fail --no-timing");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\"id\":\"C08.known-fail.p7\""), std::string::npos);
    EXPECT_NE(r.out.find("\"status\":\"pass\""), std::string::npos);
    EXPECT_EQ(last_line(r.out), "{\"summary\":true,\"total\":1,\"pass\":1,\"fail\":0,\"skipped\":0,\"wall_us\":0}");
}

TEST(Cli, VerifyReproducibleAcrossJobs) {
    Outcome a = run("verify --primes 7..50 --suite C30 --suite C31 --suite C04 --no-timing --jobs 1");
    Outcome b = run("verify --primes 7..50 --suite C30 --suite C31 --suite C04 --no-timing --jobs 4");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    Outcome c = run("verify --primes 7..50 --suite C30 --no-timing --seed 99");
    EXPECT_EQ(c.code, 0);
}

TEST(Cli, VerifyFailureExitsOne) {
    // the literal quadruple does not hold at 1093
    EXPECT_EQ(run("verify --primes 1093..1093 --suite C21.p1093").code, 1);
    EXPECT_EQ(run("verify --primes 1093..1093 --suite C21.reversed").code, 0);
}
