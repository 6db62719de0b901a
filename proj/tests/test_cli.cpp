#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args)
{
    std::string cmd = std::string(TSCHUR_CLI_PATH) + " " + args + " 2>&1";
    Run r;
    FILE* f = popen(cmd.c_str(), "r");
    if (!f) return r;
    std::array<char, 4096> buf;
    while (std::fgets(buf.data(), buf.size(), f)) r.out += buf.data();
    int st = pclose(f);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

} // namespace

TEST(Cli, HelpExitsZero)
{
    auto r = run("--help");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("verify"), std::string::npos);
    EXPECT_EQ(run("edge --help").code, 0);
}

TEST(Cli, VerifyEchoesConfigAndPasses)
{
    auto r = run("verify --suite cauchy --x 1/2,1/3 --y 1/4 --t -1 --deg 5");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.out.rfind("{\"config\":{\"command\":\"verify\"", 0), 0u) << r.out;
    EXPECT_NE(r.out.find("exact-equal"), std::string::npos);
}

TEST(Cli, RskShape)
{
    auto r = run("rsk --matrix '[[{\"v\":2,\"p\":true}]]'");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("\"shape\":[2]"), std::string::npos) << r.out;
    auto lit = run("rsk --matrix '[[{\"v\":2,\"p\":true}]]' --copies all");
    EXPECT_NE(lit.out.find("\"shape\":[1,1]"), std::string::npos) << lit.out;
}

TEST(Cli, CsvHasHeader)
{
    auto r = run("verify --suite dual --x 1/2 --y 1/3 --deg 4 --format csv");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.out.rfind("# config ", 0), 0u) << r.out;
    auto nl = r.out.find('\n');
    EXPECT_EQ(r.out.compare(nl + 1, 5, "name,"), 0) << r.out;
}

TEST(Cli, UsageErrorsExitTwo)
{
    EXPECT_EQ(run("verify --bogus 1").code, 2);
    EXPECT_EQ(run("verify --x 1/0").code, 2);
    EXPECT_EQ(run("verify --x abc").code, 2);
    EXPECT_EQ(run("nosuchcommand").code, 2);
    EXPECT_EQ(run("").code, 2);
}
