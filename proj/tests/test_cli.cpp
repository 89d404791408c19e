#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <string>

namespace {

struct Run {
    int code;
    std::string out;
};

// Runs the CLI through the shell. stderr is dropped unless `merge` is set.
Run cli(const std::string& args, const std::string& env = "", bool merge = false) {
    const std::string cmd =
        env + (env.empty() ? "" : " ") + LAMPGRID_CLI + " " + args + (merge ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, {}};
    std::string out;
    std::array<char, 4096> buf;
    while (auto n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST(Cli, Eval) {
    auto r = cli("eval a");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "{\"lamps\":[[0,0]],\"pos\":[0,0]}\n");

    r = cli("eval g_1");
    EXPECT_EQ(r.out, "{\"lamps\":[[-1,0],[0,-1],[0,1]],\"pos\":[0,0]}\n");
    r = cli("--alphabet presentation eval saStaTTat");
    EXPECT_EQ(r.out, "{\"lamps\":[[-1,0],[0,-1],[0,1]],\"pos\":[0,0]}\n");

    EXPECT_EQ(cli("eval x").code, 1);
}

TEST(Cli, ParseErrorNamesTheToken) {
    auto r = cli("eval 's q^2'", "", true);
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("q^2"), std::string::npos);
}

TEST(Cli, JsonElementArguments) {
    auto r = cli("inv '{\"lamps\":[[0,1]],\"pos\":[0,1]}'");
    EXPECT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["pos"], nlohmann::json::array({0, -1}));
    EXPECT_EQ(cli("inv '{\"lamps\":[[1,1]],\"pos\":[0,0]}'").code, 1);

    r = cli("mul s a");
    EXPECT_EQ(r.out, "{\"lamps\":[[0,0]],\"pos\":[1,0]}\n");
}

TEST(Cli, DistWitnessTourSpheres) {
    EXPECT_EQ(cli("dist g_1").out, "6\n");
    EXPECT_EQ(cli("dist g_1 --max-radius 4").out, "d > 4\n");
    auto j = nlohmann::json::parse(cli("dist g_1 --max-radius 4 --json").out);
    EXPECT_TRUE(j["distance"].is_null());
    EXPECT_EQ(j["lower_bound"], 5);

    auto r = cli("witness 's^0 sa s^-1 ta t^-2 at'");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("length 6\nbound 6\n"), std::string::npos);
    EXPECT_EQ(cli("witness ''").out, "\nlength 0\nbound 0\n");

    EXPECT_EQ(cli("tour 3").out, "18\n");
    EXPECT_EQ(cli("spheres 1").out, "[1, 17]\n");
}

TEST(Cli, CertifyDepth) {
    auto r = cli("certify-depth 1 1");
    EXPECT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out.substr(0, r.out.find('\n')));
    EXPECT_EQ(j["verdict"], "certified");
    EXPECT_NE(r.out.find("depth(g_1) >= 2"), std::string::npos);

    r = cli("certify-depth 2 --json");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(nlohmann::json::parse(r.out)["k"], 2);

    EXPECT_EQ(cli("certify-depth 1 2").code, 2);
    EXPECT_EQ(cli("certify-depth 0").code, 2);
}

TEST(Cli, UsageErrorsAndEnvironment) {
    EXPECT_EQ(cli("").code, 2);
    EXPECT_EQ(cli("frobnicate").code, 2);
    EXPECT_EQ(cli("tour").code, 2);
    EXPECT_EQ(cli("tour -1").code, 2);
    EXPECT_EQ(cli("--help").code, 0);

    EXPECT_EQ(cli("tour 3", "LAMPGRID_JSON=1").out, "{\"n\":3,\"tour_lower_bound\":18}\n");
    EXPECT_EQ(cli("dist g_1", "LAMPGRID_MAX_RADIUS=4").out, "d > 4\n");
    EXPECT_EQ(cli("dist g_1 --max-radius 6", "LAMPGRID_MAX_RADIUS=4").out, "6\n");
    EXPECT_EQ(cli("eval saStaTTat", "LAMPGRID_ALPHABET=presentation").code, 0);
}

TEST(Cli, Render) {
    auto r = cli("render a");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find('&'), std::string::npos);
    EXPECT_NE(cli("render g_1 --json").out.find("\"picture\""), std::string::npos);
}
