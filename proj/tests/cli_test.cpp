#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(CURVEINV_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    EXPECT_NE(pipe, nullptr);
    RunResult result;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.output.append(buf.data(), n);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

TEST(Cli, DtkJsonAnchor) {
    RunResult r = run_cli("dtk 2 -2 --json");
    ASSERT_EQ(r.exit_code, 0) << r.output;
    auto j = nlohmann::ordered_json::parse(r.output);
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(j["genus_x0"], 1);
    EXPECT_EQ(j["gonality_x0"], 2);
}

TEST(Cli, PolySegment) {
    RunResult r = run_cli("poly \"x^3*y^2 - 1\"");
    ASSERT_EQ(r.exit_code, 0) << r.output;
    EXPECT_NE(r.output.find("classification: segment"), std::string::npos);
    EXPECT_NE(r.output.find("genus_upper_bound: 0"), std::string::npos);
    EXPECT_NE(r.output.find("genus: 0"), std::string::npos);
}

TEST(Cli, FibDisplay) {
    RunResult r = run_cli("fib f 4");
    ASSERT_EQ(r.exit_code, 0) << r.output;
    EXPECT_NE(r.output.find("polynomial: x^3 - 2x"), std::string::npos);
    EXPECT_NE(r.output.find("closed_form_check: yes"), std::string::npos);
}

TEST(Cli, FillJsonFields) {
    RunResult r = run_cli("fill 3/2 --json");
    ASSERT_EQ(r.exit_code, 0) << r.output;
    auto j = nlohmann::ordered_json::parse(r.output);
    EXPECT_EQ(j["height"], 3);
    EXPECT_EQ(j["slope"], "3/2");
    EXPECT_EQ(j["generators"].size(), 2u);
    EXPECT_EQ(j["degree_bound"], 3);
    RunResult with_degree = run_cli("fill 3/2 --surface-degree 3 --json");
    auto j2 = nlohmann::ordered_json::parse(with_degree.output);
    EXPECT_EQ(j2["degree_bound"], 9);
}

TEST(Cli, SpectralSubcommand) {
    RunResult r = run_cli("spectral 2 5 --json");
    ASSERT_EQ(r.exit_code, 0) << r.output;
    auto j = nlohmann::ordered_json::parse(r.output);
    EXPECT_EQ(j["lambda1_upper"]["num"], 1);
    EXPECT_EQ(j["lambda1_upper"]["den"], 2);
    EXPECT_EQ(j["injectivity_radius_upper"], "2.63391579385");
}

TEST(Cli, OptbSubcommand) {
    RunResult r = run_cli("optb 6 --json");
    ASSERT_EQ(r.exit_code, 0) << r.output;
    auto j = nlohmann::ordered_json::parse(r.output);
    EXPECT_EQ(j["genus"], 1);
    EXPECT_EQ(j["gonality"], 2);
}

TEST(Cli, ExitCodeTwoOnParseErrors) {
    EXPECT_EQ(run_cli("fill 0/0").exit_code, 2);
    EXPECT_EQ(run_cli("poly \"x +\"").exit_code, 2);
    EXPECT_EQ(run_cli("fib q 3").exit_code, 2);
    EXPECT_EQ(run_cli("dtk two 3").exit_code, 2);
    EXPECT_EQ(run_cli("nonsense").exit_code, 2);
    EXPECT_EQ(run_cli("dtk 2").exit_code, 2);
}

TEST(Cli, ExitCodeThreeOnDomainErrors) {
    RunResult trefoil = run_cli("dtk 2 2");
    EXPECT_EQ(trefoil.exit_code, 3);
    EXPECT_NE(trefoil.output.find("error: "), std::string::npos);
    EXPECT_EQ(run_cli("dtk 3 5").exit_code, 3);   // link
    EXPECT_EQ(run_cli("optb 2").exit_code, 3);
    EXPECT_EQ(run_cli("poly 0").exit_code, 3);    // zero polynomial
    EXPECT_EQ(run_cli("spectral 2 1").exit_code, 3);
}

TEST(Cli, DeterministicOutput) {
    for (const std::string& args :
         {std::string("dtk 4 5 --json"), std::string("optb -3"), std::string("fill 10/4 --json"),
          std::string("fib h -6 --json"), std::string("poly \"x^2*y - 3 + y^-1\" --json")}) {
        RunResult a = run_cli(args);
        RunResult b = run_cli(args);
        ASSERT_EQ(a.exit_code, 0) << a.output;
        EXPECT_EQ(a.output, b.output) << args;
    }
}

TEST(Cli, ReducedSlopeNotice) {
    RunResult r = run_cli("fill 10/4");
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_NE(r.output.find("reduced to lowest terms"), std::string::npos);
    EXPECT_NE(r.output.find("slope: 5/2"), std::string::npos);
}

}  // namespace
