#include <array>
#include <cstdio>
#include <string>

#include <gtest/gtest.h>

#include "json.hpp"

#ifndef HYPERCLIFFORD_CLI
#error "HYPERCLIFFORD_CLI must name the command-line binary"
#endif

namespace {

struct Result {
    int code;
    std::string out;
};

Result run(const std::string& args) {
    const std::string cmd = std::string(HYPERCLIFFORD_CLI) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

} // namespace

TEST(Cli, VerifyTables) {
    const auto r = run("verify tables --format json");
    ASSERT_EQ(r.code, 0) << r.out;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["summary"]["pass"], 3);
    EXPECT_EQ(j["summary"]["fail"], 0);
    for (const auto& c : j["checks"]) EXPECT_EQ(c["status"], "pass");
}

TEST(Cli, VerifyDimsAndSphere) {
    EXPECT_EQ(run("verify dims").code, 0);
    EXPECT_EQ(run("verify sphere --tol 1e-10").code, 0);
}

TEST(Cli, ImpossibleToleranceFails) {
    // no floating check meets 1e-300
    EXPECT_EQ(run("verify sphere --tol 1e-300").code, 1);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run("verify bogus").code, 2);
    EXPECT_EQ(run("tables r99").code, 2);
    EXPECT_EQ(run("interfere --p1 2 --p2 0.1 --lambda 0").code, 2);
    EXPECT_EQ(run("pauli --k 16").code, 2);
    EXPECT_EQ(run("sphere --angles 1,2").code, 2);
    EXPECT_EQ(run("").code, 2);
}

TEST(Cli, Tables) {
    const auto r = run("tables r30 --format json");
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    bool saw_derived = false;
    for (const auto& row : j) {
        if (row["unit"] == "i") {
            EXPECT_EQ(row["bar"], "-");
            EXPECT_EQ(row["dagger"], "-");
            EXPECT_EQ(row["hat"], "+");
        }
        saw_derived = saw_derived || row["derived"].get<bool>();
    }
    EXPECT_TRUE(saw_derived);
    EXPECT_NE(run("tables r10").out.find("j"), std::string::npos);
}

TEST(Cli, Sphere) {
    const auto r = run("sphere --r 2 --angles 1.5707963267948966,0,0,0,0 --format json");
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["closed_form"][2].get<double>(), 2.0, 1e-12);
    EXPECT_LT(j["max_deviation"].get<double>(), 1e-10);
    const auto h = nlohmann::json::parse(run("sphere --angles 0.1,0.2,0.3,0.4,0.5 --hyperbolic 1,0,-1,0.5,0 --format json").out);
    EXPECT_EQ(h["closed_form"].size(), 12u);
    EXPECT_LT(h["membership_residual"].get<double>(), 1e-10);
}

TEST(Cli, Boost) {
    const auto r = run("boost --xi 1 --axis 3 --vector 2,0,0,0 --format json");
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["coords"][0].get<double>(), 2 * std::cosh(1.0), 1e-12);
    EXPECT_NEAR(j["coords"][3].get<double>(), 2 * std::sinh(1.0), 1e-12);
}

TEST(Cli, Interfere) {
    const auto j = nlohmann::json::parse(run("interfere --p1 .25 --p2 .25 --lambda 1 --format json").out);
    EXPECT_DOUBLE_EQ(j["P"].get<double>(), 1.0);
    EXPECT_EQ(j["regime"], "complex");
    EXPECT_DOUBLE_EQ(j["theta"].get<double>(), 0.0);
    const auto h = nlohmann::json::parse(run("interfere --p1 .25 --p2 .25 --lambda 2 --format json").out);
    EXPECT_EQ(h["regime"], "hyperbolic");
}

TEST(Cli, PauliAndDecompose) {
    const auto p = run("pauli --ab 0,1 --format json");
    ASSERT_EQ(p.code, 0);
    const auto k1 = run("pauli --k 1 --format json");
    EXPECT_EQ(p.out, k1.out);
    const auto d = run("decompose --rep c30bar '[[1,0],[0,-1]]'");
    EXPECT_EQ(d.code, 0);
    EXPECT_NE(d.out.find("(j)e3"), std::string::npos) << d.out;
    EXPECT_EQ(run("decompose --rep r30 '[[1,0],[0,-1]]'").code, 2);
    EXPECT_EQ(run("decompose --rep r30 'not json'").code, 2);
}

TEST(Cli, Mass) {
    const auto r = run(R"(mass '{"q":[3,0,0,0],"u":[2,0,0,0]}' --format json)");
    ASSERT_EQ(r.code, 0) << r.out;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["hermitian"], false);
    EXPECT_DOUBLE_EQ(j["mass_qform"][0].get<double>(), 5.0);
    EXPECT_DOUBLE_EQ(j["mass_qform"][3].get<double>(), 12.0);
    EXPECT_NE(run(R"(mass '{"q":[1,0,0,0]}')").out.find("fiber convention"), std::string::npos);
}

TEST(Cli, EnvironmentTolerance) {
    const std::string prefix = "HYPERCLIFFORD_TOL=1e-300 ";
    const std::string cmd = prefix + HYPERCLIFFORD_CLI + " verify sphere > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    EXPECT_EQ(WEXITSTATUS(status), 1);
}
