#include <gtest/gtest.h>

#include "awft/verification.hpp"

using namespace awft;

TEST(Suites, UnknownNameRejected) {
    EXPECT_THROW(run_suite("nope", RunConfig{}), InvalidParameters);
}

TEST(Suites, RegistryNames) {
    std::vector<std::string> names;
    for (const auto& [n, fn] : suites::registry()) {
        names.push_back(n);
    }
    EXPECT_EQ(names, (std::vector<std::string>{"eigen", "duality", "cexpansion", "wronskian", "ortho", "norm",
                                               "plancherel-d", "plancherel-c", "mixed", "constants"}));
}

TEST(Suites, CExpansionPasses) {
    const auto r = run_suite("cexpansion", RunConfig{});
    EXPECT_FALSE(r.empty());
    for (const auto& x : r) {
        EXPECT_TRUE(x.pass) << x.identity << " residual " << x.residual;
    }
}

TEST(Suites, WronskianPasses) {
    const auto r = run_suite("wronskian", RunConfig{});
    EXPECT_EQ(r.size(), 10u);
    EXPECT_TRUE(all_pass(r));
}

TEST(Suites, ReportsCarryTruncation) {
    RunConfig cfg;
    cfg.quad_points = 512;
    const auto r = run_suite("cexpansion", cfg);
    ASSERT_FALSE(r.empty());
    EXPECT_EQ(r.front().truncation.quad_points, 512);
    EXPECT_EQ(r.front().truncation.dual_k_min, -40);
}

TEST(Suites, KFaultBreaksConstantIdentity) {
    RunConfig cfg;
    cfg.fault = *parse_fault("K");
    EXPECT_FALSE(all_pass(run_suite("constants", cfg)));
}

TEST(Suites, OtherParameterPoint) {
    RunConfig cfg;
    cfg.params = {0.3, 1.2, 0.5, 0.4, 1.5, -0.7};
    ASSERT_TRUE(validate_V(cfg.params).member);
    // both sides are O(1) sums that cancel down to |rhs|, so compare absolutely
    const auto r = run_suite("wronskian", cfg);
    for (const auto& x : r) {
        EXPECT_LT(std::abs(x.lhs - x.rhs), 1e-12 * std::max(1.0, std::abs(x.lhs))) << x.identity;
    }
}
