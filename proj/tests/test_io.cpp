#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "awft/io.hpp"

using namespace awft;
using awft::io::json;

TEST(Io, FormatDoubleRoundTrips) {
    for (double x : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 0.0}) {
        EXPECT_EQ(std::strtod(io::format_double(x).c_str(), nullptr), x);
    }
    EXPECT_EQ(io::format_double(0.1), "0.1");
    EXPECT_EQ(io::format_double(0.5), "0.5");
}

TEST(Io, ComplexAsNumberOrPair) {
    EXPECT_TRUE(io::complex_to_json({1.5, 0.0}).is_number());
    EXPECT_TRUE(io::complex_to_json({1.5, 1e-20}).is_number());
    const auto j = io::complex_to_json({1.5, 0.25});
    ASSERT_TRUE(j.is_object());
    EXPECT_EQ(j["re"].get<double>(), 1.5);
    EXPECT_EQ(j["im"].get<double>(), 0.25);
}

TEST(Io, ReportSchema) {
    const auto r = make_report("eigen:x", "L phi = mu phi", {1.0, 0.0}, {1.0, 0.0}, 0.0, 1e-9, {-60, -40, 1024, 1e-10});
    const json j = io::to_json(r);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) {
        keys.push_back(k);
    }
    EXPECT_EQ(keys, (std::vector<std::string>{"identity", "paper_ref", "lhs", "rhs", "residual", "tolerance", "pass",
                                              "truncation"}));
    EXPECT_EQ(j["truncation"]["k_min"], -60);
    EXPECT_EQ(j["truncation"]["dual_k_min"], -40);
    EXPECT_EQ(j["truncation"]["quad_points"], 1024);
    EXPECT_EQ(j["truncation"]["eps"], 1e-10);
    EXPECT_TRUE(j["pass"].get<bool>());
}

TEST(Io, MeasureSpecSchema) {
    MeasureSpec<double> s{AWParams<double>::standard(), 64, -20, 1e-8, {}};
    const json j = io::to_json(s);
    EXPECT_EQ(j["params"]["d"], 2.5);
    EXPECT_EQ(j["quad_points"], 64);
    EXPECT_EQ(j["k_min"], -20);
    EXPECT_EQ(j["eps"], 1e-8);
    EXPECT_FALSE(j.contains("fault"));
    s.fault = *parse_fault("K");
    EXPECT_EQ(io::to_json(s)["fault"], "K");
}

TEST(Io, ConfigOverrides) {
    RunConfig cfg;
    io::apply_config(json::parse(R"({"q": 0.3, "t": -1.5, "quad_points": 256, "dual_k_min": -30})"), cfg);
    EXPECT_EQ(cfg.params.q, 0.3);
    EXPECT_EQ(cfg.params.t, -1.5);
    EXPECT_EQ(cfg.params.a, 0.8);
    EXPECT_EQ(cfg.quad_points, 256);
    EXPECT_EQ(cfg.dual_k_min, -30);
    EXPECT_EQ(cfg.k_min, -60);
}

TEST(Io, ConfigErrors) {
    RunConfig cfg;
    EXPECT_THROW(io::apply_config(json::parse(R"({"r": 1})"), cfg), InvalidParameters);
    EXPECT_THROW(io::apply_config(json::parse(R"({"q": "0.4"})"), cfg), InvalidParameters);
    EXPECT_THROW(io::apply_config(json::parse(R"({"k_min": -3.5})"), cfg), InvalidParameters);
    EXPECT_THROW(io::apply_config(json::parse(R"([1, 2])"), cfg), InvalidParameters);
    EXPECT_THROW(io::load_json_file("/nonexistent/awft.json"), InvalidParameters);
    const std::string path = testing::TempDir() + "awft_bad.json";
    std::ofstream(path) << "{ q: ";
    EXPECT_THROW(io::load_json_file(path), InvalidParameters);
    std::remove(path.c_str());
}

TEST(Io, CsvDumpsAreStable) {
    const Measure<double> m(MeasureSpec<double>{AWParams<double>::standard(), 8, -3, 1e-10, {}});
    const auto d1 = io::density_csv(m);
    const auto a1 = io::atoms_csv(m);
    EXPECT_EQ(d1, io::density_csv(m));
    EXPECT_EQ(a1, io::atoms_csv(m));
    EXPECT_EQ(d1.substr(0, d1.find('\n')), "theta,density");
    EXPECT_EQ(std::count(d1.begin(), d1.end(), '\n'), 8);
    EXPECT_EQ(a1.substr(0, a1.find('\n')), "sector,k,x,mass");
    EXPECT_NE(a1.find("minus,1,-2,"), std::string::npos);
    EXPECT_EQ(std::count(a1.begin(), a1.end(), '\n'), 6);
}

TEST(Io, WeightsJson) {
    const Measure<double> m(MeasureSpec<double>{AWParams<double>::standard(), 8, -3, 1e-10, {}});
    const auto j = io::weights_json(m);
    EXPECT_EQ(j["circle"].size(), 7u);
    EXPECT_EQ(j["atoms"].size(), 5u);
    EXPECT_EQ(j["spec"]["quad_points"], 8);
    EXPECT_GT(j["constants"]["K"].get<double>(), 0);
}

TEST(Io, ReportsCsvEscapesCommas) {
    const auto r = make_report("a,b", "ref", {1.0, 0.0}, {1.0, 0.0}, 0.0, 1.0, {});
    const auto s = io::reports_csv({r});
    EXPECT_NE(s.find("\na;b,1,0,1,0,0,1,true\n"), std::string::npos);
}
