#include <gtest/gtest.h>

#include <random>

#include "awft/measure.hpp"
#include "awft/verification.hpp"
#include "goldens.hpp"

using namespace awft;
using C = std::complex<double>;

namespace {

const AWParams<double> P1 = AWParams<double>::standard();

double rel(C a, C b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST(Weights, Goldens) {
    const C g(0.6, 0.8);
    EXPECT_LT(rel(weight_Delta<double>(g, P1).value, golden::Delta_g), 1e-13);
    EXPECT_LT(rel(weight_W<double>(g, P1).value, golden::W_g), 1e-13);
}

TEST(Weights, InvariantUnderInversion) {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(0.3, 2.0);
    for (int i = 0; i < 20; ++i) {
        const C x = std::polar(u(rng), u(rng));
        EXPECT_LT(rel(weight_Delta<double>(1.0 / x, P1).value, weight_Delta<double>(x, P1).value), 1e-12);
        EXPECT_LT(rel(weight_W<double>(1.0 / x, P1).value, weight_W<double>(x, P1).value), 1e-12);
    }
}

TEST(Weights, PositiveOnCircle) {
    for (int j = 1; j < 32; ++j) {
        const C x = std::polar(1.0, M_PI * j / 32);
        EXPECT_GT(weight_W<double>(x, P1).value.real(), 0.0);
    }
}

TEST(Constants, Goldens) {
    const auto dp = dualize(P1);
    EXPECT_NEAR(const_c0<double>(P1).value.real(), golden::c0, 1e-13 * golden::c0);
    EXPECT_NEAR(const_K<double>(P1).value.real(), golden::K, 1e-13 * golden::K);
    EXPECT_NEAR(const_M<double>(P1).value.real(), golden::M, 1e-13 * golden::M);
    EXPECT_NEAR(const_c0<double>(dp).value.real(), golden::c0_dual, 1e-13 * golden::c0_dual);
    EXPECT_NEAR(const_K<double>(dp).value.real(), golden::K_dual, 1e-13 * golden::K_dual);
    EXPECT_NEAR(const_M<double>(dp).value.real(), golden::M_dual, 1e-13 * golden::M_dual);
}

TEST(Constants, DualIdentityAtRandomPoints) {
    VSampler sample(99);
    for (int i = 0; i < 30; ++i) {
        const auto p = sample();
        const auto dp = dualize(p);
        const double r = const_K<double>(dp).value.real() * const_M<double>(p).value.real() /
                         const_c0<double>(dp).value.real();
        EXPECT_NEAR(r, 1.0, 1e-10) << p.describe();
    }
}

TEST(Constants, NegativeRadicandRejected) {
    AWParams<double> p = P1;
    p.t = 0.5;
    EXPECT_THROW(const_K<double>(p), NegativeRadicand);
}

TEST(DiscreteWeights, Goldens) {
    const auto dp = dualize(P1);
    EXPECT_NEAR(discrete_weight_plus<double>(0, dp).value.real(), golden::nu_dual_plus_0, 1e-13);
    EXPECT_NEAR(discrete_weight_minus<double>(1, P1).value.real(), golden::nu_minus_1, 1e-15);
    EXPECT_NEAR(discrete_weight_minus<double>(0, P1).value.real(), golden::nu_minus_0, 1e-15);
    EXPECT_NEAR(discrete_weight_minus<double>(-5, P1).value.real(), golden::nu_minus_m5, 1e-15);
}

TEST(Support, StandardPoint) {
    EXPECT_FALSE(in_S_plus(0, P1));
    EXPECT_TRUE(in_S_minus(1, P1));
    EXPECT_FALSE(in_S_minus(2, P1));
    EXPECT_EQ(minus_head(P1), 1);
    const auto dp = dualize(P1);
    EXPECT_TRUE(in_S_plus(0, dp));
    EXPECT_FALSE(in_S_plus(1, dp));
    EXPECT_EQ(minus_head(dp), 0);
}

TEST(Faults, Parse) {
    EXPECT_EQ(parse_fault("K")->target, FaultInjection::Target::K);
    EXPECT_EQ(parse_fault("c0")->target, FaultInjection::Target::c0);
    EXPECT_EQ(parse_fault("M")->target, FaultInjection::Target::M);
    const auto w = parse_fault("weight");
    ASSERT_TRUE(w);
    EXPECT_EQ(w->atom, (AtomKey{Sector::minus, 1}));
    EXPECT_EQ(parse_fault("weight:-3")->atom, (AtomKey{Sector::minus, -3}));
    EXPECT_EQ(parse_fault("weight:plus:0")->atom, (AtomKey{Sector::plus, 0}));
    EXPECT_EQ(parse_fault("none")->target, FaultInjection::Target::none);
    EXPECT_FALSE(parse_fault("weights"));
    EXPECT_FALSE(parse_fault("weight:1x"));
    EXPECT_FALSE(parse_fault("weight:minus"));
    EXPECT_FALSE(parse_fault("Q"));
    EXPECT_EQ(to_string(*parse_fault("weight:-3")), "weight:minus:-3");
}

TEST(Faults, ScaleConstantsByOnePercent) {
    const auto base = measure_constants<double>(P1);
    for (const char* t : {"K", "c0", "M"}) {
        const auto f = measure_constants<double>(P1, default_eps<double>(), *parse_fault(t));
        const double ratio = std::string(t) == "K" ? f.K / base.K : std::string(t) == "c0" ? f.c0 / base.c0 : f.M / base.M;
        EXPECT_NEAR(ratio, 1.01, 1e-14) << t;
    }
}

TEST(MeasureTest, RejectsParametersOutsideV) {
    AWParams<double> p = P1;
    p.b = 0.9;
    EXPECT_THROW(Measure<double>(MeasureSpec<double>{p, 64, -10, 1e-10, {}}), InvalidParameters);
    EXPECT_THROW(Measure<double>(MeasureSpec<double>{P1, 1, -10, 1e-10, {}}), InvalidParameters);
}

TEST(MeasureTest, NodesAndMasses) {
    const Measure<double> m(MeasureSpec<double>{P1, 64, -10, 1e-10, {}});
    const auto s = m.support();
    EXPECT_TRUE(s.plus.empty());
    ASSERT_EQ(s.minus.size(), 12u);
    EXPECT_EQ(s.minus.front().key.k, 1);
    EXPECT_DOUBLE_EQ(s.minus.front().x, -2.0);
    EXPECT_NEAR(s.minus.front().mass, 2 * golden::nu_minus_1, 1e-15);
    EXPECT_EQ(s.minus.back().key.k, -10);
    for (const auto& a : s.minus) {
        EXPECT_GT(a.mass, 0);
    }
    EXPECT_NEAR(m.density(M_PI / 3),
                golden::K * weight_W<double>(std::polar(1.0, M_PI / 3), P1).value.real() / (4 * M_PI), 1e-14);
}

TEST(MeasureTest, WeightFaultTouchesOneAtom) {
    const Measure<double> m0(MeasureSpec<double>{P1, 64, -5, 1e-10, {}});
    const Measure<double> m1(MeasureSpec<double>{P1, 64, -5, 1e-10, *parse_fault("weight:-2")});
    for (int k = 1; k >= -5; --k) {
        const double r = m1.pair_mass({Sector::minus, k}) / m0.pair_mass({Sector::minus, k});
        EXPECT_NEAR(r, k == -2 ? 1.01 : 1.0, 1e-15) << k;
    }
}

TEST(MeasureTest, RecommendedQuadPoints) {
    EXPECT_EQ(recommended_quad_points(P1, 1e-10), 64);
    EXPECT_EQ(recommended_quad_points(dualize(P1), 1e-10), 1024);
    const Measure<double> m(MeasureSpec<double>{P1, 0, -5, 1e-10, {}});
    EXPECT_EQ(m.quad_points(), 64);
}

TEST(MeasureTest, TotalMassConverges) {
    TestFunction<double> one;
    one.circle = [](double) { return C(1); };
    one.lattice = [](const AtomKey&, double) { return C(1); };
    const Measure<double> m(MeasureSpec<double>{P1, 256, -60, 1e-10, {}});
    const auto I = m.integrate(one);
    EXPECT_NEAR(I.value.real(), 0.143580591646748, 1e-12);
    EXPECT_LT(I.quad_estimate, 1e-12);
}

TEST(MeasureTest, UnconvergedTruncationThrows) {
    TestFunction<double> one;
    one.lattice = [](const AtomKey&, double) { return C(1); };
    const Measure<double> m(MeasureSpec<double>{P1, 64, -3, 1e-10, {}});
    EXPECT_THROW(m.integrate(one), TruncationNotConverged);
}

TEST(MeasureTest, AtomOutsideSupportThrows) {
    const Measure<double> m(MeasureSpec<double>{P1, 64, -5, 1e-10, {}});
    EXPECT_THROW(m.integrate(TestFunction<double>::delta({Sector::minus, 2})), NotInSupport);
    EXPECT_THROW(m.integrate(TestFunction<double>::delta({Sector::plus, 0})), NotInSupport);
    EXPECT_NO_THROW(m.integrate(TestFunction<double>::delta({Sector::minus, 0})));
}

TEST(MeasureTest, DeltaIntegratesToPairMass) {
    const Measure<double> m(MeasureSpec<double>{P1, 64, -5, 1e-10, {}});
    const auto I = m.integrate(TestFunction<double>::delta({Sector::minus, 0}, C(3.0)));
    EXPECT_NEAR(I.value.real(), 3.0 * 2 * golden::nu_minus_0, 1e-15);
}

TEST(MeasureTest, AskeyWilsonIntegral) {
    const AWParams<double> p{0.4, 0.5, 0.5, 0.5, 0.5, -1};
    const QBase<double> qb(0.4);
    auto inf = [&](double a) { return qpoch_inf<double>(C(a), qb, 1e-17).value.real(); };
    const double product = 2 * inf(0.0625) / (inf(0.4) * std::pow(inf(0.25), 6));
    EXPECT_NEAR(const_C0<double>(p).value.real(), product, 1e-13 * product);
    const C mean = suites::circle_mean([&](C x) { return weight_Delta<double>(x, p).value; }, 256);
    EXPECT_LT(std::abs(mean - product) / product, 1e-10);
}

TEST(BlockTail, GeometricAndOscillatory) {
    std::vector<double> geo;
    for (int i = 0; i < 16; ++i) {
        geo.push_back(std::pow(0.5, i));
    }
    EXPECT_NEAR(block_tail_estimate(geo), std::pow(0.5, 16) * 2, 1e-6);
    std::vector<double> osc;
    for (int i = 0; i < 16; ++i) {
        osc.push_back(std::pow(0.7, i) * (i % 4 == 0 ? 1.0 : 1e-3));
    }
    EXPECT_TRUE(std::isfinite(block_tail_estimate(osc)));
    EXPECT_TRUE(std::isinf(block_tail_estimate(std::vector<double>{1, 2, 3})));
    EXPECT_TRUE(std::isinf(block_tail_estimate(std::vector<double>(8, 1.0))));
}
