#include <gtest/gtest.h>

#include "awft/transform.hpp"
#include "awft/verification.hpp"

using namespace awft;
using C = std::complex<double>;

namespace {

const AWParams<double> P1 = AWParams<double>::standard();

MeasureSpec<double> small_spec() { return {P1, 64, -20, 1e-10, {}}; }

}  // namespace

TEST(Report, PassLogic) {
    EXPECT_TRUE(make_report("x", "y", 1.0, 1.0, 0.0, 1e-9, {}).pass);
    EXPECT_FALSE(make_report("x", "y", 1.0, 2.0, 0.5, 1e-9, {}).pass);
    EXPECT_FALSE(make_report("x", "y", 1.0, 1.0, std::nan(""), 1e-9, {}).pass);
    EXPECT_DOUBLE_EQ(relative_residual(2.0, 1.0), 0.5);
    EXPECT_EQ(relative_residual(0.0, 0.0), 0.0);
}

TEST(Forward, DeltaGivesMassTimesKernel) {
    const Transform<double> tf(small_spec(), -10);
    const AtomKey key{Sector::minus, 0};
    const auto gamma = Point<double>::at(C(0.6, 0.8));
    const C v = tf.forward_at(TestFunction<double>::delta(key, C(2.0)), gamma);
    const C expect = 2.0 * tf.measure().pair_mass(key) * tf.kernel().value(gamma, Point<double>::minus(0, P1));
    EXPECT_LT(std::abs(v - expect), 1e-14 * std::abs(expect));
}

TEST(Forward, IsLinear) {
    const Transform<double> tf(small_spec(), -10);
    auto f = suites::bump(0.5, 1.5);
    f.discrete[{Sector::minus, 1}] = C(0.3);
    auto g = TestFunction<double>::delta({Sector::minus, -2}, C(-1.1, 0.4));
    g.circle = [](double th) { return C(std::sin(th)); };
    TestFunction<double> h;
    const C alpha(0.7, -0.2), beta(-1.3, 0.0);
    h.circle = [&](double th) { return alpha * f.at_circle(th) + beta * g.at_circle(th); };
    h.discrete[{Sector::minus, 1}] = alpha * C(0.3);
    h.discrete[{Sector::minus, -2}] = beta * C(-1.1, 0.4);
    const auto Ff = tf.forward(f);
    const auto Fg = tf.forward(g);
    const auto Fh = tf.forward(h);
    ASSERT_EQ(Fh.values.size(), tf.dual_measure().nodes().size());
    for (std::size_t i = 0; i < Fh.values.size(); i += 37) {
        const C expect = alpha * Ff.values[i] + beta * Fg.values[i];
        EXPECT_LT(std::abs(Fh.values[i] - expect), 1e-12 * (1 + std::abs(expect))) << i;
    }
}

TEST(Forward, FreeFunctionAgreesWithTransform) {
    const Transform<double> tf(small_spec(), -10);
    const auto f = suites::bump(0.7, 2.0);
    const auto gamma = Point<double>::plus(0, dualize(P1));
    EXPECT_LT(std::abs(forward(f, gamma, small_spec()) - tf.forward_at(f, gamma)), 1e-14);
}

TEST(Forward, AtomOutsideTruncationThrows) {
    const Transform<double> tf(small_spec(), -10);
    EXPECT_THROW(tf.forward(TestFunction<double>::delta({Sector::minus, -30})), NotInSupport);
}

TEST(Inversion, DualTransformOfDeltaRecoversIt) {
    MeasureSpec<double> spec{P1, 0, -20, 1e-10, {}};
    const Transform<double> tf(spec, -700);
    const auto reports = verify_inversion<double>({{Sector::minus, 1}, {Sector::minus, 0}}, tf);
    for (const auto& r : reports) {
        EXPECT_TRUE(r.pass) << r.identity << " " << r.residual;
    }
}

TEST(Wronskian, Antisymmetric) {
    const Measure<double> m(small_spec());
    const Kernel<double> kernel(P1);
    const auto g1 = Point<double>::at(C(1.5));
    const auto g2 = Point<double>::at(C(0.6, 0.8));
    auto f1 = [&](int j) { return kernel.value(g1, Point<double>::minus(j, P1)); };
    auto f2 = [&](int j) { return kernel.value(g2, Point<double>::minus(j, P1)); };
    for (int k = -6; k <= 0; ++k) {
        const C w12 = wronskian<double>(f1, f2, k, m);
        const C w21 = wronskian<double>(f2, f1, k, m);
        EXPECT_LT(std::abs(w12 + w21), 1e-13 * std::abs(w12)) << k;
        EXPECT_EQ(wronskian<double>(f1, f1, k, m), C(0));
    }
    EXPECT_THROW(wronskian<double>(f1, f2, 2, m), NotInSupport);
}

TEST(Wronskian, IdentityAndDegeneratePair) {
    const Measure<double> m(MeasureSpec<double>{P1, 512, -60, 1e-10, {}});
    const auto g1 = Point<double>::at(C(1.5));
    const auto g2 = Point<double>::at(C(2.2));
    const auto r = verify_wronskian_identity(g1, g2, -6, m);
    EXPECT_TRUE(r.pass) << r.residual;
    EXPECT_THROW(verify_wronskian_identity(g1, Point<double>::at(C(1.0 / 1.5)), -6, m), DegenerateSpectralPair);
}

TEST(Norm, RejectsGenericPoint) {
    const Measure<double> m(small_spec());
    const Measure<double> d(MeasureSpec<double>{dualize(P1), 64, -20, 1e-10, {}});
    EXPECT_THROW(verify_norm(Point<double>::at(C(0.6, 0.8)), m, d, 1e-12), NotInSupport);
}

TEST(Norm, PlusAtomOfDualSupport) {
    const Measure<double> m(MeasureSpec<double>{P1, 64, -20, 1e-10, {}});
    const auto dp = dualize(P1);
    const Measure<double> d(MeasureSpec<double>{dp, 64, -20, 1e-10, {}});
    const auto r = verify_norm(Point<double>::plus(0, dp), m, d, 1e-12);
    EXPECT_TRUE(r.pass) << r.residual;
}
