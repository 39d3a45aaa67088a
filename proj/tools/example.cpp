// Library walkthrough: kernel values, the measure and a Plancherel check.
#include <cstdio>

#include "awft/awft.hpp"

using namespace awft;
using C = std::complex<double>;

int main() {
    const auto p = AWParams<double>::standard();
    const auto dp = dualize(p);
    std::printf("params %s\ndual   %s\n", p.describe().c_str(), dp.describe().c_str());

    const Kernel<double> kernel(p);
    const auto gamma = Point<double>::at(std::polar(1.0, 0.7));
    for (int k : {1, -2, -8}) {
        const auto v = kernel(gamma, Point<double>::minus(k, p));
        std::printf("phi_gamma(dtq^%d) = %.15g %+.15gi  [%s, err %.1e]\n", k, v.value.real(), v.value.imag(),
                    to_string(v.representation), v.err_bound);
    }

    const MeasureSpec<double> spec{p, 0, -60, 1e-10, {}};
    const Measure<double> m(spec);
    const auto c = m.constants();
    std::printf("K = %.15g  c0 = %.15g  M = %.15g  quad_points = %d\n", c.K, c.c0, c.M, m.quad_points());
    for (const auto& a : m.support().minus) {
        if (a.key.k < -3) {
            break;
        }
        std::printf("  atom k=%d x=%g 2nu=%.15g\n", a.key.k, a.x, a.mass);
    }

    const Transform<double> tf(spec, -40);
    TestFunction<double> f = TestFunction<double>::delta({Sector::minus, 1}, C(1.0));
    f.discrete[{Sector::minus, 0}] = C(-0.5);
    const auto r = verify_plancherel_discrete(f, f, tf);
    std::printf("||Ff||^2 = %.15g  ||f||^2 = %.15g  residual %.2e\n", r.lhs.real(), r.rhs.real(), r.residual);
    return r.pass ? 0 : 1;
}
