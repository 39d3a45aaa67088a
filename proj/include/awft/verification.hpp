// Verification suites: each runs one family of identities at the configured
// parameters and truncations and returns one report per check.
#ifndef AWFT_VERIFICATION_HPP
#define AWFT_VERIFICATION_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "awft/transform.hpp"

namespace awft {

struct RunConfig {
    AWParams<double> params{};
    double eps{1e-10};
    int quad_points{1024};
    int k_min{-60};
    int dual_k_min{-40};
    FaultInjection fault{};

    MeasureSpec<double> measure_spec() const { return {params, quad_points, k_min, eps, fault}; }
    MeasureSpec<double> dual_measure_spec() const { return {dualize(params), quad_points, dual_k_min, eps, {}}; }
    TruncationInfo truncation() const { return {k_min, dual_k_min, quad_points, eps}; }
};

/// Draws parameters from V with a, b, c, d, t spread over several scales.
/// Draws that land within 1e-3 of a degenerate configuration
/// (ad or a~^2, (d~t~)^2 on q^Z) are redrawn.
class VSampler {
public:
    explicit VSampler(std::uint64_t seed) : rng_(seed) {}

    AWParams<double> operator()() {
        for (;;) {
            AWParams<double> p;
            p.q = uniform(0.2, 0.7);
            p.a = uniform(0.3, 2.0);
            const double m = std::min(p.a, 1.0 / p.a);
            const double dlo = 1.05 * std::max(p.q * p.a, p.q / m);
            p.d = uniform(dlo, dlo * 3.0 + 0.5);
            const double bhi = std::min(p.a, 0.99 / p.a);
            const double blo = p.q / p.d;
            if (!(blo < bhi)) {
                continue;
            }
            p.b = uniform(blo, bhi);
            p.c = uniform(blo, bhi);
            p.t = -uniform(0.1, 5.0);
            if (!validate_V(p).member || degenerate(p)) {
                continue;
            }
            return p;
        }
    }

private:
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

    static bool near_lattice(double z, double q) {
        if (!(z > 0)) {
            return false;
        }
        const double e = std::log(z) / std::log(q);
        return std::abs(e - std::round(e)) < 1e-3;
    }

    static bool degenerate(const AWParams<double>& p) {
        const auto d = dualize(p);
        return near_lattice(p.a * p.d, p.q) || near_lattice(d.a * d.a, p.q) ||
               near_lattice(d.d * d.d * d.t * d.t, p.q) || near_lattice(-p.d * p.t, p.q);
    }

    std::mt19937_64 rng_;
};

namespace suites {

using C = std::complex<double>;

inline std::vector<C> circle_points(int n, double offset = 0.5) {
    std::vector<C> out;
    for (int j = 0; j < n; ++j) {
        out.push_back(std::polar(1.0, M_PI * (j + offset) / n));
    }
    return out;
}

inline std::string fmt(C z) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "(%.6g%+.6gi)", z.real(), z.imag());
    return buf;
}

/// L phi_g = mu(g) phi_g for g on the unit circle, x on the circle and on
/// the q-line d t q^k (k from -8 to 1). The residual is relative to the
/// magnitude of the terms making up L phi_g(x).
inline std::vector<VerificationReport> eigen(const RunConfig& cfg, double tol = 1e-9) {
    const auto& p = cfg.params;
    const Kernel<double> kernel(p);
    std::vector<VerificationReport> out;
    struct Site3 {
        Point<double> x, qx, xq;
        std::string label;
    };
    std::vector<Site3> sites;
    for (C x : circle_points(6, 0.37)) {
        sites.push_back({Point<double>::at(x), Point<double>::at(x * p.q), Point<double>::at(x / p.q), "x=" + fmt(x)});
    }
    for (int k = -8; k <= 1; ++k) {
        sites.push_back({Point<double>::minus(k, p), Point<double>::minus(k + 1, p), Point<double>::minus(k - 1, p),
                         "x=dtq^" + std::to_string(k)});
    }
    for (C g : circle_points(10)) {
        const auto gp = Point<double>::at(g);
        const C m = mu<double>(g, p);
        for (const auto& s : sites) {
            const C f0 = kernel.value(gp, s.x);
            const C f1 = kernel.value(gp, s.qx);
            const C f2 = kernel.value(gp, s.xq);
            const C a1 = alpha<double>(s.x.z, p);
            const C a2 = alpha<double>(1.0 / s.x.z, p);
            const C L = a1 * (f1 - f0) + a2 * (f2 - f0);
            const double scale =
                std::abs(a1) * (std::abs(f1) + std::abs(f0)) + std::abs(a2) * (std::abs(f2) + std::abs(f0)) +
                std::abs(m * f0);
            out.push_back(make_report("eigen:g=" + fmt(g) + "," + s.label, "L phi_gamma = mu(gamma) phi_gamma", L, m * f0,
                                      std::abs(L - m * f0) / scale, tol, cfg.truncation()));
        }
    }
    // the same equation with every value from the direct series in wide precision
    const auto pw = p.cast<wide>();
    for (C g : circle_points(3, 0.3)) {
        for (C x : {C(0.6, 0.8), C(1.7, 0.4), C(-0.9, 1.3)}) {
            const auto gw = from_double<wide>(g);
            const auto xw = from_double<wide>(x);
            auto f = [&](const wide_complex& z) { return aw_function<wide>(gw, z, pw).value; };
            const auto L = to_double<wide>(apply_L<wide>(f, xw, pw));
            const auto rhs = to_double<wide>(mu<wide>(gw, pw) * f(xw));
            out.push_back(make_report("eigen-wide:g=" + fmt(g) + ",x=" + fmt(x), "L phi_gamma = mu(gamma) phi_gamma",
                                      L, rhs, relative_residual(L, rhs), tol, cfg.truncation()));
        }
    }
    return out;
}

/// Function duality on a 10 x 10 grid, 8W7 on one side and two 4phi3 on the
/// other; polynomial duality for n, m <= 3; agreement of the two series
/// representations; reduction to the polynomials at gamma = a~ q^n.
inline std::vector<VerificationReport> duality(const RunConfig& cfg) {
    const auto& p = cfg.params;
    const auto dp = dualize(p);
    std::vector<VerificationReport> out;
    const auto gammas = circle_points(10, 0.41);
    std::vector<C> xs = circle_points(5, 0.23);
    for (C x : {C(0.6), C(1.7), C(-2.0), C(2.2, -0.3), C(-0.7, 0.5)}) {
        xs.push_back(x);
    }
    for (C g : gammas) {
        for (C x : xs) {
            const C lhs = aw_function<double>(g, x, p, Representation::very_well_poised).value;
            const C rhs = aw_function<double>(x, g, dp, Representation::two_phi43).value;
            out.push_back(make_report("duality:g=" + fmt(g) + ",x=" + fmt(x),
                                      "phi_gamma(x) equals the dual function phi~_x(gamma)", lhs, rhs,
                                      relative_residual(lhs, rhs), 1e-9, cfg.truncation()));
        }
    }
    for (int n = 0; n <= 3; ++n) {
        for (int m = 0; m <= 3; ++m) {
            const C lhs = aw_polynomial<double>(n, C(p.a * std::pow(p.q, m)), p);
            const C rhs = aw_polynomial<double>(m, C(dp.a * std::pow(p.q, n)), dp);
            out.push_back(make_report("poly-duality:n=" + std::to_string(n) + ",m=" + std::to_string(m),
                                      "p_n(a q^m) equals the dual polynomial p~_m(a~ q^n)", lhs, rhs,
                                      relative_residual(lhs, rhs), 1e-12, cfg.truncation()));
        }
    }
    for (C g : {C(1.3), std::polar(1.0, 1.0), C(0.7, 0.9), C(2.1, -0.4), std::polar(1.0, 2.5)}) {
        for (C x : {C(0.6), std::polar(1.0, 0.8), C(-1.4, 0.3)}) {
            const C lhs = aw_function<double>(g, x, p, Representation::very_well_poised).value;
            const C rhs = aw_function<double>(g, x, p, Representation::two_phi43).value;
            out.push_back(make_report("representations:g=" + fmt(g) + ",x=" + fmt(x),
                                      "8W7 and two-4phi3 representations agree", lhs, rhs,
                                      relative_residual(lhs, rhs), 1e-9, cfg.truncation()));
        }
    }
    const auto qb = p.base();
    const C norm = qpoch_inf<double>({C(p.b * p.c), C(p.q * p.a / p.d), C(p.q / (p.a * p.d))}, qb, 1e-16).value;
    for (int n = 0; n <= 2; ++n) {
        const C g(dp.a * std::pow(p.q, n));
        for (C x : {C(0.7), std::polar(1.0, 1.2), C(-2.0)}) {
            const C lhs = aw_function<double>(g, x, p, Representation::very_well_poised).value;
            const C rhs = aw_polynomial<double>(n, x, p) / norm;
            out.push_back(make_report("redpol:n=" + std::to_string(n) + ",x=" + fmt(x),
                                      "phi at gamma_n reduces to p_n / (bc, qa/d, q/ad)_inf", lhs, rhs,
                                      relative_residual(lhs, rhs), 1e-10, cfg.truncation()));
        }
    }
    return out;
}

/// c-function expansion on the q-line against the direct series evaluated
/// in wide precision: two-term form for generic gamma, one-term form for
/// gamma in the dual discrete support.
inline std::vector<VerificationReport> cexpansion(const RunConfig& cfg, double tol = 1e-9) {
    const auto& p = cfg.params;
    const auto dp = dualize(p);
    const auto pw = p.cast<wide>();
    const auto dpw = dualize(pw);
    const Kernel<double> kernel(p);
    std::vector<VerificationReport> out;
    auto direct = [&](const wide_complex& g, int k) {
        const wide_complex x = cplx<wide>(pw.d * pw.t * ipow(pw.q, k));
        return to_double<wide>(aw_function<wide>(g, x, pw).value);
    };
    for (C g : {C(1.5), std::polar(2.2, 0.3), std::polar(1.0, M_PI / 3), C(0.7, 0.9), C(1.9)}) {
        for (int k : {-8, -9, -10}) {
            const C rhs = c_function<double>(g, dp).value * phi_asym<double>(g, k, p).value +
                          c_function<double>(1.0 / g, dp).value * phi_asym<double>(1.0 / g, k, p).value;
            const C lhs = direct(from_double<wide>(g), k);
            out.push_back(make_report("c-expansion:g=" + fmt(g) + ",k=" + std::to_string(k),
                                      "phi_gamma = c~(gamma) Phi_gamma + c~(1/gamma) Phi_1/gamma on the q-line", lhs,
                                      rhs, relative_residual(lhs, rhs), tol, cfg.truncation()));
        }
    }
    struct Lat {
        Point<double> g;
        wide_complex gw;
        std::string label;
    };
    const std::vector<Lat> lattice = {
        {Point<double>::plus(0, dp), cplx<wide>(dpw.a), "a~"},
        {Point<double>::minus(0, dp), cplx<wide>(dpw.d * dpw.t), "d~t~"},
        {Point<double>::minus(-1, dp), cplx<wide>(dpw.d * dpw.t / dpw.q), "d~t~/q"},
    };
    for (const auto& l : lattice) {
        for (int k : {-8, -9, -10}) {
            const C inv = 1.0 / l.g.z;
            const C rhs = c_function<double>(inv, dp).value * phi_asym<double>(inv, k, p).value;
            const C lhs = direct(l.gw, k);
            out.push_back(make_report("c-expansion-one-term:g=" + l.label + ",k=" + std::to_string(k),
                                      "phi_gamma = c~(1/gamma) Phi_1/gamma for gamma in the dual support", lhs, rhs,
                                      relative_residual(lhs, rhs), tol, cfg.truncation()));
        }
    }
    return out;
}

inline std::vector<std::pair<Point<double>, Point<double>>> wronskian_pairs(const AWParams<double>& p) {
    const auto dp = dualize(p);
    using P = Point<double>;
    return {{P::at(C(1.5)), P::at(C(2.2))},
            {P::at(std::polar(1.0, M_PI / 3)), P::at(std::polar(1.0, 2 * M_PI / 3))},
            {P::plus(0, dp), P::minus(0, dp)},
            {P::at(std::polar(1.3, 0.4)), P::at(C(0.8))},
            {P::at(std::polar(1.0, M_PI / 5)), P::minus(-1, dp)}};
}

inline std::vector<VerificationReport> wronskian(const RunConfig& cfg, double tol = 1e-8) {
    const Measure<double> m(cfg.measure_spec());
    std::vector<VerificationReport> out;
    for (const auto& [g1, g2] : wronskian_pairs(cfg.params)) {
        for (int k : {-6, -8}) {
            auto r = verify_wronskian_identity(g1, g2, k, m, tol);
            r.identity += ":g=" + fmt(g1.z) + ",g'=" + fmt(g2.z) + ",k=" + std::to_string(k);
            out.push_back(r);
        }
    }
    return out;
}

/// Representatives of the dual discrete support nearest the unit circle.
inline std::vector<Point<double>> dual_support_points(const AWParams<double>& p, int count = 3) {
    const auto dp = dualize(p);
    std::vector<Point<double>> out;
    for (int k = 0; in_S_plus(k, dp) && static_cast<int>(out.size()) < count; ++k) {
        out.push_back(Point<double>::plus(k, dp));
    }
    for (int k = minus_head(dp); static_cast<int>(out.size()) < count; --k) {
        out.push_back(Point<double>::minus(k, dp));
    }
    return out;
}

inline std::vector<VerificationReport> ortho(const RunConfig& cfg, double tol = 1e-6) {
    const Measure<double> m(cfg.measure_spec());
    const auto pts = dual_support_points(cfg.params, 4);
    std::vector<VerificationReport> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            auto r = verify_orthogonality(pts[i], pts[j], m, cfg.eps, tol);
            r.identity = "orthogonality:g=" + fmt(pts[i].z) + ",g'=" + fmt(pts[j].z);
            out.push_back(r);
        }
    }
    return out;
}

inline std::vector<VerificationReport> norm(const RunConfig& cfg, double tol = 1e-6) {
    const Measure<double> m(cfg.measure_spec());
    const Measure<double> dm(cfg.dual_measure_spec());
    std::vector<VerificationReport> out;
    for (const auto& g : dual_support_points(cfg.params, 3)) {
        auto r = verify_norm(g, m, dm, cfg.eps, tol);
        r.identity = "norm:g=" + fmt(g.z);
        out.push_back(r);
    }
    return out;
}

/// Atoms of S nearest the unit circle.
inline std::vector<AtomKey> support_atoms(const AWParams<double>& p, int count) {
    std::vector<AtomKey> out;
    for (int k = 0; in_S_plus(k, p) && static_cast<int>(out.size()) < count; ++k) {
        out.push_back({Sector::plus, k});
    }
    for (int k = minus_head(p); static_cast<int>(out.size()) < count; --k) {
        out.push_back({Sector::minus, k});
    }
    return out;
}

inline TestFunction<double> bump(double lo, double hi) {
    TestFunction<double> f;
    f.circle = [lo, hi](double th) {
        if (th <= lo || th >= hi) {
            return C(0);
        }
        const double c = std::cos(M_PI * (th - 0.5 * (lo + hi)) / (hi - lo));
        return C(c * c);
    };
    return f;
}

/// Discrete Plancherel: isometry and orthogonality on atoms, inversion on
/// three atoms, and the shrinking of the residual as the dual truncation
/// tightens.
inline std::vector<VerificationReport> plancherel_discrete(const RunConfig& cfg) {
    const Transform<double> tf(cfg.measure_spec(), cfg.dual_k_min);
    const auto atoms = support_atoms(cfg.params, 4);
    std::vector<VerificationReport> out;
    auto delta = [](const AtomKey& k) { return TestFunction<double>::delta(k); };
    auto r = verify_plancherel_discrete(delta(atoms[0]), delta(atoms[0]), tf);
    r.identity += ":isometry:k=" + std::to_string(atoms[0].k);
    out.push_back(r);
    r = verify_plancherel_discrete(delta(atoms[0]), delta(atoms[1]), tf, 1e-5, true);
    r.identity += ":orthogonal:k=" + std::to_string(atoms[0].k) + "," + std::to_string(atoms[1].k);
    out.push_back(r);
    TestFunction<double> mix;
    const double coef[] = {0.7, -1.3, 0.4, 2.1};
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        mix.discrete[atoms[i]] = coef[i];
    }
    r = verify_plancherel_discrete(mix, mix, tf);
    r.identity += ":isometry:combination";
    out.push_back(r);
    for (auto& inv : verify_inversion<double>({atoms[0], atoms[1], atoms[2]}, tf)) {
        out.push_back(inv);
    }

    // refinement: coarse dual truncation against one whose geometric tail is 10x smaller
    const AtomKey a0 = atoms[0];
    const auto& p = cfg.params;
    const double x0 = std::abs(p.d * p.t * std::pow(p.q, a0.k));
    const double rate = 1.0 / (x0 * x0);
    const int step = static_cast<int>(std::ceil(std::log(10.0) / std::log(1.0 / rate)));
    const int head = minus_head(dualize(p));
    const int coarse_k = head - 6;
    RunConfig coarse = cfg;
    coarse.dual_k_min = coarse_k;
    RunConfig fine = cfg;
    fine.dual_k_min = coarse_k - step;
    fine.eps = cfg.eps / 10;
    auto run = [&](const RunConfig& c) {
        const Transform<double> t(c.measure_spec(), c.dual_k_min);
        const auto Ff = t.forward(delta(a0));
        const C lhs = t.spectral_inner(Ff, Ff).value;
        const C rhs = t.measure().pair_mass(a0);
        return relative_residual(lhs, rhs);
    };
    const double rc = run(coarse);
    const double rf = run(fine);
    auto ref = make_report("plancherel-discrete:refinement", "residual shrinks under tightened truncation", rc, rf,
                           rc > 0 ? rf / rc : 0.0, 0.1, {cfg.k_min, fine.dual_k_min, cfg.quad_points, fine.eps});
    out.push_back(ref);
    return out;
}

inline std::vector<VerificationReport> plancherel_continuous(const RunConfig& cfg) {
    const Transform<double> tf(cfg.measure_spec(), cfg.dual_k_min);
    std::vector<VerificationReport> out;
    const auto f = bump(M_PI / 4, 3 * M_PI / 4);
    auto r = verify_plancherel_continuous(f, f, tf);
    r.identity += ":isometry";
    out.push_back(r);
    r = verify_plancherel_continuous(bump(M_PI / 8, 3 * M_PI / 8), bump(5 * M_PI / 8, 7 * M_PI / 8), tf, 1e-3, true);
    r.identity += ":disjoint";
    out.push_back(r);
    return out;
}

inline std::vector<VerificationReport> mixed(const RunConfig& cfg) {
    const Transform<double> tf(cfg.measure_spec(), cfg.dual_k_min);
    const auto atoms = support_atoms(cfg.params, 1);
    auto r = verify_mixed(bump(M_PI / 4, 3 * M_PI / 4), TestFunction<double>::delta(atoms[0]), tf);
    r.identity += ":k=" + std::to_string(atoms[0].k);
    return {r};
}

/// Trapezoid value of (1/2 pi) * integral over the circle of f(e^{i theta}) d theta
/// for f symmetric under x -> 1/x.
template <class F>
C circle_mean(F&& f, int n) {
    CompensatedComplexSum<double> s;
    for (int j = 1; j < n; ++j) {
        s.add(f(std::polar(1.0, M_PI * j / n)));
    }
    // end points are included with weight 1/2 each
    s.add(0.5 * f(C(1.0)));
    s.add(0.5 * f(C(-1.0)));
    return s.value() / double(n);
}

/// Closed-form constants and measure identities: theta quasi-periodicity,
/// W against Delta, the Askey-Wilson integral, polynomial orthogonality with
/// norms from the dual residues, K~ M / c~_0 = 1 and its mirror, and the
/// asymptotic law of the S_- weights.
inline std::vector<VerificationReport> constants(const RunConfig& cfg, std::uint64_t seed = 20240611) {
    const auto& p = cfg.params;
    const auto dp = dualize(p);
    const auto tr = cfg.truncation();
    std::vector<VerificationReport> out;
    const auto qb = p.base();

    for (C x : {C(0.7, 0.2), C(-1.3, 0.5), C(2.9)}) {
        for (int k = -5; k <= 5; ++k) {
            const double res = theta_shift_check<double>(x, k, qb);
            out.push_back(make_report("theta-shift:x=" + fmt(x) + ",k=" + std::to_string(k),
                                      "theta(q^k x) = (-x)^{-k} q^{-k(k-1)/2} theta(x)", res, 0.0, res, 1e-12, tr));
        }
    }

    for (C x : {std::polar(1.0, M_PI / 7), std::polar(1.0, 2.0), C(1.3, 0.4), C(0.5, -0.2)}) {
        const C W = weight_W<double>(x, p).value;
        const C rhs = theta_ratio<double>(x, p).value * weight_Delta<double>(x, p).value;
        out.push_back(make_report("weight-relation:x=" + fmt(x), "W equals Delta times a quasi-constant theta ratio", W,
                                  rhs, relative_residual(W, rhs), 1e-10, tr));
    }

    const AWParams<double> aw{p.q, 0.5, 0.5, 0.5, 0.5, -1.0};
    const int n_aw = std::max(cfg.quad_points, 256);
    auto delta = [&](C x) { return weight_Delta<double>(x, aw).value; };
    const C C0q = circle_mean(delta, n_aw);
    const C C0p = const_C0(aw).value;
    out.push_back(make_report("askey-wilson-integral", "circle integral of Delta equals the product formula", C0q, C0p,
                              relative_residual(C0q, C0p), 1e-10, tr));

    for (const AWParams<double>& pp : {aw, AWParams<double>{p.q, 0.6, 0.3, 0.45, 0.75, -1.0}}) {
        const auto dd = dualize(pp);
        const C c0 = const_C0(pp).value;
        const C r0 = delta_residue<double>(0, dd).value;
        for (int n = 0; n <= 3; ++n) {
            for (int m = n; m <= 3; ++m) {
                auto integrand = [&](C x) {
                    return aw_polynomial<double>(n, x, pp) * aw_polynomial<double>(m, x, pp) *
                           weight_Delta<double>(x, pp).value;
                };
                const C lhs = circle_mean(integrand, n_aw) / c0;
                const C rhs = n == m ? r0 / delta_residue<double>(n, dd).value : C(0);
                const double res = n == m ? relative_residual(lhs, rhs) : std::abs(lhs);
                out.push_back(make_report("polynomial-orthogonality:a=" + std::to_string(pp.a) + ",n=" +
                                              std::to_string(n) + ",m=" + std::to_string(m),
                                          "Askey-Wilson polynomial orthogonality with dual residue norms", lhs, rhs,
                                          res, 1e-9, tr));
            }
        }
    }

    const auto mc = measure_constants(p, default_eps<double>(), cfg.fault);
    const auto dc = measure_constants(dp);
    out.push_back(make_report("constant-identity", "K~ M / c~_0 = 1", dc.K * mc.M / dc.c0, 1.0,
                              std::abs(dc.K * mc.M / dc.c0 - 1.0), 1e-10, tr));
    out.push_back(make_report("constant-identity-mirror", "K M~ / c_0 = 1", mc.K * dc.M / mc.c0, 1.0,
                              std::abs(mc.K * dc.M / mc.c0 - 1.0), 1e-10, tr));
    VSampler sample(seed);
    for (int i = 0; i < 20; ++i) {
        const auto v = sample();
        const auto vd = dualize(v);
        const double r = const_K(vd).value.real() * const_M(v).value.real() / const_c0(vd).value.real();
        out.push_back(make_report("constant-identity:random " + std::to_string(i) + " " + v.describe(),
                                  "K~ M / c~_0 = 1", r, 1.0, std::abs(r - 1.0), 1e-10, tr));
    }

    const Measure<double> m(MeasureSpec<double>{p, 64, minus_head(p), cfg.eps, cfg.fault});
    for (int k : {20, 25}) {
        const int kk = -k;
        const double mass = m.pair_mass({Sector::minus, kk});
        const double ratio = mass * std::pow(dp.a, 2 * k) / mc.M;
        out.push_back(make_report("asymptotic-weight:k=" + std::to_string(k),
                                  "2 nu({dtq^-k}) a~^{2k} / M tends to 1", ratio, 1.0, std::abs(ratio - 1.0),
                                  1e-5, tr));
    }
    return out;
}

using SuiteFn = std::function<std::vector<VerificationReport>(const RunConfig&)>;

inline const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> r = {
        {"eigen", [](const RunConfig& c) { return eigen(c); }},
        {"duality", [](const RunConfig& c) { return duality(c); }},
        {"cexpansion", [](const RunConfig& c) { return cexpansion(c); }},
        {"wronskian", [](const RunConfig& c) { return wronskian(c); }},
        {"ortho", [](const RunConfig& c) { return ortho(c); }},
        {"norm", [](const RunConfig& c) { return norm(c); }},
        {"plancherel-d", [](const RunConfig& c) { return plancherel_discrete(c); }},
        {"plancherel-c", [](const RunConfig& c) { return plancherel_continuous(c); }},
        {"mixed", [](const RunConfig& c) { return mixed(c); }},
        {"constants", [](const RunConfig& c) { return constants(c); }},
    };
    return r;
}

}  // namespace suites

/// Runs one suite by name, or all of them for "all". Unknown names throw.
inline std::vector<VerificationReport> run_suite(const std::string& name, const RunConfig& cfg) {
    std::vector<VerificationReport> out;
    bool found = false;
    for (const auto& [n, fn] : suites::registry()) {
        if (name == "all" || name == n) {
            found = true;
            auto r = fn(cfg);
            out.insert(out.end(), r.begin(), r.end());
        }
    }
    if (!found) {
        throw InvalidParameters("unknown suite: " + name);
    }
    return out;
}

inline bool all_pass(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports) {
        if (!r.pass) {
            return false;
        }
    }
    return true;
}

}  // namespace awft

#endif  // AWFT_VERIFICATION_HPP
