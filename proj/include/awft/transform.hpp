// The Askey-Wilson function transform F, its dual, the Wronskian on the
// q-line and the verification operations built on them.
#ifndef AWFT_TRANSFORM_HPP
#define AWFT_TRANSFORM_HPP

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "awft/measure.hpp"

namespace awft {

struct TruncationInfo {
    int k_min{0};
    int dual_k_min{0};
    int quad_points{0};
    double eps{0};
};

/// Outcome of one identity check.
struct VerificationReport {
    std::string identity;
    std::string paper_ref;
    std::complex<double> lhs{0};
    std::complex<double> rhs{0};
    double residual{0};
    double tolerance{0};
    bool pass{false};
    TruncationInfo truncation{};
};

inline VerificationReport make_report(std::string identity, std::string ref, std::complex<double> lhs,
                                      std::complex<double> rhs, double residual, double tolerance,
                                      TruncationInfo trunc) {
    VerificationReport r{std::move(identity), std::move(ref), lhs, rhs, residual, tolerance, false, trunc};
    r.pass = std::isfinite(residual) && residual <= tolerance;
    return r;
}

/// |lhs - rhs| / max(|lhs|, |rhs|), 0 when both vanish.
inline double relative_residual(std::complex<double> lhs, std::complex<double> rhs) {
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    return scale > 0 ? std::abs(lhs - rhs) / scale : 0.0;
}

/// A function of the spectral variable sampled on the nodes of the dual measure.
template <Real T>
struct SpectralFunction {
    std::vector<complex_t<T>> values;
};

/// F and its dual for fixed parameters. The dual measure uses the dual
/// parameters, the same circle rule and its own S_- truncation index.
template <Real T>
class Transform {
public:
    Transform(const MeasureSpec<T>& spec, int dual_k_min)
        : measure_(spec), dual_measure_(dual_spec(spec, dual_k_min)), kernel_(spec.params) {}

    const Measure<T>& measure() const { return measure_; }
    const Measure<T>& dual_measure() const { return dual_measure_; }
    const Kernel<T>& kernel() const { return kernel_; }

    TruncationInfo truncation() const {
        return {measure_.k_min(), dual_measure_.k_min(), measure_.quad_points(), to_double(measure_.spec().eps)};
    }

    /// Values of f on the nodes of nu, with the nodes where f vanishes dropped.
    std::vector<std::pair<std::size_t, complex_t<T>>> sample(const TestFunction<T>& f) const {
        std::vector<std::pair<std::size_t, complex_t<T>>> out;
        const auto& nodes = measure_.nodes();
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            const auto& n = nodes[i];
            const complex_t<T> v =
                n.sector == Sector::circle ? f.at_circle(n.theta) : f.at_atom({n.sector, n.index}, n.point.z.real());
            if (v != complex_t<T>(0)) {
                out.emplace_back(i, v * n.mass);
            }
        }
        for (const auto& [key, v] : f.discrete) {
            (void)v;
            if (!measure_.has_atom(key)) {
                throw NotInSupport("forward: test function has an atom outside the truncated support");
            }
        }
        return out;
    }

    /// (F f)(gamma) = integral of f(x) phi_gamma(x) d nu(x).
    complex_t<T> forward_at(const TestFunction<T>& f, const Point<T>& gamma) const {
        return forward_sampled(sample(f), gamma);
    }

    /// F f on every node of the dual measure.
    SpectralFunction<T> forward(const TestFunction<T>& f) const {
        const auto s = sample(f);
        const auto& dn = dual_measure_.nodes();
        SpectralFunction<T> out;
        out.values.resize(dn.size());
        Measure<T>::parallel_for(dn.size(), [&](std::size_t i) { out.values[i] = forward_sampled(s, dn[i].point); });
        return out;
    }

    /// (F~ g)(x) = integral of g(gamma) phi_gamma(x) d nu~(gamma), g given on the dual nodes.
    complex_t<T> dual_forward_at(const SpectralFunction<T>& g, const Point<T>& x) const {
        const auto& dn = dual_measure_.nodes();
        if (g.values.size() != dn.size()) {
            throw InvalidParameters("dual_forward: spectral function does not match the dual nodes");
        }
        CompensatedComplexSum<T> sum;
        for (std::size_t i = 0; i < dn.size(); ++i) {
            if (g.values[i] != complex_t<T>(0)) {
                sum.add(g.values[i] * dn[i].mass * kernel_.value(dn[i].point, x));
            }
        }
        return sum.value();
    }

    /// <F f, F g> over the dual measure, with the tail estimate of the dual S_- sum.
    Integral<T> spectral_inner(const SpectralFunction<T>& u, const SpectralFunction<T>& v) const {
        std::vector<complex_t<T>> prod(u.values.size());
        for (std::size_t i = 0; i < prod.size(); ++i) {
            prod[i] = u.values[i] * cconj<T>(v.values[i]);
        }
        return dual_measure_.integrate_values(prod, false);
    }

    /// Geometric estimate of the dual S_- sum beyond the truncation, from the last atom terms.
    T dual_tail(const SpectralFunction<T>& u, const SpectralFunction<T>& v) const {
        const auto& dn = dual_measure_.nodes();
        std::vector<T> mags;
        for (std::size_t i = 0; i < dn.size(); ++i) {
            if (dn[i].sector == Sector::minus) {
                mags.push_back(cabs<T>(u.values[i] * v.values[i]) * dn[i].mass);
            }
        }
        return block_tail_estimate(mags);
    }

private:
    static MeasureSpec<T> dual_spec(const MeasureSpec<T>& spec, int dual_k_min) {
        MeasureSpec<T> d = spec;
        d.params = dualize(spec.params);
        d.k_min = dual_k_min;
        d.fault = {};
        return d;
    }

    complex_t<T> forward_sampled(const std::vector<std::pair<std::size_t, complex_t<T>>>& s,
                                 const Point<T>& gamma) const {
        const auto& nodes = measure_.nodes();
        CompensatedComplexSum<T> sum;
        for (const auto& [i, w] : s) {
            sum.add(w * kernel_.value(gamma, nodes[i].point));
        }
        return sum.value();
    }

    Measure<T> measure_;
    Measure<T> dual_measure_;
    Kernel<T> kernel_;
};

/// (F f)(gamma) for a single spectral point.
template <Real T>
complex_t<T> forward(const TestFunction<T>& f, const Point<T>& gamma, const MeasureSpec<T>& spec) {
    const Measure<T> m(spec);
    const Kernel<T> kernel(spec.params);
    CompensatedComplexSum<T> sum;
    for (const auto& n : m.nodes()) {
        const complex_t<T> v =
            n.sector == Sector::circle ? f.at_circle(n.theta) : f.at_atom({n.sector, n.index}, n.point.z.real());
        if (v != complex_t<T>(0)) {
            sum.add(v * n.mass * kernel.value(gamma, n.point));
        }
    }
    return sum.value();
}

/// (F~ g)(x): the same transform for the dual parameters, g a function of
/// the spectral variable and x a point for the original parameters.
template <Real T>
complex_t<T> dual_forward(const TestFunction<T>& g, const Point<T>& x, const MeasureSpec<T>& dual_spec) {
    return forward<T>(g, x, dual_spec);
}

/// [f, g](x) = 2 nu({x}) alpha(x) (f(x) g(qx) - f(qx) g(x)) at x = d t q^k.
/// f and g take a lattice index.
template <Real T, class F, class G>
complex_t<T> wronskian(F&& f, G&& g, int k, const Measure<T>& m) {
    const auto& p = m.params();
    if (!in_S_minus(k, p)) {
        throw NotInSupport("wronskian: d t q^k is not in S_-");
    }
    const complex_t<T> x = cplx<T>(p.d * p.t * ipow(p.q, k));
    return m.pair_mass({Sector::minus, k}) * alpha<T>(x, p) * (f(k) * g(k + 1) - f(k + 1) * g(k));
}

template <Real T>
std::complex<double> to_report(const complex_t<T>& z) {
    return to_double<T>(z);
}

template <Real T>
std::vector<complex_t<T>> values_on(const Measure<T>& m, const TestFunction<T>& f) {
    const auto& nodes = m.nodes();
    std::vector<complex_t<T>> v(nodes.size());
    Measure<T>::parallel_for(nodes.size(), [&](std::size_t i) {
        const auto& n = nodes[i];
        v[i] = n.sector == Sector::circle ? f.at_circle(n.theta) : f.at_atom({n.sector, n.index}, n.point.z.real());
    });
    return v;
}

/// Integral of chi_k phi_g phi_g' d nu against the Wronskian at d t q^{k-1}
/// divided by mu(g) - mu(g').
template <Real T>
VerificationReport verify_wronskian_identity(const Point<T>& g1, const Point<T>& g2, int k, const Measure<T>& m,
                                             double tol = 1e-8) {
    const auto& p = m.params();
    const complex_t<T> dmu = mu<T>(g1.z, p) - mu<T>(g2.z, p);
    if (cabs<T>(dmu) <= T(1e-8)) {
        throw DegenerateSpectralPair("verify_wronskian_identity: mu(gamma) = mu(gamma')");
    }
    if (k - 1 < m.k_min() || !in_S_minus(k - 1, p)) {
        throw TruncationNotConverged("verify_wronskian_identity: d t q^{k-1} must lie in the truncated S_-");
    }
    const Kernel<T> kernel(p);
    TestFunction<T> f;
    f.circle = [&](const T& th) {
        const auto x = Point<T>::at(unit_circle(th));
        return kernel.value(g1, x) * kernel.value(g2, x);
    };
    f.lattice = [&](const AtomKey& key, const T&) {
        if (key.sector == Sector::minus && key.k < k) {
            return complex_t<T>(0);
        }
        const auto x = key.sector == Sector::plus ? Point<T>::plus(key.k, p) : Point<T>::minus(key.k, p);
        return kernel.value(g1, x) * kernel.value(g2, x);
    };
    const complex_t<T> lhs = m.integrate_values(values_on(m, f), false).value;
    auto phi1 = [&](int j) { return kernel.value(g1, Point<T>::minus(j, p)); };
    auto phi2 = [&](int j) { return kernel.value(g2, Point<T>::minus(j, p)); };
    const complex_t<T> rhs = wronskian<T>(phi1, phi2, k - 1, m) / dmu;
    const auto l = to_report<T>(lhs);
    const auto r = to_report<T>(rhs);
    TruncationInfo tr{k, 0, m.quad_points(), to_double(m.spec().eps)};
    return make_report("wronskian-integral", "truncated integral of phi_g phi_g' equals Wronskian over mu difference",
                       l, r, relative_residual(l, r), tol, tr);
}

/// phi_gamma restricted to supp(nu), as a test function with unbounded support.
template <Real T>
TestFunction<T> kernel_function(const Kernel<T>& kernel, const Point<T>& gamma) {
    const AWParams<T> p = kernel.params();
    TestFunction<T> f;
    f.circle = [kernel, gamma](const T& th) { return kernel.value(gamma, Point<T>::at(unit_circle(th))); };
    f.lattice = [kernel, gamma, p](const AtomKey& key, const T&) {
        const auto x = key.sector == Sector::plus ? Point<T>::plus(key.k, p) : Point<T>::minus(key.k, p);
        return kernel.value(gamma, x);
    };
    return f;
}

template <Real T>
TestFunction<T> product_function(const TestFunction<T>& f, const TestFunction<T>& g) {
    TestFunction<T> h;
    h.circle = [f, g](const T& th) { return f.at_circle(th) * g.at_circle(th); };
    h.lattice = [f, g](const AtomKey& key, const T& x) { return f.at_atom(key, x) * g.at_atom(key, x); };
    return h;
}

/// Norm of phi_gamma for gamma in the dual discrete support against 1 / (2 nu~({gamma})).
template <Real T>
VerificationReport verify_norm(const Point<T>& gamma, const Measure<T>& m, const Measure<T>& dual, T rel_tol,
                               double tol = 1e-6) {
    if (gamma.site == Site::generic) {
        throw NotInSupport("verify_norm: gamma must be a point of the dual discrete support");
    }
    const Kernel<T> kernel(m.params());
    const auto phi = kernel_function(kernel, gamma);
    const auto I = m.integrate_adaptive(product_function(phi, phi), rel_tol);
    const Sector sec = gamma.site == Site::plus ? Sector::plus : Sector::minus;
    const T rhs = T(1) / dual.pair_mass({sec, gamma.k});
    const auto l = to_report<T>(I.value);
    const auto r = to_report<T>(cplx<T>(rhs));
    TruncationInfo tr{I.k_min, 0, m.quad_points(), to_double(rel_tol)};
    return make_report("norm:" + std::string(gamma.site == Site::plus ? "plus" : "minus") + ":" +
                           std::to_string(gamma.k),
                       "squared norm of phi_gamma equals 1/(2 nu~({gamma}))", l, r, relative_residual(l, r), tol, tr);
}

/// |<phi_g, phi_g'>| / (||phi_g|| ||phi_g'||) for distinct points of the dual discrete support.
template <Real T>
VerificationReport verify_orthogonality(const Point<T>& g1, const Point<T>& g2, const Measure<T>& m, T rel_tol,
                                        double tol = 1e-6) {
    const Kernel<T> kernel(m.params());
    const auto f1 = kernel_function(kernel, g1);
    const auto f2 = kernel_function(kernel, g2);
    const auto cross = m.integrate_adaptive(product_function(f1, f2), rel_tol);
    const auto n1 = m.integrate_adaptive(product_function(f1, f1), rel_tol);
    const auto n2 = m.integrate_adaptive(product_function(f2, f2), rel_tol);
    using std::sqrt;
    const T scale = sqrt(cabs<T>(n1.value) * cabs<T>(n2.value));
    const double res = to_double(cabs<T>(cross.value) / scale);
    TruncationInfo tr{std::min({cross.k_min, n1.k_min, n2.k_min}), 0, m.quad_points(), to_double(rel_tol)};
    return make_report("orthogonality:" + std::to_string(g1.k) + "," + std::to_string(g2.k),
                       "phi_gamma and phi_gamma' orthogonal for distinct dual support points",
                       to_report<T>(cross.value), {0.0, 0.0}, res, tol, tr);
}

/// <F f, F g> over nu~ against <f, g> over nu.
template <Real T>
VerificationReport verify_plancherel(const std::string& identity, const std::string& ref, const TestFunction<T>& f,
                                     const TestFunction<T>& g, const Transform<T>& tf, double tol,
                                     bool orthogonal = false) {
    const auto Ff = tf.forward(f);
    const auto Fg = tf.forward(g);
    const auto lhs = tf.spectral_inner(Ff, Fg);
    const T tail = tf.dual_tail(Ff, Fg);
    const auto rhs = tf.measure().integrate_values(
        [&] {
            auto vf = values_on(tf.measure(), f);
            const auto vg = values_on(tf.measure(), g);
            for (std::size_t i = 0; i < vf.size(); ++i) {
                vf[i] *= cconj<T>(vg[i]);
            }
            return vf;
        }(),
        false);
    const auto l = to_report<T>(lhs.value);
    const auto r = to_report<T>(rhs.value);
    double res;
    if (orthogonal) {
        const auto nf = tf.spectral_inner(Ff, Ff).value;
        const auto ng = tf.spectral_inner(Fg, Fg).value;
        using std::sqrt;
        const double scale = to_double(sqrt(cabs<T>(nf) * cabs<T>(ng)));
        res = scale > 0 ? std::abs(l - r) / scale : std::abs(l - r);
    } else {
        res = relative_residual(l, r);
    }
    const double scale = std::max(std::abs(l), std::abs(r));
    if (to_double(tail) > tol * std::max(scale, 1e-300) && !orthogonal) {
        throw DualTruncationNotConverged("plancherel: dual S_- tail estimate " + std::to_string(to_double(tail)) +
                                         " exceeds tolerance at dual k_min = " +
                                         std::to_string(tf.dual_measure().k_min()));
    }
    return make_report(identity, ref, l, r, res, tol, tf.truncation());
}

template <Real T>
VerificationReport verify_plancherel_discrete(const TestFunction<T>& f, const TestFunction<T>& g,
                                              const Transform<T>& tf, double tol = 1e-5, bool orthogonal = false) {
    return verify_plancherel("plancherel-discrete", "<Ff, Fg> over dual measure equals <f, g> for discrete f, g", f,
                             g, tf, tol, orthogonal);
}

template <Real T>
VerificationReport verify_plancherel_continuous(const TestFunction<T>& f, const TestFunction<T>& g,
                                                const Transform<T>& tf, double tol = 1e-3, bool orthogonal = false) {
    return verify_plancherel("plancherel-continuous",
                             "<Ff, Fg> over dual measure equals <f, g> for circle-supported f, g", f, g, tf, tol,
                             orthogonal);
}

/// |<F f, F g>| for f supported on the circle and g on S: relative to ||Ff|| ||Fg||.
template <Real T>
VerificationReport verify_mixed(const TestFunction<T>& f, const TestFunction<T>& g, const Transform<T>& tf,
                                double tol = 1e-3) {
    const auto Ff = tf.forward(f);
    const auto Fg = tf.forward(g);
    const auto cross = tf.spectral_inner(Ff, Fg).value;
    const auto nf = tf.spectral_inner(Ff, Ff).value;
    const auto ng = tf.spectral_inner(Fg, Fg).value;
    using std::sqrt;
    const double scale = to_double(sqrt(cabs<T>(nf) * cabs<T>(ng)));
    const auto l = to_report<T>(cross);
    return make_report("mixed-orthogonality", "transforms of circle and discrete functions are orthogonal", l,
                       {0.0, 0.0}, scale > 0 ? std::abs(l) / scale : std::abs(l), tol, tf.truncation());
}

/// Matrix entries (F~ F delta_{x_i})(x_j) against the identity.
template <Real T>
std::vector<VerificationReport> verify_inversion(const std::vector<AtomKey>& atoms, const Transform<T>& tf,
                                                 double tol = 1e-5) {
    std::vector<VerificationReport> out;
    const auto& p = tf.measure().params();
    for (const auto& ki : atoms) {
        const auto Ff = tf.forward(TestFunction<T>::delta(ki));
        for (const auto& kj : atoms) {
            const auto x = kj.sector == Sector::plus ? Point<T>::plus(kj.k, p) : Point<T>::minus(kj.k, p);
            const auto v = to_report<T>(tf.dual_forward_at(Ff, x));
            const std::complex<double> expect = ki == kj ? 1.0 : 0.0;
            out.push_back(make_report("inversion:" + std::to_string(ki.k) + "->" + std::to_string(kj.k),
                                      "dual transform inverts the transform", v, expect, std::abs(v - expect), tol,
                                      tf.truncation()));
        }
    }
    return out;
}

}  // namespace awft

#endif  // AWFT_TRANSFORM_HPP
