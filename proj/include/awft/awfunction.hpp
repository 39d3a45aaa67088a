// The Askey-Wilson second order q-difference operator, its polynomial
// eigenfunctions, the Askey-Wilson function in its two series
// representations, asymptotically free solutions on the q-line
// I = {d t q^k} and the c-function expansion that ties them together.
#ifndef AWFT_AWFUNCTION_HPP
#define AWFT_AWFUNCTION_HPP

#include <algorithm>
#include <limits>
#include <string>

#include "awft/params.hpp"

namespace awft {

enum class Representation {
    automatic,
    very_well_poised,  // single 8W7 series
    two_phi43,         // two balanced 4phi3 series with argument q
    c_expansion,       // c~(g) Phi_g(x) + c~(1/g) Phi_{1/g}(x) on the q-line
    one_term           // c~(1/g) Phi_{1/g}(x) for g in the dual discrete support
};

inline const char* to_string(Representation r) {
    switch (r) {
        case Representation::automatic: return "automatic";
        case Representation::very_well_poised: return "8W7";
        case Representation::two_phi43: return "two-4phi3";
        case Representation::c_expansion: return "c-expansion";
        case Representation::one_term: return "one-term";
    }
    return "?";
}

template <Real T>
struct KernelValue {
    complex_t<T> value{0};
    T err_bound{0};
    Representation representation{Representation::automatic};
};

/// Eigenvalue mu(g) = -1 - a~^2 + a~ (g + 1/g).
template <Real T>
complex_t<T> mu(const complex_t<T>& gamma, const AWParams<T>& p) {
    if (cabs<T>(gamma) == T(0)) {
        throw PoleAtGamma("mu: gamma must be nonzero");
    }
    const T at = dualize(p).a;
    return complex_t<T>(-T(1) - at * at) + at * (gamma + complex_t<T>(1) / gamma);
}

/// alpha(x) = (1-ax)(1-bx)(1-cx)(1-dx) / ((1-x^2)(1-qx^2)).
template <Real T>
complex_t<T> alpha(const complex_t<T>& x, const AWParams<T>& p) {
    const complex_t<T> one(1);
    const complex_t<T> x2 = x * x;
    const T tol = T(1e-12);
    if (cabs<T>(one - x2) <= tol || cabs<T>(one - p.q * x2) <= tol) {
        throw PoleAtX("alpha: x^2 lies on {1, 1/q}");
    }
    return (one - p.a * x) * (one - p.b * x) * (one - p.c * x) * (one - p.d * x) /
           ((one - x2) * (one - p.q * x2));
}

/// (L f)(x) = alpha(x)(f(qx) - f(x)) + alpha(1/x)(f(x/q) - f(x)).
template <Real T, class F>
complex_t<T> apply_L(F&& f, const complex_t<T>& x, const AWParams<T>& p) {
    const complex_t<T> fx = f(x);
    return alpha<T>(x, p) * (f(x * p.q) - fx) + alpha<T>(complex_t<T>(1) / x, p) * (f(x / p.q) - fx);
}

/// Askey-Wilson polynomial p_n(x; a, b, c, d | q) as a terminating 4phi3.
template <Real T>
complex_t<T> aw_polynomial(int n, const complex_t<T>& x, const AWParams<T>& p) {
    if (n < 0) {
        throw InvalidParameters("aw_polynomial: degree must be >= 0");
    }
    if (cabs<T>(x) == T(0)) {
        throw PoleAtX("aw_polynomial: x must be nonzero");
    }
    const T q = p.q;
    const complex_t<T> lower[] = {cplx<T>(p.a * p.b), cplx<T>(p.a * p.c), cplx<T>(p.a * p.d)};
    for (const auto& b : lower) {
        if (auto m = detail::lower_pole_index<T>(b, q); m && *m < n) {
            throw PoleInLowerParams("aw_polynomial: ab, ac or ad lies on q^{-m}");
        }
    }
    const complex_t<T> upper[] = {cplx<T>(ipow(q, -n)),
                                  cplx<T>(ipow(q, n - 1) * p.a * p.b * p.c * p.d), p.a * x,
                                  p.a / x};
    CompensatedComplexSum<T> sum;
    complex_t<T> term(1);
    T qk(1);
    for (int k = 0; k <= n; ++k) {
        sum.add(term);
        complex_t<T> num(1);
        complex_t<T> den(T(1) - qk * q);
        for (const auto& a : upper) {
            num *= complex_t<T>(1) - a * qk;
        }
        for (const auto& b : lower) {
            den *= complex_t<T>(1) - b * qk;
        }
        term = term * num / den * q;
        qk *= q;
    }
    return sum.value();
}

namespace detail {

/// True if z^{+-1} = q^{1+k} / s for some k >= 0, within rel_tol.
template <Real T>
bool on_pole_lattice(const complex_t<T>& z, const T& s, const T& q, const T& rel_tol) {
    for (const complex_t<T>& w : {z * s / q, complex_t<T>(s) / (q * z)}) {
        if (auto m = lattice_exponent<T>(w, q, rel_tol); m && *m >= 0) {
            return true;
        }
    }
    return false;
}

template <Real T>
SeriesValue<T> add_values(const SeriesValue<T>& x, const SeriesValue<T>& y) {
    return {x.value + y.value, x.err_bound + y.err_bound + unit_roundoff<T>() * cabs<T>(x.value + y.value),
            x.terms_used + y.terms_used};
}

template <Real T>
SeriesValue<T> scale_value(const SeriesValue<T>& x, const SeriesValue<T>& s) {
    ProductAccumulator<T> acc;
    acc.mul(x).mul(s);
    return acc.result();
}

template <Real T>
SeriesValue<T> aw_via_w87(complex_t<T> gamma, const complex_t<T>& x, const AWParams<T>& p,
                          const AWParams<T>& dp, const T& eps) {
    const T q = p.q;
    const auto qb = p.base();
    if (!(cabs<T>(complex_t<T>(q) / (dp.d * gamma)) < T(1))) {
        gamma = complex_t<T>(1) / gamma;
        if (!(cabs<T>(complex_t<T>(q) / (dp.d * gamma)) < T(1))) {
            throw RepresentationUnavailable("8W7 argument q/(d~ gamma) has modulus >= 1 for gamma and 1/gamma");
        }
    }
    const T abc = dp.a * dp.b * dp.c;
    ProductAccumulator<T> acc;
    acc.mul(qpoch_inf<T>({q * p.a * x * gamma / dp.d, q * p.a * gamma / (dp.d * x)}, qb, eps));
    acc.div(qpoch_inf<T>({abc * gamma, q * gamma / dp.d, cplx<T>(q * dp.a / dp.d), q * x / p.d,
                          complex_t<T>(q) / (p.d * x)},
                         qb, eps));
    const auto series = w87<T>(abc * gamma / q, p.a * x, p.a / x, dp.a * gamma, dp.b * gamma,
                               dp.c * gamma, qb, complex_t<T>(q) / (dp.d * gamma), eps);
    acc.mul(series);
    auto out = acc.result();
    out.err_bound = std::max(out.err_bound, cabs<T>(acc.result().value) * series.rel_err());
    return out;
}

template <Real T>
SeriesValue<T> aw_via_phi43(const complex_t<T>& gamma, const complex_t<T>& x, const AWParams<T>& p,
                            const AWParams<T>& dp, const T& eps) {
    const T q = p.q;
    const auto qb = p.base();
    const complex_t<T> ax = p.a * x;
    const complex_t<T> a_x = p.a / x;
    const complex_t<T> ag = dp.a * gamma;
    const complex_t<T> a_g = dp.a / gamma;

    ProductAccumulator<T> first;
    first.mul(phi_series<T>({ax, a_x, ag, a_g}, {cplx<T>(p.a * p.b), cplx<T>(p.a * p.c), cplx<T>(p.a * p.d)},
                            qb, cplx<T>(q), eps));
    first.div(qpoch_inf<T>({cplx<T>(p.b * p.c), cplx<T>(q * p.a / p.d), cplx<T>(q / (p.a * p.d))}, qb, eps));
    const auto one = first.result();

    const auto num = qpoch_inf<T>({ax, a_x, ag, a_g, cplx<T>(q * p.b / p.d), cplx<T>(q * p.c / p.d)}, qb, eps);
    if (cabs<T>(num.value) == T(0)) {
        return one;
    }
    ProductAccumulator<T> second;
    second.mul(num);
    second.div(qpoch_inf<T>({q * x / p.d, complex_t<T>(q) / (p.d * x), q * gamma / dp.d,
                             complex_t<T>(q) / (dp.d * gamma), cplx<T>(p.a * p.b), cplx<T>(p.a * p.c),
                             cplx<T>(p.b * p.c), cplx<T>(q * p.a / p.d), cplx<T>(p.a * p.d / q)},
                            qb, eps));
    second.mul(phi_series<T>({q * x / p.d, complex_t<T>(q) / (p.d * x), q * gamma / dp.d,
                              complex_t<T>(q) / (dp.d * gamma)},
                             {cplx<T>(q * p.b / p.d), cplx<T>(q * p.c / p.d), cplx<T>(q * q / (p.a * p.d))},
                             qb, cplx<T>(q), eps));
    return add_values(one, second.result());
}

}  // namespace detail

/// The Askey-Wilson function phi_gamma(x). `automatic` selects the 8W7
/// series when ad is within 1e-6 of q^Z (where the two-4phi3 form has
/// removable poles) and the two-4phi3 form otherwise.
template <Real T>
KernelValue<T> aw_function(const complex_t<T>& gamma, const complex_t<T>& x, const AWParams<T>& p,
                           Representation rep = Representation::automatic, T eps = default_eps<T>()) {
    if (cabs<T>(x) == T(0)) {
        throw PoleAtX("aw_function: x must be nonzero");
    }
    if (cabs<T>(gamma) == T(0)) {
        throw PoleAtGamma("aw_function: gamma must be nonzero");
    }
    const AWParams<T> dp = dualize(p);
    const T near = T(1e-8);
    if (detail::on_pole_lattice<T>(x, p.d, p.q, near)) {
        throw PoleAtX("aw_function: x^{+-1} lies on q^{1+k}/d");
    }
    if (detail::on_pole_lattice<T>(gamma, dp.d, p.q, near)) {
        throw PoleAtGamma("aw_function: gamma^{+-1} lies on q^{1+k}/d~");
    }
    if (rep == Representation::automatic) {
        const bool ad_on_lattice = lattice_exponent<T>(cplx<T>(p.a * p.d), p.q, T(1e-6)).has_value();
        rep = ad_on_lattice ? Representation::very_well_poised : Representation::two_phi43;
    }
    SeriesValue<T> v;
    switch (rep) {
        case Representation::very_well_poised: v = detail::aw_via_w87(gamma, x, p, dp, eps); break;
        case Representation::two_phi43: v = detail::aw_via_phi43(gamma, x, p, dp, eps); break;
        default:
            throw RepresentationUnavailable(std::string("aw_function: representation ") + to_string(rep) +
                                            " needs a lattice point; use Kernel");
    }
    return {v.value, v.err_bound, rep};
}

/// |phi_g(x; a,b,c,d) - phi_x(g; a~,b~,c~,d~)| relative to the larger side.
template <Real T>
T aw_function_dual_check(const complex_t<T>& gamma, const complex_t<T>& x, const AWParams<T>& p,
                         Representation lhs_rep = Representation::very_well_poised,
                         Representation rhs_rep = Representation::two_phi43, T eps = default_eps<T>()) {
    const auto lhs = aw_function<T>(gamma, x, p, lhs_rep, eps).value;
    const auto rhs = aw_function<T>(x, gamma, dualize(p), rhs_rep, eps).value;
    const T scale = std::max(cabs<T>(lhs), cabs<T>(rhs));
    return scale > T(0) ? cabs<T>(lhs - rhs) / scale : T(0);
}

/// Free solution (a~ g)^{-k} of the asymptotic equation on d t q^k.
template <Real T>
complex_t<T> phi_free(const complex_t<T>& gamma, int k, const AWParams<T>& p) {
    if (cabs<T>(gamma) == T(0)) {
        throw PoleAtGamma("phi_free: gamma must be nonzero");
    }
    return ipow(dualize(p).a * gamma, -static_cast<long long>(k));
}

/// Asymptotically free solution Phi_g(x) at x = d t q^k, valid while |d/x| < 1.
template <Real T>
SeriesValue<T> phi_asym(const complex_t<T>& gamma, int k, const AWParams<T>& p, T eps = default_eps<T>()) {
    const T q = p.q;
    const auto qb = p.base();
    const AWParams<T> dp = dualize(p);
    const complex_t<T> x = cplx<T>(p.d * p.t * ipow(q, k));
    if (!(cabs<T>(complex_t<T>(p.d) / x) < T(1))) {
        throw NonConvergent("phi_asym: |d/x| >= 1 at the requested lattice point");
    }
    if (cabs<T>(gamma) == T(0)) {
        throw PoleAtGamma("phi_asym: gamma must be nonzero");
    }
    const complex_t<T> one(1);
    ProductAccumulator<T> acc;
    acc.mul(qpoch_inf<T>({q * p.a * gamma / (dp.a * x), q * p.b * gamma / (dp.a * x),
                          q * p.c * gamma / (dp.a * x), q * dp.a * gamma / (p.d * x), p.d / x},
                         qb, eps));
    acc.div(qpoch_inf<T>({q / (p.a * x), q / (p.b * x), q / (p.c * x), q / (p.d * x),
                          q * q * gamma * gamma / (p.d * x)},
                         qb, eps));
    acc.mul(w87<T>(q * gamma * gamma / (p.d * x), q * gamma / dp.a, q * gamma / dp.d, dp.b * gamma,
                   dp.c * gamma, q / (p.d * x), qb, p.d / x, eps));
    acc.mul(phi_free<T>(gamma, k, p));
    return acc.result();
}

/// c(g) = (a/g, b/g, c/g)_inf theta(g/dt) /
///        ((ab, ac, bc, qa/d)_inf theta(qadt) (qg/d, 1/g^2)_inf).
/// The dual c-function is c_function(g, dualize(p)).
template <Real T>
SeriesValue<T> c_function(const complex_t<T>& gamma, const AWParams<T>& p, T eps = default_eps<T>()) {
    const T q = p.q;
    const auto qb = p.base();
    if (cabs<T>(gamma) == T(0)) {
        throw PoleAtGamma("c_function: gamma must be nonzero");
    }
    const complex_t<T> one(1);
    if (auto m = lattice_exponent<T>(q * gamma / p.d, q, T(1e-10)); m && *m <= 0) {
        throw PoleAtGamma("c_function: (q gamma/d; q)_inf vanishes");
    }
    if (auto m = lattice_exponent<T>(one / (gamma * gamma), q, T(1e-10)); m && *m <= 0) {
        throw PoleAtGamma("c_function: (1/gamma^2; q)_inf vanishes");
    }
    ProductAccumulator<T> acc;
    acc.mul(qpoch_inf<T>({p.a / gamma, p.b / gamma, p.c / gamma}, qb, eps));
    acc.mul(theta<T>(gamma / (p.d * p.t), qb, eps));
    const auto param_den = qpoch_inf<T>({cplx<T>(p.a * p.b), cplx<T>(p.a * p.c), cplx<T>(p.b * p.c),
                                         cplx<T>(q * p.a / p.d)},
                                        qb, eps);
    const auto theta_den = theta<T>(cplx<T>(q * p.a * p.d * p.t), qb, eps);
    if (cabs<T>(param_den.value) == T(0) || cabs<T>(theta_den.value) == T(0)) {
        throw PoleInParams("c_function: parameter-dependent denominator vanishes");
    }
    acc.div(param_den).div(theta_den);
    acc.div(qpoch_inf<T>({q * gamma / p.d, one / (gamma * gamma)}, qb, eps));
    return acc.result();
}

/// |phi_g(x) - c~(g) Phi_g(x) - c~(1/g) Phi_{1/g}(x)| / |phi_g(x)| at x = d t q^k.
template <Real T>
T c_expansion_check(const complex_t<T>& gamma, int k, const AWParams<T>& p, T eps = default_eps<T>()) {
    const AWParams<T> dp = dualize(p);
    const complex_t<T> x = cplx<T>(p.d * p.t * ipow(p.q, k));
    const complex_t<T> inv = complex_t<T>(1) / gamma;
    const auto direct = aw_function<T>(gamma, x, p, Representation::automatic, eps).value;
    const auto expansion = c_function<T>(gamma, dp, eps).value * phi_asym<T>(gamma, k, p, eps).value +
                           c_function<T>(inv, dp, eps).value * phi_asym<T>(inv, k, p, eps).value;
    return cabs<T>(direct - expansion) / cabs<T>(direct);
}

/// One-term expansion phi_g(x) = c~(1/g) Phi_{1/g}(x), for g with c~(g) = 0.
template <Real T>
T c_expansion_one_term_check(const complex_t<T>& gamma, int k, const AWParams<T>& p, T eps = default_eps<T>()) {
    const AWParams<T> dp = dualize(p);
    const complex_t<T> x = cplx<T>(p.d * p.t * ipow(p.q, k));
    const complex_t<T> inv = complex_t<T>(1) / gamma;
    const auto direct = aw_function<T>(gamma, x, p, Representation::automatic, eps).value;
    const auto expansion = c_function<T>(inv, dp, eps).value * phi_asym<T>(inv, k, p, eps).value;
    return cabs<T>(direct - expansion) / cabs<T>(direct);
}

/// Where a point sits relative to a parameter set: the discrete lattices
/// {a q^k} and {d t q^k}, or anywhere else.
enum class Site { generic, plus, minus };

template <Real T>
struct Point {
    complex_t<T> z{1};
    Site site{Site::generic};
    int k{0};

    static Point at(const complex_t<T>& z) { return {z, Site::generic, 0}; }
    static Point plus(int k, const AWParams<T>& p) { return {cplx<T>(p.a * ipow(p.q, k)), Site::plus, k}; }
    static Point minus(int k, const AWParams<T>& p) {
        return {cplx<T>(p.d * p.t * ipow(p.q, k)), Site::minus, k};
    }
};

/// Evaluates phi_gamma(x) choosing a representation by location.
///
/// x is a point for the parameters p, gamma a point for their dual. On the
/// q-line far out (|d/x| <= switch_ratio) the direct series cancel badly, so
/// the c-expansion is used in whichever variable lies further out; by
/// duality an expansion in gamma is the same construction with the roles of
/// p and its dual exchanged. Lattice points of the discrete supports make one
/// c-coefficient vanish and the one-term form is used.
template <Real T>
class Kernel {
public:
    explicit Kernel(const AWParams<T>& p, T eps = default_eps<T>(), T switch_ratio = T(0.5))
        : p_(p), dp_(dualize(p)), eps_(eps), switch_(switch_ratio) {}

    const AWParams<T>& params() const { return p_; }
    const AWParams<T>& dual_params() const { return dp_; }
    const T& eps() const { return eps_; }

    KernelValue<T> operator()(const Point<T>& gamma, const Point<T>& x) const {
        const T rx = far_ratio(x, p_);
        const T rg = far_ratio(gamma, dp_);
        try {
            if (rx <= switch_ && rx <= rg) {
                return expand(gamma, x, p_, dp_);
            }
            if (rg <= switch_) {
                return expand(x, gamma, dp_, p_);
            }
        } catch (const PoleAtGamma&) {
        } catch (const PoleAtX&) {
        }
        return aw_function<T>(gamma.z, x.z, p_, Representation::automatic, eps_);
    }

    complex_t<T> value(const Point<T>& gamma, const Point<T>& x) const { return (*this)(gamma, x).value; }

private:
    // |d/x| for q-line points, infinity elsewhere.
    static T far_ratio(const Point<T>& x, const AWParams<T>& p) {
        if (x.site != Site::minus) {
            return std::numeric_limits<T>::infinity();
        }
        return cabs<T>(complex_t<T>(p.d) / x.z);
    }

    // phi_g(x) for parameters p with x = d t q^k, expanded in x.
    // dp are the parameters whose c-function multiplies Phi.
    KernelValue<T> expand(const Point<T>& g, const Point<T>& x, const AWParams<T>& p,
                          const AWParams<T>& dp) const {
        const complex_t<T> inv = complex_t<T>(1) / g.z;
        ProductAccumulator<T> second;
        second.mul(c_function<T>(inv, dp, eps_)).mul(phi_asym<T>(inv, x.k, p, eps_));
        if (g.site != Site::generic) {
            const auto v = second.result();
            return {v.value, v.err_bound, Representation::one_term};
        }
        ProductAccumulator<T> first;
        first.mul(c_function<T>(g.z, dp, eps_)).mul(phi_asym<T>(g.z, x.k, p, eps_));
        const auto v = detail::add_values(first.result(), second.result());
        return {v.value, v.err_bound, Representation::c_expansion};
    }

    AWParams<T> p_;
    AWParams<T> dp_;
    T eps_;
    T switch_;
};

}  // namespace awft

#endif  // AWFT_AWFUNCTION_HPP
