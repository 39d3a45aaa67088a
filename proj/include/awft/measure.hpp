// The measure nu: circle density K W / (4 pi), residue weights on the
// discrete set S = S_+ u S_-, the constants K, c_0, M, C_0, and integration
// of symmetric functions against nu.
#ifndef AWFT_MEASURE_HPP
#define AWFT_MEASURE_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <compare>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "awft/awfunction.hpp"

namespace awft {

/// Delta(x) = (x^2, 1/x^2)_inf / (ax, a/x, bx, b/x, cx, c/x, dx, d/x)_inf.
template <Real T>
SeriesValue<T> weight_Delta(const complex_t<T>& x, const AWParams<T>& p, T eps = default_eps<T>()) {
    if (cabs<T>(x) == T(0)) {
        throw PoleAtX("weight_Delta: x must be nonzero");
    }
    const auto qb = p.base();
    const complex_t<T> one(1);
    const auto den = qpoch_inf<T>({p.a * x, p.a / x, p.b * x, p.b / x, p.c * x, p.c / x, p.d * x, p.d / x}, qb, eps);
    if (cabs<T>(den.value) == T(0)) {
        throw PoleAtX("weight_Delta: x lies on a pole lattice");
    }
    ProductAccumulator<T> acc;
    acc.mul(qpoch_inf<T>({x * x, one / (x * x)}, qb, eps)).div(den);
    return acc.result();
}

/// W(x) = (qx/d, q/dx, x^2, 1/x^2)_inf / ((ax, a/x, bx, b/x, cx, c/x)_inf theta(dtx) theta(dt/x)).
template <Real T>
SeriesValue<T> weight_W(const complex_t<T>& x, const AWParams<T>& p, T eps = default_eps<T>()) {
    if (cabs<T>(x) == T(0)) {
        throw PoleAtX("weight_W: x must be nonzero");
    }
    const T q = p.q;
    const auto qb = p.base();
    const complex_t<T> one(1);
    const auto den = qpoch_inf<T>({p.a * x, p.a / x, p.b * x, p.b / x, p.c * x, p.c / x}, qb, eps);
    const auto th1 = theta<T>(p.d * p.t * x, qb, eps);
    const auto th2 = theta<T>(p.d * p.t / x, qb, eps);
    if (cabs<T>(den.value) == T(0) || cabs<T>(th1.value) == T(0) || cabs<T>(th2.value) == T(0)) {
        throw PoleAtX("weight_W: x lies on a pole lattice");
    }
    ProductAccumulator<T> acc;
    acc.mul(qpoch_inf<T>({q * x / p.d, q / (p.d * x), x * x, one / (x * x)}, qb, eps));
    acc.div(den).div(th1).div(th2);
    return acc.result();
}

/// Quasi-constant theta(dx) theta(d/x) / (theta(dtx) theta(dt/x)) relating W to Delta.
template <Real T>
SeriesValue<T> theta_ratio(const complex_t<T>& x, const AWParams<T>& p, T eps = default_eps<T>()) {
    const auto qb = p.base();
    const auto th1 = theta<T>(p.d * p.t * x, qb, eps);
    const auto th2 = theta<T>(p.d * p.t / x, qb, eps);
    if (cabs<T>(th1.value) == T(0) || cabs<T>(th2.value) == T(0)) {
        throw PoleAtX("theta_ratio: theta(dt x^{+-1}) vanishes");
    }
    ProductAccumulator<T> acc;
    acc.mul(theta<T>(p.d * x, qb, eps)).mul(theta<T>(p.d / x, qb, eps)).div(th1).div(th2);
    return acc.result();
}

/// c_0 = (ab, ac, bc, qa/d)_inf^2 theta(adt)^2 / a^2.
template <Real T>
SeriesValue<T> const_c0(const AWParams<T>& p, T eps = default_eps<T>()) {
    const auto qb = p.base();
    const auto prod = qpoch_inf<T>({cplx<T>(p.a * p.b), cplx<T>(p.a * p.c), cplx<T>(p.b * p.c),
                                    cplx<T>(p.q * p.a / p.d)},
                                   qb, eps);
    const auto th = theta<T>(cplx<T>(p.a * p.d * p.t), qb, eps);
    ProductAccumulator<T> acc;
    acc.mul(prod).mul(prod).mul(th).mul(th).div(cplx<T>(p.a * p.a));
    return acc.result();
}

/// K = (ab, ac, bc, qa/d, q)_inf sqrt(theta(qt) theta(adt) theta(bdt) theta(cdt) / (q abcd t^2)).
template <Real T>
SeriesValue<T> const_K(const AWParams<T>& p, T eps = default_eps<T>()) {
    using std::sqrt;
    const auto qb = p.base();
    const T dt = p.d * p.t;
    ProductAccumulator<T> rad;
    rad.mul(theta<T>(cplx<T>(p.q * p.t), qb, eps))
        .mul(theta<T>(cplx<T>(p.a * dt), qb, eps))
        .mul(theta<T>(cplx<T>(p.b * dt), qb, eps))
        .mul(theta<T>(cplx<T>(p.c * dt), qb, eps))
        .div(cplx<T>(p.q * p.a * p.b * p.c * p.d * p.t * p.t));
    const auto r = rad.result();
    if (!(r.value.real() > T(0))) {
        throw NegativeRadicand("const_K: theta(qt)theta(adt)theta(bdt)theta(cdt)/(qabcdt^2) is not positive");
    }
    ProductAccumulator<T> acc;
    acc.mul(qpoch_inf<T>({cplx<T>(p.a * p.b), cplx<T>(p.a * p.c), cplx<T>(p.b * p.c), cplx<T>(p.q * p.a / p.d),
                          cplx<T>(p.q)},
                         qb, eps));
    acc.mul(SeriesValue<T>{cplx<T>(sqrt(r.value.real())), sqrt(r.value.real()) * r.rel_err() / T(2), 0});
    return acc.result();
}

/// M = theta(qt) K / ((q, q)_inf theta(adt) theta(bdt) theta(cdt)).
template <Real T>
SeriesValue<T> const_M(const AWParams<T>& p, T eps = default_eps<T>()) {
    const auto qb = p.base();
    const T dt = p.d * p.t;
    ProductAccumulator<T> acc;
    acc.mul(theta<T>(cplx<T>(p.q * p.t), qb, eps)).mul(const_K(p, eps));
    acc.div(qpoch_inf<T>({cplx<T>(p.q), cplx<T>(p.q)}, qb, eps));
    acc.div(theta<T>(cplx<T>(p.a * dt), qb, eps))
        .div(theta<T>(cplx<T>(p.b * dt), qb, eps))
        .div(theta<T>(cplx<T>(p.c * dt), qb, eps));
    return acc.result();
}

/// Askey-Wilson integral C_0 = 2 (abcd)_inf / (q, ab, ac, ad, bc, bd, cd)_inf.
template <Real T>
SeriesValue<T> const_C0(const AWParams<T>& p, T eps = default_eps<T>()) {
    const auto qb = p.base();
    const T a = p.a, b = p.b, c = p.c, d = p.d;
    ProductAccumulator<T> acc;
    acc.mul(cplx<T>(T(2))).mul(qpoch_inf<T>(cplx<T>(a * b * c * d), qb, eps));
    acc.div(qpoch_inf<T>({cplx<T>(p.q), cplx<T>(a * b), cplx<T>(a * c), cplx<T>(a * d), cplx<T>(b * c),
                          cplx<T>(b * d), cplx<T>(c * d)},
                         qb, eps));
    return acc.result();
}

/// True if a q^k lies in S_+.
template <Real T>
bool in_S_plus(int k, const AWParams<T>& p) {
    return k >= 0 && p.a * ipow(p.q, k) > T(1);
}

/// True if d t q^k lies in S_-.
template <Real T>
bool in_S_minus(int k, const AWParams<T>& p) {
    return p.d * p.t * ipow(p.q, k) < T(-1);
}

/// Largest k with d t q^k < -1.
template <Real T>
int minus_head(const AWParams<T>& p) {
    using std::floor;
    using std::log;
    int k = static_cast<int>(to_double(floor(log(T(-1) / (p.d * p.t)) / log(p.q))));
    while (in_S_minus(k + 1, p)) {
        ++k;
    }
    while (!in_S_minus(k, p)) {
        --k;
    }
    return k;
}

/// nu({a q^k}) for a q^k in S_+, from the closed form (never a numerical residue).
template <Real T>
SeriesValue<T> discrete_weight_plus(int k, const AWParams<T>& p, T eps = default_eps<T>(),
                                    std::optional<T> K = std::nullopt) {
    if (!in_S_plus(k, p)) {
        throw NotInSupport("discrete_weight_plus: a q^k <= 1 for k = " + std::to_string(k));
    }
    const auto qb = p.base();
    const T q = p.q, a = p.a, b = p.b, c = p.c, d = p.d, t = p.t;
    const T at = dualize(p).a;
    ProductAccumulator<T> acc;
    acc.mul(qpoch_inf<T>({cplx<T>(q * a / d), cplx<T>(q / (a * d)), cplx<T>(T(1) / (a * a))}, qb, eps));
    acc.div(qpoch_inf<T>({cplx<T>(q), cplx<T>(a * b), cplx<T>(b / a), cplx<T>(a * c), cplx<T>(c / a)}, qb, eps));
    acc.div(theta<T>(cplx<T>(a * d * t), qb, eps)).div(theta<T>(cplx<T>(d * t / a), qb, eps));
    complex_t<T> ratio(1);
    for (const T& u : {a * a, a * b, a * c, a * d}) {
        ratio *= qpoch_finite<T>(cplx<T>(u), qb, k);
    }
    for (const T& v : {q, q * a / b, q * a / c, q * a / d}) {
        ratio /= qpoch_finite<T>(cplx<T>(v), qb, k);
    }
    acc.mul(ratio);
    acc.mul(cplx<T>((T(1) - a * a * ipow(q, 2 * k)) / (T(1) - a * a)));
    const T Kv = K ? *K : const_K(p, eps).value.real();
    acc.mul(cplx<T>(Kv / (T(2) * ipow(at, 2 * k))));
    return acc.result();
}

/// nu({d t q^k}) for d t q^k in S_-. The finite-product ratio is multiplied
/// factor by factor so deep k neither overflows nor underflows early.
template <Real T>
SeriesValue<T> discrete_weight_minus(int k, const AWParams<T>& p, T eps = default_eps<T>(),
                                     std::optional<T> K = std::nullopt) {
    if (!in_S_minus(k, p)) {
        throw NotInSupport("discrete_weight_minus: d t q^k >= -1 for k = " + std::to_string(k));
    }
    const auto qb = p.base();
    const T q = p.q, a = p.a, b = p.b, c = p.c, d = p.d, t = p.t;
    const T dt = d * t;
    const T at = dualize(p).a;
    ProductAccumulator<T> acc;
    acc.mul(qpoch_inf<T>({cplx<T>(q * t), cplx<T>(q / (d * dt))}, qb, eps));
    acc.div(qpoch_inf<T>({cplx<T>(q), cplx<T>(q), cplx<T>(a / dt), cplx<T>(b / dt), cplx<T>(c / dt),
                          cplx<T>(a * dt), cplx<T>(b * dt), cplx<T>(c * dt)},
                         qb, eps));
    const T ups[] = {T(1) / t, a / dt, b / dt, c / dt};
    const T downs[] = {q / (a * dt), q / (b * dt), q / (c * dt), q / (d * dt)};
    const int n = -k;
    // (u; q)_n / (v; q)_n with n of either sign, interleaved with a~^2 per step.
    T ratio(1);
    const T at2 = at * at;
    if (n >= 0) {
        T qj(1);
        for (int j = 0; j < n; ++j) {
            for (int i = 0; i < 4; ++i) {
                ratio *= (T(1) - ups[i] * qj) / (T(1) - downs[i] * qj);
            }
            ratio /= at2;
            qj *= q;
        }
    } else {
        // (u; q)_{-m} = 1 / (u q^{-m}; q)_m
        T qj = ipow(q, n);
        for (int j = 0; j < -n; ++j) {
            for (int i = 0; i < 4; ++i) {
                ratio *= (T(1) - downs[i] * qj) / (T(1) - ups[i] * qj);
            }
            ratio *= at2;
            qj *= q;
        }
    }
    acc.mul(cplx<T>(ratio));
    acc.mul(cplx<T>(T(1) - T(1) / (dt * dt * ipow(q, 2 * k))));
    const T Kv = K ? *K : const_K(p, eps).value.real();
    acc.mul(cplx<T>(Kv / T(2)));
    auto out = acc.result();
    out.err_bound += cabs<T>(out.value) * T(8 * std::abs(n) + 8) * unit_roundoff<T>();
    return out;
}

/// Res_{x = a q^n} (Delta(x) / x), the vanishing factor of (a/x; q)_inf removed.
template <Real T>
SeriesValue<T> delta_residue(int n, const AWParams<T>& p, T eps = default_eps<T>()) {
    if (n < 0) {
        throw InvalidParameters("delta_residue: n must be >= 0");
    }
    const auto qb = p.base();
    const complex_t<T> x0 = cplx<T>(p.a * ipow(p.q, n));
    const complex_t<T> one(1);
    ProductAccumulator<T> acc;
    acc.mul(qpoch_inf<T>({x0 * x0, one / (x0 * x0)}, qb, eps));
    acc.div(qpoch_inf<T>({p.a * x0, p.b * x0, p.b / x0, p.c * x0, p.c / x0, p.d * x0, p.d / x0}, qb, eps));
    acc.div(qpoch_finite<T>(cplx<T>(ipow(p.q, -n)), qb, n));
    acc.div(qpoch_inf<T>(cplx<T>(p.q), qb, eps));
    return acc.result();
}

enum class Sector { circle, plus, minus };

inline const char* to_string(Sector s) {
    switch (s) {
        case Sector::circle: return "circle";
        case Sector::plus: return "plus";
        case Sector::minus: return "minus";
    }
    return "?";
}

/// Identifies a representative atom x in S (|x| > 1) by its lattice index.
struct AtomKey {
    Sector sector{Sector::minus};
    int k{0};
    auto operator<=>(const AtomKey&) const = default;
};

template <Real T>
struct Atom {
    AtomKey key;
    T x{0};
    T mass{0};  // 2 nu({x})
};

template <Real T>
struct DiscreteSupport {
    std::vector<Atom<T>> plus;   // k ascending from 0
    std::vector<Atom<T>> minus;  // k descending from the head down to k_min
};

/// A deliberate perturbation of one constant, used to check that the
/// verification suites detect it.
struct FaultInjection {
    enum class Target { none, K, c0, M, weight };
    Target target{Target::none};
    double factor{1.01};
    AtomKey atom{};

    bool active() const { return target != Target::none; }
};

inline std::optional<FaultInjection> parse_fault(const std::string& s) {
    FaultInjection f;
    if (s.empty() || s == "none") {
        return f;
    }
    if (s == "K") {
        f.target = FaultInjection::Target::K;
    } else if (s == "c0") {
        f.target = FaultInjection::Target::c0;
    } else if (s == "M") {
        f.target = FaultInjection::Target::M;
    } else if (s == "weight" || s.rfind("weight:", 0) == 0) {
        f.target = FaultInjection::Target::weight;
        f.atom = {Sector::minus, 1};
        const auto colon = s.find(':');
        if (colon != std::string::npos) {
            std::string rest = s.substr(colon + 1);
            if (rest.rfind("plus", 0) == 0 || rest.rfind("minus", 0) == 0) {
                f.atom.sector = rest[0] == 'p' ? Sector::plus : Sector::minus;
                const auto c2 = rest.find(':');
                if (c2 == std::string::npos) {
                    return std::nullopt;
                }
                rest = rest.substr(c2 + 1);
            }
            try {
                std::size_t used = 0;
                f.atom.k = std::stoi(rest, &used);
                if (used != rest.size()) {
                    return std::nullopt;
                }
            } catch (const std::exception&) {
                return std::nullopt;
            }
        }
    } else {
        return std::nullopt;
    }
    return f;
}

inline std::string to_string(const FaultInjection& f) {
    switch (f.target) {
        case FaultInjection::Target::none: return "none";
        case FaultInjection::Target::K: return "K";
        case FaultInjection::Target::c0: return "c0";
        case FaultInjection::Target::M: return "M";
        case FaultInjection::Target::weight:
            return std::string("weight:") + to_string(f.atom.sector) + ":" + std::to_string(f.atom.k);
    }
    return "none";
}

template <Real T>
struct MeasureConstants {
    T K{0};
    T c0{0};
    T M{0};
};

template <Real T>
MeasureConstants<T> measure_constants(const AWParams<T>& p, T eps = default_eps<T>(),
                                      const FaultInjection& fault = {}) {
    MeasureConstants<T> c{const_K(p, eps).value.real(), const_c0(p, eps).value.real(),
                          const_M(p, eps).value.real()};
    const T f(fault.factor);
    switch (fault.target) {
        case FaultInjection::Target::K: c.K *= f; break;
        case FaultInjection::Target::c0: c.c0 *= f; break;
        case FaultInjection::Target::M: c.M *= f; break;
        default: break;
    }
    return c;
}

/// Log-distance from the unit circle of the nearest pole of W, which sets
/// the exponential convergence rate of the trapezoid rule.
template <Real T>
double circle_pole_distance(const AWParams<T>& p) {
    const double lq = std::log(to_double(p.q));
    double delta = 1e300;
    auto lattice = [&](double logr) {
        // min over j of |logr + j log q|
        const double r = std::fmod(logr, lq);
        delta = std::min({delta, std::abs(r), std::abs(r - lq), std::abs(r + lq)});
    };
    auto series = [&](double logr) {
        // poles at |x|^{+-1} = r q^j, j >= 0
        for (int j = 0; j < 200; ++j) {
            delta = std::min(delta, std::abs(logr + j * lq));
        }
    };
    lattice(std::log(std::abs(to_double(p.d * p.t))));
    series(std::log(to_double(p.a)));
    series(std::log(to_double(p.b)));
    series(std::log(to_double(p.c)));
    return std::max(delta, 1e-3);
}

/// Smallest power of two N for which the trapezoid error e^{-2 N delta}
/// of a circle integral of W falls below eps.
template <Real T>
int recommended_quad_points(const AWParams<T>& p, double eps) {
    const double delta = circle_pole_distance(p);
    const double need = (std::log(1.0 / std::max(eps, 1e-300)) + 5.0) / (2.0 * delta);
    int n = 64;
    while (n < need && n < (1 << 16)) {
        n *= 2;
    }
    return n;
}

template <Real T>
struct MeasureSpec {
    AWParams<T> params{};
    int quad_points{512};  // 0 selects recommended_quad_points
    int k_min{-60};
    T eps{1e-10};
    FaultInjection fault{};
};

/// A symmetric function given by representatives: values on theta in
/// [0, pi], a finite map on atoms, and optionally a rule for all atoms.
template <Real T>
struct TestFunction {
    std::function<complex_t<T>(const T&)> circle;
    std::map<AtomKey, complex_t<T>> discrete;
    std::function<complex_t<T>(const AtomKey&, const T&)> lattice;

    complex_t<T> at_circle(const T& theta) const { return circle ? circle(theta) : complex_t<T>(0); }
    complex_t<T> at_atom(const AtomKey& key, const T& x) const {
        if (lattice) {
            return lattice(key, x);
        }
        const auto it = discrete.find(key);
        return it == discrete.end() ? complex_t<T>(0) : it->second;
    }
    bool has_unbounded_support() const { return static_cast<bool>(lattice); }

    static TestFunction delta(const AtomKey& key, complex_t<T> v = complex_t<T>(1)) {
        TestFunction f;
        f.discrete[key] = v;
        return f;
    }
};

template <Real T>
struct Integral {
    complex_t<T> value{0};
    T quad_estimate{0};  // change against the rule with half the nodes
    T tail_estimate{0};  // geometric estimate of the dropped S_- atoms
    int k_min{0};
};

/// Tail estimate for a slowly varying or oscillating sequence of term
/// magnitudes: the last two blocks of `block` terms give a ratio r and the
/// dropped remainder is bounded by the last block times r / (1 - r).
template <Real T>
T block_tail_estimate(const std::vector<T>& mags, std::size_t block = 4) {
    if (mags.size() < 2 * block) {
        return std::numeric_limits<T>::infinity();
    }
    const std::size_t m = mags.size();
    T b1(0), b2(0);
    for (std::size_t i = m - 2 * block; i < m - block; ++i) {
        b1 += mags[i];
    }
    for (std::size_t i = m - block; i < m; ++i) {
        b2 += mags[i];
    }
    if (b2 == T(0)) {
        return T(0);
    }
    const T r = b2 / b1;
    return r < T(1) ? b2 * r / (T(1) - r) : std::numeric_limits<T>::infinity();
}

/// A node of the discretized measure: a circle quadrature node or an atom.
template <Real T>
struct Node {
    Sector sector{Sector::circle};
    int index{0};  // quadrature index or lattice index k
    T theta{0};
    Point<T> point{};
    T mass{0};
};

/// The measure nu for fixed parameters, discretized: trapezoid nodes
/// theta_j = j pi / N (0 < j < N, W vanishes at the end points) and atoms
/// of S with pair masses 2 nu({x}).
template <Real T>
class Measure {
public:
    explicit Measure(const MeasureSpec<T>& spec)
        : spec_(spec),
          constants_(measure_constants(spec.params, default_eps<T>(), spec.fault)),
          quad_points_(spec.quad_points > 0 ? spec.quad_points
                                             : recommended_quad_points(spec.params, to_double(spec.eps))) {
        const auto& p = spec_.params;
        const auto v = validate_V(p);
        if (!v.member) {
            std::string msg = "parameters outside V:";
            for (const auto& s : v.violations) {
                msg += " " + s;
            }
            throw InvalidParameters(msg);
        }
        if (quad_points_ < 2) {
            throw InvalidParameters("quad_points must be >= 2");
        }
        build_circle();
        build_atoms(spec_.k_min);
    }

    const MeasureSpec<T>& spec() const { return spec_; }
    const AWParams<T>& params() const { return spec_.params; }
    const MeasureConstants<T>& constants() const { return constants_; }
    int quad_points() const { return quad_points_; }
    int k_min() const { return k_min_; }
    const std::vector<Node<T>>& nodes() const { return nodes_; }

    DiscreteSupport<T> support() const {
        DiscreteSupport<T> s;
        for (const auto& n : nodes_) {
            if (n.sector == Sector::circle) {
                continue;
            }
            Atom<T> a{{n.sector, n.index}, n.point.z.real(), n.mass};
            (n.sector == Sector::plus ? s.plus : s.minus).push_back(a);
        }
        return s;
    }

    /// Circle density K W(e^{i theta}) / (4 pi).
    T density(const T& theta) const {
        return constants_.K * weight_W<T>(unit_circle(theta), spec_.params).value.real() / (T(4) * pi<T>());
    }

    /// 2 nu({x}) for an atom of S, honouring fault injection.
    T pair_mass(const AtomKey& key) const {
        const auto& p = spec_.params;
        const T eps = default_eps<T>();
        T nu = key.sector == Sector::plus ? discrete_weight_plus<T>(key.k, p, eps, constants_.K).value.real()
                                         : discrete_weight_minus<T>(key.k, p, eps, constants_.K).value.real();
        if (spec_.fault.target == FaultInjection::Target::weight && spec_.fault.atom == key) {
            nu *= T(spec_.fault.factor);
        }
        return T(2) * nu;
    }

    /// Mass assigned to the S_- atoms beyond the truncation, estimated
    /// from the asymptotic law nu({dtq^{-k}}) ~ M / (2 a~^{2k}).
    T minus_tail_mass() const {
        const T at = dualize(spec_.params).a;
        const T r = T(1) / (at * at);
        if (!(r < T(1))) {
            return std::numeric_limits<T>::infinity();
        }
        T last(0);
        for (const auto& n : nodes_) {
            if (n.sector == Sector::minus) {
                last = n.mass;
            }
        }
        return last * r / (T(1) - r);
    }

    /// Integral of a symmetric function. The S_- tail is estimated from
    /// the ratio of the last atom contributions and must be below eps
    /// relative to the result when f has unbounded support.
    Integral<T> integrate(const TestFunction<T>& f) const {
        std::vector<complex_t<T>> values(nodes_.size());
        parallel_for(nodes_.size(), [&](std::size_t i) {
            const auto& n = nodes_[i];
            values[i] = n.sector == Sector::circle ? f.at_circle(n.theta)
                                                   : f.at_atom({n.sector, n.index}, n.point.z.real());
        });
        if (!f.has_unbounded_support()) {
            for (const auto& [key, v] : f.discrete) {
                (void)v;
                if (!has_atom(key)) {
                    throw NotInSupport("integrate: test function has an atom outside the truncated support (" +
                                       std::string(to_string(key.sector)) + ", k=" + std::to_string(key.k) + ")");
                }
            }
        }
        return reduce(values, f.has_unbounded_support());
    }

    /// Integral of precomputed node values (same order as nodes()).
    Integral<T> integrate_values(const std::vector<complex_t<T>>& values, bool unbounded = true) const {
        if (values.size() != nodes_.size()) {
            throw InvalidParameters("integrate_values: size mismatch");
        }
        return reduce(values, unbounded);
    }

    /// Integral of a function on all of S_-: atoms are added from the head
    /// downward (masses from the closed form) until the geometric tail
    /// estimate falls below rel_tol times the absolute sum of the terms.
    /// The circle and S_+ parts use the discretized nodes.
    Integral<T> integrate_adaptive(const TestFunction<T>& f, T rel_tol, int k_floor = -700) const {
        CompensatedComplexSum<T> sum;
        T abs_sum(0);
        std::vector<complex_t<T>> values(nodes_.size());
        std::vector<std::size_t> fixed;
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            if (nodes_[i].sector != Sector::minus) {
                fixed.push_back(i);
            }
        }
        parallel_for(fixed.size(), [&](std::size_t j) {
            const auto& n = nodes_[fixed[j]];
            values[j] = n.sector == Sector::circle ? f.at_circle(n.theta)
                                                   : f.at_atom({n.sector, n.index}, n.point.z.real());
        });
        CompensatedComplexSum<T> half;
        for (std::size_t j = 0; j < fixed.size(); ++j) {
            const auto& n = nodes_[fixed[j]];
            const complex_t<T> term = values[j] * n.mass;
            sum.add(term);
            abs_sum += cabs<T>(term);
            if (n.sector != Sector::circle || n.index % 2 == 0) {
                half.add(n.sector == Sector::circle ? term * T(2) : term);
            }
        }
        const complex_t<T> fixed_sum = sum.value();
        const auto& p = spec_.params;
        std::vector<T> mags;
        Integral<T> out;
        const int head = minus_head(p);
        const int batch = 16;
        int k = head;
        for (;;) {
            const int lo = std::max(k - batch + 1, k_floor);
            std::vector<complex_t<T>> terms(static_cast<std::size_t>(k - lo + 1));
            parallel_for(terms.size(), [&](std::size_t i) {
                const int kk = k - static_cast<int>(i);
                const AtomKey key{Sector::minus, kk};
                const T x = p.d * p.t * ipow(p.q, kk);
                terms[i] = f.at_atom(key, x) * pair_mass(key);
            });
            for (const auto& t : terms) {
                sum.add(t);
                abs_sum += cabs<T>(t);
                mags.push_back(cabs<T>(t));
            }
            k = lo - 1;
            const std::size_t m = mags.size();
            if (m >= 8) {
                T r(0);
                for (std::size_t i = m - 4; i < m; ++i) {
                    if (mags[i - 1] > T(0)) {
                        r = std::max(r, mags[i] / mags[i - 1]);
                    }
                }
                out.tail_estimate = r < T(1) ? mags[m - 1] * r / (T(1) - r) : std::numeric_limits<T>::infinity();
                if (out.tail_estimate <= rel_tol * abs_sum || mags[m - 1] == T(0)) {
                    break;
                }
            }
            if (lo <= k_floor) {
                throw TruncationNotConverged("integrate_adaptive: S_- tail did not fall below tolerance by k = " +
                                             std::to_string(k_floor));
            }
        }
        out.value = sum.value();
        out.k_min = k + 1;
        out.quad_estimate = cabs<T>(fixed_sum - half.value());
        return out;
    }

    bool has_atom(const AtomKey& key) const {
        for (const auto& n : nodes_) {
            if (n.sector == key.sector && n.index == key.k) {
                return true;
            }
        }
        return false;
    }

    std::optional<std::size_t> node_of(const AtomKey& key) const {
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            if (nodes_[i].sector == key.sector && nodes_[i].index == key.k) {
                return i;
            }
        }
        return std::nullopt;
    }

    template <class F>
    static void parallel_for(std::size_t n, F&& fn) {
        const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), 16));
        if (n < 64 || workers == 1) {
            for (std::size_t i = 0; i < n; ++i) {
                fn(i);
            }
            return;
        }
        std::vector<std::future<void>> jobs;
        const std::size_t chunk = (n + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t lo = w * chunk;
            const std::size_t hi = std::min(n, lo + chunk);
            if (lo >= hi) {
                break;
            }
            jobs.push_back(std::async(std::launch::async, [lo, hi, &fn] {
                for (std::size_t i = lo; i < hi; ++i) {
                    fn(i);
                }
            }));
        }
        for (auto& j : jobs) {
            j.get();
        }
    }

private:
    void build_circle() {
        const auto& p = spec_.params;
        const int N = quad_points_;
        std::vector<Node<T>> circle(static_cast<std::size_t>(N - 1));
        parallel_for(circle.size(), [&](std::size_t i) {
            const int j = static_cast<int>(i) + 1;
            const T th = pi<T>() * T(j) / T(N);
            const auto z = unit_circle(th);
            const T w = weight_W<T>(z, p).value.real();
            circle[i] = Node<T>{Sector::circle, j, th, Point<T>::at(z), constants_.K * w / T(2 * N)};
        });
        nodes_ = std::move(circle);
    }

    void build_atoms(int k_min) {
        const auto& p = spec_.params;
        for (int k = 0; in_S_plus(k, p); ++k) {
            nodes_.push_back({Sector::plus, k, T(0), Point<T>::plus(k, p), pair_mass({Sector::plus, k})});
        }
        const int head = minus_head(p);
        k_min_ = std::min(k_min, head);
        for (int k = head; k >= k_min_; --k) {
            nodes_.push_back({Sector::minus, k, T(0), Point<T>::minus(k, p), pair_mass({Sector::minus, k})});
        }
    }

    Integral<T> reduce(const std::vector<complex_t<T>>& values, bool unbounded) const {
        CompensatedComplexSum<T> full;
        CompensatedComplexSum<T> half;
        CompensatedComplexSum<T> circle;
        std::vector<complex_t<T>> minus_terms;
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            const auto& n = nodes_[i];
            const complex_t<T> term = values[i] * n.mass;
            full.add(term);
            if (n.sector == Sector::circle) {
                circle.add(term);
                if (n.index % 2 == 0) {
                    half.add(term * T(2));
                }
            } else {
                half.add(term);
                if (n.sector == Sector::minus) {
                    minus_terms.push_back(term);
                }
            }
        }
        Integral<T> out;
        out.value = full.value();
        out.k_min = k_min_;
        out.quad_estimate = cabs<T>(full.value() - half.value());
        if (unbounded && minus_terms.size() >= 4) {
            std::vector<T> mags;
            for (const auto& t : minus_terms) {
                mags.push_back(cabs<T>(t));
            }
            out.tail_estimate = block_tail_estimate(mags);
            const T scale = std::max(cabs<T>(out.value), std::numeric_limits<T>::min());
            if (out.tail_estimate > spec_.eps * scale) {
                throw TruncationNotConverged("integrate: S_- tail estimate " + std::to_string(to_double(out.tail_estimate)) +
                                             " exceeds eps relative to the integral at k_min = " +
                                             std::to_string(k_min_));
            }
        }
        return out;
    }

    MeasureSpec<T> spec_;
    MeasureConstants<T> constants_;
    int quad_points_;
    int k_min_{0};
    std::vector<Node<T>> nodes_;
};

/// Integral of f against nu as described by spec.
template <Real T>
Integral<T> integrate_nu(const TestFunction<T>& f, const MeasureSpec<T>& spec) {
    return Measure<T>(spec).integrate(f);
}

/// <f, g> = integral of f conj(g); conjugation is trivial on supp(nu) for real data.
template <Real T>
complex_t<T> inner_product(const TestFunction<T>& f, const TestFunction<T>& g, const MeasureSpec<T>& spec) {
    TestFunction<T> h;
    if (f.circle && g.circle) {
        h.circle = [f, g](const T& th) { return f.circle(th) * cconj<T>(g.circle(th)); };
    }
    if (f.lattice || g.lattice) {
        h.lattice = [f, g](const AtomKey& key, const T& x) { return f.at_atom(key, x) * cconj<T>(g.at_atom(key, x)); };
    } else {
        for (const auto& [key, v] : f.discrete) {
            if (auto it = g.discrete.find(key); it != g.discrete.end()) {
                h.discrete[key] = v * cconj<T>(it->second);
            }
        }
    }
    return integrate_nu(h, spec).value;
}

}  // namespace awft

#endif  // AWFT_MEASURE_HPP
