// q-shifted factorials, the renormalized theta function and basic
// hypergeometric series with certified truncation bounds.
//
// Every infinite object returns a SeriesValue: the value, an absolute error
// bound and the number of factors/terms used. The truncation part of the
// bound is rigorous (geometric majorant of the tail); a first-order rounding
// estimate proportional to the sum of term magnitudes is added on top so the
// bound also reflects cancellation.
#ifndef AWFT_QSERIES_HPP
#define AWFT_QSERIES_HPP

#include <algorithm>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "awft/errors.hpp"
#include "awft/numeric.hpp"

namespace awft {

/// The base q, restricted to the open interval (0, 1).
template <Real T>
class QBase {
public:
    explicit QBase(const T& q) : q_(q) {
        if (!(q > T(0) && q < T(1))) {
            throw InvalidParameters("q must satisfy 0 < q < 1, got " + std::to_string(to_double(q)));
        }
    }
    const T& value() const noexcept { return q_; }

private:
    T q_;
};

template <Real T>
struct SeriesValue {
    complex_t<T> value{1};
    T err_bound{0};
    int terms_used{0};

    T rel_err() const {
        const T mag = cabs<T>(value);
        return mag > T(0) ? err_bound / mag : err_bound;
    }
};

/// Multiplies SeriesValues together while tracking a first-order relative error.
template <Real T>
class ProductAccumulator {
public:
    ProductAccumulator& mul(const SeriesValue<T>& v) {
        value_ *= v.value;
        rel_ += v.rel_err();
        terms_ += v.terms_used;
        return *this;
    }
    ProductAccumulator& div(const SeriesValue<T>& v) {
        value_ /= v.value;
        rel_ += v.rel_err();
        terms_ += v.terms_used;
        return *this;
    }
    ProductAccumulator& mul(const complex_t<T>& z) {
        value_ *= z;
        rel_ += T(2) * unit_roundoff<T>();
        return *this;
    }
    ProductAccumulator& div(const complex_t<T>& z) {
        value_ /= z;
        rel_ += T(2) * unit_roundoff<T>();
        return *this;
    }
    SeriesValue<T> result() const { return {value_, rel_ * cabs<T>(value_), terms_}; }

private:
    complex_t<T> value_{1};
    T rel_{0};
    int terms_{0};
};

/// (a; q)_n = prod_{i=0}^{n-1} (1 - a q^i), n >= 0.
template <Real T>
complex_t<T> qpoch_finite(const complex_t<T>& a, const QBase<T>& qb, int n) {
    if (n < 0) {
        throw InvalidParameters("qpoch_finite requires n >= 0");
    }
    complex_t<T> result(1);
    T qi(1);
    for (int i = 0; i < n; ++i) {
        result *= complex_t<T>(1) - a * qi;
        qi *= qb.value();
    }
    return result;
}

/// (a; q)_n for any integer n, with (a; q)_{-m} = 1 / (a q^{-m}; q)_m.
template <Real T>
complex_t<T> qpoch_int(const complex_t<T>& a, const QBase<T>& qb, int n) {
    if (n >= 0) {
        return qpoch_finite(a, qb, n);
    }
    complex_t<T> denom(1);
    T qi(1);
    for (int i = 1; i <= -n; ++i) {
        qi /= qb.value();
        denom *= complex_t<T>(1) - a * qi;
    }
    return complex_t<T>(1) / denom;
}

/// (a; q)_inf. Truncates at the first N with |a| q^N / (1 - q) < eps / 4 and
/// bounds the omitted factors through |log prod| <= |a| q^N / ((1-q)(1-|a|q^N)).
template <Real T>
SeriesValue<T> qpoch_inf(const complex_t<T>& a, const QBase<T>& qb, const T& eps) {
    using std::exp;
    if (!(eps > T(0))) {
        throw InvalidParameters("eps must be positive");
    }
    const T q = qb.value();
    const T mag = cabs<T>(a);
    complex_t<T> prod(1);
    T qn(1);
    int n = 0;
    constexpr int max_factors = 200000;
    while (true) {
        const T head = mag * qn;
        if (head / (T(1) - q) < eps / T(4) && head < T(0.5)) {
            break;
        }
        prod *= complex_t<T>(1) - a * qn;
        qn *= q;
        ++n;
        if (n > max_factors) {
            throw NonConvergent("qpoch_inf: factor budget exhausted");
        }
    }
    const T head = mag * qn;
    const T tau = head / ((T(1) - q) * (T(1) - head));
    const T pmag = cabs<T>(prod);
    const T err = pmag * (exp(tau) - T(1)) + pmag * T(2 * (n + 1)) * unit_roundoff<T>();
    if (!is_finite<T>(prod)) {
        throw NonConvergent("qpoch_inf: overflow");
    }
    return {prod, err, n};
}

/// Product of several (a_i; q)_inf.
template <Real T>
SeriesValue<T> qpoch_inf(std::initializer_list<complex_t<T>> args, const QBase<T>& qb, const T& eps) {
    ProductAccumulator<T> acc;
    for (const auto& a : args) {
        acc.mul(qpoch_inf(a, qb, eps));
    }
    return acc.result();
}

/// theta(x) = (x; q)_inf (q/x; q)_inf.
template <Real T>
SeriesValue<T> theta(const complex_t<T>& x, const QBase<T>& qb, const T& eps) {
    if (cabs<T>(x) == T(0)) {
        throw PoleAtX("theta is undefined at x = 0");
    }
    const auto lo = qpoch_inf(x, qb, eps);
    const auto hi = qpoch_inf(complex_t<T>(qb.value()) / x, qb, eps);
    const T err = cabs<T>(lo.value) * hi.err_bound + cabs<T>(hi.value) * lo.err_bound +
                  lo.err_bound * hi.err_bound;
    return {lo.value * hi.value, err, lo.terms_used + hi.terms_used};
}

/// Relative residual of theta(q^k x) = q^{-k(k-1)/2} (-x)^{-k} theta(x).
template <Real T>
T theta_shift_check(const complex_t<T>& x, int k, const QBase<T>& qb, T eps = default_eps<T>()) {
    const T q = qb.value();
    const auto base = theta(x, qb, eps);
    const T scale = cabs<T>(base.value);
    if (!(scale > T(1e3) * base.err_bound) || !(scale > T(0))) {
        throw NearZeroTheta("theta(x) vanishes to working precision; relative residual undefined");
    }
    const auto shifted = theta(x * ipow(q, k), qb, eps);
    const long long kk = k;
    const T qpow = ipow(q, -(kk * (kk - 1)) / 2);
    const complex_t<T> rhs = base.value * qpow * ipow(-x, -kk);
    return cabs<T>(shifted.value - rhs) / cabs<T>(rhs);
}

namespace detail {

constexpr int max_series_terms = 100000;

/// Exponent n >= 0 if a = q^{-n} to within a few ulps (the series terminates).
template <Real T>
std::optional<int> terminating_index(const complex_t<T>& a, const T& q) {
    const auto m = lattice_exponent<T>(a, q, T(64) * unit_roundoff<T>());
    if (m && *m <= 0) {
        return static_cast<int>(-*m);
    }
    return std::nullopt;
}

/// Index m >= 0 if b = q^{-m} within 1e-10 (a pole of the term ratio).
template <Real T>
std::optional<int> lower_pole_index(const complex_t<T>& b, const T& q) {
    const auto m = lattice_exponent<T>(b, q, T(1e-10));
    if (m && *m <= 0) {
        return static_cast<int>(-*m);
    }
    return std::nullopt;
}

/// Core summation shared by r+1phi_r and 8W7. `well_poised` carries the
/// parameter of the extra factor (1 - A q^{2k}) / (1 - A), when present.
template <Real T>
SeriesValue<T> sum_hypergeometric(std::span<const complex_t<T>> upper,
                                  std::span<const complex_t<T>> lower, const QBase<T>& qb,
                                  const complex_t<T>& z, const T& eps,
                                  const std::optional<complex_t<T>>& well_poised,
                                  const char* name) {
    using std::abs;
    const T q = qb.value();
    const T u = unit_roundoff<T>();

    std::optional<int> stop;
    for (const auto& a : upper) {
        if (auto n = terminating_index<T>(a, q)) {
            stop = stop ? std::min(*stop, *n) : *n;
        }
    }
    for (const auto& b : lower) {
        if (auto m = lower_pole_index<T>(b, q); m && (!stop || *m < *stop)) {
            throw PoleInLowerParams(std::string(name) + ": lower parameter lies on q^{-m}, m = " +
                                    std::to_string(*m));
        }
    }
    if (!stop && !(cabs<T>(z) < T(1))) {
        throw NonConvergent(std::string(name) + ": |z| >= 1 and the series does not terminate");
    }
    const T zmag = cabs<T>(z);
    const T wp_mag = well_poised ? cabs<T>(*well_poised) : T(0);
    const complex_t<T> wp_den = well_poised ? complex_t<T>(1) - *well_poised : complex_t<T>(1);
    if (well_poised && cabs<T>(wp_den) == T(0)) {
        throw PoleInParams(std::string(name) + ": leading parameter equals 1");
    }
    const int per_term_ops = 2 * static_cast<int>(upper.size() + lower.size()) + 6;

    CompensatedComplexSum<T> sum;
    T abs_sum(0);
    T weighted_abs(0);
    complex_t<T> base(1);  // (upper)_k z^k / (q, lower)_k
    T qk(1);
    int k = 0;
    T tail(0);
    while (true) {
        complex_t<T> term = base;
        if (well_poised) {
            term *= (complex_t<T>(1) - *well_poised * qk * qk) / wp_den;
        }
        sum.add(term);
        const T tmag = cabs<T>(term);
        abs_sum += tmag;
        weighted_abs += tmag * T(1 + per_term_ops * k);
        if (!is_finite<T>(term)) {
            throw NonConvergent(std::string(name) + ": overflow in series terms");
        }
        if (stop && k == *stop) {
            tail = T(0);
            break;
        }
        // ratio bound for every later step j >= k
        if (!stop && k >= 1) {
            T num(1);
            T den(T(1) - qk * q);
            bool bounded = true;
            for (const auto& a : upper) {
                num *= T(1) + cabs<T>(a) * qk;
            }
            for (const auto& b : lower) {
                const T bq = cabs<T>(b) * qk;
                if (bq >= T(1)) {
                    bounded = false;
                    break;
                }
                den *= T(1) - bq;
            }
            T rho = bounded ? zmag * num / den : T(2);
            if (well_poised && bounded) {
                const T lo = wp_mag * qk * qk;
                rho *= lo < T(1) ? (T(1) + lo * q * q) / (T(1) - lo) : T(2);
            }
            if (rho < T(1)) {
                const T bound = tmag * rho / (T(1) - rho);
                const T scale = cabs<T>(sum.value());
                if (bound <= eps * scale || bound <= u * abs_sum * T(0.5) || tmag == T(0)) {
                    tail = bound;
                    break;
                }
            }
        }
        complex_t<T> num(1);
        complex_t<T> den(T(1) - qk * q);
        for (const auto& a : upper) {
            num *= complex_t<T>(1) - a * qk;
        }
        for (const auto& b : lower) {
            den *= complex_t<T>(1) - b * qk;
        }
        base = base * num / den * z;
        qk *= q;
        ++k;
        if (k > max_series_terms) {
            throw NonConvergent(std::string(name) + ": term budget exhausted");
        }
    }
    return {sum.value(), tail + u * weighted_abs, k + 1};
}

}  // namespace detail

/// r+1 phi r (upper; lower; q, z) = sum_k (upper; q)_k / (q, lower; q)_k z^k.
template <Real T>
SeriesValue<T> phi_series(std::span<const complex_t<T>> upper, std::span<const complex_t<T>> lower,
                          const QBase<T>& qb, const complex_t<T>& z, const T& eps) {
    if (!(eps > T(0))) {
        throw InvalidParameters("eps must be positive");
    }
    return detail::sum_hypergeometric<T>(upper, lower, qb, z, eps, std::nullopt, "phi_series");
}

template <Real T>
SeriesValue<T> phi_series(std::initializer_list<complex_t<T>> upper,
                          std::initializer_list<complex_t<T>> lower, const QBase<T>& qb,
                          const complex_t<T>& z, const T& eps) {
    return phi_series<T>(std::span<const complex_t<T>>(upper.begin(), upper.size()),
                         std::span<const complex_t<T>>(lower.begin(), lower.size()), qb, z, eps);
}

/// Very well poised 8W7(a; b, c, d, e, f; q, z).
template <Real T>
SeriesValue<T> w87(const complex_t<T>& a, const complex_t<T>& b, const complex_t<T>& c,
                   const complex_t<T>& d, const complex_t<T>& e, const complex_t<T>& f,
                   const QBase<T>& qb, const complex_t<T>& z, const T& eps) {
    if (!(eps > T(0))) {
        throw InvalidParameters("eps must be positive");
    }
    const T q = qb.value();
    const complex_t<T> upper[] = {a, b, c, d, e, f};
    std::vector<complex_t<T>> lower;
    for (const auto& p : {b, c, d, e, f}) {
        if (cabs<T>(p) == T(0)) {
            throw PoleInParams("w87: zero numerator parameter");
        }
        lower.push_back(q * a / p);
    }
    for (const auto& l : lower) {
        if (auto m = detail::lower_pole_index<T>(l, q)) {
            bool terminates_first = false;
            for (const auto& p : upper) {
                if (auto n = detail::terminating_index<T>(p, q); n && *n <= *m) {
                    terminates_first = true;
                }
            }
            if (!terminates_first) {
                throw PoleInParams("w87: denominator parameter lies on q^{-m}, m = " + std::to_string(*m));
            }
        }
    }
    return detail::sum_hypergeometric<T>(upper, lower, qb, z, eps, a, "w87");
}

}  // namespace awft

#endif  // AWFT_QSERIES_HPP
