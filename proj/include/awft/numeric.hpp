// Scalar plumbing shared by every kernel: the double / wide-float pair,
// complex aliases, compensated summation and q-lattice proximity tests.
#ifndef AWFT_NUMERIC_HPP
#define AWFT_NUMERIC_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <optional>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

namespace awft {

namespace bmp = boost::multiprecision;

/// 50 significant decimal digits, software arithmetic. Used as the oracle
/// precision for identity checks whose direct series suffer cancellation.
using wide = bmp::number<bmp::cpp_bin_float<50>, bmp::et_off>;
using wide_complex = bmp::number<bmp::complex_adaptor<bmp::cpp_bin_float<50>>, bmp::et_off>;

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<double> {
    using complex = std::complex<double>;
};

template <>
struct scalar_traits<wide> {
    using complex = wide_complex;
};

template <class T>
concept Real = requires { typename scalar_traits<T>::complex; };

template <class T>
using complex_t = typename scalar_traits<T>::complex;

template <Real T>
inline T unit_roundoff() {
    return std::numeric_limits<T>::epsilon();
}

/// Default series tolerance: a few ulps of the working precision.
template <Real T>
inline T default_eps() {
    return T(4) * std::numeric_limits<T>::epsilon();
}

template <Real T>
inline T pi() {
    return boost::math::constants::pi<T>();
}

template <Real T>
inline double to_double(const T& x) {
    return static_cast<double>(x);
}

template <Real T>
inline complex_t<T> cplx(const T& re, const T& im = T(0)) {
    return complex_t<T>(re, im);
}

template <Real T>
inline T cabs(const complex_t<T>& z) {
    using std::abs;
    return T(abs(z));
}

template <Real T>
inline complex_t<T> cconj(const complex_t<T>& z) {
    return cplx<T>(z.real(), -z.imag());
}

template <Real T>
inline bool is_finite(const complex_t<T>& z) {
    using std::isfinite;
    using boost::multiprecision::isfinite;
    return isfinite(z.real()) && isfinite(z.imag());
}

template <Real T>
inline bool is_finite(const T& x) {
    using std::isfinite;
    using boost::multiprecision::isfinite;
    return isfinite(x);
}

template <Real T>
inline complex_t<T> unit_circle(const T& theta) {
    using std::cos;
    using std::sin;
    return cplx<T>(cos(theta), sin(theta));
}

/// z^n for integer n by repeated squaring.
template <class Z>
inline Z ipow(Z z, long long n) {
    if (n < 0) {
        return Z(1) / ipow(z, -n);
    }
    Z result(1);
    while (n > 0) {
        if (n & 1) {
            result *= z;
        }
        z *= z;
        n >>= 1;
    }
    return result;
}

/// Neumaier summation: error-free accumulation to about twice the working precision.
template <Real T>
class CompensatedSum {
public:
    void add(const T& x) {
        using std::abs;
        const T t = sum_ + x;
        if (abs(sum_) >= abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    T value() const { return sum_ + comp_; }

private:
    T sum_{0};
    T comp_{0};
};

template <Real T>
class CompensatedComplexSum {
public:
    void add(const complex_t<T>& z) {
        re_.add(z.real());
        im_.add(z.imag());
    }
    complex_t<T> value() const { return cplx<T>(re_.value(), im_.value()); }

private:
    CompensatedSum<T> re_;
    CompensatedSum<T> im_;
};

/// If z lies within relative distance rel_tol of q^m for an integer m, returns m.
template <Real T>
std::optional<long long> lattice_exponent(const complex_t<T>& z, const T& q, const T& rel_tol) {
    using std::abs;
    using std::log;
    using std::round;
    const T mag = cabs<T>(z);
    if (!(mag > T(0)) || !is_finite<T>(z)) {
        return std::nullopt;
    }
    if (z.real() <= T(0) || abs(z.imag()) > rel_tol * mag) {
        return std::nullopt;
    }
    const T m = round(log(z.real()) / log(q));
    if (abs(m) > T(1e6)) {
        return std::nullopt;
    }
    const long long mi = static_cast<long long>(to_double(m));
    const T qm = ipow(q, mi);
    if (cabs<T>(z - cplx<T>(qm)) <= rel_tol * qm) {
        return mi;
    }
    return std::nullopt;
}

/// Convert a double-precision complex into the working complex type.
template <Real T>
inline complex_t<T> from_double(const std::complex<double>& z) {
    return cplx<T>(T(z.real()), T(z.imag()));
}

template <Real T>
inline std::complex<double> to_double(const complex_t<T>& z) {
    return {to_double<T>(z.real()), to_double<T>(z.imag())};
}

}  // namespace awft

#endif  // AWFT_NUMERIC_HPP
