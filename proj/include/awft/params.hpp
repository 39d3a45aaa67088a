// Askey-Wilson parameter quintuple (a, b, c, d, t) with its base q, the
// admissible domain V and the duality involution.
#ifndef AWFT_PARAMS_HPP
#define AWFT_PARAMS_HPP

#include <sstream>
#include <string>
#include <vector>

#include "awft/qseries.hpp"

namespace awft {

template <Real T>
struct AWParams {
    T q{0.4};
    T a{0.8};
    T b{0.6};
    T c{0.5};
    T d{2.5};
    T t{-2};

    QBase<T> base() const { return QBase<T>(q); }

    template <Real U>
    AWParams<U> cast() const {
        return {U(to_double(q)), U(to_double(a)), U(to_double(b)),
                U(to_double(c)), U(to_double(d)), U(to_double(t))};
    }

    /// The standard test point used throughout the test-suite and as the CLI default.
    static AWParams standard() { return {T(0.4), T(0.8), T(0.6), T(0.5), T(2.5), T(-2)}; }

    std::string describe() const {
        std::ostringstream os;
        os.precision(17);
        os << "(q=" << to_double(q) << ", a=" << to_double(a) << ", b=" << to_double(b)
           << ", c=" << to_double(c) << ", d=" << to_double(d) << ", t=" << to_double(t) << ")";
        return os.str();
    }
};

struct VMembership {
    bool member{true};
    std::vector<std::string> violations;
};

/// Checks the inequalities cutting out V:
///   t < 0,  0 < b, c <= a < d/q,  bd, cd >= q,  ab, ac < 1.
template <Real T>
VMembership validate_V(const AWParams<T>& p) {
    VMembership out;
    auto require = [&out](bool ok, const char* what) {
        if (!ok) {
            out.member = false;
            out.violations.emplace_back(what);
        }
    };
    require(p.q > T(0) && p.q < T(1), "0 < q < 1");
    require(p.t < T(0), "t < 0");
    require(p.b > T(0), "b > 0");
    require(p.c > T(0), "c > 0");
    require(p.b <= p.a, "b <= a");
    require(p.c <= p.a, "c <= a");
    require(p.a < p.d / p.q, "a < d/q");
    require(p.b * p.d >= p.q, "bd >= q");
    require(p.c * p.d >= p.q, "cd >= q");
    require(p.a * p.b < T(1), "ab < 1");
    require(p.a * p.c < T(1), "ac < 1");
    return out;
}

/// Dual parameters: a~ = sqrt(abcd/q), b~ = ab/a~, c~ = ac/a~, d~ = ad/a~,
/// t~ = 1/(q a d t). The map is an involution and preserves V.
template <Real T>
AWParams<T> dualize(const AWParams<T>& p) {
    using std::sqrt;
    const T radicand = p.a * p.b * p.c * p.d / p.q;
    if (!(radicand > T(0))) {
        throw InvalidParameters("dualize: abcd/q must be positive");
    }
    if (p.t == T(0)) {
        throw InvalidParameters("dualize: t must be nonzero");
    }
    const T at = sqrt(radicand);
    return {p.q, at, p.a * p.b / at, p.a * p.c / at, p.a * p.d / at, T(1) / (p.q * p.a * p.d * p.t)};
}

}  // namespace awft

#endif  // AWFT_PARAMS_HPP
