// JSON and CSV serialization for reports, measure specs, weight dumps and
// run configuration.
#ifndef AWFT_IO_HPP
#define AWFT_IO_HPP

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "awft/verification.hpp"

namespace awft::io {

using json = nlohmann::ordered_json;

/// Shortest round-trip decimal form of a double.
inline std::string format_double(double x) {
    char buf[32];
    for (int prec = 15; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, x);
        if (std::strtod(buf, nullptr) == x) {
            break;
        }
    }
    return buf;
}

/// A real number when the imaginary part is negligible, else {re, im}.
inline json complex_to_json(std::complex<double> z) {
    if (std::abs(z.imag()) <= 1e-14 * std::abs(z.real()) || z.imag() == 0.0) {
        return z.real();
    }
    return json{{"re", z.real()}, {"im", z.imag()}};
}

inline json to_json(const AWParams<double>& p) {
    return json{{"q", p.q}, {"a", p.a}, {"b", p.b}, {"c", p.c}, {"d", p.d}, {"t", p.t}};
}

inline json to_json(const TruncationInfo& t) {
    return json{{"k_min", t.k_min}, {"dual_k_min", t.dual_k_min}, {"quad_points", t.quad_points}, {"eps", t.eps}};
}

inline json to_json(const VerificationReport& r) {
    return json{{"identity", r.identity},
                {"paper_ref", r.paper_ref},
                {"lhs", complex_to_json(r.lhs)},
                {"rhs", complex_to_json(r.rhs)},
                {"residual", r.residual},
                {"tolerance", r.tolerance},
                {"pass", r.pass},
                {"truncation", to_json(r.truncation)}};
}

inline json to_json(const MeasureSpec<double>& s) {
    json j{{"params", to_json(s.params)}, {"quad_points", s.quad_points}, {"k_min", s.k_min}, {"eps", s.eps}};
    if (s.fault.target != FaultInjection::Target::none) {
        j["fault"] = to_string(s.fault);
    }
    return j;
}

inline json to_json(const VMembership& v) {
    return json{{"member", v.member}, {"violations", v.violations}};
}

inline json to_json(const std::vector<VerificationReport>& rs) {
    json arr = json::array();
    for (const auto& r : rs) {
        arr.push_back(to_json(r));
    }
    return arr;
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline std::string reports_csv(const std::vector<VerificationReport>& rs) {
    std::ostringstream os;
    os << "identity,lhs_re,lhs_im,rhs_re,rhs_im,residual,tolerance,pass\n";
    for (const auto& r : rs) {
        std::string id = r.identity;
        for (auto& ch : id) {
            if (ch == ',') {
                ch = ';';
            }
        }
        os << id << ',' << format_double(r.lhs.real()) << ',' << format_double(r.lhs.imag()) << ','
           << format_double(r.rhs.real()) << ',' << format_double(r.rhs.imag()) << ','
           << format_double(r.residual) << ',' << format_double(r.tolerance) << ',' << (r.pass ? "true" : "false")
           << '\n';
    }
    return os.str();
}

/// Rows (theta, density) on the circle quadrature nodes.
inline std::string density_csv(const Measure<double>& m) {
    std::ostringstream os;
    os << "theta,density\n";
    for (const auto& n : m.nodes()) {
        if (n.sector == Sector::circle) {
            os << format_double(n.theta) << ',' << format_double(m.density(n.theta)) << '\n';
        }
    }
    return os.str();
}

/// Rows (sector, k, x, 2 nu({x})) for the atoms of the truncated support.
inline std::string atoms_csv(const Measure<double>& m) {
    std::ostringstream os;
    os << "sector,k,x,mass\n";
    const auto s = m.support();
    for (const auto* part : {&s.plus, &s.minus}) {
        for (const auto& a : *part) {
            os << to_string(a.key.sector) << ',' << a.key.k << ',' << format_double(a.x) << ','
               << format_double(a.mass) << '\n';
        }
    }
    return os.str();
}

inline json weights_json(const Measure<double>& m) {
    json circle = json::array();
    for (const auto& n : m.nodes()) {
        if (n.sector == Sector::circle) {
            circle.push_back(json{{"theta", n.theta}, {"density", m.density(n.theta)}});
        }
    }
    json atoms = json::array();
    const auto s = m.support();
    for (const auto* part : {&s.plus, &s.minus}) {
        for (const auto& a : *part) {
            atoms.push_back(json{{"sector", to_string(a.key.sector)}, {"k", a.key.k}, {"x", a.x}, {"mass", a.mass}});
        }
    }
    const auto& c = m.constants();
    MeasureSpec<double> spec = m.spec();
    spec.quad_points = m.quad_points();
    return json{{"spec", to_json(spec)},
                {"constants", {{"K", c.K}, {"c0", c.c0}, {"M", c.M}}},
                {"circle", circle},
                {"atoms", atoms},
                {"minus_tail_mass", m.minus_tail_mass()}};
}

/// Applies the keys of a flat JSON object to a RunConfig. Unknown keys and
/// values of the wrong type raise InvalidParameters.
inline void apply_config(const json& j, RunConfig& cfg) {
    if (!j.is_object()) {
        throw InvalidParameters("config must be a flat JSON object");
    }
    auto number = [](const json& v, const std::string& key) {
        if (!v.is_number()) {
            throw InvalidParameters("config key '" + key + "' must be a number");
        }
        return v.get<double>();
    };
    auto integer = [](const json& v, const std::string& key) {
        if (!v.is_number_integer()) {
            throw InvalidParameters("config key '" + key + "' must be an integer");
        }
        return v.get<int>();
    };
    for (const auto& [key, v] : j.items()) {
        if (key == "q") cfg.params.q = number(v, key);
        else if (key == "a") cfg.params.a = number(v, key);
        else if (key == "b") cfg.params.b = number(v, key);
        else if (key == "c") cfg.params.c = number(v, key);
        else if (key == "d") cfg.params.d = number(v, key);
        else if (key == "t") cfg.params.t = number(v, key);
        else if (key == "eps") cfg.eps = number(v, key);
        else if (key == "quad_points") cfg.quad_points = integer(v, key);
        else if (key == "k_min") cfg.k_min = integer(v, key);
        else if (key == "dual_k_min") cfg.dual_k_min = integer(v, key);
        else throw InvalidParameters("unknown config key '" + key + "'");
    }
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidParameters("cannot read config file " + path);
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InvalidParameters("malformed config file " + path + ": " + e.what());
    }
}

inline json config_to_json(const RunConfig& cfg) {
    json j = to_json(cfg.params);
    j["eps"] = cfg.eps;
    j["quad_points"] = cfg.quad_points;
    j["k_min"] = cfg.k_min;
    j["dual_k_min"] = cfg.dual_k_min;
    return j;
}

}  // namespace awft::io

#endif  // AWFT_IO_HPP
