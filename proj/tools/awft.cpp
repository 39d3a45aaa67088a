// awft: command-line front end for the Askey-Wilson function transform.
//
//   awft eval --kind phi --gamma 0.6,0.8 --x 1.3
//   awft dual --format json
//   awft weights --format csv --out weights.csv
//   awft transform --atom minus:1=1 --bump 0.785,2.356
//   awft verify --suite all
//
// Exit status: 0 success, 1 verification failure, 2 invalid config or parameters.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "awft/awft.hpp"

namespace {

using awft::io::json;
using C = std::complex<double>;

enum Exit { ok = 0, verification_failed = 1, invalid_input = 2 };

struct Options {
    std::string config;
    std::optional<double> q, a, b, c, d, t, eps;
    std::optional<int> quad_points, k_min, dual_k_min;
    std::string out;
    std::string format{"json"};
    std::string fault;
};

C parse_complex(const std::string& s) {
    std::istringstream in(s);
    double re = 0, im = 0;
    char sep = 0;
    in >> re;
    if (in.fail()) {
        throw awft::InvalidParameters("cannot parse complex number '" + s + "'");
    }
    if (in >> sep) {
        if (sep != ',' || !(in >> im)) {
            throw awft::InvalidParameters("complex numbers are written RE or RE,IM: '" + s + "'");
        }
    }
    return {re, im};
}

awft::RunConfig resolve_config(const Options& o) {
    awft::RunConfig cfg;
    std::string path = o.config;
    if (path.empty()) {
        if (const char* env = std::getenv("AWFT_CONFIG"); env && *env) {
            path = env;
        }
    }
    if (!path.empty()) {
        awft::io::apply_config(awft::io::load_json_file(path), cfg);
    }
    auto set = [](auto& dst, const auto& src) {
        if (src) {
            dst = *src;
        }
    };
    set(cfg.params.q, o.q);
    set(cfg.params.a, o.a);
    set(cfg.params.b, o.b);
    set(cfg.params.c, o.c);
    set(cfg.params.d, o.d);
    set(cfg.params.t, o.t);
    set(cfg.eps, o.eps);
    set(cfg.quad_points, o.quad_points);
    set(cfg.k_min, o.k_min);
    set(cfg.dual_k_min, o.dual_k_min);
    if (!o.fault.empty()) {
        const auto f = awft::parse_fault(o.fault);
        if (!f) {
            throw awft::InvalidParameters("unrecognised --fault-inject target '" + o.fault + "'");
        }
        cfg.fault = *f;
    }
    if (!(cfg.eps > 0 && cfg.eps < 1)) {
        throw awft::InvalidParameters("eps must lie in (0, 1)");
    }
    if (cfg.quad_points < 0 || cfg.quad_points == 1) {
        throw awft::InvalidParameters("quad_points must be 0 (recommended) or >= 2");
    }
    return cfg;
}

// Aborts with the violation list unless the parameters lie in V.
void require_V(const awft::AWParams<double>& p) {
    const auto v = awft::validate_V(p);
    if (!v.member) {
        std::string msg = "parameters outside V:";
        for (const auto& s : v.violations) {
            msg += " [" + s + "]";
        }
        throw awft::InvalidParameters(msg);
    }
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
        throw awft::InvalidParameters("cannot write " + o.out);
    }
    f << text;
}

std::string fmt(double x) { return awft::io::format_double(x); }

// ---- eval

struct EvalArgs {
    std::string kind;
    std::string gamma{"1"};
    std::string x{"1"};
    std::optional<int> x_k;
    std::optional<int> gamma_plus;
    std::optional<int> gamma_minus;
    int n{0};
    std::string rep{"auto"};
};

awft::Representation parse_rep(const std::string& s) {
    if (s == "auto") return awft::Representation::automatic;
    if (s == "8W7") return awft::Representation::very_well_poised;
    if (s == "two-4phi3") return awft::Representation::two_phi43;
    throw awft::InvalidParameters("unknown representation '" + s + "'");
}

int run_eval(const Options& o, const EvalArgs& e) {
    const auto cfg = resolve_config(o);
    const auto& p = cfg.params;
    require_V(p);
    const auto dp = awft::dualize(p);

    const auto x = e.x_k ? awft::Point<double>::minus(*e.x_k, p) : awft::Point<double>::at(parse_complex(e.x));
    auto gamma = awft::Point<double>::at(parse_complex(e.gamma));
    if (e.gamma_plus) {
        gamma = awft::Point<double>::plus(*e.gamma_plus, dp);
    } else if (e.gamma_minus) {
        gamma = awft::Point<double>::minus(*e.gamma_minus, dp);
    }

    C value;
    double err = 0;
    std::string rep = "direct";
    json point;
    if (e.kind == "phi") {
        const auto r = parse_rep(e.rep);
        awft::KernelValue<double> kv;
        if (r == awft::Representation::automatic) {
            kv = awft::Kernel<double>(p, cfg.eps)(gamma, x);
        } else {
            kv = awft::aw_function<double>(gamma.z, x.z, p, r, cfg.eps);
        }
        value = kv.value;
        err = kv.err_bound;
        rep = awft::to_string(kv.representation);
        point = {{"gamma", awft::io::complex_to_json(gamma.z)}, {"x", awft::io::complex_to_json(x.z)}};
    } else if (e.kind == "poly") {
        if (e.n < 0) {
            throw awft::InvalidParameters("--n must be >= 0");
        }
        value = awft::aw_polynomial<double>(e.n, x.z, p);
        rep = "terminating 4phi3";
        point = {{"n", e.n}, {"x", awft::io::complex_to_json(x.z)}};
    } else if (e.kind == "c") {
        const auto v = awft::c_function<double>(gamma.z, p, cfg.eps);
        value = v.value;
        err = v.err_bound;
        rep = "infinite products";
        point = {{"gamma", awft::io::complex_to_json(gamma.z)}};
    } else if (e.kind == "weightW" || e.kind == "weightDelta") {
        const auto v = e.kind == "weightW" ? awft::weight_W<double>(x.z, p, cfg.eps)
                                           : awft::weight_Delta<double>(x.z, p, cfg.eps);
        value = v.value;
        err = v.err_bound;
        rep = "infinite products";
        point = {{"x", awft::io::complex_to_json(x.z)}};
    } else if (e.kind == "theta") {
        const auto v = awft::theta<double>(x.z, p.base(), cfg.eps);
        value = v.value;
        err = v.err_bound;
        rep = "infinite products";
        point = {{"x", awft::io::complex_to_json(x.z)}};
    } else {
        throw awft::InvalidParameters("unknown --kind '" + e.kind + "'");
    }

    if (o.format == "csv") {
        emit(o, "kind,value_re,value_im,err_bound,representation\n" + e.kind + "," + fmt(value.real()) + "," +
                    fmt(value.imag()) + "," + fmt(err) + "," + rep + "\n");
    } else {
        json j{{"kind", e.kind},
               {"params", awft::io::to_json(p)},
               {"point", point},
               {"value", {{"re", value.real()}, {"im", value.imag()}}},
               {"err_bound", err},
               {"representation", rep}};
        emit(o, awft::io::dump(j));
    }
    return ok;
}

// ---- dual

int run_dual(const Options& o) {
    const auto cfg = resolve_config(o);
    const auto& p = cfg.params;
    require_V(p);
    const auto dp = awft::dualize(p);
    const auto v = awft::validate_V(dp);
    if (o.format == "csv") {
        std::string s = "q,a,b,c,d,t,in_V\n";
        s += fmt(dp.q) + "," + fmt(dp.a) + "," + fmt(dp.b) + "," + fmt(dp.c) + "," + fmt(dp.d) + "," + fmt(dp.t) +
             "," + (v.member ? "true" : "false") + "\n";
        emit(o, s);
    } else {
        emit(o, awft::io::dump(json{{"params", awft::io::to_json(p)},
                                    {"dual", awft::io::to_json(dp)},
                                    {"dual_in_V", awft::io::to_json(v)}}));
    }
    return v.member ? ok : verification_failed;
}

// ---- weights

int run_weights(const Options& o, bool dual) {
    const auto cfg = resolve_config(o);
    require_V(cfg.params);
    const awft::Measure<double> m(dual ? cfg.dual_measure_spec() : cfg.measure_spec());
    if (o.format == "csv") {
        emit(o, awft::io::density_csv(m) + "\n" + awft::io::atoms_csv(m));
    } else {
        emit(o, awft::io::dump(awft::io::weights_json(m)));
    }
    return ok;
}

// ---- transform

struct TransformArgs {
    std::vector<std::string> atoms;
    std::string bump;
};

awft::TestFunction<double> build_test_function(const TransformArgs& ta) {
    awft::TestFunction<double> f;
    for (const auto& s : ta.atoms) {
        const auto eq = s.find('=');
        if (eq == std::string::npos) {
            throw awft::InvalidParameters("--atom expects [plus:|minus:]K=VALUE, got '" + s + "'");
        }
        std::string key = s.substr(0, eq);
        awft::Sector sector = awft::Sector::minus;
        if (key.rfind("plus:", 0) == 0) {
            sector = awft::Sector::plus;
            key = key.substr(5);
        } else if (key.rfind("minus:", 0) == 0) {
            key = key.substr(6);
        }
        int k = 0;
        try {
            std::size_t used = 0;
            k = std::stoi(key, &used);
            if (used != key.size()) {
                throw std::invalid_argument(key);
            }
        } catch (const std::exception&) {
            throw awft::InvalidParameters("bad atom index in '" + s + "'");
        }
        f.discrete[{sector, k}] = parse_complex(s.substr(eq + 1));
    }
    if (!ta.bump.empty()) {
        const C lh = parse_complex(ta.bump);
        if (!(0 <= lh.real() && lh.real() < lh.imag() && lh.imag() <= M_PI)) {
            throw awft::InvalidParameters("--bump expects LO,HI with 0 <= LO < HI <= pi");
        }
        f.circle = awft::suites::bump(lh.real(), lh.imag()).circle;
    }
    if (f.discrete.empty() && !f.circle) {
        throw awft::InvalidParameters("transform needs at least one --atom or a --bump");
    }
    return f;
}

int run_transform(const Options& o, const TransformArgs& ta) {
    const auto cfg = resolve_config(o);
    require_V(cfg.params);
    const auto f = build_test_function(ta);
    const awft::Transform<double> tf(cfg.measure_spec(), cfg.dual_k_min);
    const auto Ff = tf.forward(f);
    const auto& dn = tf.dual_measure().nodes();

    const auto report = awft::verify_plancherel("plancherel", "<Ff, Ff> over dual measure equals <f, f>", f, f, tf,
                                                f.circle ? 1e-3 : 1e-5);
    if (o.format == "csv") {
        std::string s = "sector,index,gamma_re,gamma_im,mass,value_re,value_im\n";
        for (std::size_t i = 0; i < dn.size(); ++i) {
            s += std::string(awft::to_string(dn[i].sector)) + "," + std::to_string(dn[i].index) + "," +
                 fmt(dn[i].point.z.real()) + "," + fmt(dn[i].point.z.imag()) + "," + fmt(dn[i].mass) + "," +
                 fmt(Ff.values[i].real()) + "," + fmt(Ff.values[i].imag()) + "\n";
        }
        emit(o, s);
    } else {
        json rows = json::array();
        for (std::size_t i = 0; i < dn.size(); ++i) {
            rows.push_back(json{{"sector", awft::to_string(dn[i].sector)},
                                {"index", dn[i].index},
                                {"gamma", awft::io::complex_to_json(dn[i].point.z)},
                                {"mass", dn[i].mass},
                                {"value", awft::io::complex_to_json(Ff.values[i])}});
        }
        emit(o, awft::io::dump(json{{"spec", awft::io::to_json(cfg.measure_spec())},
                                    {"dual_k_min", cfg.dual_k_min},
                                    {"isometry", awft::io::to_json(report)},
                                    {"values", rows}}));
    }
    return report.pass ? ok : verification_failed;
}

// ---- verify

int run_verify(const Options& o, const std::string& suite) {
    const auto cfg = resolve_config(o);
    require_V(cfg.params);
    const auto reports = awft::run_suite(suite, cfg);
    if (o.format == "csv") {
        emit(o, awft::io::reports_csv(reports));
    } else {
        emit(o, awft::io::dump(awft::io::to_json(reports)));
    }
    std::size_t failed = 0;
    for (const auto& r : reports) {
        failed += r.pass ? 0 : 1;
    }
    std::cerr << suite << ": " << reports.size() - failed << "/" << reports.size() << " passed\n";
    return failed == 0 ? ok : verification_failed;
}

void error_out(const std::string& kind, std::string message) {
    if (message.rfind(kind + ": ", 0) == 0) {
        message.erase(0, kind.size() + 2);
    }
    std::cerr << json{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Askey-Wilson function transform"};
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    app.add_option("--config", o.config, "flat JSON config file (default: $AWFT_CONFIG)");
    app.add_option("--q", o.q, "base q");
    app.add_option("--a", o.a, "parameter a");
    app.add_option("--b", o.b, "parameter b");
    app.add_option("--c", o.c, "parameter c");
    app.add_option("--d", o.d, "parameter d");
    app.add_option("--t", o.t, "parameter t");
    app.add_option("--eps", o.eps, "series and truncation tolerance");
    app.add_option("--quad-points", o.quad_points, "circle quadrature nodes (0: recommended)");
    app.add_option("--k-min", o.k_min, "lowest S_- index kept");
    app.add_option("--dual-k-min", o.dual_k_min, "lowest dual S_- index kept");
    app.add_option("--out", o.out, "write output to PATH");
    app.add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--fault-inject", o.fault, "testing: perturb K, c0, M or weight[:sector:k] by 1%")
        ->group("");

    EvalArgs ea;
    auto* eval = app.add_subcommand("eval", "evaluate a single quantity");
    eval->add_option("--kind", ea.kind, "phi|poly|c|weightW|weightDelta|theta")
        ->required()
        ->check(CLI::IsMember({"phi", "poly", "c", "weightW", "weightDelta", "theta"}));
    eval->add_option("--gamma", ea.gamma, "spectral point RE[,IM]");
    eval->add_option("--x", ea.x, "geometric point RE[,IM]");
    eval->add_option("--x-k", ea.x_k, "x = d t q^K on the q-line");
    auto* gp = eval->add_option("--gamma-plus", ea.gamma_plus, "gamma = a~ q^K");
    eval->add_option("--gamma-minus", ea.gamma_minus, "gamma = d~ t~ q^K")->excludes(gp);
    eval->add_option("--n", ea.n, "polynomial degree");
    eval->add_option("--rep", ea.rep, "auto|8W7|two-4phi3")->check(CLI::IsMember({"auto", "8W7", "two-4phi3"}));

    auto* dual = app.add_subcommand("dual", "print the dual parameters and their V-membership");

    bool weights_dual = false;
    auto* weights = app.add_subcommand("weights", "dump circle density and atom masses");
    weights->add_flag("--dual", weights_dual, "use the dual parameters");

    TransformArgs ta;
    auto* transform = app.add_subcommand("transform", "apply the transform to a test function");
    transform->add_option("--atom", ta.atoms, "[plus:|minus:]K=VALUE, repeatable");
    transform->add_option("--bump", ta.bump, "cos^2 bump on theta in [LO,HI]");

    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "run identity checks");
    verify->add_option("--suite", suite)->check(CLI::IsMember(
        {"eigen", "duality", "cexpansion", "wronskian", "ortho", "norm", "plancherel-d", "plancherel-c", "mixed",
         "constants", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        error_out("UsageError", e.what());
        return invalid_input;
    }

    try {
        if (*eval) return run_eval(o, ea);
        if (*dual) return run_dual(o);
        if (*weights) return run_weights(o, weights_dual);
        if (*transform) return run_transform(o, ta);
        if (*verify) return run_verify(o, suite);
    } catch (const awft::InvalidParameters& e) {
        error_out(e.kind(), e.what());
        return invalid_input;
    } catch (const awft::NegativeRadicand& e) {
        error_out(e.kind(), e.what());
        return invalid_input;
    } catch (const awft::PoleAtX& e) {
        error_out(e.kind(), e.what());
        return invalid_input;
    } catch (const awft::PoleAtGamma& e) {
        error_out(e.kind(), e.what());
        return invalid_input;
    } catch (const awft::NotInSupport& e) {
        error_out(e.kind(), e.what());
        return invalid_input;
    } catch (const awft::RepresentationUnavailable& e) {
        error_out(e.kind(), e.what());
        return invalid_input;
    } catch (const awft::Error& e) {
        error_out(e.kind(), e.what());
        return verification_failed;
    } catch (const std::exception& e) {
        error_out("InternalError", e.what());
        return verification_failed;
    }
    return invalid_input;
}
