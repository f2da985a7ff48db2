// Command-line surface: evaluate the Eisenstein series over Q, run the
// verification suites, and emit q-expansion / omega / Whittaker tables.
// Exit codes: 0 pass, 1 verification failure, 2 usage or domain error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "eisq/eisenstein.hpp"
#include "eisq/field_invariants.hpp"
#include "eisq/fourier.hpp"
#include "eisq/lowering.hpp"
#include "eisq/omega_chf.hpp"
#include "eisq/test_function.hpp"

using eisq::Complex;
using json = nlohmann::ordered_json;

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// complex literals "a+bi", "a-bi", "bi", "i", "a"
Complex parse_complex(std::string t) {
    if (t.empty()) throw CLI::ValidationError("empty complex literal");
    if (t == "i") return {0.0, 1.0};
    if (t == "-i") return {0.0, -1.0};
    if (t.back() == 'i') {
        t.pop_back();
        // split at the last +/- that is not an exponent sign or leading
        for (int pos = int(t.size()) - 1; pos > 0; --pos) {
            const char c = t[pos];
            if ((c == '+' || c == '-') && t[pos - 1] != 'e' && t[pos - 1] != 'E') {
                const std::string res = t.substr(0, pos);
                std::string ims = t.substr(pos);
                if (ims == "+") ims = "1";
                if (ims == "-") ims = "-1";
                return {std::stod(res), std::stod(ims)};
            }
        }
        return {0.0, t.empty() ? 1.0 : std::stod(t)};
    }
    return {std::stod(t), 0.0};
}

struct RunConfig {
    eisq::EvalConfig eval;
    std::string format = "json";
    std::string out = "-";
    double tol_automorphy = 1e-8;
    double tol_funceq = 1e-6;
    double tol_poisson = 1e-10;
    double tol_whittaker = 1e-6;
    double tol_factorization = 1e-10;
};

void load_config_file(const std::string& path, RunConfig& rc) {
    std::ifstream in(path);
    if (!in) throw eisq::Error("io", "cannot open config file " + path);
    json j;
    in >> j;
    if (j.contains("target_abs_error")) rc.eval.target_abs_error = j["target_abs_error"];
    if (j.contains("radius_cap")) rc.eval.truncation_radius = j["radius_cap"];
    if (j.contains("quadrature_points")) rc.eval.quadrature_points = j["quadrature_points"];
    if (j.contains("format")) rc.format = j["format"];
    if (j.contains("out")) rc.out = j["out"];
    if (j.contains("tol_automorphy")) rc.tol_automorphy = j["tol_automorphy"];
    if (j.contains("tol_funceq")) rc.tol_funceq = j["tol_funceq"];
    if (j.contains("tol_poisson")) rc.tol_poisson = j["tol_poisson"];
    if (j.contains("tol_whittaker")) rc.tol_whittaker = j["tol_whittaker"];
    if (j.contains("tol_factorization")) rc.tol_factorization = j["tol_factorization"];
}

void emit(const RunConfig& rc, const std::string& text) {
    if (rc.out == "-" || rc.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(rc.out);
    if (!f) throw eisq::Error("io", "cannot open output file " + rc.out);
    f << text;
}

int fail_json(const eisq::Error& e) {
    json j;
    j["error"]["code"] = e.code();
    j["error"]["message"] = e.what();
    std::cout << j.dump() << '\n';
    return 2;
}

struct VerifyReport {
    bool all_pass = true;
    void row(const std::string& label, double residual, double tol) {
        const bool ok = residual <= tol;
        all_pass = all_pass && ok;
        std::printf("%s  %-52s residual=%11.3e  tol=%7.1e\n", ok ? "PASS" : "FAIL",
                    label.c_str(), residual, tol);
    }
    void row_bool(const std::string& label, bool ok, const std::string& detail) {
        all_pass = all_pass && ok;
        std::printf("%s  %-52s %s\n", ok ? "PASS" : "FAIL", label.c_str(),
                    detail.c_str());
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Eisenstein series over Q: evaluators, identity checks, tables"};
    app.require_subcommand(1);

    RunConfig rc;
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file (flags override it)");

    // ---- eval ----
    auto* eval = app.add_subcommand("eval", "evaluate E_cl(tau; s, k)");
    int ev_k = 4;
    std::string ev_s = "2", ev_tau = "i", ev_method = "direct", ev_residue = "0,0";
    long ev_level = 1;
    std::optional<double> ev_target;
    std::optional<long> ev_radius;
    eval->add_option("--k", ev_k, "weight k >= 1");
    eval->add_option("--s", ev_s, "spectral parameter (complex literal)");
    eval->add_option("--tau", ev_tau, "upper half-plane point, e.g. 0.5+2i or i");
    eval->add_option("--level", ev_level, "congruence level N");
    eval->add_option("--residue", ev_residue, "congruence class a,b");
    eval->add_option("--method", ev_method, "direct | primitive | completed");
    eval->add_option("--target-error", ev_target, "absolute error target");
    eval->add_option("--radius-cap", ev_radius, "lattice truncation cap");

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run an identity suite");
    std::string suite;
    verify->add_option("suite", suite,
                       "automorphy | functional-equation | poisson | whittaker | "
                       "almost-holomorphy | factorization")
        ->required();
    int vf_k = 4, vf_r = -1;
    std::string vf_s = "";
    std::optional<double> vf_t;
    verify->add_option("--k", vf_k, "weight");
    verify->add_option("--r", vf_r, "almost-holomorphy depth");
    verify->add_option("--s", vf_s, "spectral parameter");
    verify->add_option("--t", vf_t, "poisson scaling t");

    // ---- table ----
    auto* table = app.add_subcommand("table", "emit q-expansion / omega / whittaker tables");
    std::string kind;
    table->add_option("kind", kind, "qexp | omega | whittaker")->required();
    int tb_k = 4, tb_r = 0, tb_nmax = 5, tb_n = 0, tb_steps = 4;
    std::string tb_s = "2", tb_z = "2", tb_beta, tb_alpha, tb_branch = "first";
    double tb_ymin = 0.5, tb_ymax = 2.0;
    std::string tb_format, tb_out;
    table->add_option("--k", tb_k, "weight");
    table->add_option("--r", tb_r, "depth");
    table->add_option("--nmax", tb_nmax, "q-order");
    table->add_option("--s", tb_s, "spectral parameter");
    table->add_option("--z", tb_z, "omega first argument");
    table->add_option("--n", tb_n, "omega polynomial order");
    table->add_option("--beta", tb_beta, "omega beta (first-arg branch)");
    table->add_option("--alpha", tb_alpha, "omega alpha (second-arg branch)");
    table->add_option("--branch", tb_branch, "first | second");
    table->add_option("--ymin", tb_ymin, "whittaker table y start");
    table->add_option("--ymax", tb_ymax, "whittaker table y end");
    table->add_option("--steps", tb_steps, "whittaker table rows");
    table->add_option("--format", tb_format, "json | csv");
    table->add_option("--out", tb_out, "output path (default stdout)");

    std::optional<double> g_target;
    app.add_option("--target-error", g_target, "absolute error target");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!config_path.empty()) load_config_file(config_path, rc);
        if (g_target) rc.eval.target_abs_error = *g_target;

        if (eval->parsed()) {
            if (ev_target) rc.eval.target_abs_error = *ev_target;
            if (ev_radius) rc.eval.truncation_radius = *ev_radius;

            eisq::EisensteinParams params;
            params.k = ev_k;
            params.s = parse_complex(ev_s);
            const Complex tc = parse_complex(ev_tau);
            const eisq::TauPoint tau(tc.real(), tc.imag());

            eisq::TestFunctionSpec phi;
            phi.level = int(ev_level);
            phi.weight = ev_k;
            {
                const auto comma = ev_residue.find(',');
                if (comma == std::string::npos)
                    throw eisq::Error("usage", "--residue expects a,b");
                phi.residue_a = std::stol(ev_residue.substr(0, comma));
                phi.residue_b = std::stol(ev_residue.substr(comma + 1));
            }

            eisq::EvalResult res;
            if (ev_method == "direct")
                res = eisq::eval_direct(params, phi, tau, rc.eval);
            else if (ev_method == "primitive")
                res = eisq::eval_primitive(params, phi, tau, rc.eval);
            else if (ev_method == "completed")
                res = eisq::eval_completed(params, phi, tau, rc.eval);
            else
                throw eisq::Error("usage", "unknown method " + ev_method);

            json j;
            j["value"] = {res.value.real(), res.value.imag()};
            j["method"] = ev_method;
            j["certified_error"] = res.certified_error;
            emit(rc, j.dump());
            return 0;
        }

        if (verify->parsed()) {
            VerifyReport rep;
            eisq::TestFunctionSpec phi;
            phi.weight = vf_k;
            eisq::EisensteinParams params;
            params.k = vf_k;

            const std::vector<eisq::TauPoint> taus = {
                {0.0, 1.0}, {0.5, 1.0}, {0.3, 1.7}};

            if (suite == "automorphy") {
                params.s = vf_s.empty() ? Complex(0.5 * vf_k, 0) : parse_complex(vf_s);
                const std::array<std::array<long, 4>, 3> gammas = {
                    {{0, -1, 1, 0}, {1, 1, 0, 1}, {1, 0, 1, 1}}};
                const char* names[] = {"S", "T", "TS"};
                for (const auto& tau : taus)
                    for (size_t i = 0; i < gammas.size(); ++i) {
                        const double r = eisq::automorphy_residual(params, phi, tau,
                                                                   gammas[i], rc.eval);
                        rep.row("automorphy " + std::string(names[i]) + " tau=(" +
                                    fmt(tau.x) + "," + fmt(tau.y) + ")",
                                r, rc.tol_automorphy);
                    }
            } else if (suite == "functional-equation") {
                const std::vector<Complex> ss =
                    vf_s.empty() ? std::vector<Complex>{{2.0, 0.0}, {1.2, 0.7}, {0.5, 0.0}}
                                 : std::vector<Complex>{parse_complex(vf_s)};
                for (const Complex& s : ss) {
                    params.s = s;
                    const double r = eisq::functional_equation_residual(
                        params, phi, taus[0], rc.eval);
                    const double tol =
                        std::abs(s - 0.5) < 1e-12 ? 1e-10 : rc.tol_funceq;
                    rep.row("functional equation s=(" + fmt(s.real()) + "," +
                                fmt(s.imag()) + ")",
                            r, tol);
                }
            } else if (suite == "poisson") {
                const std::vector<double> ts =
                    vf_t ? std::vector<double>{*vf_t} : std::vector<double>{0.6, 1.0, 1.7};
                for (double t : ts) {
                    const double r = eisq::poisson_residual(phi, t, rc.eval);
                    rep.row("poisson k=" + std::to_string(vf_k) + " t=" + fmt(t), r,
                            rc.tol_poisson);
                }
            } else if (suite == "whittaker") {
                const int r_used = vf_r < 0 ? 0 : vf_r;
                params.s = Complex(0.5 * vf_k - r_used, 0.0);
                for (double y : {0.8, 1.5}) {
                    const Complex num = eisq::fourier_coefficient_numeric(
                        params, phi, eisq::FourierIndex(1), y, rc.eval);
                    const Complex closed =
                        eisq::whittaker_closed(params, eisq::TauPoint(0.0, y)) *
                        eisq::finite_whittaker_factor(eisq::FourierIndex(1), params.s,
                                                      phi);
                    const double rel = std::abs(num - closed) / std::abs(closed);
                    rep.row("whittaker k=" + std::to_string(vf_k) +
                                " r=" + std::to_string(r_used) + " y=" + fmt(y),
                            rel, rc.tol_whittaker);
                }
            } else if (suite == "almost-holomorphy") {
                const int r_used = vf_r < 0 ? 0 : vf_r;
                params.s = Complex(0.5 * vf_k - r_used, 0.0);
                eisq::EvalConfig inner = rc.eval;
                inner.target_abs_error = 1e-12;
                eisq::EisensteinParams p2 = params;
                eisq::TestFunctionSpec f2 = phi;
                auto fn = [p2, f2, inner](const eisq::TauPoint& t) {
                    return eisq::eval_completed(p2, f2, t, inner).value *
                           std::pow(t.y, -0.5 * p2.k);
                };
                const std::vector<eisq::TauPoint> probes = {{0.07, 0.9}, {-0.21, 1.15}};
                const int deg =
                    eisq::almost_holomorphy_degree(fn, vf_k, probes, 4, 1e-3);
                rep.row_bool("almost-holomorphy degree k=" + std::to_string(vf_k) +
                                 " r=" + std::to_string(r_used),
                             deg == r_used, "degree=" + std::to_string(deg));
            } else if (suite == "factorization") {
                params.s = vf_s.empty() ? Complex(0.5 * vf_k, 0) : parse_complex(vf_s);
                for (const auto& tau : taus) {
                    const Complex d = eisq::eval_direct(params, phi, tau, rc.eval).value;
                    const Complex pr =
                        eisq::eval_primitive(params, phi, tau, rc.eval).value;
                    rep.row("factorization tau=(" + fmt(tau.x) + "," + fmt(tau.y) + ")",
                            std::abs(d - pr) / std::abs(d), rc.tol_factorization);
                }
            } else {
                throw eisq::Error("usage", "unknown suite " + suite);
            }
            return rep.all_pass ? 0 : 1;
        }

        if (table->parsed()) {
            if (!tb_format.empty()) rc.format = tb_format;
            if (!tb_out.empty()) rc.out = tb_out;

            if (kind == "qexp") {
                const auto e =
                    eisq::q_expansion_nearly_holomorphic(tb_k, tb_r, tb_nmax, tb_r + 3,
                                                         rc.eval);
                emit(rc, rc.format == "csv" ? eisq::to_csv(e) : eisq::to_json(e));
            } else if (kind == "omega") {
                const Complex z = parse_complex(tb_z);
                Complex value;
                std::string branch;
                if (!tb_alpha.empty() || tb_branch == "second") {
                    const Complex alpha =
                        tb_alpha.empty() ? Complex(0, 0) : parse_complex(tb_alpha);
                    value = eisq::omega_polynomial(z, tb_n, alpha,
                                                   eisq::OmegaBranch::SecondArg);
                    branch = "second";
                } else {
                    const Complex beta =
                        tb_beta.empty() ? Complex(0, 0) : parse_complex(tb_beta);
                    value = eisq::omega_polynomial(z, tb_n, beta,
                                                   eisq::OmegaBranch::FirstArg);
                    branch = "first";
                }
                if (rc.format == "csv") {
                    emit(rc, "branch,n,re,im\n" + branch + "," + std::to_string(tb_n) +
                                 "," + fmt(value.real()) + "," + fmt(value.imag()) + "\n");
                } else {
                    json j;
                    j["branch"] = branch;
                    j["n"] = tb_n;
                    j["value"] = {value.real(), value.imag()};
                    emit(rc, j.dump());
                }
            } else if (kind == "whittaker") {
                eisq::EisensteinParams params;
                params.k = tb_k;
                params.s = parse_complex(tb_s);
                std::ostringstream os;
                os << "y,re,im\n";
                for (int i = 0; i < tb_steps; ++i) {
                    const double y =
                        tb_ymin + (tb_ymax - tb_ymin) * double(i) /
                                      double(std::max(1, tb_steps - 1));
                    const Complex w =
                        eisq::whittaker_closed(params, eisq::TauPoint(0.0, y));
                    os << fmt(y) << ',' << fmt(w.real()) << ',' << fmt(w.imag()) << '\n';
                }
                emit(rc, os.str());
            } else {
                throw eisq::Error("usage", "unknown table kind " + kind);
            }
            return 0;
        }
    } catch (const eisq::Error& e) {
        return fail_json(e);
    } catch (const std::exception& e) {
        return fail_json(eisq::Error("usage", e.what()));
    }
    return 2;
}
