// uniexp: unitary rational approximations of e^{i omega x} on [-1,1].
// Subcommands: best | interp | lawson | pade | curve | sweep | poles | check.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "uniexp/uniexp.hpp"

using json = nlohmann::ordered_json;
using namespace uniexp;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotConverged = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitUsage = 64;
constexpr int kExitIo = 74;

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

int thread_cap() {
    if (const char* env = std::getenv("UNIEXP_THREADS")) {
        int t = std::atoi(env);
        if (t >= 1) return t;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

template <class Fn>
void parallel_for(int count, Fn&& fn) {
    int workers = std::min(thread_cap(), count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (int i = w; i < count; i += workers) fn(i);
        });
    for (auto& t : pool) t.join();
}

json checks_json(const StructuralReport& rep, bool with_stability = true) {
    json c;
    c["unitarity_defect"] = rep.unitarity_defect;
    c["symmetry_defect"] = rep.symmetry_defect;
    if (with_stability) c["stability_ok"] = rep.stability_ok;
    return c;
}

json poles_json(const std::vector<Complex>& ps) {
    json p;
    p["re"] = json::array();
    p["im"] = json::array();
    for (const auto& s : ps) {
        p["re"].push_back(s.real());
        p["im"].push_back(s.imag());
    }
    return p;
}

json base_document(const std::string& method, int n, double omega) {
    json doc;
    doc["schema_version"] = "1";
    doc["method"] = method;
    doc["n"] = n;
    doc["omega"] = omega;
    return doc;
}

json document_from_best(const BestApproximation& r) {
    const auto& b = r.approximant;
    json doc = base_document("best", b.degree(), b.omega());
    doc["support_nodes"] = b.support_nodes();
    doc["rotated_weights"] = b.rotated_weights();
    doc["interpolation_nodes"] = r.interpolation_nodes;
    doc["equioscillation_points"] = r.equioscillation_points;
    doc["extrema_values"] = r.extrema_values;
    doc["poles"] = poles_json(poles(b));
    doc["max_error"] = r.max_error;
    doc["error_estimate"] = r.estimate;
    doc["pade_bound"] = pade_error_bound(b.degree(), b.omega());
    doc["iterations"] = r.iterations;
    doc["converged"] = r.converged;
    doc["deviation"] = r.deviation;
    doc["checks"] = checks_json(structural_checks(b, 1024));
    return doc;
}

json document_from_barycentric(const std::string& method, const UnitaryBarycentric& b,
                               std::optional<int> iterations = std::nullopt,
                               std::optional<std::vector<double>> nodes = std::nullopt) {
    json doc = base_document(method, b.degree(), b.omega());
    doc["support_nodes"] = b.support_nodes();
    doc["rotated_weights"] = b.rotated_weights();
    if (nodes) doc["interpolation_nodes"] = *nodes;
    doc["poles"] = poles_json(poles(b));
    doc["max_error"] = sup_error(make_evaluator(b), b.omega(), 4096).value;
    doc["error_estimate"] = best_error_estimate(b.degree(), b.omega());
    doc["pade_bound"] = pade_error_bound(b.degree(), b.omega());
    if (iterations) doc["iterations"] = *iterations;
    doc["checks"] = checks_json(structural_checks(b, 1024));
    return doc;
}

json document_from_pade(int n, double omega) {
    json doc = base_document("pade", n, omega);
    auto scaled = pade_poles(n);
    for (auto& s : scaled) s /= omega; // z-plane poles of x -> rhat(i omega x)
    doc["poles"] = poles_json(scaled);
    double sup = 0.0;
    for (int i = 0; i < 4097; ++i) {
        double x = -1.0 + 2.0 * i / 4096.0;
        sup = std::max(sup, std::abs(pade_error_series(n, Complex(0.0, omega * x))));
    }
    doc["max_error"] = sup;
    doc["error_estimate"] = best_error_estimate(n, omega);
    doc["pade_bound"] = pade_error_bound(n, omega);
    auto r = make_pade_evaluator(n, omega);
    double unit = 0.0, sym = 0.0;
    for (int i = 0; i < 1024; ++i) {
        double x = -1.0 + 2.0 * i / 1023.0;
        unit = std::max(unit, std::abs(std::abs(r(x)) - 1.0));
        sym = std::max(sym, std::abs(r(-x) - std::conj(r(x))));
    }
    bool stable = true;
    for (const auto& s : pade_poles(n))
        if (!(s.real() > 0.0)) stable = false;
    doc["checks"] = {{"unitarity_defect", unit}, {"symmetry_defect", sym}, {"stability_ok", stable}};
    return doc;
}

json document_from_cheb_quotient(int n, double omega) {
    json doc = base_document("cheb-quotient", n, omega);
    ChebQuotient q(n, omega);
    auto r = make_evaluator(q);
    doc["max_error"] = sup_error(r, omega, 4096).value;
    doc["error_estimate"] = best_error_estimate(n, omega);
    doc["pade_bound"] = pade_error_bound(n, omega);
    double unit = 0.0, sym = 0.0;
    for (int i = 0; i < 1024; ++i) {
        double x = -1.0 + 2.0 * i / 1023.0;
        unit = std::max(unit, std::abs(std::abs(r(x)) - 1.0));
        sym = std::max(sym, std::abs(r(-x) - std::conj(r(x))));
    }
    doc["checks"] = {{"unitarity_defect", unit}, {"symmetry_defect", sym}};
    return doc;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open " + path);
    out << text;
    if (!out) throw std::ios_base::failure("write failed: " + path);
}

void emit_document(const json& doc, const std::string& path) {
    write_text(path, doc.dump(2) + "\n");
}

struct MethodSource {
    std::string method = "best";
    int n = 0;
    double omega = 0.0;
};

UnitaryEvaluator evaluator_for(const MethodSource& src, json* doc_out = nullptr) {
    if (src.method == "best") {
        auto r = best_approx(src.n, src.omega);
        if (doc_out) *doc_out = document_from_best(r);
        return make_evaluator(r.approximant);
    }
    if (src.method == "interp-cheb" || src.method == "interp") {
        auto r = interpolate_unitary(src.omega, NodeSet(chebyshev_nodes(2 * src.n + 1)));
        if (doc_out) *doc_out = document_from_barycentric("interp-cheb", r.approximant);
        return make_evaluator(r.approximant);
    }
    if (src.method == "lawson") {
        auto r = aaa_lawson_cheb(src.n, src.omega);
        if (doc_out) *doc_out = document_from_barycentric("lawson", r.approximant, r.iterations);
        return make_evaluator(r.approximant);
    }
    if (src.method == "pade") {
        if (doc_out) *doc_out = document_from_pade(src.n, src.omega);
        return make_pade_evaluator(src.n, src.omega);
    }
    if (src.method == "cheb-quotient") {
        if (doc_out) *doc_out = document_from_cheb_quotient(src.n, src.omega);
        ChebQuotient q(src.n, src.omega);
        return make_evaluator(q);
    }
    throw CLI::ValidationError("unknown method: " + src.method);
}

UnitaryEvaluator evaluator_from_document(const json& doc) {
    const std::string method = doc.at("method");
    const int n = doc.at("n");
    const double omega = doc.at("omega");
    if (doc.contains("support_nodes") && doc.contains("rotated_weights")) {
        UnitaryBarycentric b(omega, doc["support_nodes"].get<std::vector<double>>(),
                             doc["rotated_weights"].get<std::vector<double>>());
        return make_evaluator(b);
    }
    if (method == "pade") return make_pade_evaluator(n, omega);
    if (method == "cheb-quotient") {
        ChebQuotient q(n, omega);
        return make_evaluator(q);
    }
    throw std::invalid_argument("document does not describe an evaluable approximant");
}

std::string curve_csv(const UnitaryEvaluator& r, double omega, int m) {
    auto curve = error_curve(r, omega, m);
    std::string out = "x,re_err,im_err,abs_err,phase_err\n";
    for (const auto& row : curve.samples) {
        out += fmt17(row.x) + "," + fmt17(row.re_err) + "," + fmt17(row.im_err) + "," +
               fmt17(row.abs_err) + "," + fmt17(row.phase_err) + "\n";
    }
    return out;
}

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : csv) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"unitary rational best approximations to e^{i omega x} on [-1,1]"};
    app.require_subcommand(1);

    // best
    int n = 0;
    double omega = 0.0;
    double tol = 1e-3;
    int max_iter = 200;
    double gamma = 1.0;
    std::string init = "auto";
    std::string json_path = "-";
    auto* best_cmd = app.add_subcommand("best", "compute the unitary best approximation");
    best_cmd->add_option("n", n, "degree")->required();
    best_cmd->add_option("omega", omega, "frequency")->required();
    best_cmd->add_option("--tol", tol, "equioscillation deviation target");
    best_cmd->add_option("--max-iter", max_iter, "iteration cap");
    best_cmd->add_option("--gamma", gamma, "rescaling exponent");
    best_cmd->add_option("--init", init, "auto|chebyshev|uniform-limit");
    best_cmd->add_option("--json", json_path, "output path (default stdout)");

    auto* interp_cmd = app.add_subcommand("interp", "rational interpolant at Chebyshev nodes");
    interp_cmd->add_option("n", n)->required();
    interp_cmd->add_option("omega", omega)->required();
    interp_cmd->add_option("--json", json_path);

    int grid_size = 2000;
    int lawson_iters = 50;
    auto* lawson_cmd = app.add_subcommand("lawson", "AAA-Lawson with Chebyshev support nodes");
    lawson_cmd->add_option("n", n)->required();
    lawson_cmd->add_option("omega", omega)->required();
    lawson_cmd->add_option("--grid", grid_size, "test grid size");
    lawson_cmd->add_option("--iters", lawson_iters, "Lawson steps");
    lawson_cmd->add_option("--json", json_path);

    auto* pade_cmd = app.add_subcommand("pade", "diagonal Pade reference");
    pade_cmd->add_option("n", n)->required();
    pade_cmd->add_option("omega", omega)->required();
    pade_cmd->add_option("--json", json_path);

    // curve
    std::string method = "best";
    std::string in_path;
    std::string csv_path = "-";
    int samples = 512;
    auto* curve_cmd = app.add_subcommand("curve", "error-curve CSV for plotting");
    curve_cmd->add_option("--method", method, "best|interp-cheb|lawson|pade|cheb-quotient");
    curve_cmd->add_option("-n,--degree", n, "degree (with --method)");
    curve_cmd->add_option("--omega", omega, "frequency (with --method)");
    curve_cmd->add_option("--in", in_path, "approximant document to sample instead");
    curve_cmd->add_option("-m,--samples", samples, "number of rows");
    curve_cmd->add_option("--csv", csv_path, "output path (default stdout)");

    // sweep
    double omega_start = 0.0, omega_end = 0.0;
    int steps = 1;
    std::string methods_list = "best";
    auto* sweep_cmd = app.add_subcommand("sweep", "errors over a frequency range");
    sweep_cmd->add_option("n", n)->required();
    sweep_cmd->add_option("omega_start", omega_start)->required();
    sweep_cmd->add_option("omega_end", omega_end)->required();
    sweep_cmd->add_option("steps", steps)->required();
    sweep_cmd->add_option("--methods", methods_list, "comma list of methods (default best)");
    sweep_cmd->add_option("--csv", csv_path);

    // poles
    std::string omegas_list;
    auto* poles_cmd = app.add_subcommand("poles", "pole trajectories of best approximants");
    poles_cmd->add_option("n", n)->required();
    poles_cmd->add_option("omegas", omegas_list, "comma list of frequencies")->required();
    poles_cmd->add_option("--csv", csv_path);

    auto* check_cmd = app.add_subcommand("check", "structural checks of an approximant");
    check_cmd->add_option("--method", method);
    check_cmd->add_option("-n,--degree", n);
    check_cmd->add_option("--omega", omega);
    check_cmd->add_option("--in", in_path, "approximant document to check instead");
    check_cmd->add_option("--json", json_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    if (best_cmd->parsed()) {
        SolverOptions opts;
        opts.eq_tolerance = tol;
        opts.max_iterations = max_iter;
        opts.rescale_exponent = gamma;
        if (init == "auto") opts.init = Init::Auto;
        else if (init == "chebyshev") opts.init = Init::Chebyshev;
        else if (init == "uniform-limit") opts.init = Init::UniformLimit;
        else {
            std::cerr << "error: unknown init strategy '" << init << "'\n";
            return kExitUsage;
        }
        auto r = best_approx(n, omega, opts);
        emit_document(document_from_best(r), json_path);
        return r.converged ? kExitOk : kExitNotConverged;
    }
    if (interp_cmd->parsed()) {
        auto r = interpolate_unitary(omega, NodeSet(chebyshev_nodes(2 * n + 1)));
        emit_document(document_from_barycentric("interp-cheb", r.approximant, std::nullopt,
                                                chebyshev_nodes(2 * n + 1)),
                      json_path);
        return kExitOk;
    }
    if (lawson_cmd->parsed()) {
        LawsonOptions opts;
        opts.grid_size = grid_size;
        opts.iterations = lawson_iters;
        auto r = aaa_lawson_cheb(n, omega, opts);
        emit_document(document_from_barycentric("lawson", r.approximant, r.iterations), json_path);
        return kExitOk;
    }
    if (pade_cmd->parsed()) {
        emit_document(document_from_pade(n, omega), json_path);
        return kExitOk;
    }
    if (curve_cmd->parsed()) {
        UnitaryEvaluator r;
        double w = omega;
        if (!in_path.empty()) {
            std::ifstream in(in_path);
            if (!in) throw std::ios_base::failure("cannot open " + in_path);
            json doc = json::parse(in);
            w = doc.at("omega");
            r = evaluator_from_document(doc);
        } else {
            r = evaluator_for({method, n, omega});
        }
        write_text(csv_path, curve_csv(r, w, samples));
        return kExitOk;
    }
    if (sweep_cmd->parsed()) {
        auto methods = split_list(methods_list);
        if (methods.empty()) {
            std::cerr << "error: empty method list\n";
            return kExitUsage;
        }
        std::vector<double> omegas(steps);
        for (int i = 0; i < steps; ++i)
            omegas[i] = steps == 1 ? omega_start
                                   : omega_start + (omega_end - omega_start) * i / (steps - 1);

        const double nan = std::numeric_limits<double>::quiet_NaN();
        // row-major results table: [omega][method] -> max_error
        std::vector<std::vector<double>> table(steps, std::vector<double>(methods.size(), nan));
        int failures = 0;

        for (std::size_t mi = 0; mi < methods.size(); ++mi) {
            const std::string& meth = methods[mi];
            if (meth == "best") {
                // warm-started, sequential by contract
                auto results = sweep(n, omegas);
                for (int i = 0; i < steps; ++i) table[i][mi] = results[i].max_error;
            } else {
                // independent solves; may run concurrently (UNIEXP_THREADS caps)
                parallel_for(steps, [&](int i) {
                    try {
                        if (meth == "pade") {
                            double sup = 0.0;
                            for (int k = 0; k < 4097; ++k) {
                                double x = -1.0 + 2.0 * k / 4096.0;
                                sup = std::max(sup, std::abs(pade_error_series(
                                                        n, Complex(0.0, omegas[i] * x))));
                            }
                            table[i][mi] = sup;
                        } else {
                            auto r = evaluator_for({meth, n, omegas[i]});
                            table[i][mi] = sup_error(r, omegas[i], 4096).value;
                        }
                    } catch (const std::exception&) {
                        // leave NaN
                    }
                });
            }
        }
        std::string out = "omega,method,max_error,estimate,pade_bound\n";
        for (int i = 0; i < steps; ++i)
            for (std::size_t mi = 0; mi < methods.size(); ++mi) {
                if (std::isnan(table[i][mi])) ++failures;
                out += fmt17(omegas[i]) + "," + methods[mi] + "," + fmt17(table[i][mi]) + "," +
                       fmt17(best_error_estimate(n, omegas[i])) + "," +
                       fmt17(pade_error_bound(n, omegas[i])) + "\n";
            }
        write_text(csv_path, out);
        return failures == steps * static_cast<int>(methods.size()) ? kExitNotConverged : kExitOk;
    }
    if (poles_cmd->parsed()) {
        std::vector<double> omegas;
        for (const auto& tok : split_list(omegas_list)) omegas.push_back(std::stod(tok));
        std::sort(omegas.begin(), omegas.end());
        auto results = sweep(n, omegas);
        std::string out = "omega,j,re,im,re_scaled,im_scaled\n";
        for (std::size_t i = 0; i < omegas.size(); ++i) {
            auto ps = poles(results[i].approximant); // sorted by imaginary part
            for (std::size_t j = 0; j < ps.size(); ++j) {
                Complex scaled = omegas[i] * ps[j];
                out += fmt17(omegas[i]) + "," + std::to_string(j + 1) + "," +
                       fmt17(ps[j].real()) + "," + fmt17(ps[j].imag()) + "," +
                       fmt17(scaled.real()) + "," + fmt17(scaled.imag()) + "\n";
            }
        }
        write_text(csv_path, out);
        return kExitOk;
    }
    if (check_cmd->parsed()) {
        json doc;
        if (!in_path.empty()) {
            std::ifstream in(in_path);
            if (!in) throw std::ios_base::failure("cannot open " + in_path);
            json src = json::parse(in);
            if (src.contains("support_nodes")) {
                UnitaryBarycentric b(src.at("omega"),
                                     src["support_nodes"].get<std::vector<double>>(),
                                     src["rotated_weights"].get<std::vector<double>>());
                doc = checks_json(structural_checks(b, 1024));
            } else {
                doc = src.at("checks");
            }
        } else {
            json full;
            evaluator_for({method, n, omega}, &full);
            doc = full.at("checks");
        }
        emit_document(doc, json_path);
        return kExitOk;
    }
    return kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const InfeasibleFrequencyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
