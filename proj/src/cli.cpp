#include "hilb/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hilb/dynamics.hpp"
#include "hilb/fourier_tables.hpp"
#include "hilb/hilbert.hpp"
#include "hilb/io.hpp"
#include "hilb/khintchin.hpp"
#include "hilb/parse.hpp"
#include "hilb/phi.hpp"
#include "hilb/projection.hpp"

namespace hilb {

namespace {

using json = nlohmann::ordered_json;

struct RunContext {
    QuadratureSpec spec;
    std::uint64_t seed = 1;
    std::string out;
    std::string format = "json";
    int max_iters = 400;
    double fp_tol = 1e-9;
    std::map<std::string, std::string> effective;

    void note(const std::string& k, const std::string& v) { effective[k] = v; }
    std::uint64_t config_hash() const { return fnv1a64(canonical_config(effective)); }

    json meta() const {
        json m;
        m["tool"] = kToolName;
        m["version"] = kToolVersion;
        json cfg = json::object();
        for (const auto& [k, v] : effective) cfg[k] = v;
        m["config"] = cfg;
        m["config_hash"] = hex64(config_hash());
        m["seed"] = seed;
        return m;
    }

    std::string csv_preamble() const {
        std::ostringstream s;
        s << "# " << kToolName << " " << kToolVersion << " config=" << hex64(config_hash())
          << " seed=" << seed << "\n";
        for (const auto& [k, v] : effective) s << "# " << k << "=" << v << "\n";
        return s.str();
    }

    void emit(const std::string& content) const {
        if (out.empty()) {
            std::cout << content;
            if (!content.empty() && content.back() != '\n') std::cout << "\n";
        } else {
            write_file_atomic(out, content);
        }
    }
};

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

CoefVec parse_coeffs(const std::string& text) {
    std::vector<Coeff> cs;
    for (const std::string& raw : split_csv(text)) {
        std::string tok;
        for (char c : raw) {
            if (!std::isspace(static_cast<unsigned char>(c))) tok += c;
        }
        if (tok.empty()) throw std::invalid_argument("empty coefficient in --coeffs");
        bool neg = false;
        size_t i = 0;
        while (i < tok.size() && (tok[i] == '+' || tok[i] == '-')) {
            if (tok[i] == '-') neg = !neg;
            ++i;
        }
        const std::string body = tok.substr(i);
        try {
            Rational r = Rational::parse(body);
            cs.emplace_back(neg ? -r : r);
        } catch (const std::exception&) {
            size_t used = 0;
            const double v = std::stod(body, &used);
            if (used != body.size()) {
                throw std::invalid_argument("malformed coefficient '" + raw + "'");
            }
            cs.emplace_back(Complex(neg ? -v : v, 0.0));
        }
    }
    return CoefVec(std::move(cs));
}

bool parse_p(const std::string& text, double& p) {
    if (text == "inf" || text == "Inf" || text == "infinity" || text == "oo") return true;
    size_t used = 0;
    p = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("malformed --p value '" + text + "'");
    return false;
}

json complex_pair(const Complex& z) { return json::array({z.real(), z.imag()}); }

json coefvec_json(const CoefVec& c) {
    json arr = json::array();
    for (int j = 0; j < c.dim(); ++j) arr.push_back(complex_pair(c[j].value()));
    return arr;
}

json report_json(const HilbertReport& rep, const RunContext& ctx) {
    json j;
    j["meta"] = ctx.meta();
    if (std::isinf(rep.p)) {
        j["p"] = "inf";
    } else {
        j["p"] = rep.p;
    }
    j["lambda_expected"] = rep.lambda_expected;
    j["residual"] = rep.residual;
    j["error_scale"] = rep.error_scale;
    j["verdict"] = to_string(rep.verdict);
    j["method"] = to_string(rep.method);
    if (!rep.note.empty()) j["note"] = rep.note;
    return j;
}

std::string phi_status(const PhiSample& s) {
    if (s.method == PhiSample::Method::MultinomialExact) return "exact";
    if (s.p > 4.0) return "rigorous: Phi(p) > 0 for p > 4";
    if (s.p == 2.0 || s.p == 4.0) return "rigorous zero";
    return "conjecture evidence: nonvanishing on [1,4) \\ {2} is numerical only";
}

json phi_json(const PhiSample& s) {
    json j;
    j["p"] = s.p;
    j["value"] = s.value;
    j["error"] = s.error_estimate;
    j["method"] = phi_method_name(s.method);
    j["status"] = phi_status(s);
    return j;
}

std::string trace_csv(const IterationTrace& trace, const RunContext& ctx) {
    std::ostringstream s;
    s << ctx.csv_preamble();
    s << "n";
    for (int j = 1; j <= trace.start.dim(); ++j) s << ",c" << j;
    s << "\n";
    for (size_t n = 0; n < trace.iterates.size(); ++n) {
        s << n;
        for (int j = 0; j < trace.start.dim(); ++j) {
            s << "," << format_double(trace.iterates[n][j].abs());
        }
        s << "\n";
    }
    return s.str();
}

json trace_json(const IterationTrace& trace, const RunContext& ctx) {
    json j;
    j["meta"] = ctx.meta();
    j["p"] = trace.p;
    j["start"] = coefvec_json(trace.start);
    json its = json::array();
    for (const CoefVec& c : trace.iterates) its.push_back(coefvec_json(c));
    j["iterates"] = its;
    json res = json::array();
    for (double r : trace.residuals) res.push_back(r);
    j["residuals"] = res;
    j["classification"] = to_string(trace.classification);
    j["quadrature_ok"] = trace.quadrature_ok;
    return j;
}

} // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"Hilbert points in Hardy spaces on the polytorus: nonlinear Riesz "
                 "projection, fixed-point dynamics, Khintchin constants, coefficient "
                 "tables"};
    app.require_subcommand(1);

    RunContext ctx;

    // defaults may come from a key=value file named by HILBERT_CONFIG;
    // command-line flags override file values
    if (const char* cfg_path = std::getenv("HILBERT_CONFIG")) {
        const auto cfg = parse_config_file(cfg_path);
        auto geti = [&](const char* k, int& slot) {
            if (auto it = cfg.find(k); it != cfg.end()) slot = std::stoi(it->second);
        };
        auto getd = [&](const char* k, double& slot) {
            if (auto it = cfg.find(k); it != cfg.end()) slot = std::stod(it->second);
        };
        geti("angular", ctx.spec.angular_points);
        geti("radial", ctx.spec.radial_order);
        getd("tol", ctx.spec.target_tol);
        geti("max-refine", ctx.spec.max_refine);
        geti("max-iters", ctx.max_iters);
        getd("fp-tol", ctx.fp_tol);
        if (auto it = cfg.find("seed"); it != cfg.end()) ctx.seed = std::stoull(it->second);
        if (auto it = cfg.find("format"); it != cfg.end()) ctx.format = it->second;
    }

    app.add_option("--angular", ctx.spec.angular_points,
                   "angular grid points per torus dimension")
        ->capture_default_str();
    app.add_option("--radial", ctx.spec.radial_order, "radial Gauss order")
        ->capture_default_str();
    app.add_option("--tol", ctx.spec.target_tol, "quadrature target tolerance")
        ->capture_default_str();
    app.add_option("--seed", ctx.seed, "seed recorded in outputs and used by experiments")
        ->capture_default_str();
    app.add_option("--out", ctx.out, "output file (stdout when omitted)");
    app.add_option("--format", ctx.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--max-iters", ctx.max_iters, "iteration cap for dynamics")
        ->capture_default_str();
    app.add_option("--fp-tol", ctx.fp_tol, "fixed-point tolerance (H^2 distance)")
        ->capture_default_str();

    int exit_code = 0;

    auto base_config = [&](const std::string& sub) {
        ctx.note("subcommand", sub);
        ctx.note("angular", std::to_string(ctx.spec.angular_points));
        ctx.note("radial", std::to_string(ctx.spec.radial_order));
        ctx.note("tol", format_double(ctx.spec.target_tol));
        ctx.note("seed", std::to_string(ctx.seed));
        ctx.note("format", ctx.format);
    };

    // ---- project ----------------------------------------------------------
    auto* sub_project = app.add_subcommand("project", "P(|phi|^{p-2} phi) for 1-homogeneous phi");
    static std::string project_coeffs, project_p;
    static bool project_even_exact = false;
    sub_project->add_option("--coeffs", project_coeffs, "comma-separated coefficients")
        ->required();
    sub_project->add_option("--p", project_p, "exponent p in [1, inf)")->required();
    sub_project->add_flag("--even-exact", project_even_exact,
                          "also run the exact multinomial route (even p)");
    sub_project->callback([&] {
        double p = 0.0;
        if (parse_p(project_p, p)) throw std::invalid_argument("project: --p must be finite");
        base_config("project");
        ctx.note("p", project_p);
        ctx.note("coeffs", project_coeffs);
        const CoefVec c = parse_coeffs(project_coeffs);
        IjValues ij;
        const CoefVec image = project_linear(c, p, ctx.spec, &ij);
        const ValErr lam = lambda_expected(c, p, ctx.spec);
        json j;
        j["meta"] = ctx.meta();
        j["p"] = p;
        j["input"] = coefvec_json(c);
        json ijv = json::array();
        json ije = json::array();
        for (size_t k = 0; k < ij.values.size(); ++k) {
            ijv.push_back(ij.values[k]);
            ije.push_back(ij.error_estimates[k]);
        }
        j["ij_values"] = ijv;
        j["ij_errors"] = ije;
        j["output"] = coefvec_json(image);
        j["lambda"] = lam.value;
        j["lambda_error"] = lam.error;
        if (project_even_exact) {
            if (!(p >= 2.0 && p == std::round(p) && static_cast<long>(p) % 2 == 0)) {
                throw std::invalid_argument("--even-exact requires an even integer p");
            }
            const CoefVec exact = project_linear_even(c, static_cast<unsigned>((p - 2.0) / 2.0));
            j["even_exact_output"] = coefvec_json(exact);
        }
        ctx.emit(j.dump(2));
    });

    // ---- iterate -----------------------------------------------------------
    auto* sub_iterate = app.add_subcommand("iterate", "fixed-point iteration of the normalized "
                                                      "nonlinear projection");
    static std::string iterate_coeffs, iterate_p;
    sub_iterate->add_option("--coeffs", iterate_coeffs, "starting coefficients")->required();
    sub_iterate->add_option("--p", iterate_p, "exponent p in [1, inf)")->required();
    sub_iterate->callback([&] {
        double p = 0.0;
        if (parse_p(iterate_p, p)) throw std::invalid_argument("iterate: --p must be finite");
        base_config("iterate");
        ctx.note("p", iterate_p);
        ctx.note("coeffs", iterate_coeffs);
        ctx.note("max-iters", std::to_string(ctx.max_iters));
        ctx.note("fp-tol", format_double(ctx.fp_tol));
        const CoefVec c0 = parse_coeffs(iterate_coeffs);
        const StoppingRule rule{ctx.max_iters, ctx.fp_tol, 25};
        const IterationTrace trace = iterate(c0, p, rule, ctx.spec);
        ctx.emit(ctx.format == "csv" ? trace_csv(trace, ctx) : trace_json(trace, ctx).dump(2));
    });

    // ---- experiment --------------------------------------------------------
    auto* sub_exp = app.add_subcommand("experiment", "seeded random-start evidence runs for "
                                                     "the 1 <= p < 2 limit question");
    static std::string exp_p;
    static int exp_d = 3, exp_trials = 50;
    static bool exp_phases = false;
    sub_exp->add_option("--d", exp_d, "dimension (>= 2)")->required();
    sub_exp->add_option("--p", exp_p, "exponent p in [1, 2)")->required();
    sub_exp->add_option("--trials", exp_trials, "number of seeded trials")->required();
    sub_exp->add_flag("--random-phases", exp_phases, "apply random phases to the starts");
    sub_exp->callback([&] {
        double p = 0.0;
        if (parse_p(exp_p, p)) throw std::invalid_argument("experiment: --p must be finite");
        if (!(p >= 1.0 && p < 2.0)) {
            throw std::invalid_argument("experiment: --p must lie in [1, 2)");
        }
        base_config("experiment");
        ctx.note("p", exp_p);
        ctx.note("d", std::to_string(exp_d));
        ctx.note("trials", std::to_string(exp_trials));
        ctx.note("random-phases", exp_phases ? "1" : "0");
        ctx.note("max-iters", std::to_string(ctx.max_iters));
        ctx.note("fp-tol", format_double(ctx.fp_tol));
        const StoppingRule rule{ctx.max_iters, ctx.fp_tol, 25};
        const ExperimentReport rep =
            conjecture_experiment(exp_d, p, exp_trials, ctx.seed, ctx.spec, rule, exp_phases);
        json j;
        j["meta"] = ctx.meta();
        j["d"] = rep.d;
        j["p"] = rep.p;
        j["trials"] = rep.trials;
        j["seed"] = rep.seed;
        j["fraction_single_at_largest"] = rep.fraction_single_at_largest;
        j["monotonicity_violations"] = rep.monotonicity_violations;
        j["unresolved"] = rep.unresolved;
        j["note"] = "evidence only; the limit question for d >= 3 remains open";
        json rows = json::array();
        for (const TrialResult& r : rep.results) {
            json row;
            row["trial_seed"] = r.trial_seed;
            row["classification"] = to_string(r.classification);
            row["iterations"] = r.iterations;
            row["start_argmax"] = r.start_argmax;
            row["limit_argmax"] = r.limit_argmax;
            row["largest_modulus_violations"] = r.largest_modulus_violations;
            rows.push_back(row);
        }
        j["results"] = rows;
        ctx.emit(j.dump(2));
    });

    // ---- check -------------------------------------------------------------
    auto* sub_check = app.add_subcommand("check", "Hilbert-point test for a polynomial");
    static std::string check_poly_text, check_p;
    static bool check_exact = false;
    sub_check->add_option("--poly", check_poly_text, "polynomial, e.g. \"z1^3+z2^3+z1*z2*z3\"")
        ->required();
    sub_check->add_option("--p", check_p, "exponent p in [1, inf) or 'inf'")->required();
    sub_check->add_flag("--exact", check_exact, "prefer the exact even-p decision");
    sub_check->callback([&] {
        double p = 0.0;
        const bool p_inf = parse_p(check_p, p);
        base_config("check");
        ctx.note("p", check_p);
        ctx.note("poly", check_poly_text);
        ctx.note("exact", check_exact ? "1" : "0");
        const LaurentPoly f = parse_poly(check_poly_text, /*allow_negative_exponents=*/false);
        const HilbertReport rep = check_poly(f, p, p_inf, check_exact, ctx.spec);
        ctx.emit(report_json(rep, ctx).dump(2));
        if (rep.verdict == Verdict::Inconclusive) exit_code = 2;
    });

    // ---- phi ----------------------------------------------------------------
    auto* sub_phi = app.add_subcommand("phi", "the obstruction coefficient Phi(p) for "
                                              "z1^3+z2^3+z1*z2*z3");
    static std::string phi_p;
    static std::string phi_method = "auto";
    sub_phi->add_option("--p", phi_p, "exponent p >= 1")->required();
    sub_phi->add_option("--method", phi_method, "auto, exact, bergman or quadrature")
        ->check(CLI::IsMember({"auto", "exact", "bergman", "quadrature"}))
        ->capture_default_str();
    sub_phi->callback([&] {
        double p = 0.0;
        if (parse_p(phi_p, p)) {
            throw std::invalid_argument("phi: --p must be finite (the p = inf failure is "
                                        "part of the p > 4 range)");
        }
        base_config("phi");
        ctx.note("p", phi_p);
        ctx.note("method", phi_method);
        PhiSample s;
        const bool even = p >= 2.0 && p == std::round(p) && static_cast<long>(p) % 2 == 0;
        std::string method = phi_method;
        if (method == "auto") method = even ? "exact" : (p > 4.0 ? "bergman" : "quadrature");
        if (method == "exact") {
            if (!even) throw std::invalid_argument("phi: exact method requires even integer p");
            s = phi_even_sample(static_cast<unsigned>(p / 2.0) - 1);
        } else if (method == "bergman") {
            s = phi_bergman(p, ctx.spec);
        } else {
            s = phi_quadrature(p, ctx.spec);
        }
        json j;
        j["meta"] = ctx.meta();
        j.update(phi_json(s));
        ctx.emit(j.dump(2));
    });

    // ---- phi-curve -----------------------------------------------------------
    auto* sub_curve = app.add_subcommand("phi-curve", "sample Phi(p) on a grid");
    static double curve_min = 1.0, curve_max = 8.0, curve_step = 0.1;
    sub_curve->add_option("--min", curve_min, "lower end of the p grid")->capture_default_str();
    sub_curve->add_option("--max", curve_max, "upper end of the p grid")->capture_default_str();
    sub_curve->add_option("--step", curve_step, "grid step")->capture_default_str();
    sub_curve->callback([&] {
        base_config("phi-curve");
        ctx.note("min", format_double(curve_min));
        ctx.note("max", format_double(curve_max));
        ctx.note("step", format_double(curve_step));
        const std::vector<PhiSample> samples = phi_curve(curve_min, curve_max, curve_step, ctx.spec);
        std::ostringstream s;
        s << ctx.csv_preamble();
        s << "# nonvanishing on [1,4) \\ {2} is conjecture evidence (numerical only); "
             "positivity for p > 4 is rigorous\n";
        s << "p,value,error,method\n";
        for (const PhiSample& smp : samples) {
            s << format_double(smp.p) << "," << format_double(smp.value) << ","
              << format_double(smp.error_estimate) << "," << phi_method_name(smp.method) << "\n";
        }
        ctx.emit(s.str());
    });

    // ---- khintchin -------------------------------------------------------------
    auto* sub_kh = app.add_subcommand("khintchin", "equal-coefficient norms against the sharp "
                                                   "Khintchin constant");
    static std::string kh_p;
    static int kh_dmax = 8;
    sub_kh->add_option("--p", kh_p, "exponent p >= 1")->required();
    sub_kh->add_option("--d-max", kh_dmax, "largest dimension tabulated")->capture_default_str();
    sub_kh->callback([&] {
        double p = 0.0;
        if (parse_p(kh_p, p)) throw std::invalid_argument("khintchin: --p must be finite");
        base_config("khintchin");
        ctx.note("p", kh_p);
        ctx.note("d-max", std::to_string(kh_dmax));
        const KhintchinConstants kc = khintchin_constants(p);
        const bool even = p >= 2.0 && p == std::round(p) && static_cast<long>(p) % 2 == 0;
        int dmax = kh_dmax;
        std::ostringstream s;
        s << ctx.csv_preamble();
        s << "# a_p=" << format_double(kc.a_p) << " b_p=" << format_double(kc.b_p) << "\n";
        if (!even && dmax > 6) {
            dmax = 6;
            s << "# d capped at 6: non-even p exceeds the quadrature budget beyond that\n";
        }
        s << "d,norm,bound,gap\n";
        const double bound = p >= 2.0 ? kc.b_p : kc.a_p;
        for (int d = 1; d <= dmax; ++d) {
            const ValErr n = equal_coeff_norm(d, p, ctx.spec);
            const double gap = p >= 2.0 ? bound - n.value : n.value - bound;
            s << d << "," << format_double(n.value) << "," << format_double(bound) << ","
              << format_double(gap) << "\n";
        }
        ctx.emit(s.str());
    });

    // ---- fourier -----------------------------------------------------------------
    auto* sub_fourier = app.add_subcommand("fourier", "Fourier coefficients of "
                                                      "|zeta_1+...+zeta_d|^{p-2}(zeta_1+...)");
    static std::string fourier_p, fourier_alpha;
    static int fourier_d = 2;
    sub_fourier->add_option("--d", fourier_d, "dimension, 2 or 3")->required();
    sub_fourier->add_option("--p", fourier_p, "exponent p >= 1")->required();
    sub_fourier->add_option("--alpha", fourier_alpha, "multi-index, entries summing to 1");
    sub_fourier->callback([&] {
        double p = 0.0;
        if (parse_p(fourier_p, p)) throw std::invalid_argument("fourier: --p must be finite");
        if (fourier_d != 2 && fourier_d != 3) {
            throw std::invalid_argument("fourier: --d must be 2 or 3");
        }
        base_config("fourier");
        ctx.note("p", fourier_p);
        ctx.note("d", std::to_string(fourier_d));
        ctx.note("alpha", fourier_alpha);
        const bool even = p >= 2.0 && p == std::round(p) && static_cast<long>(p) % 2 == 0;

        if (!fourier_alpha.empty()) {
            std::vector<int> alpha;
            for (const std::string& tok : split_csv(fourier_alpha)) alpha.push_back(std::stoi(tok));
            if (fourier_d == 2 && alpha.size() == 1) alpha.push_back(1 - alpha[0]);
            json j;
            j["meta"] = ctx.meta();
            j["d"] = fourier_d;
            j["p"] = p;
            j["alpha"] = alpha;
            if (fourier_d == 2) {
                int sum = 0;
                for (int a : alpha) sum += a;
                if (alpha.size() != 2 || sum != 1) {
                    throw std::invalid_argument("fourier: d=2 indices must sum to 1");
                }
                j["value"] = c2_closed(p, alpha[0]);
                j["method"] = "closed-form";
            } else if (even) {
                const CoeffTable table = c3_even(static_cast<unsigned>(p / 2.0));
                j["value"] = table.at(ExponentIndex(alpha.begin(), alpha.end()));
                j["method"] = "exact";
            } else {
                const ValErr v =
                    c3_quadrature(p, ExponentIndex(alpha.begin(), alpha.end()), ctx.spec);
                j["value"] = v.value;
                j["error"] = v.error;
                j["method"] = "quadrature";
            }
            ctx.emit(j.dump(2));
            return;
        }

        // table export
        std::ostringstream s;
        s << ctx.csv_preamble();
        if (fourier_d == 2) {
            s << "alpha1,alpha2,value\n";
            const int reach = static_cast<int>(std::ceil(p)) + 4;
            for (int a1 = -reach; a1 <= reach + 1; ++a1) {
                s << a1 << "," << (1 - a1) << "," << format_double(c2_closed(p, a1)) << "\n";
            }
        } else {
            if (!even) {
                throw std::invalid_argument("fourier: the d=3 table is exact only at even p; "
                                            "pass --alpha for quadrature at this p");
            }
            const CoeffTable table = c3_even(static_cast<unsigned>(p / 2.0));
            s << "alpha1,alpha2,alpha3,value\n";
            for (const auto& [alpha, v] : table.exact_entries) {
                s << alpha[0] << "," << alpha[1] << "," << alpha[2] << "," << v.to_string()
                  << "\n";
            }
        }
        ctx.emit(s.str());
    });

    // ---- table1 ---------------------------------------------------------------
    auto* sub_table1 = app.add_subcommand("table1", "p = 1 iteration trace from the reference "
                                                    "start (0.7256, 0.6766, 0.1251)");
    sub_table1->callback([&] {
        base_config("table1");
        const CoefVec start = parse_coeffs("0.7256,0.6766,0.1251");
        const StoppingRule rule{8, 1e-14, 25};
        IterationTrace trace = iterate(start, 1.0, rule, ctx.spec);
        ctx.note("p", "1");
        ctx.note("rows", "8");
        ctx.emit(trace_csv(trace, ctx));
    });

    // ---- figure2 ----------------------------------------------------------------
    auto* sub_fig2 = app.add_subcommand("figure2", "Phi(p) curve on [1,4] plus the positive "
                                                   "tail (4,8]");
    sub_fig2->callback([&] {
        base_config("figure2");
        std::vector<PhiSample> samples = phi_curve(1.0, 4.0, 0.05, ctx.spec);
        for (double p = 4.25; p <= 8.0 + 1e-9; p += 0.25) {
            samples.push_back(phi_bergman(p, ctx.spec));
        }
        std::ostringstream s;
        s << ctx.csv_preamble();
        s << "# [1,4]: torus quadrature (zero at p=2,4; elsewhere conjecture evidence); "
             "(4,8]: Bergman identity, rigorously positive\n";
        s << "p,value,error,method\n";
        for (const PhiSample& smp : samples) {
            s << format_double(smp.p) << "," << format_double(smp.value) << ","
              << format_double(smp.error_estimate) << "," << phi_method_name(smp.method) << "\n";
        }
        ctx.emit(s.str());
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}

} // namespace hilb
