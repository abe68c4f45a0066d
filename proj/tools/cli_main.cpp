// mcshane command-line frontend.  Talks to the shared library exclusively
// through its C interface; all math lives behind that boundary.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mcshane/mcshane.h"

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 1;
constexpr int kExitNoConvergence = 2;

struct RunConfig {
    double tolerance = 1e-9;
    std::int64_t max_terms = 10000;
    std::uint64_t seed = 0;
    std::string output; // empty = stdout
    std::string format = "json";
};

int exit_code_for(int status) {
    switch (status) {
        case MSH_OK: return kExitOk;
        case MSH_ERR_NO_CONVERGENCE: return kExitNoConvergence;
        default: return kExitInvalidInput;
    }
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.output.empty() || cfg.output == "-") {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) {
        std::fprintf(stderr, "error: cannot open output file '%s'\n", cfg.output.c_str());
        std::exit(kExitInvalidInput);
    }
    out << text;
}

int fail(const RunConfig& cfg, int status, const std::string& message) {
    ordered_json j;
    j["status"] = msh_status_name(status);
    j["error"] = message;
    emit(cfg, j.dump(2) + "\n");
    return exit_code_for(status);
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_complex(double re, double im) {
    if (im == 0.0) return fmt_double(re);
    std::string s = fmt_double(re);
    s += (im < 0 ? "-" : "+");
    s += fmt_double(std::fabs(im));
    s += "i";
    return s;
}

/// Parse a complex literal of the form "a", "bi" or "a+bi" / "a-bi".
bool parse_complex(const std::string& text, double& re, double& im) {
    re = 0.0;
    im = 0.0;
    std::string s = text;
    if (s.empty()) return false;
    // locate the sign splitting real and imaginary parts (not an exponent sign)
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E')
            split = i; // keep the last candidate
    }
    auto to_double = [](const std::string& t, double& out) {
        if (t.empty()) return false;
        char* end = nullptr;
        out = std::strtod(t.c_str(), &end);
        return end && *end == '\0';
    };
    if (s.back() == 'i') {
        std::string imag_part;
        if (split == std::string::npos) {
            imag_part = s.substr(0, s.size() - 1);
        } else {
            std::string real_part = s.substr(0, split);
            imag_part = s.substr(split, s.size() - split - 1);
            if (!to_double(real_part, re)) return false;
        }
        if (imag_part.empty() || imag_part == "+" || imag_part == "-") imag_part += "1";
        return to_double(imag_part, im);
    }
    return to_double(s, re);
}

ordered_json report_json(const char* subcommand, const msh_series_report& r, bool complex_mode) {
    ordered_json j;
    j["command"] = "identity";
    j["subcommand"] = subcommand;
    if (complex_mode) {
        j["seed"] = {{"y0", fmt_complex(r.y0_re, r.y0_im)}, {"y1", fmt_complex(r.y1_re, r.y1_im)}};
        j["Z"] = fmt_complex(r.z_re, r.z_im);
        j["l_gamma"] = fmt_complex(r.l_gamma_re, r.l_gamma_im);
        j["partial_sum"] = fmt_complex(r.partial_sum_re, r.partial_sum_im);
        j["target"] = fmt_complex(r.target_re, r.target_im);
    } else {
        j["seed"] = {{"y0", r.y0_re}, {"y1", r.y1_re}};
        j["Z"] = r.z_re;
        j["l_gamma"] = r.l_gamma_re;
        j["partial_sum"] = r.partial_sum_re;
        j["target"] = r.target_re;
    }
    j["residual"] = r.residual;
    j["terms_used"] = r.terms_used;
    j["tail_bound"] = r.tail_bound;
    j["converged"] = r.converged != 0;
    return j;
}

std::string report_csv(const msh_series_report& r, bool complex_mode) {
    std::ostringstream os;
    os << "y0,y1,Z,l_gamma,partial_sum,target,residual,terms_used,tail_bound,converged\n";
    if (complex_mode) {
        os << fmt_complex(r.y0_re, r.y0_im) << ',' << fmt_complex(r.y1_re, r.y1_im) << ','
           << fmt_complex(r.z_re, r.z_im) << ',' << fmt_complex(r.l_gamma_re, r.l_gamma_im)
           << ',' << fmt_complex(r.partial_sum_re, r.partial_sum_im) << ','
           << fmt_complex(r.target_re, r.target_im);
    } else {
        os << fmt_double(r.y0_re) << ',' << fmt_double(r.y1_re) << ',' << fmt_double(r.z_re)
           << ',' << fmt_double(r.l_gamma_re) << ',' << fmt_double(r.partial_sum_re) << ','
           << fmt_double(r.target_re);
    }
    os << ',' << fmt_double(r.residual) << ',' << r.terms_used << ','
       << fmt_double(r.tail_bound) << ',' << (r.converged ? 1 : 0) << "\n";
    return os.str();
}

int finish_identity(const RunConfig& cfg, const char* sub, int status,
                    const msh_series_report& r, bool complex_mode) {
    if (status != MSH_OK) return fail(cfg, status, msh_last_error());
    if (cfg.format == "csv") {
        emit(cfg, report_csv(r, complex_mode));
    } else {
        ordered_json j = report_json(sub, r, complex_mode);
        bool ok = r.converged != 0 && r.residual <= cfg.tolerance;
        j["status"] = ok ? "ok" : "not_converged";
        emit(cfg, j.dump(2) + "\n");
    }
    return (r.converged != 0 && r.residual <= cfg.tolerance) ? kExitOk : kExitNoConvergence;
}

const char* shot_class_name(int c) {
    switch (c) {
        case MSH_SHOT_SELF_OR_START: return "A";
        case MSH_SHOT_HIT_BOUNDARY: return "B";
        default: return "unresolved";
    }
}

const char* first_hit_name(int f) {
    switch (f) {
        case MSH_FIRST_MU: return "mu";
        case MSH_FIRST_MU_PRIME: return "mu_prime";
        default: return "none";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"length spectra and boundary-partition identities of non-orientable "
                 "hyperbolic surfaces"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::string config_path;
    app.add_option("--config", config_path, "JSON file with defaults for the flags below");
    app.add_option("--tolerance", cfg.tolerance, "series / residual tolerance");
    app.add_option("--max-terms", cfg.max_terms, "series term cap");
    app.add_option("--seed", cfg.seed, "random seed for sampling commands");
    app.add_option("--output", cfg.output, "output file (default stdout)");
    app.add_option("--format", cfg.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // identity ------------------------------------------------------------
    auto* identity = app.add_subcommand("identity", "evaluate a length-spectrum identity");
    identity->require_subcommand(1);

    double y0 = 1.0, y1 = 2.0, big_l = 1.0;
    int depth = 25;
    bool z_check = false;
    std::string cy0 = "1", cy1 = "2";

    auto* pk = identity->add_subcommand("punctured-klein", "cusped Klein bottle series");
    pk->add_option("--y0", y0, "seed y_0 = sinh(l_0/2)")->required();
    pk->add_option("--y1", y1, "seed y_1 = sinh(l_1/2)")->required();
    pk->add_flag("--z-check", z_check, "only validate the seed (Z > 2) and exit");

    auto* bk = identity->add_subcommand("bordered-klein", "Klein bottle with boundary");
    bk->add_option("--L", big_l, "boundary length")->required();
    bk->add_option("--y0", y0, "seed y_0")->required();
    bk->add_option("--y1", y1, "seed y_1")->required();

    auto* pt = identity->add_subcommand("punctured-torus", "orientable Markoff baseline");
    pt->add_option("--depth", depth, "flip-tree depth");

    auto* cx = identity->add_subcommand("complex", "quasi-Fuchsian complex-length series");
    cx->add_option("--y0", cy0, "complex seed, a+bi literal")->required();
    cx->add_option("--y1", cy1, "complex seed, a+bi literal")->required();

    // spectrum / fibonacci --------------------------------------------------
    auto* spectrum = app.add_subcommand("spectrum", "emit a one-sided trace sequence");
    double sp_y0 = 1.0, sp_y1 = 2.0, sp_c = 1.0, sp_L = -1.0;
    std::int64_t sp_count = 10;
    spectrum->add_option("--y0", sp_y0, "seed y_0")->required();
    spectrum->add_option("--y1", sp_y1, "seed y_1")->required();
    spectrum->add_option("--c", sp_c, "recursion constant (default 1: punctured)");
    spectrum->add_option("--L", sp_L, "boundary length (sets c = cosh^2(L/4))");
    spectrum->add_option("--count", sp_count, "terms each direction from the seed");

    auto* fibonacci = app.add_subcommand("fibonacci", "integral-trace surface sequence");
    std::int64_t fib_count = 10;
    fibonacci->add_option("--count", fib_count, "number of rows");

    // simulate --------------------------------------------------------------
    auto* simulate = app.add_subcommand("simulate", "perpendicular-geodesic ray shooting");
    simulate->require_subcommand(1);
    std::vector<double> sim_lengths{1.0, 1.0, 1.0};
    std::int64_t sim_samples = 100000;
    int sim_max_arcs = 200;
    auto* sim_pants = simulate->add_subcommand("pants", "pair of pants");
    sim_pants->add_option("--L", sim_lengths, "boundary lengths L1,L2,L3")
        ->delimiter(',')
        ->expected(3);
    sim_pants->add_option("--samples", sim_samples, "number of launch points");
    sim_pants->add_option("--max-arcs", sim_max_arcs, "arc cap per shot");
    auto* sim_moebius = simulate->add_subcommand("moebius", "Moebius strip minus a disk");
    sim_moebius->add_option("--L", sim_lengths, "lengths x,y,z (boundaries and mu)")
        ->delimiter(',')
        ->expected(3);
    sim_moebius->add_option("--samples", sim_samples, "number of launch points");
    sim_moebius->add_option("--max-arcs", sim_max_arcs, "arc cap per shot");

    // integrate ---------------------------------------------------------------
    auto* integrate = app.add_subcommand("integrate", "moduli-space integral");
    int int_n = 1;
    std::string int_method = "quad";
    std::int64_t int_samples = 10000000;
    integrate->add_option("--n", int_n, "decay power (target known for n = 1)");
    integrate->add_option("--method", int_method, "quad or mc")
        ->check(CLI::IsMember({"quad", "mc"}));
    integrate->add_option("--samples", int_samples, "Monte Carlo sample count");

    CLI11_PARSE(app, argc, argv);

    // config file provides defaults; explicit flags win
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) {
            std::fprintf(stderr, "error: cannot read config '%s'\n", config_path.c_str());
            return kExitInvalidInput;
        }
        ordered_json j;
        try {
            in >> j;
        } catch (const std::exception& e) {
            std::fprintf(stderr, "error: bad config: %s\n", e.what());
            return kExitInvalidInput;
        }
        if (j.contains("tolerance") && app.count("--tolerance") == 0)
            cfg.tolerance = j["tolerance"].get<double>();
        if (j.contains("max_terms") && app.count("--max-terms") == 0)
            cfg.max_terms = j["max_terms"].get<std::int64_t>();
        if (j.contains("seed") && app.count("--seed") == 0)
            cfg.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("output") && app.count("--output") == 0)
            cfg.output = j["output"].get<std::string>();
        if (j.contains("format") && app.count("--format") == 0)
            cfg.format = j["format"].get<std::string>();
    }
    if (cfg.tolerance <= 0 || cfg.max_terms < 1) {
        std::fprintf(stderr, "error: tolerance must be positive and max_terms >= 1\n");
        return kExitInvalidInput;
    }

    if (pk->parsed()) {
        if (z_check) {
            msh_spectrum* s = nullptr;
            int st = msh_spectrum_create(y0, y1, 1.0, &s);
            if (st != MSH_OK) return fail(cfg, st, msh_last_error());
            double z = 0;
            msh_spectrum_z(s, &z);
            msh_spectrum_destroy(s);
            ordered_json j;
            j["command"] = "identity";
            j["subcommand"] = "punctured-klein";
            j["z_check"] = true;
            j["Z"] = z;
            j["status"] = "ok";
            emit(cfg, j.dump(2) + "\n");
            return kExitOk;
        }
        msh_series_report r{};
        int st = msh_sum_punctured_klein(y0, y1, cfg.tolerance, cfg.max_terms, &r);
        return finish_identity(cfg, "punctured-klein", st, r, false);
    }
    if (bk->parsed()) {
        msh_series_report r{};
        int st = msh_sum_bordered_klein(big_l, y0, y1, cfg.tolerance, cfg.max_terms, &r);
        return finish_identity(cfg, "bordered-klein", st, r, false);
    }
    if (pt->parsed()) {
        msh_series_report r{};
        int st = msh_sum_punctured_torus(depth, cfg.tolerance, &r);
        if (st != MSH_OK) return fail(cfg, st, msh_last_error());
        if (cfg.format == "csv") {
            std::ostringstream os;
            os << "depth,partial_sum,target,residual,terms_used,tail_bound,converged\n"
               << r.depth << ',' << fmt_double(r.partial_sum_re) << ','
               << fmt_double(r.target_re) << ',' << fmt_double(r.residual) << ','
               << r.terms_used << ',' << fmt_double(r.tail_bound) << ','
               << (r.converged ? 1 : 0) << "\n";
            emit(cfg, os.str());
        } else {
            ordered_json j;
            j["command"] = "identity";
            j["subcommand"] = "punctured-torus";
            j["depth"] = r.depth;
            j["partial_sum"] = r.partial_sum_re;
            j["target"] = r.target_re;
            j["residual"] = r.residual;
            j["terms_used"] = r.terms_used;
            j["tail_bound"] = r.tail_bound;
            j["converged"] = r.converged != 0;
            bool ok = r.converged != 0 && r.residual <= cfg.tolerance;
            j["status"] = ok ? "ok" : "not_converged";
            emit(cfg, j.dump(2) + "\n");
        }
        return (r.converged != 0 && r.residual <= cfg.tolerance) ? kExitOk
                                                                 : kExitNoConvergence;
    }
    if (cx->parsed()) {
        double re0, im0, re1, im1;
        if (!parse_complex(cy0, re0, im0) || !parse_complex(cy1, re1, im1))
            return fail(cfg, MSH_ERR_INVALID_ARGUMENT,
                        "complex seeds must be a+bi literals");
        msh_series_report r{};
        int st = msh_sum_complex(re0, im0, re1, im1, cfg.tolerance, cfg.max_terms, &r);
        return finish_identity(cfg, "complex", st, r, true);
    }

    if (spectrum->parsed() || fibonacci->parsed()) {
        msh_spectrum* s = nullptr;
        int st;
        std::int64_t lo, hi;
        if (fibonacci->parsed()) {
            st = msh_spectrum_create_fibonacci(&s);
            lo = 0;
            hi = fib_count - 1;
        } else {
            if (spectrum->count("--L") && spectrum->count("--c")) {
                return fail(cfg, MSH_ERR_INVALID_ARGUMENT, "--c and --L are exclusive");
            }
            if (spectrum->count("--L"))
                st = msh_spectrum_create_bordered(sp_L, sp_y0, sp_y1, &s);
            else
                st = msh_spectrum_create(sp_y0, sp_y1, sp_c, &s);
            lo = -sp_count;
            hi = sp_count + 1;
        }
        if (st != MSH_OK) return fail(cfg, st, msh_last_error());
        if (hi < lo) hi = lo;
        if ((st = msh_spectrum_extend(s, lo, hi)) != MSH_OK) {
            msh_spectrum_destroy(s);
            return fail(cfg, st, msh_last_error());
        }
        int64_t glo, ghi;
        msh_spectrum_range(s, &glo, &ghi);
        lo = std::max(lo, glo);
        hi = std::min(hi, ghi); // overflow guard may truncate
        double z = 0, c = 0;
        msh_spectrum_z(s, &z);
        msh_spectrum_constant(s, &c);
        std::ostringstream os;
        ordered_json rows = ordered_json::array();
        const bool fib = fibonacci->parsed();
        if (cfg.format == "csv") os << (fib ? "index,F_2i,length\n" : "index,y,length\n");
        for (std::int64_t i = lo; i <= hi; ++i) {
            double y = 0;
            msh_spectrum_term(s, i, &y);
            double len = 2.0 * std::asinh(y);
            if (cfg.format == "csv") {
                os << i << ',' << fmt_double(y) << ',' << fmt_double(len) << "\n";
            } else {
                rows.push_back({{"index", i}, {"y", y}, {"length", len}});
            }
        }
        msh_spectrum_destroy(s);
        if (cfg.format == "csv") {
            emit(cfg, os.str());
        } else {
            ordered_json j;
            j["command"] = fib ? "fibonacci" : "spectrum";
            j["Z"] = z;
            j["c"] = c;
            if (fib) {
                double a[4], b[4];
                msh_fibonacci_generators(a, b);
                j["generators"] = {{"A", {a[0], a[1], a[2], a[3]}},
                                   {"B", {b[0], b[1], b[2], b[3]}}};
            }
            j["rows"] = rows;
            j["status"] = "ok";
            emit(cfg, j.dump(2) + "\n");
        }
        return kExitOk;
    }

    if (simulate->parsed()) {
        bool moebius = sim_moebius->parsed();
        msh_surface* surf = nullptr;
        int st = moebius ? msh_surface_create_moebius(sim_lengths[0], sim_lengths[1],
                                                      sim_lengths[2], &surf)
                         : msh_surface_create_pants(sim_lengths[0], sim_lengths[1],
                                                    sim_lengths[2], &surf);
        if (st != MSH_OK) return fail(cfg, st, msh_last_error());

        std::vector<msh_shot> shots;
        msh_shot* buf = nullptr;
        if (cfg.format == "csv") {
            shots.resize(static_cast<std::size_t>(sim_samples));
            buf = shots.data();
        }
        msh_partition part{};
        st = msh_surface_estimate_partition(surf, sim_samples, sim_max_arcs, cfg.seed, &part,
                                            buf);
        if (st != MSH_OK) {
            msh_surface_destroy(surf);
            return fail(cfg, st, msh_last_error());
        }
        double zmu = 0, zmup = 0;
        msh_surface_info(surf, nullptr, nullptr, &zmu, &zmup);
        msh_surface_destroy(surf);

        if (cfg.format == "csv") {
            std::ostringstream os;
            os << "s,class,arcs,first_hit\n";
            for (const auto& sh : shots)
                os << fmt_double(sh.launch_s) << ',' << shot_class_name(sh.classification)
                   << ',' << sh.arcs_traced << ',' << first_hit_name(sh.first_one_sided)
                   << "\n";
            emit(cfg, os.str());
            return kExitOk;
        }

        double x = sim_lengths[0], yb = sim_lengths[1], zb = sim_lengths[2];
        double n = static_cast<double>(part.samples);
        double frac_a = part.n_type_a / n;
        double frac_b2 = part.n_hit_b2 / n;
        double frac_b3 = part.n_hit_b3 / n;
        double frac_un = part.n_unresolved / n;

        double target_a, target_b2, target_b3;
        if (moebius) {
            double r1 = 0, r2 = 0;
            msh_R(x, 2.0 * zmu, yb, &r1);
            msh_R(x, 2.0 * zmup, yb, &r2);
            target_a = (r1 + r2) / x - 1.0;
            target_b2 = 1.0 - target_a;
            target_b3 = 0.0;
        } else {
            double d = 0, r_b3 = 0, r_b2 = 0;
            msh_D(x, yb, zb, &d);
            msh_R(x, yb, zb, &r_b3);
            msh_R(x, zb, yb, &r_b2);
            target_a = d / x;
            target_b3 = 1.0 - r_b3 / x;
            target_b2 = 1.0 - r_b2 / x;
        }
        auto zscore = [&](double frac, double target) {
            double sd = std::sqrt(std::max(target * (1.0 - target), 1e-300) / n);
            return (frac - target) / sd;
        };
        auto ci3 = [&](double p) { return 3.0 * std::sqrt(p * (1.0 - p) / n); };

        ordered_json j;
        j["command"] = "simulate";
        j["surface"] = moebius ? "moebius" : "pants";
        j["lengths"] = {sim_lengths[0], sim_lengths[1], sim_lengths[2]};
        if (moebius) j["z_prime"] = zmup;
        j["samples"] = part.samples;
        j["max_arcs"] = sim_max_arcs;
        j["seed"] = cfg.seed;
        j["fractions"] = {{"type_a", frac_a},
                          {"hit_b2", frac_b2},
                          {"hit_b3", frac_b3},
                          {"unresolved", frac_un}};
        if (moebius) {
            j["fractions"]["first_mu"] = part.n_first_mu / n;
            j["fractions"]["first_mu_prime"] = part.n_first_mu_prime / n;
        }
        j["targets"] = {{"type_a", target_a}, {"hit_b2", target_b2}};
        if (!moebius) j["targets"]["hit_b3"] = target_b3;
        j["ci3"] = {{"type_a", ci3(target_a)}, {"hit_b2", ci3(target_b2)}};
        j["z_scores"] = {{"type_a", zscore(frac_a, target_a)},
                         {"hit_b2", zscore(frac_b2, target_b2)}};
        if (!moebius) {
            j["ci3"]["hit_b3"] = ci3(target_b3);
            j["z_scores"]["hit_b3"] = zscore(frac_b3, target_b3);
        }
        j["degenerate_retries"] = part.degenerate_retries;
        j["fact_i_violations"] = part.fact_i_violations;
        j["fact_ii_violations"] = part.fact_ii_violations;
        bool ok = std::fabs(zscore(frac_a, target_a)) < 3.0 &&
                  std::fabs(zscore(frac_b2, target_b2)) < 3.0 &&
                  (moebius || std::fabs(zscore(frac_b3, target_b3)) < 3.0) &&
                  frac_un < 0.01;
        j["status"] = ok ? "ok" : "off_target";
        emit(cfg, j.dump(2) + "\n");
        return ok ? kExitOk : kExitNoConvergence;
    }

    if (integrate->parsed()) {
        msh_integral_result r{};
        int st;
        msh_integral_result direct{};
        bool have_direct = false;
        if (int_method == "quad") {
            double tol = std::min(cfg.tolerance, 1e-7);
            st = msh_integrate_punctured_klein(int_n, MSH_METHOD_QUADRATURE, tol, 0, 0, &r);
            if (st == MSH_OK && int_n == 1) {
                have_direct =
                    msh_integrate_punctured_klein_direct(tol, &direct) == MSH_OK;
            }
        } else {
            st = msh_integrate_punctured_klein(int_n, MSH_METHOD_MONTE_CARLO, 0, int_samples,
                                               cfg.seed, &r);
        }
        if (st != MSH_OK) return fail(cfg, st, msh_last_error());
        ordered_json j;
        j["n"] = int_n;
        j["method"] = int_method;
        j["value"] = r.value;
        j["error_estimate"] = r.error_estimate;
        if (r.has_target) {
            j["target"] = r.target;
            j["residual"] = r.residual;
        } else {
            j["target"] = nullptr;
            j["residual"] = nullptr;
        }
        if (int_method == "mc") j["samples"] = r.samples;
        if (have_direct) {
            j["direct_value"] = direct.value;
            j["direct_agreement"] = std::fabs(direct.value - r.value);
        }
        bool ok = true;
        if (r.has_target) {
            if (int_method == "quad") ok = r.residual < 1e-6;
            else ok = r.residual < 3.0 * r.error_estimate + 1e-12;
        }
        j["status"] = ok ? "ok" : "off_target";
        if (cfg.format == "csv") {
            std::ostringstream os;
            os << "n,method,value,error_estimate,target,residual\n"
               << int_n << ',' << int_method << ',' << fmt_double(r.value) << ','
               << fmt_double(r.error_estimate) << ','
               << (r.has_target ? fmt_double(r.target) : "") << ','
               << (r.has_target ? fmt_double(r.residual) : "") << "\n";
            emit(cfg, os.str());
        } else {
            emit(cfg, j.dump(2) + "\n");
        }
        return ok ? kExitOk : kExitNoConvergence;
    }

    return kExitInvalidInput;
}
