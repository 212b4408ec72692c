// Command-line front end: kernel construction, profiles, exponents, the
// genus bound, erasure polarization and the parameter studies, with CSV or
// JSON output.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "agpolar/channel.hpp"
#include "agpolar/curves.hpp"
#include "agpolar/kernel.hpp"
#include "agpolar/metrics.hpp"
#include "agpolar/oesterle.hpp"
#include "agpolar/study.hpp"

using nlohmann::json;
using namespace agpolar;

namespace {

// Fixed 10-significant-digit formatting so outputs are byte-stable.
std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

CurveFamily parse_family(const std::string& name) {
    if (name == "rs" || name == "rational") return CurveFamily::rational;
    if (name == "hermitian") return CurveFamily::hermitian;
    if (name == "suzuki") return CurveFamily::suzuki;
    throw CLI::ValidationError("--family", "unknown family '" + name + "'");
}

const char* kind_name(BoundKind k) {
    return k == BoundKind::exact ? "exact" : "lower_bound";
}

const char* source_name(ProfileSource s) {
    switch (s) {
        case ProfileSource::exact: return "exact";
        case ProfileSource::goppa: return "goppa";
        case ProfileSource::paper: return "paper";
        case ProfileSource::closed_form: return "closed_form";
    }
    return "?";
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open " + out_path + " for writing");
        f << text;
    }
}

std::string rows_csv(const std::vector<StudyRow>& rows, bool argmax_column) {
    std::ostringstream out;
    out << (argmax_column ? "m,q,L,g,n,E2,argmax\n" : "m,q,L,g,n,E2\n");
    for (const StudyRow& r : rows) {
        out << fmt(r.m) << ',' << fmt(r.q) << ',' << fmt(r.L) << ',' << fmt(r.genus) << ','
            << fmt(r.n) << ',' << fmt(r.e2);
        if (argmax_column) out << ',' << (r.is_argmax ? 1 : 0);
        out << '\n';
    }
    return out.str();
}

json rows_json(const std::vector<StudyRow>& rows, bool argmax_column) {
    json arr = json::array();
    for (const StudyRow& r : rows) {
        json row{{"m", r.m}, {"q", r.q}, {"L", r.L}, {"g", r.genus}, {"n", r.n}, {"E2", r.e2}};
        if (argmax_column) row["argmax"] = r.is_argmax;
        arr.push_back(row);
    }
    return json{{"rows", arr}};
}

struct ProfileArgs {
    std::string kernel_path;
    std::string method = "exact";
    long long budget = 1000000; // brute-force span guard
    long long genus_override = -1;
};

Profile compute_profile(const KernelMatrix& K, const ProfileArgs& args, ProfileSource& source) {
    if (args.method == "exact") {
        source = ProfileSource::exact;
        return exact_profile(K, args.budget);
    }
    if (args.method == "goppa") {
        source = ProfileSource::goppa;
        return goppa_profile(K);
    }
    if (args.method == "paper") {
        source = ProfileSource::paper;
        const long long g = args.genus_override >= 0 ? args.genus_override : K.genus;
        return paper_profile(K.size, g);
    }
    throw CLI::ValidationError("--method", "unknown method '" + args.method + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"polarization kernels from algebraic-geometry codes"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of CSV");

    // kernel
    auto* cmd_kernel = app.add_subcommand("kernel", "build a curve kernel and write the kernel file");
    std::string k_family;
    long long k_q0 = 0;
    int k_m = 0;
    std::string k_out;
    cmd_kernel->add_option("--family", k_family, "rs|hermitian|suzuki")->required();
    cmd_kernel->add_option("--q0", k_q0, "curve parameter (hermitian/suzuki)");
    cmd_kernel->add_option("--m", k_m, "field degree (rs)");
    cmd_kernel->add_option("--out", k_out, "output path (default stdout)");

    // profile
    auto* cmd_profile = app.add_subcommand("profile", "partial-distance profile of a kernel file");
    ProfileArgs p_args;
    cmd_profile->add_option("--kernel", p_args.kernel_path, "kernel file")->required();
    cmd_profile->add_option("--method", p_args.method, "exact|goppa|paper");
    cmd_profile->add_option("--budget", p_args.budget, "span enumeration budget (default 10^6)");
    cmd_profile->add_option("--g", p_args.genus_override, "genus for --method paper");

    // exponent
    auto* cmd_exp = app.add_subcommand("exponent", "exponent from a kernel profile or closed form");
    ProfileArgs e_args;
    double e_L = 0, e_g = 0, e_q = 0, e_m = 0;
    bool e_binary = false;
    cmd_exp->add_option("--kernel", e_args.kernel_path, "kernel file");
    cmd_exp->add_option("--method", e_args.method, "exact|goppa|paper");
    cmd_exp->add_option("--budget", e_args.budget, "span enumeration budget");
    cmd_exp->add_option("--L", e_L, "outer length (closed form)");
    cmd_exp->add_option("--g", e_g, "genus (closed form)");
    cmd_exp->add_option("--q", e_q, "field size (closed form)");
    cmd_exp->add_flag("--binary", e_binary, "binary concatenated bound");
    cmd_exp->add_option("--m", e_m, "extension degree for --binary");

    // oesterle
    auto* cmd_oe = app.add_subcommand("oesterle", "genus lower bound for (q, L)");
    double o_q = 0, o_L = 0;
    cmd_oe->add_option("--q", o_q, "field size")->required();
    cmd_oe->add_option("--L", o_L, "number of affine rational points")->required();

    // polarize
    auto* cmd_pol = app.add_subcommand("polarize", "erasure polarization of a kernel file");
    std::string pol_kernel;
    double pol_eps = 0.5;
    int pol_levels = 1;
    int pol_paths = 0;
    std::uint64_t pol_seed = 0;
    std::vector<double> pol_betas;
    cmd_pol->add_option("--kernel", pol_kernel, "kernel file")->required();
    cmd_pol->add_option("--eps", pol_eps, "erasure probability")->required();
    cmd_pol->add_option("--levels", pol_levels, "polarization levels")->required();
    cmd_pol->add_option("--paths", pol_paths, "sample this many paths instead of the full tree");
    cmd_pol->add_option("--seed", pol_seed, "seed for sampled paths");
    cmd_pol->add_option("--beta", pol_betas, "rate-diagnostic thresholds")->delimiter(',');

    // study
    auto* cmd_study = app.add_subcommand("study", "parameter studies");
    cmd_study->require_subcommand(1);

    auto* st_table = cmd_study->add_subcommand("table1", "fixed binary block size, all divisors m");
    long long t_n = 0;
    bool t_m2q2 = false;
    st_table->add_option("--n", t_n, "binary block size")->required();
    st_table->add_flag("--m2-q2", t_m2q2, "use the literal q=2 reading for the m=2 row");

    auto* st_sweep = cmd_study->add_subcommand("sweep", "fix theta or m, sweep the other");
    std::string sw_fix;
    double sw_value = 0;
    std::vector<double> sw_grid;
    st_sweep->add_option("--fix", sw_fix, "theta|m")->required();
    st_sweep->add_option("--value", sw_value, "the fixed value")->required();
    st_sweep->add_option("--grid", sw_grid, "sweep grid (m values or L values)")
        ->required()
        ->delimiter(',');

    auto* st_family = cmd_study->add_subcommand("family", "E2 along a family curve");
    std::string f_family;
    double f_nlo = 0, f_nhi = 0;
    int f_samples = 0;
    st_family->add_option("--family", f_family, "rs|hermitian|suzuki")->required();
    st_family->add_option("--nlo", f_nlo, "smallest n")->required();
    st_family->add_option("--nhi", f_nhi, "largest n")->required();
    st_family->add_option("--samples", f_samples, "log-spaced sample count")->required();

    auto* st_cross = cmd_study->add_subcommand("crossover", "E2 crossover of two families");
    std::string c_a, c_b;
    double c_nlo = 0, c_nhi = 0;
    st_cross->add_option("--a", c_a, "first family")->required();
    st_cross->add_option("--b", c_b, "second family")->required();
    st_cross->add_option("--nlo", c_nlo, "bracket start")->required();
    st_cross->add_option("--nhi", c_nhi, "bracket end")->required();

    auto* st_ecc = cmd_study->add_subcommand("ecc", "error-correction bound along a family");
    std::string ec_family;
    double ec_rate = 0, ec_nlo = 0, ec_nhi = 0;
    int ec_samples = 0;
    st_ecc->add_option("--family", ec_family, "rs|hermitian|suzuki")->required();
    st_ecc->add_option("--rate", ec_rate, "binary rate R2 in (0,1)")->required();
    st_ecc->add_option("--nlo", ec_nlo, "smallest n")->required();
    st_ecc->add_option("--nhi", ec_nhi, "largest n")->required();
    st_ecc->add_option("--samples", ec_samples, "log-spaced sample count")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*cmd_kernel) {
            const CurveFamily fam = parse_family(k_family);
            const CurveSpec spec = fam == CurveFamily::rational ? curve_spec(fam, 0, k_m)
                                                                : curve_spec(fam, k_q0);
            const KernelMatrix K = build_kernel(spec, spec.field());
            if (as_json) {
                json rows = json::array();
                for (int r = 0; r < K.size; ++r) {
                    json row = json::array();
                    for (int c = 0; c < K.size; ++c) row.push_back(K.at(r, c));
                    rows.push_back(row);
                }
                const json doc{{"m", K.field.degree()},
                               {"L", K.size},
                               {"poly", K.field.modulus()},
                               {"rows", rows},
                               {"poles", K.pole_orders}};
                emit(doc.dump(2) + "\n", k_out);
            } else {
                emit(format_kernel(K), k_out);
            }
        } else if (*cmd_profile) {
            const KernelMatrix K = read_kernel_file(p_args.kernel_path);
            ProfileSource source;
            const Profile p = compute_profile(K, p_args, source);
            if (as_json) {
                json entries = json::array();
                for (int i = 0; i < p.size(); ++i) {
                    entries.push_back(
                        {{"index", i + 1}, {"D", p.values[i]}, {"kind", kind_name(p.kinds[i])}});
                }
                std::cout << json{{"profile", entries}, {"source", source_name(source)}}.dump(2)
                          << "\n";
            } else {
                std::ostringstream out;
                out << "index,D,kind\n";
                for (int i = 0; i < p.size(); ++i) {
                    out << (i + 1) << ',' << p.values[i] << ',' << kind_name(p.kinds[i]) << '\n';
                }
                std::cout << out.str();
            }
        } else if (*cmd_exp) {
            double value = 0, base = 0;
            ProfileSource source = ProfileSource::closed_form;
            if (!e_args.kernel_path.empty()) {
                const KernelMatrix K = read_kernel_file(e_args.kernel_path);
                ProfileSource prof_source;
                const Profile p = compute_profile(K, e_args, prof_source);
                const ExponentReport rep = exponent(p, prof_source);
                value = rep.value;
                base = rep.base;
                source = prof_source;
            } else {
                if (!(e_L > 0) || !(e_q > 1)) {
                    throw CLI::ValidationError("exponent",
                                               "need --kernel or --L/--g/--q (closed form)");
                }
                if (e_binary) {
                    if (!(e_m > 0)) throw CLI::ValidationError("--m", "required with --binary");
                    value = exponent_binary_bound(e_L, e_g, e_m);
                    base = e_m * e_L;
                } else {
                    value = exponent_ag(e_L, e_g, e_q);
                    base = e_L;
                }
            }
            if (as_json) {
                std::cout << json{{"E", value}, {"base", base}, {"source", source_name(source)}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << "E,base,source\n"
                          << fmt(value) << ',' << fmt(base) << ',' << source_name(source) << "\n";
            }
        } else if (*cmd_oe) {
            const OesterleResult r = oesterle(o_q, o_L);
            if (as_json) {
                std::cout << json{{"ell", r.ell},
                                  {"u", r.u},
                                  {"theta", r.theta},
                                  {"genus", r.genus_bound}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << "ell,u,theta,genus\n"
                          << r.ell << ',' << fmt(r.u) << ',' << fmt(r.theta) << ','
                          << fmt(r.genus_bound) << "\n";
            }
        } else if (*cmd_pol) {
            const KernelMatrix K = read_kernel_file(pol_kernel);
            const PolarizeMode mode =
                pol_paths > 0 ? PolarizeMode::sampled_paths : PolarizeMode::full_tree;
            const PolarizationRun run = polarize_tree(K, pol_eps, pol_levels, mode, pol_paths,
                                                      pol_seed);
            double mean = 0, lo = 1, hi = 0, frac_low = 0, frac_high = 0;
            for (double p : run.leaves) {
                mean += p;
                lo = std::min(lo, p);
                hi = std::max(hi, p);
                frac_low += p < 0.001;
                frac_high += p > 0.999;
            }
            const double count = static_cast<double>(run.leaves.size());
            mean /= count;
            frac_low /= count;
            frac_high /= count;
            std::vector<std::pair<double, double>> diag;
            if (!pol_betas.empty()) diag = rate_diagnostic(run, pol_betas);
            if (as_json) {
                json doc{{"leaves", run.leaves.size()}, {"mean", mean},
                         {"min", lo},                   {"max", hi},
                         {"frac_low", frac_low},        {"frac_high", frac_high}};
                if (!diag.empty()) {
                    json d = json::array();
                    for (auto [beta, frac] : diag) d.push_back({{"beta", beta}, {"fraction", frac}});
                    doc["diagnostic"] = d;
                }
                std::cout << doc.dump(2) << "\n";
            } else {
                std::ostringstream out;
                out << "stat,value\n";
                out << "leaves," << run.leaves.size() << "\n";
                out << "mean," << fmt(mean) << "\nmin," << fmt(lo) << "\nmax," << fmt(hi) << "\n";
                out << "frac_low," << fmt(frac_low) << "\nfrac_high," << fmt(frac_high) << "\n";
                if (!diag.empty()) {
                    out << "\nbeta,fraction\n";
                    for (auto [beta, frac] : diag) out << fmt(beta) << ',' << fmt(frac) << '\n';
                }
                std::cout << out.str();
            }
        } else if (*st_table) {
            const auto rows = table_fixed_n(t_n, t_m2q2);
            if (rows.empty()) std::cerr << "warning: no divisor m >= 2 with L >= 2\n";
            std::cout << (as_json ? rows_json(rows, true).dump(2) + "\n" : rows_csv(rows, true));
        } else if (*st_sweep) {
            std::vector<StudyRow> rows;
            if (sw_fix == "theta") {
                rows = sweep_fixed_theta(sw_value, sw_grid);
            } else if (sw_fix == "m") {
                rows = sweep_fixed_m(sw_value, sw_grid);
            } else {
                throw CLI::ValidationError("--fix", "must be theta or m");
            }
            std::cout << (as_json ? rows_json(rows, false).dump(2) + "\n" : rows_csv(rows, false));
        } else if (*st_family) {
            const auto rows = family_curve(family_anchor_theta(parse_family(f_family)), f_nlo,
                                           f_nhi, f_samples);
            std::cout << (as_json ? rows_json(rows, false).dump(2) + "\n" : rows_csv(rows, false));
        } else if (*st_cross) {
            const CrossoverResult r = crossover(family_anchor_theta(parse_family(c_a)),
                                                family_anchor_theta(parse_family(c_b)), c_nlo,
                                                c_nhi);
            if (as_json) {
                std::cout << json{{"a", c_a},
                                  {"b", c_b},
                                  {"n_star", r.n_star},
                                  {"n_lo", r.n_lo},
                                  {"n_hi", r.n_hi}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << "a,b,n_star,n_lo,n_hi\n"
                          << c_a << ',' << c_b << ',' << fmt(r.n_star) << ',' << fmt(r.n_lo) << ','
                          << fmt(r.n_hi) << "\n";
            }
        } else if (*st_ecc) {
            const auto pts = ecc_bound(family_anchor_theta(parse_family(ec_family)), ec_rate,
                                       ec_nlo, ec_nhi, ec_samples);
            if (as_json) {
                json arr = json::array();
                for (auto [n, bound] : pts) arr.push_back({{"n", n}, {"bound", bound}});
                std::cout << json{{"points", arr}}.dump(2) << "\n";
            } else {
                std::ostringstream out;
                out << "n,bound\n";
                for (auto [n, bound] : pts) out << fmt(n) << ',' << fmt(bound) << '\n';
                std::cout << out.str();
            }
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
