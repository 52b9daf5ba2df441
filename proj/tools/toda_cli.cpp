#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "toda/integral.hpp"
#include "toda/json_io.hpp"
#include "toda/resurgence.hpp"
#include "toda/suites.hpp"

using namespace toda;

namespace {

int write_report(const Report& rep, const RunConfig& cfg) {
    std::filesystem::create_directories(cfg.out_dir);
    std::ofstream out(cfg.out_dir + "/report.json");
    out << rep.to_json_string() << "\n";
    rep.print_summary(std::cout);
    return rep.all_pass() ? 0 : 1;
}

int run_named_suites(RunConfig cfg, std::vector<std::string> suites) {
    cfg.suites = std::move(suites);
    Report rep = run_suite(cfg);
    return write_report(rep, cfg);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"2D Toda Dubrovin-Frobenius manifold: operators, canonical "
                 "spectra, Dubrovin-equation solutions, and Stokes data"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    cfg.suites = known_suites();
    std::string config_file;
    app.add_option("--config", config_file, "key = value configuration file");
    app.add_option("--out", cfg.out_dir, "output directory");
    app.add_option("--jobs", cfg.jobs, "parallel suite workers");
    app.add_option("--seed", cfg.seed, "seed for the random test batches");
    app.add_option("-N", cfg.truncation.N, "truncation order");
    app.add_option("-M", cfg.truncation.M, "quadrature points on S^1");

    std::string point_spec = "special:0,0.5";

    auto* spec_cmd = app.add_subcommand("verify-spectrum",
                                        "spectrum and canonical-coordinate checks");
    spec_cmd->add_option("--point-file", point_spec,
                         "@file.json or special:v,e_u");

    auto* metric_cmd = app.add_subcommand("verify-metric",
                                          "Frobenius axioms and metric checks");
    auto* formal_cmd = app.add_subcommand("formal", "formal-solution recursions");
    auto* specfun_cmd =
        app.add_subcommand("specfun-selftest", "special-function identity suite");

    auto* integral_cmd =
        app.add_subcommand("integral", "integral solutions along a zeta ray");
    double sigma_re = 0.0, sigma_im = 0.0, ray_angle = 0.0;
    double radii_lo = 2.0, radii_hi = 16.0;
    int k_max = 3;
    std::string int_point = "special:0,0.5";
    bool suite_only = false;
    integral_cmd->add_option("--sigma", sigma_re, "Re sigma");
    integral_cmd->add_option("--sigma-im", sigma_im, "Im sigma");
    integral_cmd->add_option("--zeta-ray", ray_angle, "ray angle (radians)");
    integral_cmd->add_option("--radii-lo", radii_lo, "smallest |zeta|");
    integral_cmd->add_option("--radii-hi", radii_hi, "largest |zeta|");
    integral_cmd->add_option("--k-max", k_max, "asymptotic order");
    integral_cmd->add_option("--point-file", int_point, "@file.json or preset");
    integral_cmd->add_flag("--suite", suite_only, "run the verification suite instead");

    auto* resurgence_cmd =
        app.add_subcommand("resurgence", "Borel resummation checks");

    auto* stokes_cmd = app.add_subcommand("stokes", "Stokes matrices");
    double st_eu = 0.5, st_v = 0.0, st_parg = 0.0, st_theta = 0.0;
    double st_eps = 0.1, st_zabs = 5.0;
    bool st_suite = false;
    stokes_cmd->add_option("--e-u", st_eu, "e^u (0 < e^u < 1)");
    stokes_cmd->add_option("--v", st_v, "v");
    stokes_cmd->add_option("--p-arg", st_parg, "arg p");
    stokes_cmd->add_option("--theta", st_theta, "admissible line angle");
    stokes_cmd->add_option("--epsilon", st_eps, "sector opening");
    stokes_cmd->add_option("--zeta-abs", st_zabs, "|zeta| for the extraction");
    stokes_cmd->add_flag("--suite", st_suite, "run the verification suite instead");

    auto* report_cmd =
        app.add_subcommand("report", "run the configured suites and emit JSON");

    auto* plot_cmd = app.add_subcommand("plot-data", "CSV series for plots");
    std::string which = "asymptotic-slopes";
    plot_cmd->add_option("--which", which,
                         "asymptotic-slopes | sector-map | p-grid");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!config_file.empty()) {
            RunConfig file_cfg = RunConfig::from_file(config_file);
            file_cfg.out_dir = cfg.out_dir;
            file_cfg.jobs = cfg.jobs;
            cfg = file_cfg;
        }

        if (spec_cmd->parsed()) {
            cfg.point_spec = point_spec;
            // Emit the critical set of the configured point alongside the report.
            std::filesystem::create_directories(cfg.out_dir);
            ManifoldPoint pt = point_from_spec(cfg.point_spec, cfg.truncation);
            std::ofstream cs_out(cfg.out_dir + "/critical_set.json");
            cs_out << critical_set_to_json(find_critical_set(pt)) << "\n";
            return run_named_suites(cfg, {"spectrum"});
        }
        if (metric_cmd->parsed()) return run_named_suites(cfg, {"metric"});
        if (formal_cmd->parsed()) return run_named_suites(cfg, {"formal"});
        if (specfun_cmd->parsed())
            return run_named_suites(cfg, {"specfun-selftest"});
        if (resurgence_cmd->parsed())
            return run_named_suites(cfg, {"resurgence"});

        if (integral_cmd->parsed()) {
            if (suite_only) return run_named_suites(cfg, {"integral"});
            ManifoldPoint pt = point_from_spec(int_point, cfg.truncation);
            cplx sigma(sigma_re, sigma_im);
            TangentTriple e = TangentTriple::unit_field(cfg.truncation.N);

            // When sigma lies on the curve sigma(S^1), the asymptotic series
            // at the matching critical point is emitted alongside the values.
            std::vector<cplx> coeffs;
            cplx up = 0.0;
            bool has_asym = false;
            {
                // All saddles of lambda_sigma on S^1 share this sigma; the
                // expansion along the requested ray belongs to the dominant one.
                const Vec& zg = unit_roots(pt.params().M);
                cplx best_p = 0.0;
                double best_re = -1e300;
                for (int j = 0; j < pt.params().M; ++j) {
                    if (std::abs(pt.sigma().eval(zg(j)) - sigma) > 1e-6) continue;
                    double re = (std::polar(1.0, ray_angle) *
                                 canonical_value(pt, zg(j)))
                                    .real();
                    if (re > best_re) {
                        best_re = re;
                        best_p = zg(j);
                    }
                }
                if (best_re > -1e300) {
                    coeffs = asymptotic_coeffs_residue(
                        pt, AsymptoticFamily::SigmaOnCircle, best_p, k_max, e);
                    up = canonical_value(pt, best_p);
                    has_asym = true;
                }
            }

            std::cout << "{ \"rows\": [\n";
            bool first = true;
            double prev_err = 0.0, prev_r = 0.0;
            for (double r = radii_lo; r <= radii_hi * (1 + 1e-12); r *= 1.3) {
                CoverComplex zeta(r, ray_angle);
                cplx val = dy_sigma(pt, sigma, zeta, e);
                if (!first) std::cout << ",\n";
                first = false;
                std::cout << "  {\"zeta\": [" << zeta.value().real() << ", "
                          << zeta.value().imag() << "], \"value\": ["
                          << val.real() << ", " << val.imag() << "]";
                if (has_asym) {
                    cplx partial = 0.0;
                    cplx zinv = 1.0;
                    std::cout << ", \"asymptotic_partial_sums\": [";
                    for (int k = 0; k <= k_max; ++k) {
                        partial += coeffs[k] * zinv;
                        zinv /= zeta.value();
                        cplx ps = partial * std::exp(zeta.value() * up);
                        std::cout << (k ? ", " : "") << "[" << ps.real() << ", "
                                  << ps.imag() << "]";
                    }
                    std::cout << "]";
                    double err = std::abs(val * std::exp(-zeta.value() * up) -
                                          partial);
                    if (prev_r > 0.0 && err > 0.0 && prev_err > 0.0) {
                        double slope = (std::log(err) - std::log(prev_err)) /
                                       (std::log(r) - std::log(prev_r));
                        std::cout << ", \"slope\": " << slope;
                    }
                    prev_err = err;
                    prev_r = r;
                }
                std::cout << "}";
            }
            std::cout << "\n] }\n";
            return 0;
        }

        if (stokes_cmd->parsed()) {
            if (st_suite) return run_named_suites(cfg, {"stokes"});
            ManifoldPoint pt = ManifoldPoint::special_point(
                st_v, std::log(st_eu), cfg.truncation);
            StokesPairResult sp = stokes_pair(pt, CoverComplex(1.0, st_parg),
                                              st_theta, st_zabs, st_eps);
            StokesFamilyResult sf =
                stokes_family(pt, st_theta, 32, st_zabs, st_eps, 4);
            Eigen::Matrix2cd want_minus, want_plus;
            want_minus << 1, 0, -2, 1;
            want_plus << 1, -2, 0, 1;
            double err = std::max(
                (sp.S_minus - want_minus).cwiseAbs().maxCoeff(),
                (sp.S_plus - want_plus).cwiseAbs().maxCoeff());
            std::cout << "{\n  \"S_plus\": [[" << sp.S_plus(0, 0).real() << ", "
                      << sp.S_plus(0, 1).real() << "], [" << sp.S_plus(1, 0).real()
                      << ", " << sp.S_plus(1, 1).real() << "]],\n"
                      << "  \"S_minus\": [[" << sp.S_minus(0, 0).real() << ", "
                      << sp.S_minus(0, 1).real() << "], ["
                      << sp.S_minus(1, 0).real() << ", " << sp.S_minus(1, 1).real()
                      << "]],\n  \"max_entry_error\": " << err
                      << ",\n  \"kernel_pairs\": [";
            for (size_t i = 0; i < sf.kernel_plus.size(); ++i) {
                const auto& k = sf.kernel_plus[i];
                std::cout << (i ? ", " : "") << "[" << k.p_index << ", "
                          << k.q_index << ", " << k.weight << "]";
            }
            std::cout << "]\n}\n";
            return err < 1e-9 ? 0 : 1;
        }

        if (plot_cmd->parsed()) {
            std::cout << emit_plot_data(cfg, which);
            return 0;
        }

        if (report_cmd->parsed()) {
            Report rep = run_suite(cfg);
            return write_report(rep, cfg);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind == ErrorKind::ConfigInvalid ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
