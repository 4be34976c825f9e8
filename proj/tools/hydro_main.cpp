#include <CLI11.hpp>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "hydro/harness.hpp"

using namespace hydro;

namespace {

void print_summary(const RunConfig& cfg, const RunResult& r) {
    std::cout << "problem=" << to_string(cfg.problem) << " order=" << cfg.order
              << " integrator=" << to_string(cfg.integrator)
              << " riemann=" << to_string(cfg.solver) << " mesh=" << r.geom.nx << "x"
              << r.geom.ny << "x" << r.geom.nz << "\n";
    std::cout << "steps=" << r.steps << " t_end=" << r.t_end << " wall=" << r.wall_seconds
              << "s zones/sec=" << std::scientific << std::setprecision(3) << r.zones_per_sec
              << std::defaultfloat << "\n";
    if (r.errors) {
        std::cout << std::scientific << std::setprecision(3);
        std::cout << "density L1=" << r.errors->l1[0] << " Linf=" << r.errors->linf[0]
                  << std::defaultfloat << "\n";
    }
    std::cout << "predictor_fraction=" << std::fixed << std::setprecision(3)
              << r.profile.predictor_fraction() << std::defaultfloat
              << " ledger: uploads=" << r.ledger.uploads << " downloads=" << r.ledger.downloads
              << " scalar_uploads=" << r.ledger.scalar_uploads << " steps=" << r.ledger.steps
              << "\n";
}

void write_ledger_csv(const std::string& path, const RunConfig& cfg, const RunResult& r) {
    std::ostringstream rows;
    TransferLedger per = r.ledger;
    for (std::uint64_t s = 1; s <= r.ledger.steps; ++s)
        rows << ledger_csv_row(s, cfg.strategy, per) << '\n';
    append_csv(path, ledger_csv_header(), rows.str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"patch-based finite-volume solver for the 3D compressible Euler equations"};

    std::string problem, integrator, riemann, strategy, split, check, config_path, out_path,
        meshes;
    int order = 0, nx = 0, ny = 0, nz = 0, threads = 0;
    double cfl = 0.0, tfinal = 0.0;
    long long steps = 0;
    unsigned long long seed = 0;

    app.add_option("--problem", problem, "vortex|sod|constant");
    app.add_option("--order", order, "spatial order, 2 or 3");
    app.add_option("--integrator", integrator, "ader|rk2|rk3");
    app.add_option("--riemann", riemann, "rusanov|hll");
    app.add_option("--strategy", strategy, "skinny|full transfer strategy");
    app.add_option("--nx", nx, "active zones along x");
    app.add_option("--ny", ny, "active zones along y");
    app.add_option("--nz", nz, "active zones along z");
    app.add_option("--split", split, "patch split PxQxR");
    app.add_option("--cfl", cfl, "Courant number (default 0.6 at O2, 0.4 at O3)");
    auto* opt_tfinal = app.add_option("--tfinal", tfinal, "stopping time");
    auto* opt_steps = app.add_option("--steps", steps, "fixed step count");
    opt_tfinal->excludes(opt_steps);
    app.add_option("--out", out_path, "CSV output path");
    app.add_option("--config", config_path, "key=value config file (flags override)");
    app.add_option("--check", check, "convergence|benchmark|repro");
    app.add_option("--meshes", meshes, "comma list of mesh sizes for --check convergence");
    app.add_option("--seed", seed, "seed echoed into outputs");
    app.add_option("--threads", threads, "OpenMP worker count (0 = default)");

    CLI11_PARSE(app, argc, argv);

    try {
        RunConfig cfg;
        if (!config_path.empty()) apply_config_file(cfg, config_path);
        if (app.count("--problem")) apply_key_value(cfg, "problem", problem);
        if (app.count("--order")) apply_key_value(cfg, "order", std::to_string(order));
        if (app.count("--integrator")) apply_key_value(cfg, "integrator", integrator);
        if (app.count("--riemann")) apply_key_value(cfg, "riemann", riemann);
        if (app.count("--strategy")) apply_key_value(cfg, "strategy", strategy);
        if (app.count("--nx")) apply_key_value(cfg, "nx", std::to_string(nx));
        if (app.count("--ny")) apply_key_value(cfg, "ny", std::to_string(ny));
        if (app.count("--nz")) apply_key_value(cfg, "nz", std::to_string(nz));
        if (app.count("--split")) apply_key_value(cfg, "split", split);
        if (app.count("--cfl")) apply_key_value(cfg, "cfl", std::to_string(cfl));
        if (app.count("--tfinal")) apply_key_value(cfg, "tfinal", std::to_string(tfinal));
        if (app.count("--steps")) apply_key_value(cfg, "steps", std::to_string(steps));
        if (app.count("--out")) apply_key_value(cfg, "out", out_path);
        if (app.count("--check")) apply_key_value(cfg, "check", check);
        if (app.count("--meshes")) apply_key_value(cfg, "meshes", meshes);
        if (app.count("--seed")) apply_key_value(cfg, "seed", std::to_string(seed));
        if (app.count("--threads")) apply_key_value(cfg, "threads", std::to_string(threads));

        switch (cfg.check) {
            case CheckMode::none: {
                RunResult r = run_simulation(cfg);
                print_summary(cfg, r);
                if (!cfg.out_path.empty()) {
                    append_csv(cfg.out_path, csv_header(), csv_row(cfg, r) + "\n");
                    write_ledger_csv(cfg.out_path + ".ledger.csv", cfg, r);
                }
                break;
            }
            case CheckMode::convergence: {
                auto rows = run_convergence_study(cfg, cfg.meshes);
                std::ostringstream csv;
                std::cout << std::scientific << std::setprecision(3);
                for (const auto& row : rows) {
                    std::cout << "mesh=" << row.mesh << "^3 density L1=" << row.report.l1[0]
                              << " Linf=" << row.report.linf[0];
                    if (!std::isnan(row.report.order_estimate))
                        std::cout << " order=" << std::fixed << std::setprecision(2)
                                  << row.report.order_estimate << std::scientific
                                  << std::setprecision(3);
                    std::cout << "\n";
                    csv << csv_row(cfg, row.result, row.mesh) << '\n';
                }
                if (!cfg.out_path.empty()) append_csv(cfg.out_path, csv_header(), csv.str());
                break;
            }
            case CheckMode::benchmark: {
                RunResult r = run_benchmark(cfg);
                print_summary(cfg, r);
                std::cout << "stage seconds: reconstruct=" << r.profile.reconstruct
                          << " predict=" << r.profile.predict << " flux=" << r.profile.flux
                          << " rate=" << r.profile.rate << " update=" << r.profile.update
                          << " transfer=" << r.profile.transfer << "\n";
                std::cout << "riemann_calls=" << r.riemann_calls << "\n";
                if (!cfg.out_path.empty())
                    append_csv(cfg.out_path, csv_header(), csv_row(cfg, r) + "\n");
                break;
            }
            case CheckMode::repro: {
                ReproReport rep = run_reproducibility_check(cfg);
                std::cout << "serial_bit_identical=" << (rep.serial_bit_identical ? "yes" : "no")
                          << "\nmultiworker_density_l1_diff=" << std::scientific
                          << rep.multiworker_l1_diff << "\nmax_abs_diff=" << rep.max_abs_diff
                          << " at zone (" << rep.max_diff_zone[0] << "," << rep.max_diff_zone[1]
                          << "," << rep.max_diff_zone[2] << ")\n";
                if (!rep.pass) {
                    std::cerr << "reproducibility check FAILED\n";
                    return 2;
                }
                std::cout << "reproducibility check passed\n";
                break;
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
