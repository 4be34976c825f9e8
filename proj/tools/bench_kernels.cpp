// Per-kernel throughput comparison: OpenMP kernels vs the serial reference
// implementations, on a vortex-initialized patch.

#include <omp.h>

#include <CLI11.hpp>
#include <functional>
#include <iomanip>
#include <iostream>

#include "hydro/problems.hpp"
#include "hydro/serial_ref.hpp"
#include "hydro/stepper.hpp"

using namespace hydro;

namespace {

double time_loop(const std::function<void()>& fn, int iters) {
    fn();  // warm-up
    double t0 = omp_get_wtime();
    for (int it = 0; it < iters; ++it) fn();
    return (omp_get_wtime() - t0) / iters;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"kernel benchmark: OpenMP vs serial reference"};
    int n = 48, order = 2, iters = 5, threads = 0;
    app.add_option("--n", n, "zones per axis");
    app.add_option("--order", order, "spatial order, 2 or 3");
    app.add_option("--iters", iters, "timing iterations per kernel");
    app.add_option("--threads", threads, "OpenMP worker count (0 = default)");
    CLI11_PARSE(app, argc, argv);

    if (threads > 0) omp_set_num_threads(threads);

    GasModel gas;
    LimiterConfig limiter;
    PatchGeometry g = make_geometry(n, n, n, order, {-5, -5, -5}, {5, 5, 5});
    SkinnyState skinny = init_isentropic_vortex(g, gas, order);
    apply_boundary(skinny, g, BoundaryKind::periodic);

    ModalState modal = ModalState::make(g, order);
    skinny_to_modal(skinny, modal);
    apply_boundary(modal, g, BoundaryKind::periodic);

    TimeState time;
    time.cfl = order == 2 ? 0.6 : 0.4;
    time.dt = 1e-3;

    FluxSet fluxes = FluxSet::make(g);
    RateField rate = RateField::make(g);

    // Prepare modes once so every kernel sees realistic inputs.
    reconstruct_patch(modal, g, limiter, order);
    predict_patch(modal, time, g, gas);

    struct Row {
        const char* name;
        std::function<void()> omp_fn;
        std::function<void()> ref_fn;
    };
    ModalState modal_ref = modal;
    SkinnyState skinny_ref = skinny;
    FluxSet fluxes_ref = FluxSet::make(g);
    RateField rate_ref = RateField::make(g);
    TimeState time_ref = time;

    std::vector<Row> rows = {
        {"skinny_to_modal", [&] { skinny_to_modal(skinny, modal); },
         [&] { ref::skinny_to_modal(skinny_ref, modal_ref); }},
        {"reconstruct", [&] { reconstruct_patch(modal, g, limiter, order); },
         [&] {
             if (order == 2)
                 ref::limit_patch_o2(modal_ref, g, limiter);
             else
                 ref::reconstruct_patch_o3(modal_ref, g, limiter);
         }},
        {"predict", [&] { predict_patch(modal, time, g, gas); },
         [&] { ref::predict_patch(modal_ref, time_ref, g, gas); }},
        {"flux_x", [&] { make_flux_axis(modal, Axis::x, g, gas, SolverChoice::hll, fluxes.fx); },
         [&] { ref::make_flux_axis(modal_ref, Axis::x, g, gas, SolverChoice::hll, fluxes_ref.fx); }},
        {"flux_y", [&] { make_flux_axis(modal, Axis::y, g, gas, SolverChoice::hll, fluxes.fy); },
         [&] { ref::make_flux_axis(modal_ref, Axis::y, g, gas, SolverChoice::hll, fluxes_ref.fy); }},
        {"flux_z", [&] { make_flux_axis(modal, Axis::z, g, gas, SolverChoice::hll, fluxes.fz); },
         [&] { ref::make_flux_axis(modal_ref, Axis::z, g, gas, SolverChoice::hll, fluxes_ref.fz); }},
        {"make_du_dt", [&] { make_du_dt(fluxes, time, g, rate); },
         [&] { ref::make_du_dt(fluxes_ref, time_ref, g, rate_ref); }},
    };

    double zones = double(zone_count(g, false));
    std::cout << "mesh " << n << "^3, order " << order << ", "
              << omp_get_max_threads() << " OpenMP worker(s), " << iters << " iters\n";
    std::cout << std::left << std::setw(16) << "kernel" << std::right << std::setw(14)
              << "omp (ms)" << std::setw(14) << "serial (ms)" << std::setw(12) << "speedup"
              << std::setw(16) << "Mzones/s (omp)" << "\n";
    for (auto& row : rows) {
        double t_omp = time_loop(row.omp_fn, iters);
        double t_ref = time_loop(row.ref_fn, iters);
        std::cout << std::left << std::setw(16) << row.name << std::right << std::fixed
                  << std::setprecision(3) << std::setw(14) << t_omp * 1e3 << std::setw(14)
                  << t_ref * 1e3 << std::setw(12) << std::setprecision(2) << t_ref / t_omp
                  << std::setw(16) << std::setprecision(2) << zones / t_omp / 1e6 << "\n";
    }

    // Full-step comparison, including the update/reduction.
    StepParams par;
    par.gas = gas;
    par.order = order;
    par.limiter = limiter;
    StepScratch scratch = StepScratch::make(g);
    double t_step = time_loop(
        [&] {
            apply_boundary(skinny, g, BoundaryKind::periodic);
            TimeState ts = time;
            ader_step(modal, skinny, ts, g, par, scratch);
        },
        iters);
    double t_step_ref = time_loop(
        [&] {
            apply_boundary(skinny_ref, g, BoundaryKind::periodic);
            TimeState ts = time_ref;
            ref::skinny_to_modal(skinny_ref, modal_ref);
            if (order == 2)
                ref::limit_patch_o2(modal_ref, g, limiter);
            else
                ref::reconstruct_patch_o3(modal_ref, g, limiter);
            ref::predict_patch(modal_ref, ts, g, gas);
            for (Axis a : {Axis::x, Axis::y, Axis::z})
                ref::make_flux_axis(modal_ref, a, g, gas, SolverChoice::hll,
                                    a == Axis::x ? fluxes_ref.fx
                                                 : (a == Axis::y ? fluxes_ref.fy : fluxes_ref.fz));
            ref::make_du_dt(fluxes_ref, ts, g, rate_ref);
            ref::update_u_timestep(modal_ref, skinny_ref, rate_ref, ts, g, gas);
        },
        iters);
    std::cout << "full step: omp " << std::fixed << std::setprecision(3) << t_step * 1e3
              << " ms (" << std::setprecision(2) << zones / t_step / 1e6
              << " Mzones/s), serial " << std::setprecision(3) << t_step_ref * 1e3
              << " ms, speedup " << std::setprecision(2) << t_step_ref / t_step << "\n";
    return 0;
}
