#include "hydro/stepper.hpp"

#include <omp.h>

#include "omp_errors.hpp"

namespace hydro {

namespace {

struct StageTimer {
    double* slot;
    double t0;
    explicit StageTimer(double* s) : slot(s), t0(omp_get_wtime()) {}
    ~StageTimer() {
        if (slot) *slot += omp_get_wtime() - t0;
    }
};

inline double* slot(StageProfile* p, double StageProfile::*m) { return p ? &(p->*m) : nullptr; }

}  // namespace

double compute_dt_next(const ModalState& modal, const PatchGeometry& g, const GasModel& gas,
                       double cfl) {
    const int gh = g.ghost, modes = modal.modes;
    double dt_next = 1.0e32;
    detail::ErrorCollector errors;
#pragma omp parallel for collapse(3) reduction(min : dt_next)
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                if (errors.failed) continue;
                const double* zp = modal.zone(gh + k, gh + j, gh + i);
                double u[NVAR];
                for (int q = 0; q < NVAR; ++q) u[q] = zp[q * modes];
                try {
                    dt_next = std::min(
                        dt_next, eval_tstep_ptwise(ConsVars::from(u), cfl, g.dx, g.dy, g.dz, gas));
                } catch (const std::exception& e) {
                    errors.record("dt estimate: zone (" + std::to_string(i) + "," +
                                  std::to_string(j) + "," + std::to_string(k) + "): " + e.what());
                }
            }
    errors.rethrow();
    return dt_next;
}

void ader_step(ModalState& modal, SkinnyState& skinny, TimeState& time,
               const PatchGeometry& g, const StepParams& par, StepScratch& scratch,
               StageProfile* prof) {
    {
        StageTimer t(slot(prof, &StageProfile::transfer));
        skinny_to_modal(skinny, modal);
    }
    {
        StageTimer t(slot(prof, &StageProfile::reconstruct));
        reconstruct_patch(modal, g, par.limiter, par.order);
    }
    {
        StageTimer t(slot(prof, &StageProfile::predict));
        predict_patch(modal, time, g, par.gas);
    }
    {
        StageTimer t(slot(prof, &StageProfile::flux));
        make_flux_axis(modal, Axis::x, g, par.gas, par.solver, scratch.fluxes.fx);
        make_flux_axis(modal, Axis::y, g, par.gas, par.solver, scratch.fluxes.fy);
        make_flux_axis(modal, Axis::z, g, par.gas, par.solver, scratch.fluxes.fz);
    }
    {
        StageTimer t(slot(prof, &StageProfile::rate));
        make_du_dt(scratch.fluxes, time, g, scratch.rate);
    }
    {
        StageTimer t(slot(prof, &StageProfile::update));
        update_u_timestep(modal, skinny, scratch.rate, time, g, par.gas);
    }
}

const std::vector<RkStage>& rk_stages(IntegratorChoice kind) {
    static const std::vector<RkStage> heun = {{0.0, 1.0}, {0.5, 0.5}};
    static const std::vector<RkStage> ssp3 = {{0.0, 1.0}, {0.75, 0.25}, {1.0 / 3.0, 2.0 / 3.0}};
    if (kind == IntegratorChoice::rk2) return heun;
    if (kind == IntegratorChoice::rk3) return ssp3;
    throw std::invalid_argument("rk_stages called for a non-RK integrator");
}

void rk_save_u0(const SkinnyState& skinny, const PatchGeometry& g, StepScratch& scratch) {
    const int gh = g.ghost;
#pragma omp parallel for collapse(3)
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                const double* src = skinny.zone(gh + k, gh + j, gh + i);
                double* dst = scratch.stage_u0.zone(gh + k, gh + j, gh + i);
                for (int q = 0; q < NVAR; ++q) dst[q] = src[q];
            }
}

void rk_stage(ModalState& modal, SkinnyState& skinny, TimeState& time, const PatchGeometry& g,
              const StepParams& par, StepScratch& scratch, RkStage stage, StageProfile* prof) {
    {
        StageTimer t(slot(prof, &StageProfile::transfer));
        skinny_to_modal(skinny, modal);
    }
    {
        StageTimer t(slot(prof, &StageProfile::reconstruct));
        reconstruct_patch(modal, g, par.limiter, par.order);
    }
    {
        StageTimer t(slot(prof, &StageProfile::predict));
        zero_temporal_mode(modal);
    }
    {
        StageTimer t(slot(prof, &StageProfile::flux));
        make_flux_axis(modal, Axis::x, g, par.gas, par.solver, scratch.fluxes.fx);
        make_flux_axis(modal, Axis::y, g, par.gas, par.solver, scratch.fluxes.fy);
        make_flux_axis(modal, Axis::z, g, par.gas, par.solver, scratch.fluxes.fz);
    }
    {
        StageTimer t(slot(prof, &StageProfile::rate));
        make_du_dt(scratch.fluxes, time, g, scratch.rate);
    }
    {
        StageTimer t(slot(prof, &StageProfile::update));
        const int gh = g.ghost, modes = modal.modes;
        const double a = stage.a, b = stage.b;
#pragma omp parallel for collapse(3)
        for (int k = 0; k < g.nz; ++k)
            for (int j = 0; j < g.ny; ++j)
                for (int i = 0; i < g.nx; ++i) {
                    double* zp = modal.zone(gh + k, gh + j, gh + i);
                    double* sp = skinny.zone(gh + k, gh + j, gh + i);
                    const double* u0 = scratch.stage_u0.zone(gh + k, gh + j, gh + i);
                    const double* r = scratch.rate.zone(k, j, i);
                    for (int q = 0; q < NVAR; ++q) {
                        double unew = a * u0[q] + b * (zp[q * modes] + r[q]);
                        zp[q * modes] = unew;
                        sp[q] = unew;
                    }
                }
    }
}

void rk_step(ModalState& modal, SkinnyState& skinny, TimeState& time, const PatchGeometry& g,
             const StepParams& par, StepScratch& scratch, BoundaryKind bc, StageProfile* prof) {
    rk_save_u0(skinny, g, scratch);
    for (const RkStage& stage : rk_stages(par.integrator)) {
        {
            StageTimer t(slot(prof, &StageProfile::transfer));
            apply_boundary(skinny, g, bc);
        }
        rk_stage(modal, skinny, time, g, par, scratch, stage, prof);
    }
    StageTimer t(slot(prof, &StageProfile::update));
    time.dt_next = compute_dt_next(modal, g, par.gas, time.cfl);
}

}  // namespace hydro
