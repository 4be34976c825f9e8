#include <doctest.h>

#include "hydro/problems.hpp"
#include "hydro/stepper.hpp"
#include "hydro/transfer.hpp"
#include "test_support.hpp"

using namespace hydro;

namespace {

struct SinglePatch {
    PatchGeometry g;
    ModalState modal;
    SkinnyState skinny;
    StepScratch scratch;
};

SinglePatch vortex_patch(int n, int order) {
    SinglePatch p{make_geometry(n, n, n, order, {-5, -5, -5}, {5, 5, 5}),
                  ModalState{}, SkinnyState{}, StepScratch{}};
    p.modal = ModalState::make(p.g, order);
    p.skinny = init_isentropic_vortex(p.g, GasModel{}, order);
    apply_boundary(p.skinny, p.g, BoundaryKind::periodic);
    p.scratch = StepScratch::make(p.g);
    return p;
}

double initial_dt(const SinglePatch& p, const GasModel& gas, double cfl) {
    double dt = 1e32;
    const int gh = p.g.ghost;
    for (int k = gh; k < gh + p.g.nz; ++k)
        for (int j = gh; j < gh + p.g.ny; ++j)
            for (int i = gh; i < gh + p.g.nx; ++i)
                dt = std::min(dt, eval_tstep_ptwise(ConsVars::from(p.skinny.zone(k, j, i)), cfl,
                                                    p.g.dx, p.g.dy, p.g.dz, gas));
    return dt;
}

}  // namespace

TEST_CASE("rk stages leave a uniform state unchanged") {
    GasModel gas;
    for (auto kind : {IntegratorChoice::rk2, IntegratorChoice::rk3}) {
        PatchGeometry g = make_geometry(6, 6, 6, 2, {0, 0, 0}, {1, 1, 1});
        ConsVars c = prim_to_cons({1.0, 0.7, -0.4, 0.2, 1.5}, gas);
        SkinnyState skinny = SkinnyState::make(g);
        double u[NVAR];
        c.store(u);
        for (int k = 0; k < skinny.mz; ++k)
            for (int j = 0; j < skinny.my; ++j)
                for (int i = 0; i < skinny.mx; ++i)
                    for (int q = 0; q < NVAR; ++q) skinny.at(k, j, i, q) = u[q];
        SkinnyState before = skinny;
        ModalState modal = ModalState::make(g, 2);
        StepScratch scratch = StepScratch::make(g);
        StepParams par;
        par.gas = gas;
        par.order = 2;
        par.integrator = kind;
        TimeState time;
        time.dt = 0.01;
        time.cfl = 0.5;
        rk_step(modal, skinny, time, g, par, scratch, BoundaryKind::periodic);
        CHECK(test::bitwise_equal(skinny.v, before.v));
    }
}

TEST_CASE("riemann solve counts: rk2 = 2x and rk3 = 3x the ader count") {
    GasModel gas;
    auto count_one_step = [&](IntegratorChoice kind) {
        SinglePatch p = vortex_patch(8, 2);
        StepParams par;
        par.gas = gas;
        par.order = 2;
        par.integrator = kind;
        TimeState time;
        time.dt = 0.005;
        time.cfl = 0.6;
        reset_riemann_calls();
        if (kind == IntegratorChoice::ader_onestep)
            ader_step(p.modal, p.skinny, time, p.g, par, p.scratch);
        else
            rk_step(p.modal, p.skinny, time, p.g, par, p.scratch, BoundaryKind::periodic);
        return riemann_call_count();
    };
    auto ader = count_one_step(IntegratorChoice::ader_onestep);
    auto rk2 = count_one_step(IntegratorChoice::rk2);
    auto rk3 = count_one_step(IntegratorChoice::rk3);
    // per sweep: (n+1) * n * n faces, three sweeps
    CHECK(ader == 3ull * 9 * 8 * 8);
    CHECK(rk2 == 2 * ader);
    CHECK(rk3 == 3 * ader);
}

TEST_CASE("with a zero temporal mode one corrector pass is a forward-Euler stage") {
    GasModel gas;
    SinglePatch a = vortex_patch(8, 2);
    SinglePatch b = vortex_patch(8, 2);
    StepParams par;
    par.gas = gas;
    par.order = 2;
    TimeState ta, tb;
    ta.dt = tb.dt = 0.004;
    ta.cfl = tb.cfl = 0.6;

    // Path A: corrector pipeline with the temporal mode zeroed by hand.
    skinny_to_modal(a.skinny, a.modal);
    reconstruct_patch(a.modal, a.g, par.limiter, 2);
    zero_temporal_mode(a.modal);
    make_flux_axis(a.modal, Axis::x, a.g, gas, par.solver, a.scratch.fluxes.fx);
    make_flux_axis(a.modal, Axis::y, a.g, gas, par.solver, a.scratch.fluxes.fy);
    make_flux_axis(a.modal, Axis::z, a.g, gas, par.solver, a.scratch.fluxes.fz);
    make_du_dt(a.scratch.fluxes, ta, a.g, a.scratch.rate);
    update_u_timestep(a.modal, a.skinny, a.scratch.rate, ta, a.g, gas);

    // Path B: the first Runge-Kutta stage (a=0, b=1).
    rk_save_u0(b.skinny, b.g, b.scratch);
    rk_stage(b.modal, b.skinny, tb, b.g, par, b.scratch, RkStage{0.0, 1.0});

    const int gh = a.g.ghost;
    for (int k = gh; k < gh + a.g.nz; ++k)
        for (int j = gh; j < gh + a.g.ny; ++j)
            for (int i = gh; i < gh + a.g.nx; ++i)
                for (int q = 0; q < NVAR; ++q)
                    CHECK(a.skinny.at(k, j, i, q) == b.skinny.at(k, j, i, q));
}

TEST_CASE("runge-kutta temporal orders via cfl refinement") {
    GasModel gas;
    // Fixed coarse mesh; halving cfl halves dt, so the deviation from a
    // tiny-dt reference run isolates the temporal error.
    auto run_to = [&](IntegratorChoice kind, int order, double cfl, double t_end) {
        SinglePatch p = vortex_patch(8, order);
        StepParams par;
        par.gas = gas;
        par.order = order;
        par.integrator = kind;
        TimeState time;
        time.cfl = cfl;
        time.dt = initial_dt(p, gas, cfl);
        while (t_end - time.t > 1e-12 * t_end) {
            if (time.dt >= t_end - time.t) time.dt = t_end - time.t;
            apply_boundary(p.skinny, p.g, BoundaryKind::periodic);
            if (kind == IntegratorChoice::ader_onestep)
                ader_step(p.modal, p.skinny, time, p.g, par, p.scratch);
            else
                rk_step(p.modal, p.skinny, time, p.g, par, p.scratch, BoundaryKind::periodic);
            time.t += time.dt;
            time.dt = time.dt_next;
        }
        return p;
    };
    auto diff_l1 = [&](const SinglePatch& x, const SinglePatch& y) {
        double s = 0;
        const int gh = x.g.ghost;
        for (int k = gh; k < gh + x.g.nz; ++k)
            for (int j = gh; j < gh + x.g.ny; ++j)
                for (int i = gh; i < gh + x.g.nx; ++i)
                    s += std::abs(x.skinny.at(k, j, i, 0) - y.skinny.at(k, j, i, 0));
        return s / zone_count(x.g, false);
    };

    const double t_end = 0.4;
    for (auto [kind, order, lo, hi] :
         {std::tuple{IntegratorChoice::rk2, 2, 2.8, 6.0},
          std::tuple{IntegratorChoice::rk3, 3, 5.0, 20.0}}) {
        SinglePatch ref = run_to(kind, order, 0.02, t_end);
        double e1 = diff_l1(run_to(kind, order, 0.32, t_end), ref);
        double e2 = diff_l1(run_to(kind, order, 0.16, t_end), ref);
        double ratio = e1 / e2;
        CHECK(ratio > lo);
        CHECK(ratio < hi);
    }
}
