#include <doctest.h>

#include <random>

#include "hydro/corrector.hpp"
#include "hydro/problems.hpp"
#include "hydro/stepper.hpp"
#include "hydro/transfer.hpp"
#include "test_support.hpp"

using namespace hydro;

namespace {

ModalState constant_patch(const PatchGeometry& g, int order, const ConsVars& c) {
    ModalState modal = ModalState::make(g, order);
    double u[NVAR];
    c.store(u);
    for (int k = 0; k < modal.mz; ++k)
        for (int j = 0; j < modal.my; ++j)
            for (int i = 0; i < modal.mx; ++i)
                for (int q = 0; q < NVAR; ++q) modal.at(k, j, i, q, 0) = u[q];
    return modal;
}

}  // namespace

TEST_CASE("constant state: every face flux equals the physical flux, rate is zero") {
    GasModel gas;
    PatchGeometry g = make_geometry(5, 4, 6, 2, {0, 0, 0}, {1, 1, 1});
    ConsVars c = prim_to_cons({1.3, 0.4, -0.2, 0.1, 1.7}, gas);
    ModalState modal = constant_patch(g, 2, c);
    LimiterConfig cfg;
    limit_patch_o2(modal, g, cfg);
    TimeState time;
    time.dt = 0.01;
    predict_patch(modal, time, g, gas);

    FluxSet fluxes = FluxSet::make(g);
    for (auto solver : {SolverChoice::rusanov, SolverChoice::hll}) {
        make_flux_axis(modal, Axis::x, g, gas, solver, fluxes.fx);
        make_flux_axis(modal, Axis::y, g, gas, solver, fluxes.fy);
        make_flux_axis(modal, Axis::z, g, gas, solver, fluxes.fz);
        auto fx = physical_flux(c, Axis::x, gas);
        for (int q = 0; q < NVAR; ++q)
            CHECK(fluxes.fx.face(2, 1, 3)[q] ==
                  doctest::Approx(fx[q]).epsilon(1e-13));  // consistency to round-off

        RateField rate = RateField::make(g);
        make_du_dt(fluxes, time, g, rate);
        for (double v : rate.v) CHECK(v == 0.0);
    }
}

TEST_CASE("zero modes reduce to the first-order Godunov flux") {
    GasModel gas;
    PatchGeometry g = make_geometry(4, 4, 4, 2, {0, 0, 0}, {1, 1, 1});
    ModalState modal = ModalState::make(g, 2);
    std::mt19937_64 rng(17);
    test::randomize_mode0(modal, rng, gas);
    // slopes and temporal mode stay zero

    FluxSet fluxes = FluxSet::make(g);
    make_flux_axis(modal, Axis::x, g, gas, SolverChoice::hll, fluxes.fx);

    const int gh = g.ghost;
    auto avg = [&](int k, int j, int i) {
        double u[NVAR];
        for (int q = 0; q < NVAR; ++q) u[q] = modal.at(k, j, i, q, 0);
        return ConsVars::from(u);
    };
    for (int f = 0; f <= g.nx; ++f) {
        ConsVars L = avg(gh + 1, gh + 2, gh + f - 1);
        ConsVars R = avg(gh + 1, gh + 2, gh + f);
        auto expect = hll_flux({L, R, Axis::x}, gas);
        for (int q = 0; q < NVAR; ++q) CHECK(fluxes.fx.face(1, 2, f)[q] == expect[q]);
    }
}

TEST_CASE("face extrapolation uses half the slope") {
    GasModel gas;
    PatchGeometry g = make_geometry(4, 4, 4, 2, {0, 0, 0}, {1, 1, 1});
    ConsVars c = prim_to_cons({2.0, 0.0, 0.0, 0.0, 1.0}, gas);
    ModalState modal = constant_patch(g, 2, c);
    const int gh = g.ghost;
    double s = 0.25;
    modal.at(gh + 1, gh + 1, gh + 1, 0, 1) = s;

    // U_L at the east face of the sloped zone is avg + 0.5 s exactly; probe
    // it through a Rusanov flux against a manually built pair.
    FluxSet fluxes = FluxSet::make(g);
    make_flux_axis(modal, Axis::x, g, gas, SolverChoice::rusanov, fluxes.fx);
    ConsVars L = c;
    L.rho += 0.5 * s;
    auto expect = rusanov_flux({L, c, Axis::x}, gas);
    for (int q = 0; q < NVAR; ++q) CHECK(fluxes.fx.face(1, 1, 2)[q] == expect[q]);
}

TEST_CASE("a single interior face flux splits into a +-1 rate pair") {
    PatchGeometry g = make_geometry(4, 4, 4, 2, {0, 0, 0}, {4, 4, 4});  // dx=1
    FluxSet fluxes = FluxSet::make(g);
    TimeState time;
    time.dt = 1.0;
    const int f0 = 2, jj = 1, kk = 2;
    fluxes.fx.face(kk, jj, f0)[0] = 1.0;

    RateField rate = RateField::make(g);
    make_du_dt(fluxes, time, g, rate);
    // face f0 is the east face of zone f0-1 and the west face of zone f0
    CHECK(rate.at(kk, jj, f0 - 1, 0) == -1.0);
    CHECK(rate.at(kk, jj, f0, 0) == 1.0);
    double total = 0;
    for (double v : rate.v) total += std::abs(v);
    CHECK(total == 2.0);
}

TEST_CASE("rate telescopes to the net boundary flux") {
    PatchGeometry g = make_geometry(4, 5, 6, 2, {0, 0, 0}, {2, 2, 2});
    FluxSet fluxes = FluxSet::make(g);
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> d(-1, 1);
    for (auto* ff : {&fluxes.fx, &fluxes.fy, &fluxes.fz})
        for (double& v : ff->v) v = d(rng);
    TimeState time;
    time.dt = 0.37;

    RateField rate = RateField::make(g);
    make_du_dt(fluxes, time, g, rate);

    for (int q = 0; q < NVAR; ++q) {
        double total = 0;
        for (int k = 0; k < g.nz; ++k)
            for (int j = 0; j < g.ny; ++j)
                for (int i = 0; i < g.nx; ++i) total += rate.at(k, j, i, q);

        double boundary = 0;
        for (int k = 0; k < g.nz; ++k)
            for (int j = 0; j < g.ny; ++j)
                boundary += (fluxes.fx.face(k, j, g.nx)[q] - fluxes.fx.face(k, j, 0)[q]) / g.dx;
        for (int k = 0; k < g.nz; ++k)
            for (int i = 0; i < g.nx; ++i)
                boundary += (fluxes.fy.face(k, i, g.ny)[q] - fluxes.fy.face(k, i, 0)[q]) / g.dy;
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i)
                boundary += (fluxes.fz.face(j, i, g.nz)[q] - fluxes.fz.face(j, i, 0)[q]) / g.dz;
        CHECK(total == doctest::Approx(-time.dt * boundary).epsilon(1e-12));
    }
}

TEST_CASE("update with zero rate keeps the state and estimates dt_next") {
    GasModel gas;
    PatchGeometry g = make_geometry(4, 4, 4, 2, {0, 0, 0}, {1, 1, 1});
    ModalState modal = ModalState::make(g, 2);
    std::mt19937_64 rng(29);
    test::randomize_mode0(modal, rng, gas);
    ModalState before = modal;
    SkinnyState skinny = SkinnyState::make(g);
    RateField rate = RateField::make(g);
    TimeState time;
    time.cfl = 0.6;

    update_u_timestep(modal, skinny, rate, time, g, gas);
    CHECK(test::bitwise_equal(modal.v, before.v));
    CHECK(time.dt_next == compute_dt_next(modal, g, gas, 0.6));

    // dt_next is the serial min over zones
    const int gh = g.ghost;
    double expect = 1.0e32;
    for (int k = gh; k < gh + g.nz; ++k)
        for (int j = gh; j < gh + g.ny; ++j)
            for (int i = gh; i < gh + g.nx; ++i)
                expect = std::min(expect, eval_tstep_ptwise(ConsVars::from(skinny.zone(k, j, i)),
                                                            0.6, g.dx, g.dy, g.dz, gas));
    CHECK(time.dt_next == expect);
}

TEST_CASE("dt_next takes the minimum over zones") {
    GasModel gas;
    PatchGeometry g = make_geometry(4, 4, 4, 2, {0, 0, 0}, {1, 1, 1});
    ConsVars slow = prim_to_cons({1.4, 0.0, 0.0, 0.0, 1.0}, gas);   // signal speed 1
    ConsVars fast = prim_to_cons({1.4, 3.0, 0.0, 0.0, 1.0}, gas);   // much faster
    ModalState modal = constant_patch(g, 2, slow);
    const int gh = g.ghost;
    double uf[NVAR];
    fast.store(uf);
    for (int q = 0; q < NVAR; ++q) modal.at(gh + 1, gh + 1, gh + 1, q, 0) = uf[q];

    SkinnyState skinny = SkinnyState::make(g);
    RateField rate = RateField::make(g);
    TimeState time;
    time.cfl = 0.6;
    update_u_timestep(modal, skinny, rate, time, g, gas);
    CHECK(time.dt_next ==
          eval_tstep_ptwise(fast, 0.6, g.dx, g.dy, g.dz, gas));
}

TEST_CASE("update refreshes skinny from mode 0") {
    GasModel gas;
    PatchGeometry g = make_geometry(4, 4, 4, 2, {0, 0, 0}, {1, 1, 1});
    ModalState modal = ModalState::make(g, 2);
    std::mt19937_64 rng(31);
    test::randomize_mode0(modal, rng, gas);
    SkinnyState skinny = SkinnyState::make(g);
    RateField rate = RateField::make(g);
    for (double& v : rate.v) v = 1e-4;
    TimeState time;
    time.cfl = 0.5;
    update_u_timestep(modal, skinny, rate, time, g, gas);
    const int gh = g.ghost;
    for (int k = gh; k < gh + g.nz; ++k)
        for (int j = gh; j < gh + g.ny; ++j)
            for (int i = gh; i < gh + g.nx; ++i)
                for (int q = 0; q < NVAR; ++q)
                    CHECK(skinny.at(k, j, i, q) == modal.at(k, j, i, q, 0));
}

TEST_CASE("unphysical update aborts with zone id") {
    GasModel gas;
    PatchGeometry g = make_geometry(4, 4, 4, 2, {0, 0, 0}, {1, 1, 1});
    ConsVars c = prim_to_cons({1.0, 0.0, 0.0, 0.0, 1.0}, gas);
    ModalState modal = constant_patch(g, 2, c);
    SkinnyState skinny = SkinnyState::make(g);
    RateField rate = RateField::make(g);
    rate.at(1, 2, 3, 0) = -5.0;  // drives density negative
    TimeState time;
    try {
        update_u_timestep(modal, skinny, rate, time, g, gas);
        FAIL("expected unphysical_error");
    } catch (const unphysical_error& e) {
        CHECK(std::string(e.what()).find("(3,2,1)") != std::string::npos);
    }
}

TEST_CASE("constant state is a bit-exact fixed point of the full step") {
    GasModel gas;
    for (int order : {2, 3}) {
        PatchGeometry g = make_geometry(6, 6, 6, order, {0, 0, 0}, {1, 1, 1});
        ConsVars c = prim_to_cons({1.1, 0.5, -0.3, 0.2, 2.3}, gas);
        ModalState modal = constant_patch(g, order, c);
        SkinnyState skinny = SkinnyState::make(g);
        modal_to_skinny(modal, g, skinny);
        apply_boundary(skinny, g, BoundaryKind::periodic);
        SkinnyState before = skinny;

        StepParams par;
        par.gas = gas;
        par.order = order;
        StepScratch scratch = StepScratch::make(g);
        TimeState time;
        time.dt = 0.01;
        time.cfl = 0.5;
        ader_step(modal, skinny, time, g, par, scratch);

        const int gh = g.ghost;
        for (int k = gh; k < gh + g.nz; ++k)
            for (int j = gh; j < gh + g.ny; ++j)
                for (int i = gh; i < gh + g.nx; ++i)
                    for (int q = 0; q < NVAR; ++q)
                        CHECK(skinny.at(k, j, i, q) == before.at(k, j, i, q));
        for (double v : scratch.rate.v) CHECK(v == 0.0);
    }
}

TEST_CASE("conservation over ten vortex steps") {
    GasModel gas;
    for (int order : {2, 3}) {
        PatchGeometry g = make_geometry(12, 12, 12, order, {-5, -5, -5}, {5, 5, 5});
        SkinnyState init = init_isentropic_vortex(g, gas, order);
        PatchSet set = make_patch_set(g, 1, 1, 1, order, BoundaryKind::periodic);
        scatter_to_patches(init, set);

        auto totals = [&](const SkinnyState& s) {
            std::array<double, NVAR> tot{};
            std::array<double, NVAR> comp{};
            const int gh = g.ghost;
            for (int k = gh; k < gh + g.nz; ++k)
                for (int j = gh; j < gh + g.ny; ++j)
                    for (int i = gh; i < gh + g.nx; ++i)
                        for (int q = 0; q < NVAR; ++q) {
                            double y = s.at(k, j, i, q) - comp[q];
                            double t = tot[q] + y;
                            comp[q] = (t - tot[q]) - y;
                            tot[q] = t;
                        }
            return tot;
        };
        auto before = totals(init);

        StepParams par;
        par.gas = gas;
        par.order = order;
        TimeState time;
        time.cfl = order == 2 ? 0.6 : 0.4;
        time.dt = 0.01;
        for (int n = 0; n < 10; ++n) {
            run_patch_step(set, time, par, TransferStrategy::skinny);
            time.dt = time.dt_next;
        }
        SkinnyState fin = SkinnyState::make(g);
        gather_from_patches(set, fin);
        auto after = totals(fin);
        for (int q = 0; q < NVAR; ++q) {
            double scale = std::abs(before[q]) > 1e-10 ? std::abs(before[q]) : 1.0;
            CHECK(std::abs(after[q] - before[q]) <= 1e-12 * scale);
        }
    }
}

TEST_CASE("changing one face flux changes exactly two zones' rates") {
    PatchGeometry g = make_geometry(4, 4, 4, 2, {0, 0, 0}, {1, 1, 1});
    FluxSet fluxes = FluxSet::make(g);
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> d(-1, 1);
    for (auto* ff : {&fluxes.fx, &fluxes.fy, &fluxes.fz})
        for (double& v : ff->v) v = d(rng);
    TimeState time;
    time.dt = 0.1;

    RateField r1 = RateField::make(g), r2 = RateField::make(g);
    make_du_dt(fluxes, time, g, r1);
    fluxes.fy.face(2, 1, 2)[3] += 0.5;
    make_du_dt(fluxes, time, g, r2);

    int changed = 0;
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i)
                for (int q = 0; q < NVAR; ++q)
                    if (r1.at(k, j, i, q) != r2.at(k, j, i, q)) ++changed;
    CHECK(changed == 2);
}
