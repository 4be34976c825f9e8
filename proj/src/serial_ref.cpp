#include "hydro/serial_ref.hpp"

namespace hydro::ref {

void skinny_to_modal(const SkinnyState& skinny, ModalState& modal) {
    require_compatible(skinny, modal);
    for (int k = 0; k < modal.mz; ++k)
        for (int j = 0; j < modal.my; ++j)
            for (int i = 0; i < modal.mx; ++i)
                for (int q = 0; q < NVAR; ++q)
                    modal.at(k, j, i, q, 0) = skinny.at(k, j, i, q);
}

void modal_to_skinny(const ModalState& modal, const PatchGeometry& g, SkinnyState& skinny) {
    require_compatible(skinny, modal);
    const int gh = g.ghost;
    for (int k = gh; k < gh + g.nz; ++k)
        for (int j = gh; j < gh + g.ny; ++j)
            for (int i = gh; i < gh + g.nx; ++i)
                for (int q = 0; q < NVAR; ++q)
                    skinny.at(k, j, i, q) = modal.at(k, j, i, q, 0);
}

void limit_patch_o2(ModalState& modal, const PatchGeometry& g, const LimiterConfig& cfg) {
    const int gh = g.ghost;
    for (int k = gh - 1; k < gh + g.nz + 1; ++k)
        for (int j = gh - 1; j < gh + g.ny + 1; ++j)
            for (int i = gh - 1; i < gh + g.nx + 1; ++i)
                for (int q = 0; q < NVAR; ++q) {
                    double cfac = (q == 0) ? cfg.compression_factor_density
                                           : cfg.compression_factor_other;
                    double u0 = modal.at(k, j, i, q, 0);
                    modal.at(k, j, i, q, 1) =
                        mc_limiter(modal.at(k, j, i + 1, q, 0) - u0,
                                   u0 - modal.at(k, j, i - 1, q, 0), cfac);
                    modal.at(k, j, i, q, 2) =
                        mc_limiter(modal.at(k, j + 1, i, q, 0) - u0,
                                   u0 - modal.at(k, j - 1, i, q, 0), cfac);
                    modal.at(k, j, i, q, 3) =
                        mc_limiter(modal.at(k + 1, j, i, q, 0) - u0,
                                   u0 - modal.at(k - 1, j, i, q, 0), cfac);
                }
}

void reconstruct_patch_o3(ModalState& modal, const PatchGeometry& g, const LimiterConfig& cfg) {
    const int gh = g.ghost;
    for (int k = gh - 1; k < gh + g.nz + 1; ++k)
        for (int j = gh - 1; j < gh + g.ny + 1; ++j)
            for (int i = gh - 1; i < gh + g.nx + 1; ++i)
                for (int q = 0; q < NVAR; ++q) {
                    double sx[5], sy[5], sz[5];
                    for (int m = -2; m <= 2; ++m) {
                        sx[m + 2] = modal.at(k, j, i + m, q, 0);
                        sy[m + 2] = modal.at(k, j + m, i, q, 0);
                        sz[m + 2] = modal.at(k + m, j, i, q, 0);
                    }
                    WenoCoeffs cx = weno3_point(sx, cfg);
                    WenoCoeffs cy = weno3_point(sy, cfg);
                    WenoCoeffs cz = weno3_point(sz, cfg);
                    modal.at(k, j, i, q, 1) = cx.ux;
                    modal.at(k, j, i, q, 2) = cy.ux;
                    modal.at(k, j, i, q, 3) = cz.ux;
                    modal.at(k, j, i, q, 4) = cx.uxx;
                    modal.at(k, j, i, q, 5) = cy.uxx;
                    modal.at(k, j, i, q, 6) = cz.uxx;
                }

    for (int k = gh; k < gh + g.nz; ++k)
        for (int j = gh; j < gh + g.ny; ++j)
            for (int i = gh; i < gh + g.nx; ++i)
                for (int q = 0; q < NVAR; ++q) {
                    modal.at(k, j, i, q, 7) =
                        0.25 * ((modal.at(k, j + 1, i, q, 1) - modal.at(k, j - 1, i, q, 1)) +
                                (modal.at(k, j, i + 1, q, 2) - modal.at(k, j, i - 1, q, 2)));
                    modal.at(k, j, i, q, 8) =
                        0.25 * ((modal.at(k + 1, j, i, q, 2) - modal.at(k - 1, j, i, q, 2)) +
                                (modal.at(k, j + 1, i, q, 3) - modal.at(k, j - 1, i, q, 3)));
                    modal.at(k, j, i, q, 9) =
                        0.25 * ((modal.at(k, j, i + 1, q, 3) - modal.at(k, j, i - 1, q, 3)) +
                                (modal.at(k + 1, j, i, q, 1) - modal.at(k - 1, j, i, q, 1)));
                }
}

void predict_patch(ModalState& modal, const TimeState& time, const PatchGeometry& g,
                   const GasModel& gas) {
    const int gh = g.ghost, modes = modal.modes;
    const int tm = modes - 1;
    for (int k = gh - 1; k < gh + g.nz + 1; ++k)
        for (int j = gh - 1; j < gh + g.ny + 1; ++j)
            for (int i = gh - 1; i < gh + g.nx + 1; ++i) {
                ZoneModal zone;
                zone.load(modal, k, j, i);
                predictor_ptwise(zone, time.dt, g.dx, g.dy, g.dz, gas);
                for (int q = 0; q < NVAR; ++q)
                    modal.at(k, j, i, q, tm) = zone.at(q, tm);
            }
}

void make_flux_axis(const ModalState& modal, Axis axis, const PatchGeometry& g,
                    const GasModel& gas, SolverChoice solver, FaceFlux& out) {
    const int gh = g.ghost, modes = modal.modes;
    const int tm = modes - 1;
    for (int c2 = 0; c2 < out.n2; ++c2)
        for (int c1 = 0; c1 < out.n1; ++c1)
            for (int f = 0; f < out.n0; ++f) {
                int kl, jl, il, kr, jr, ir;
                if (axis == Axis::x) {
                    kl = kr = gh + c2; jl = jr = gh + c1; il = gh + f - 1; ir = gh + f;
                } else if (axis == Axis::y) {
                    kl = kr = gh + c2; il = ir = gh + c1; jl = gh + f - 1; jr = gh + f;
                } else {
                    jl = jr = gh + c2; il = ir = gh + c1; kl = gh + f - 1; kr = gh + f;
                }
                double ul[NVAR], ur[NVAR];
                for (int q = 0; q < NVAR; ++q) {
                    const double* lv = modal.zone(kl, jl, il) + q * modes;
                    const double* rv = modal.zone(kr, jr, ir) + q * modes;
                    ul[q] = extrapolate_to_face(lv, modes, axis, +1.0) + 0.5 * lv[tm];
                    ur[q] = extrapolate_to_face(rv, modes, axis, -1.0) + 0.5 * rv[tm];
                }
                FaceStatePair pair{ConsVars::from(ul), ConsVars::from(ur), axis};
                auto fl = riemann_flux(solver, pair, gas);
                double* dst = out.face(c2, c1, f);
                for (int q = 0; q < NVAR; ++q) dst[q] = fl[q];
            }
}

void make_du_dt(const FluxSet& fluxes, const TimeState& time, const PatchGeometry& g,
                RateField& rate) {
    const double cx = time.dt / g.dx, cy = time.dt / g.dy, cz = time.dt / g.dz;
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i)
                for (int q = 0; q < NVAR; ++q)
                    rate.at(k, j, i, q) =
                        -cx * (fluxes.fx.face(k, j, i + 1)[q] - fluxes.fx.face(k, j, i)[q]) -
                        cy * (fluxes.fy.face(k, i, j + 1)[q] - fluxes.fy.face(k, i, j)[q]) -
                        cz * (fluxes.fz.face(j, i, k + 1)[q] - fluxes.fz.face(j, i, k)[q]);
}

void update_u_timestep(ModalState& modal, SkinnyState& skinny, const RateField& rate,
                       TimeState& time, const PatchGeometry& g, const GasModel& gas) {
    const int gh = g.ghost;
    double dt_next = 1.0e32;
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                double u[NVAR];
                for (int q = 0; q < NVAR; ++q) {
                    modal.at(gh + k, gh + j, gh + i, q, 0) += rate.at(k, j, i, q);
                    u[q] = modal.at(gh + k, gh + j, gh + i, q, 0);
                    skinny.at(gh + k, gh + j, gh + i, q) = u[q];
                }
                dt_next = std::min(
                    dt_next, eval_tstep_ptwise(ConsVars::from(u), time.cfl, g.dx, g.dy, g.dz, gas));
            }
    time.dt_next = dt_next;
}

}  // namespace hydro::ref
