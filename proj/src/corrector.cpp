#include "hydro/corrector.hpp"

#include <string>

#include "hydro/reconstruct.hpp"
#include "omp_errors.hpp"

namespace hydro {

namespace {

// The three sweeps share one body; only the zone indexing differs.
// c2/c1 run over the active range of the two transverse axes and f over
// faces 0..n along the sweep axis.
template <Axis A>
void flux_sweep(const ModalState& modal, const PatchGeometry& g, const GasModel& gas,
                SolverChoice solver, FaceFlux& out) {
    const int gh = g.ghost, modes = modal.modes;
    const int tm = modes - 1;
    const int n2 = out.n2, n1 = out.n1, nf = out.n0;

    detail::ErrorCollector errors;
#pragma omp parallel for collapse(3)
    for (int c2 = 0; c2 < n2; ++c2)
        for (int c1 = 0; c1 < n1; ++c1)
            for (int f = 0; f < nf; ++f) {
                if (errors.failed) continue;
                const double *zl, *zr;
                if constexpr (A == Axis::x) {
                    zl = modal.zone(gh + c2, gh + c1, gh + f - 1);
                    zr = modal.zone(gh + c2, gh + c1, gh + f);
                } else if constexpr (A == Axis::y) {
                    zl = modal.zone(gh + c2, gh + f - 1, gh + c1);
                    zr = modal.zone(gh + c2, gh + f, gh + c1);
                } else {
                    zl = modal.zone(gh + f - 1, gh + c2, gh + c1);
                    zr = modal.zone(gh + f, gh + c2, gh + c1);
                }

                double ul[NVAR], ur[NVAR];
                for (int q = 0; q < NVAR; ++q) {
                    const double* lv = zl + q * modes;
                    const double* rv = zr + q * modes;
                    ul[q] = extrapolate_to_face(lv, modes, A, +1.0) + 0.5 * lv[tm];
                    ur[q] = extrapolate_to_face(rv, modes, A, -1.0) + 0.5 * rv[tm];
                }
                FaceStatePair pair{ConsVars::from(ul), ConsVars::from(ur), A};
                try {
                    auto fl = riemann_flux(solver, pair, gas);
                    double* dst = out.face(c2, c1, f);
                    for (int q = 0; q < NVAR; ++q) dst[q] = fl[q];
                } catch (const std::exception& e) {
                    errors.record("flux axis " + std::to_string(int(A)) + ": face (" +
                                  std::to_string(f) + "," + std::to_string(c1) + "," +
                                  std::to_string(c2) + "): " + e.what());
                }
            }
    errors.rethrow();
}

}  // namespace

void make_flux_axis(const ModalState& modal, Axis axis, const PatchGeometry& g,
                    const GasModel& gas, SolverChoice solver, FaceFlux& out) {
    switch (axis) {
        case Axis::x: flux_sweep<Axis::x>(modal, g, gas, solver, out); break;
        case Axis::y: flux_sweep<Axis::y>(modal, g, gas, solver, out); break;
        case Axis::z: flux_sweep<Axis::z>(modal, g, gas, solver, out); break;
    }
}

void make_du_dt(const FluxSet& fluxes, const TimeState& time, const PatchGeometry& g,
                RateField& rate) {
    const int nx = g.nx, ny = g.ny, nz = g.nz;
    const double cx = time.dt / g.dx, cy = time.dt / g.dy, cz = time.dt / g.dz;

#pragma omp parallel for collapse(3)
    for (int k = 0; k < nz; ++k)
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i) {
                const double* fxw = fluxes.fx.face(k, j, i);
                const double* fxe = fluxes.fx.face(k, j, i + 1);
                const double* fys = fluxes.fy.face(k, i, j);
                const double* fyn = fluxes.fy.face(k, i, j + 1);
                const double* fzb = fluxes.fz.face(j, i, k);
                const double* fzt = fluxes.fz.face(j, i, k + 1);
                double* r = rate.zone(k, j, i);
                for (int q = 0; q < NVAR; ++q)
                    r[q] = -cx * (fxe[q] - fxw[q]) - cy * (fyn[q] - fys[q]) -
                           cz * (fzt[q] - fzb[q]);
            }
}

void update_u_timestep(ModalState& modal, SkinnyState& skinny, const RateField& rate,
                       TimeState& time, const PatchGeometry& g, const GasModel& gas) {
    const int gh = g.ghost, modes = modal.modes;
    const double cfl = time.cfl, dx = g.dx, dy = g.dy, dz = g.dz;
    double dt_next = 1.0e32;

    detail::ErrorCollector errors;
#pragma omp parallel for collapse(3) reduction(min : dt_next)
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                if (errors.failed) continue;
                double* zp = modal.zone(gh + k, gh + j, gh + i);
                double* sp = skinny.zone(gh + k, gh + j, gh + i);
                const double* r = rate.zone(k, j, i);
                double u[NVAR];
                for (int q = 0; q < NVAR; ++q) {
                    zp[q * modes] += r[q];
                    sp[q] = zp[q * modes];
                    u[q] = zp[q * modes];
                }
                try {
                    double dt1 = eval_tstep_ptwise(ConsVars::from(u), cfl, dx, dy, dz, gas);
                    dt_next = std::min(dt_next, dt1);
                } catch (const std::exception& e) {
                    errors.record("update: zone (" + std::to_string(i) + "," +
                                  std::to_string(j) + "," + std::to_string(k) + "): " + e.what());
                }
            }
    errors.rethrow();
    time.dt_next = dt_next;
}

}  // namespace hydro
