#include "hydro/reconstruct.hpp"

#include <cstddef>

namespace hydro {

void limit_patch_o2(ModalState& modal, const PatchGeometry& g, const LimiterConfig& cfg) {
    const int gh = g.ghost, modes = modal.modes;
    const int k0 = gh - 1, k1 = gh + g.nz + 1;  // active plus one ring
    const int j0 = gh - 1, j1 = gh + g.ny + 1;
    const int i0 = gh - 1, i1 = gh + g.nx + 1;
    const std::ptrdiff_t sx = std::ptrdiff_t(NVAR) * modes;
    const std::ptrdiff_t sy = sx * modal.mx;
    const std::ptrdiff_t sz = sy * modal.my;

#pragma omp parallel for collapse(3)
    for (int k = k0; k < k1; ++k)
        for (int j = j0; j < j1; ++j)
            for (int i = i0; i < i1; ++i)
                for (int q = 0; q < NVAR; ++q) {
                    double cfac = (q == 0) ? cfg.compression_factor_density
                                           : cfg.compression_factor_other;
                    double* zc = modal.zone(k, j, i) + q * modes;
                    double u0 = zc[0];
                    zc[1] = mc_limiter(zc[sx] - u0, u0 - zc[-sx], cfac);
                    zc[2] = mc_limiter(zc[sy] - u0, u0 - zc[-sy], cfac);
                    zc[3] = mc_limiter(zc[sz] - u0, u0 - zc[-sz], cfac);
                }
}

void reconstruct_patch_o3(ModalState& modal, const PatchGeometry& g, const LimiterConfig& cfg) {
    const int gh = g.ghost, modes = modal.modes;
    const std::ptrdiff_t sx = std::ptrdiff_t(NVAR) * modes;
    const std::ptrdiff_t sy = sx * modal.mx;
    const std::ptrdiff_t sz = sy * modal.my;

    // Pass 1: linear and quadratic modes per axis on the active zones plus
    // one ring (the widest range the ghost width supports).
    const int k0 = gh - 1, k1 = gh + g.nz + 1;
    const int j0 = gh - 1, j1 = gh + g.ny + 1;
    const int i0 = gh - 1, i1 = gh + g.nx + 1;
#pragma omp parallel for collapse(3)
    for (int k = k0; k < k1; ++k)
        for (int j = j0; j < j1; ++j)
            for (int i = i0; i < i1; ++i)
                for (int q = 0; q < NVAR; ++q) {
                    double* zc = modal.zone(k, j, i) + q * modes;
                    double stencil[5];
                    for (int m = -2; m <= 2; ++m) stencil[m + 2] = zc[m * sx];
                    WenoCoeffs cx = weno3_point(stencil, cfg);
                    for (int m = -2; m <= 2; ++m) stencil[m + 2] = zc[m * sy];
                    WenoCoeffs cy = weno3_point(stencil, cfg);
                    for (int m = -2; m <= 2; ++m) stencil[m + 2] = zc[m * sz];
                    WenoCoeffs cz = weno3_point(stencil, cfg);
                    zc[1] = cx.ux;
                    zc[2] = cy.ux;
                    zc[3] = cz.ux;
                    zc[4] = cx.uxx;
                    zc[5] = cy.uxx;
                    zc[6] = cz.uxx;
                }

    // Pass 2: cross modes on the active zones from centered differences of
    // the transverse linear modes, symmetrized so the single xy mode sees
    // both routes.
#pragma omp parallel for collapse(3)
    for (int k = gh; k < gh + g.nz; ++k)
        for (int j = gh; j < gh + g.ny; ++j)
            for (int i = gh; i < gh + g.nx; ++i)
                for (int q = 0; q < NVAR; ++q) {
                    double* zc = modal.zone(k, j, i) + q * modes;
                    zc[7] = 0.25 * ((zc[sy + 1] - zc[-sy + 1]) + (zc[sx + 2] - zc[-sx + 2]));
                    zc[8] = 0.25 * ((zc[sz + 2] - zc[-sz + 2]) + (zc[sy + 3] - zc[-sy + 3]));
                    zc[9] = 0.25 * ((zc[sx + 3] - zc[-sx + 3]) + (zc[sz + 1] - zc[-sz + 1]));
                }
}

void reconstruct_patch(ModalState& modal, const PatchGeometry& g, const LimiterConfig& cfg,
                       int order) {
    if (order == 2)
        limit_patch_o2(modal, g, cfg);
    else
        reconstruct_patch_o3(modal, g, cfg);
}

}  // namespace hydro
