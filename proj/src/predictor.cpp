#include "hydro/predictor.hpp"

#include <string>

#include "omp_errors.hpp"

namespace hydro {

namespace {

// Flux divergence of the six face states, one value per variable.
inline void flux_divergence(const double face[6][NVAR], double inv_dx, double inv_dy,
                            double inv_dz, const GasModel& gas, double div[NVAR]) {
    auto fe = physical_flux(ConsVars::from(face[0]), Axis::x, gas);
    auto fw = physical_flux(ConsVars::from(face[1]), Axis::x, gas);
    auto fn = physical_flux(ConsVars::from(face[2]), Axis::y, gas);
    auto fs = physical_flux(ConsVars::from(face[3]), Axis::y, gas);
    auto ft = physical_flux(ConsVars::from(face[4]), Axis::z, gas);
    auto fb = physical_flux(ConsVars::from(face[5]), Axis::z, gas);
    for (int q = 0; q < NVAR; ++q)
        div[q] = (fe[q] - fw[q]) * inv_dx + (fn[q] - fs[q]) * inv_dy + (ft[q] - fb[q]) * inv_dz;
}

}  // namespace

void predictor_ptwise(ZoneModal& zone, double dt, double dx, double dy, double dz,
                      const GasModel& gas) {
    const int modes = zone.modes;
    const int tm = modes - 1;
    const double inv_dx = 1.0 / dx, inv_dy = 1.0 / dy, inv_dz = 1.0 / dz;

    // Within-zone reconstruction evaluated at the six face centers
    // (E, W, N, S, T, B), without the temporal contribution.
    double face[6][NVAR];
    for (int q = 0; q < NVAR; ++q) {
        const double* zv = zone.v + q * modes;
        face[0][q] = extrapolate_to_face(zv, modes, Axis::x, +1.0);
        face[1][q] = extrapolate_to_face(zv, modes, Axis::x, -1.0);
        face[2][q] = extrapolate_to_face(zv, modes, Axis::y, +1.0);
        face[3][q] = extrapolate_to_face(zv, modes, Axis::y, -1.0);
        face[4][q] = extrapolate_to_face(zv, modes, Axis::z, +1.0);
        face[5][q] = extrapolate_to_face(zv, modes, Axis::z, -1.0);
    }

    double div[NVAR];
    flux_divergence(face, inv_dx, inv_dy, inv_dz, gas, div);
    double tau[NVAR];
    for (int q = 0; q < NVAR; ++q) tau[q] = -dt * div[q];

    if (modes == 11) {
        // Picard refinement: re-evaluate the fluxes with the face states
        // advanced by half the first-pass temporal mode.
        for (int s = 0; s < 6; ++s)
            for (int q = 0; q < NVAR; ++q) face[s][q] += 0.5 * tau[q];
        flux_divergence(face, inv_dx, inv_dy, inv_dz, gas, div);
        for (int q = 0; q < NVAR; ++q) tau[q] = -dt * div[q];
    }

    for (int q = 0; q < NVAR; ++q) zone.v[q * modes + tm] = tau[q];
}

void predict_patch(ModalState& modal, const TimeState& time, const PatchGeometry& g,
                   const GasModel& gas) {
    const int gh = g.ghost, modes = modal.modes;
    const int tm = modes - 1;
    const int k0 = gh - 1, k1 = gh + g.nz + 1;  // active plus one ring
    const int j0 = gh - 1, j1 = gh + g.ny + 1;
    const int i0 = gh - 1, i1 = gh + g.nx + 1;
    const double dt = time.dt, dx = g.dx, dy = g.dy, dz = g.dz;

    detail::ErrorCollector errors;
#pragma omp parallel for collapse(3)
    for (int k = k0; k < k1; ++k)
        for (int j = j0; j < j1; ++j)
            for (int i = i0; i < i1; ++i) {
                if (errors.failed) continue;
                ZoneModal zone;
                zone.load(modal, k, j, i);
                try {
                    predictor_ptwise(zone, dt, dx, dy, dz, gas);
                } catch (const std::exception& e) {
                    errors.record("predictor: zone (" + std::to_string(i - gh) + "," +
                                  std::to_string(j - gh) + "," + std::to_string(k - gh) +
                                  "): " + e.what());
                    continue;
                }
                double* dst = modal.zone(k, j, i);
                for (int q = 0; q < NVAR; ++q) dst[q * modes + tm] = zone.v[q * modes + tm];
            }
    errors.rethrow();
}

void zero_temporal_mode(ModalState& modal) {
    const int modes = modal.modes;
    const int tm = modes - 1;
    const std::size_t zones = modal.v.size() / (std::size_t(NVAR) * modes);
#pragma omp parallel for
    for (std::ptrdiff_t z = 0; z < std::ptrdiff_t(zones); ++z) {
        double* zp = modal.v.data() + z * NVAR * modes;
        for (int q = 0; q < NVAR; ++q) zp[q * modes + tm] = 0.0;
    }
}

}  // namespace hydro
