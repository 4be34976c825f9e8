#pragma once

#include <stdexcept>
#include <string>

#include "hydro/euler.hpp"
#include "hydro/fields.hpp"
#include "hydro/reconstruct.hpp"

namespace hydro {

enum class IntegratorChoice { ader_onestep, rk2, rk3 };

// Per-zone working copy of all modes of the five conserved variables.
// Layout matches a ModalState zone slice: [variable][mode].
struct ZoneModal {
    int modes = 5;
    double v[NVAR * 11] = {0.0};

    double& at(int q, int m) { return v[q * modes + m]; }
    double at(int q, int m) const { return v[q * modes + m]; }

    void load(const ModalState& modal, int k, int j, int i) {
        modes = modal.modes;
        const double* src = modal.zone(k, j, i);
        for (int n = 0; n < NVAR * modes; ++n) v[n] = src[n];
    }
};

// Fills the temporal mode (the last mode): the predicted change of the zone
// average over one full timestep, evaluated from the zone's own modes at
// the six face centers,
//   tau = -dt * [ (Fx(U_E) - Fx(U_W))/dx + (Fy(U_N) - Fy(U_S))/dy
//                + (Fz(U_T) - Fz(U_B))/dz ].
// At order 3 one Picard refinement re-evaluates the face fluxes with the
// face states advanced by half the first-pass temporal mode.
void predictor_ptwise(ZoneModal& zone, double dt, double dx, double dy, double dz,
                      const GasModel& gas);

// Applies predictor_ptwise over the active zones plus one ring:
// gather to a ZoneModal, predict, scatter the temporal mode back.
void predict_patch(ModalState& modal, const TimeState& time, const PatchGeometry& g,
                   const GasModel& gas);

// Sets the temporal mode to zero everywhere (Runge-Kutta stages use
// spatially reconstructed, time-frozen states).
void zero_temporal_mode(ModalState& modal);

}  // namespace hydro
