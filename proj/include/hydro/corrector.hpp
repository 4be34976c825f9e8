#pragma once

#include "hydro/fields.hpp"
#include "hydro/riemann.hpp"

namespace hydro {

// Builds the numerical fluxes on the faces of one axis. For the face
// between zones L and R,
//   U_L = L's (mode0 + 0.5*normal-slope + 0.5*temporal-mode)
//   U_R = R's (mode0 - 0.5*normal-slope + 0.5*temporal-mode)
// with the quadratic normal mode added at order 3. The face loop covers
// faces 0..n along the axis and the active range transversally, so modes
// must be valid on the active zones plus one ring.
void make_flux_axis(const ModalState& modal, Axis axis, const PatchGeometry& g,
                    const GasModel& gas, SolverChoice solver, FaceFlux& out);

// Flux differencing over active zones:
//   dU_dt = -dt * [ (Fx_E - Fx_W)/dx + (Fy_N - Fy_S)/dy + (Fz_T - Fz_B)/dz ].
// The result stores dt * (rate), so the conservative update is an addition.
void make_du_dt(const FluxSet& fluxes, const TimeState& time, const PatchGeometry& g,
                RateField& rate);

// Conservative update: mode 0 += rate on active zones, skinny refreshed
// from the new mode 0, and dt_next = min over active zones of the pointwise
// CFL estimate of the updated state (seeded at 1.0e32).
void update_u_timestep(ModalState& modal, SkinnyState& skinny, const RateField& rate,
                       TimeState& time, const PatchGeometry& g, const GasModel& gas);

}  // namespace hydro
