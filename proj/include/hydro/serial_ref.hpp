#pragma once

#include "hydro/corrector.hpp"
#include "hydro/predictor.hpp"
#include "hydro/reconstruct.hpp"

// Serial reference implementations of the patch kernels: plain triple
// loops, no OpenMP, written for readability. The test suite checks the
// OpenMP kernels against these bit-for-bit, and the benchmark tool
// compares their throughput. Keep them boring.
namespace hydro::ref {

void skinny_to_modal(const SkinnyState& skinny, ModalState& modal);
void modal_to_skinny(const ModalState& modal, const PatchGeometry& g, SkinnyState& skinny);

void limit_patch_o2(ModalState& modal, const PatchGeometry& g, const LimiterConfig& cfg);
void reconstruct_patch_o3(ModalState& modal, const PatchGeometry& g, const LimiterConfig& cfg);

void predict_patch(ModalState& modal, const TimeState& time, const PatchGeometry& g,
                   const GasModel& gas);

void make_flux_axis(const ModalState& modal, Axis axis, const PatchGeometry& g,
                    const GasModel& gas, SolverChoice solver, FaceFlux& out);

void make_du_dt(const FluxSet& fluxes, const TimeState& time, const PatchGeometry& g,
                RateField& rate);

void update_u_timestep(ModalState& modal, SkinnyState& skinny, const RateField& rate,
                       TimeState& time, const PatchGeometry& g, const GasModel& gas);

}  // namespace hydro::ref
