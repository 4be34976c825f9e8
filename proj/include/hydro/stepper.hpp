#pragma once

#include <vector>

#include "hydro/boundary.hpp"
#include "hydro/corrector.hpp"
#include "hydro/predictor.hpp"
#include "hydro/reconstruct.hpp"

namespace hydro {

// Wall-clock seconds spent in each stage of the timestep loop, accumulated
// across steps. "transfer" covers the skinny packing, ghost exchange and
// movement accounting.
struct StageProfile {
    double reconstruct = 0.0;
    double predict = 0.0;
    double flux = 0.0;
    double rate = 0.0;
    double update = 0.0;
    double transfer = 0.0;

    double total() const { return reconstruct + predict + flux + rate + update + transfer; }
    double predictor_fraction() const {
        double t = total();
        return t > 0.0 ? predict / t : 0.0;
    }
    StageProfile& operator+=(const StageProfile& o) {
        reconstruct += o.reconstruct;
        predict += o.predict;
        flux += o.flux;
        rate += o.rate;
        update += o.update;
        transfer += o.transfer;
        return *this;
    }
};

struct StepParams {
    GasModel gas;
    SolverChoice solver = SolverChoice::hll;
    IntegratorChoice integrator = IntegratorChoice::ader_onestep;
    LimiterConfig limiter;
    int order = 2;
};

// Scratch owned by one patch worker for the duration of a step.
struct StepScratch {
    FluxSet fluxes;
    RateField rate;
    SkinnyState stage_u0;  // saved averages for Runge-Kutta combinations

    static StepScratch make(const PatchGeometry& g) {
        return StepScratch{FluxSet::make(g), RateField::make(g), SkinnyState::make(g)};
    }
};

// One reconstruct -> predict -> flux -> rate -> update pass on a single
// patch whose skinny ghosts are already filled. Sets time.dt_next.
void ader_step(ModalState& modal, SkinnyState& skinny, TimeState& time,
               const PatchGeometry& g, const StepParams& par, StepScratch& scratch,
               StageProfile* prof = nullptr);

// Shu-Osher stage coefficients: U' = a * U0 + b * (U + K(U)).
struct RkStage {
    double a, b;
};
// rk2 = Heun, rk3 = SSP-RK3.
const std::vector<RkStage>& rk_stages(IntegratorChoice kind);

// One Runge-Kutta stage: skinny (ghosts current) -> mode 0 -> reconstruct
// -> zero temporal mode -> fluxes -> rate -> convex combination against the
// saved start-of-step averages in scratch.stage_u0. Leaves the stage result
// in mode 0 and in skinny's active zones.
void rk_stage(ModalState& modal, SkinnyState& skinny, TimeState& time, const PatchGeometry& g,
              const StepParams& par, StepScratch& scratch, RkStage stage,
              StageProfile* prof = nullptr);

// Saves the start-of-step averages for the stage combinations.
void rk_save_u0(const SkinnyState& skinny, const PatchGeometry& g, StepScratch& scratch);

// One full rk2/rk3 step on a single patch, refreshing ghosts in place
// (periodic wrap or outflow) before every stage. Sets time.dt_next after
// the final stage.
void rk_step(ModalState& modal, SkinnyState& skinny, TimeState& time, const PatchGeometry& g,
             const StepParams& par, StepScratch& scratch, BoundaryKind bc,
             StageProfile* prof = nullptr);

// Minimum pointwise CFL estimate over the active zones (exact min-reduction).
double compute_dt_next(const ModalState& modal, const PatchGeometry& g, const GasModel& gas,
                       double cfl);

}  // namespace hydro
