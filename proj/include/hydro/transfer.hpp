#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hydro/stepper.hpp"

namespace hydro {

enum class TransferStrategy { full_state, skinny };

// Exact count of values crossing the patch/host boundary. Array payloads
// and control scalars are tracked separately; the skinny payload is also
// recorded without its ghost shell since either convention is defensible.
struct TransferLedger {
    std::uint64_t uploads = 0;
    std::uint64_t downloads = 0;
    std::uint64_t scalar_uploads = 0;
    std::uint64_t scalar_downloads = 0;
    std::uint64_t uploads_active_only = 0;
    std::uint64_t steps = 0;

    void reset() { *this = TransferLedger{}; }
};

// Values moved each way for one step of one patch:
//   skinny:     total_zones * 5            (plus 1 scalar each way, dt/dt_next)
//   full_state: total_zones * 5 * modes
std::pair<std::uint64_t, std::uint64_t> step_transfer_counts(TransferStrategy strategy,
                                                             const PatchGeometry& g, int order);

struct Patch {
    PatchGeometry geom;
    ModalState modal;
    SkinnyState skinny;
    StepScratch scratch;
    int ox = 0, oy = 0, oz = 0;  // active-zone offset in the global mesh
};

// Axis-aligned decomposition of a periodic (or outflow) global mesh into
// patches with involutive neighbor topology. Patch (pi,pj,pk) is stored at
// index (pk*py + pj)*px + pi.
struct PatchSet {
    PatchGeometry global;
    int px = 1, py = 1, pz = 1;
    int order = 2;
    BoundaryKind boundary = BoundaryKind::periodic;
    std::vector<Patch> patches;
    TransferLedger ledger;

    Patch& patch(int pi, int pj, int pk) {
        return patches[(std::size_t(pk) * py + pj) * px + pi];
    }
};

PatchSet make_patch_set(const PatchGeometry& global, int px, int py, int pz, int order,
                        BoundaryKind boundary);

// Copies a global active-zone field into the patches / back out.
void scatter_to_patches(const SkinnyState& global_skinny, PatchSet& set);
void gather_from_patches(const PatchSet& set, SkinnyState& global_skinny);

// Fills every patch's skinny ghost shell from its neighbors' active
// boundary layers (periodic wrap or outflow copy-out at the global edge).
// Corners and edges are covered by sequential x, y, z sweeps. Idempotent
// while the active data is unchanged.
void exchange_ghosts(PatchSet& set);

// One full timestep over the patch set: exchange ghosts, then per patch
// account the upload, run the step pipeline, account the download.
// Returns the min-reduced dt_next across patches.
double run_patch_step(PatchSet& set, TimeState& time, const StepParams& par,
                      TransferStrategy strategy, StageProfile* prof = nullptr);

// Appends ledger rows as CSV: step, strategy, uploads, downloads, scalar_uploads.
std::string ledger_csv_row(std::uint64_t step, TransferStrategy strategy,
                           const TransferLedger& ledger);
std::string ledger_csv_header();

}  // namespace hydro
