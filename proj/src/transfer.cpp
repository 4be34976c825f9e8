#include "hydro/transfer.hpp"

#include <omp.h>

#include <sstream>
#include <stdexcept>

namespace hydro {

std::pair<std::uint64_t, std::uint64_t> step_transfer_counts(TransferStrategy strategy,
                                                             const PatchGeometry& g, int order) {
    std::uint64_t total = std::uint64_t(zone_count(g, true)) * NVAR;
    if (strategy == TransferStrategy::full_state) total *= modes_for_order(order);
    return {total, total};
}

PatchSet make_patch_set(const PatchGeometry& global, int px, int py, int pz, int order,
                        BoundaryKind boundary) {
    if (px < 1 || py < 1 || pz < 1)
        throw std::invalid_argument("patch split counts must be positive");
    if (global.nx % px || global.ny % py || global.nz % pz)
        throw std::invalid_argument("patch split must divide the mesh evenly");

    PatchSet set;
    set.global = global;
    set.px = px;
    set.py = py;
    set.pz = pz;
    set.order = order;
    set.boundary = boundary;

    const int lnx = global.nx / px, lny = global.ny / py, lnz = global.nz / pz;
    set.patches.reserve(std::size_t(px) * py * pz);
    for (int pk = 0; pk < pz; ++pk)
        for (int pj = 0; pj < py; ++pj)
            for (int pi = 0; pi < px; ++pi) {
                PatchGeometry g = global;
                g.nx = lnx;
                g.ny = lny;
                g.nz = lnz;
                g.origin = {global.origin[0] + pi * lnx * global.dx,
                            global.origin[1] + pj * lny * global.dy,
                            global.origin[2] + pk * lnz * global.dz};
                g.validate();
                Patch p{g, ModalState::make(g, order), SkinnyState::make(g),
                        StepScratch::make(g), pi * lnx, pj * lny, pk * lnz};
                set.patches.push_back(std::move(p));
            }
    return set;
}

void scatter_to_patches(const SkinnyState& global_skinny, PatchSet& set) {
    const int gh = set.global.ghost;
    for (Patch& p : set.patches)
        for (int k = 0; k < p.geom.nz; ++k)
            for (int j = 0; j < p.geom.ny; ++j)
                for (int i = 0; i < p.geom.nx; ++i) {
                    const double* src =
                        global_skinny.zone(gh + p.oz + k, gh + p.oy + j, gh + p.ox + i);
                    double* dst = p.skinny.zone(gh + k, gh + j, gh + i);
                    for (int q = 0; q < NVAR; ++q) dst[q] = src[q];
                }
}

void gather_from_patches(const PatchSet& set, SkinnyState& global_skinny) {
    const int gh = set.global.ghost;
    for (const Patch& p : set.patches)
        for (int k = 0; k < p.geom.nz; ++k)
            for (int j = 0; j < p.geom.ny; ++j)
                for (int i = 0; i < p.geom.nx; ++i) {
                    const double* src = p.skinny.zone(gh + k, gh + j, gh + i);
                    double* dst =
                        global_skinny.zone(gh + p.oz + k, gh + p.oy + j, gh + p.ox + i);
                    for (int q = 0; q < NVAR; ++q) dst[q] = src[q];
                }
}

namespace {

inline int map_global(int a, int n, BoundaryKind kind) {
    if (kind == BoundaryKind::periodic) return ((a % n) + n) % n;
    return a < 0 ? 0 : (a >= n ? n - 1 : a);
}

}  // namespace

void exchange_ghosts(PatchSet& set) {
    const int gh = set.global.ghost;
    const int lnx = set.global.nx / set.px;
    const int lny = set.global.ny / set.py;
    const int lnz = set.global.nz / set.pz;
    const BoundaryKind bc = set.boundary;

    // x-pass: x-ghosts over the active transverse range.
    for (int pk = 0; pk < set.pz; ++pk)
        for (int pj = 0; pj < set.py; ++pj)
            for (int pi = 0; pi < set.px; ++pi) {
                Patch& p = set.patch(pi, pj, pk);
                for (int i = 0; i < p.geom.mx(); ++i) {
                    if (i >= gh && i < gh + lnx) continue;
                    int gg = map_global(p.ox + i - gh, set.global.nx, bc);
                    const Patch& src = set.patch(gg / lnx, pj, pk);
                    int is = gh + gg % lnx;
                    for (int k = gh; k < gh + lnz; ++k)
                        for (int j = gh; j < gh + lny; ++j) {
                            const double* s = src.skinny.zone(k, j, is);
                            double* d = p.skinny.zone(k, j, i);
                            for (int q = 0; q < NVAR; ++q) d[q] = s[q];
                        }
                }
            }

    // y-pass: y-ghosts over the full x range (corners come along).
    for (int pk = 0; pk < set.pz; ++pk)
        for (int pj = 0; pj < set.py; ++pj)
            for (int pi = 0; pi < set.px; ++pi) {
                Patch& p = set.patch(pi, pj, pk);
                for (int j = 0; j < p.geom.my(); ++j) {
                    if (j >= gh && j < gh + lny) continue;
                    int gg = map_global(p.oy + j - gh, set.global.ny, bc);
                    const Patch& src = set.patch(pi, gg / lny, pk);
                    int js = gh + gg % lny;
                    for (int k = gh; k < gh + lnz; ++k)
                        for (int i = 0; i < p.geom.mx(); ++i) {
                            const double* s = src.skinny.zone(k, js, i);
                            double* d = p.skinny.zone(k, j, i);
                            for (int q = 0; q < NVAR; ++q) d[q] = s[q];
                        }
                }
            }

    // z-pass: z-ghosts over the full x/y range.
    for (int pk = 0; pk < set.pz; ++pk)
        for (int pj = 0; pj < set.py; ++pj)
            for (int pi = 0; pi < set.px; ++pi) {
                Patch& p = set.patch(pi, pj, pk);
                for (int k = 0; k < p.geom.mz(); ++k) {
                    if (k >= gh && k < gh + lnz) continue;
                    int gg = map_global(p.oz + k - gh, set.global.nz, bc);
                    const Patch& src = set.patch(pi, pj, gg / lnz);
                    int ks = gh + gg % lnz;
                    for (int j = 0; j < p.geom.my(); ++j)
                        for (int i = 0; i < p.geom.mx(); ++i) {
                            const double* s = src.skinny.zone(ks, j, i);
                            double* d = p.skinny.zone(k, j, i);
                            for (int q = 0; q < NVAR; ++q) d[q] = s[q];
                        }
                }
            }
}

double run_patch_step(PatchSet& set, TimeState& time, const StepParams& par,
                      TransferStrategy strategy, StageProfile* prof) {
    {
        double t0 = omp_get_wtime();
        exchange_ghosts(set);
        if (prof) prof->transfer += omp_get_wtime() - t0;
    }

    TransferLedger& led = set.ledger;
    auto account_upload = [&](const Patch& p) {
        auto [up, down] = step_transfer_counts(strategy, p.geom, set.order);
        (void)down;
        led.uploads += up;
        led.scalar_uploads += 1;  // dt
        std::uint64_t active = std::uint64_t(zone_count(p.geom, false)) * NVAR;
        if (strategy == TransferStrategy::full_state) active *= modes_for_order(set.order);
        led.uploads_active_only += active;
    };
    auto account_download = [&](const Patch& p) {
        auto [up, down] = step_transfer_counts(strategy, p.geom, set.order);
        (void)up;
        led.downloads += down;
        led.scalar_downloads += 1;  // dt_next
    };

    double dt_next_global = 1.0e32;

    if (par.integrator == IntegratorChoice::ader_onestep) {
        for (Patch& p : set.patches) {
            account_upload(p);
            TimeState local = time;
            ader_step(p.modal, p.skinny, local, p.geom, par, p.scratch, prof);
            dt_next_global = std::min(dt_next_global, local.dt_next);
            account_download(p);
        }
    } else {
        for (Patch& p : set.patches) {
            account_upload(p);
            rk_save_u0(p.skinny, p.geom, p.scratch);
        }
        const auto& stages = rk_stages(par.integrator);
        for (std::size_t s = 0; s < stages.size(); ++s) {
            if (s > 0) {
                double t0 = omp_get_wtime();
                exchange_ghosts(set);
                if (prof) prof->transfer += omp_get_wtime() - t0;
            }
            for (Patch& p : set.patches) {
                TimeState local = time;
                rk_stage(p.modal, p.skinny, local, p.geom, par, p.scratch, stages[s], prof);
            }
        }
        for (Patch& p : set.patches) {
            double t0 = omp_get_wtime();
            double dtn = compute_dt_next(p.modal, p.geom, par.gas, time.cfl);
            if (prof) prof->update += omp_get_wtime() - t0;
            dt_next_global = std::min(dt_next_global, dtn);
            account_download(p);
        }
    }

    led.steps += 1;
    time.dt_next = dt_next_global;
    return dt_next_global;
}

std::string ledger_csv_header() { return "step,strategy,uploads,downloads,scalar_uploads"; }

std::string ledger_csv_row(std::uint64_t step, TransferStrategy strategy,
                           const TransferLedger& ledger) {
    std::ostringstream os;
    std::uint64_t n = ledger.steps ? ledger.steps : 1;
    os << step << ',' << (strategy == TransferStrategy::skinny ? "skinny" : "full") << ','
       << ledger.uploads / n << ',' << ledger.downloads / n << ',' << ledger.scalar_uploads / n;
    return os.str();
}

}  // namespace hydro
