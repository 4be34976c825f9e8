#include "hydro/boundary.hpp"

namespace hydro {

namespace {

inline int map_index(int a, int n, BoundaryKind kind) {
    if (kind == BoundaryKind::periodic) return ((a % n) + n) % n;
    return a < 0 ? 0 : (a >= n ? n - 1 : a);  // outflow copy-out
}

// Fills ghosts with a per-zone copy callback; the x/y/z passes run in
// sequence so edges and corners pick up already-filled data.
template <typename Copy>
void fill_ghosts(const PatchGeometry& g, BoundaryKind kind, Copy copy) {
    const int gh = g.ghost;
    const int mx = g.mx(), my = g.my(), mz = g.mz();
    // x-ghosts, active transverse range
    for (int k = gh; k < gh + g.nz; ++k)
        for (int j = gh; j < gh + g.ny; ++j)
            for (int i = 0; i < mx; ++i) {
                if (i >= gh && i < gh + g.nx) continue;
                copy(k, j, i, k, j, gh + map_index(i - gh, g.nx, kind));
            }
    // y-ghosts, full x range
    for (int k = gh; k < gh + g.nz; ++k)
        for (int j = 0; j < my; ++j) {
            if (j >= gh && j < gh + g.ny) continue;
            int js = gh + map_index(j - gh, g.ny, kind);
            for (int i = 0; i < mx; ++i) copy(k, j, i, k, js, i);
        }
    // z-ghosts, full x/y range
    for (int k = 0; k < mz; ++k) {
        if (k >= gh && k < gh + g.nz) continue;
        int ks = gh + map_index(k - gh, g.nz, kind);
        for (int j = 0; j < my; ++j)
            for (int i = 0; i < mx; ++i) copy(k, j, i, ks, j, i);
    }
}

}  // namespace

void apply_boundary(SkinnyState& skinny, const PatchGeometry& g, BoundaryKind kind) {
    fill_ghosts(g, kind, [&](int k, int j, int i, int ks, int js, int is) {
        const double* src = skinny.zone(ks, js, is);
        double* dst = skinny.zone(k, j, i);
        for (int q = 0; q < NVAR; ++q) dst[q] = src[q];
    });
}

void apply_boundary(ModalState& modal, const PatchGeometry& g, BoundaryKind kind) {
    const int modes = modal.modes;
    fill_ghosts(g, kind, [&](int k, int j, int i, int ks, int js, int is) {
        const double* src = modal.zone(ks, js, is);
        double* dst = modal.zone(k, j, i);
        for (int q = 0; q < NVAR; ++q) dst[q * modes] = src[q * modes];
    });
}

}  // namespace hydro
