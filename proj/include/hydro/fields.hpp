#pragma once

#include <cstddef>
#include <vector>

#include "hydro/geometry.hpp"

namespace hydro {

// Modal representation of the conserved variables over active+ghost zones.
// Storage is one contiguous block with the variable and mode indices
// innermost, so each zone's working set is a small contiguous slice.
// Zone indices below are storage indices in [0, m*); active zones occupy
// [ghost, ghost+n*).
struct ModalState {
    int mx = 0, my = 0, mz = 0;
    int modes = 0;
    std::vector<double> v;

    static ModalState make(const PatchGeometry& g, int order) {
        ModalState m;
        m.mx = g.mx();
        m.my = g.my();
        m.mz = g.mz();
        m.modes = modes_for_order(order);
        m.v.assign(std::size_t(m.mx) * m.my * m.mz * NVAR * m.modes, 0.0);
        return m;
    }

    std::size_t zone_offset(int k, int j, int i) const {
        return ((std::size_t(k) * my + j) * mx + i) * NVAR * modes;
    }
    double& at(int k, int j, int i, int q, int m) {
        return v[zone_offset(k, j, i) + std::size_t(q) * modes + m];
    }
    double at(int k, int j, int i, int q, int m) const {
        return v[zone_offset(k, j, i) + std::size_t(q) * modes + m];
    }
    double* zone(int k, int j, int i) { return v.data() + zone_offset(k, j, i); }
    const double* zone(int k, int j, int i) const { return v.data() + zone_offset(k, j, i); }

    int time_mode() const { return modes - 1; }
};

// Zone-centered conserved variables only; the unit of all patch-boundary
// transfer. Shape matches the mode-0 slice of the companion ModalState.
struct SkinnyState {
    int mx = 0, my = 0, mz = 0;
    std::vector<double> v;

    static SkinnyState make(const PatchGeometry& g) {
        SkinnyState s;
        s.mx = g.mx();
        s.my = g.my();
        s.mz = g.mz();
        s.v.assign(std::size_t(s.mx) * s.my * s.mz * NVAR, 0.0);
        return s;
    }

    std::size_t zone_offset(int k, int j, int i) const {
        return ((std::size_t(k) * my + j) * mx + i) * NVAR;
    }
    double& at(int k, int j, int i, int q) { return v[zone_offset(k, j, i) + q]; }
    double at(int k, int j, int i, int q) const { return v[zone_offset(k, j, i) + q]; }
    double* zone(int k, int j, int i) { return v.data() + zone_offset(k, j, i); }
    const double* zone(int k, int j, int i) const { return v.data() + zone_offset(k, j, i); }
};

// Face-centered numerical fluxes for one axis. The field has one more face
// than zones along its own axis and covers the active range transversally.
// Face f along the axis is the low face of active zone f, so zone a is
// bounded by faces a and a+1.
struct FaceFlux {
    Axis axis = Axis::x;
    int n0 = 0, n1 = 0, n2 = 0;  // extents: [n2][n1][n0] with n0 = faces along axis... see make()
    std::vector<double> v;

    // Layout: x-axis: [nz][ny][nx+1]; y-axis: [nz][nx][ny+1]; z-axis: [ny][nx][nz+1].
    // The face index runs innermost so sweeps along the axis are contiguous.
    static FaceFlux make(const PatchGeometry& g, Axis a) {
        FaceFlux f;
        f.axis = a;
        switch (a) {
            case Axis::x: f.n2 = g.nz; f.n1 = g.ny; f.n0 = g.nx + 1; break;
            case Axis::y: f.n2 = g.nz; f.n1 = g.nx; f.n0 = g.ny + 1; break;
            case Axis::z: f.n2 = g.ny; f.n1 = g.nx; f.n0 = g.nz + 1; break;
        }
        f.v.assign(std::size_t(f.n2) * f.n1 * f.n0 * NVAR, 0.0);
        return f;
    }

    std::size_t offset(int c2, int c1, int f) const {
        return ((std::size_t(c2) * n1 + c1) * n0 + f) * NVAR;
    }
    double* face(int c2, int c1, int f) { return v.data() + offset(c2, c1, f); }
    const double* face(int c2, int c1, int f) const { return v.data() + offset(c2, c1, f); }
};

struct FluxSet {
    FaceFlux fx, fy, fz;
    static FluxSet make(const PatchGeometry& g) {
        return FluxSet{FaceFlux::make(g, Axis::x), FaceFlux::make(g, Axis::y),
                       FaceFlux::make(g, Axis::z)};
    }
};

// Accumulated per-step change of the zone averages over active zones only.
// Stores dt * (rate), not the rate itself, so the update is a bare addition.
struct RateField {
    int nx = 0, ny = 0, nz = 0;
    std::vector<double> v;

    static RateField make(const PatchGeometry& g) {
        RateField r;
        r.nx = g.nx;
        r.ny = g.ny;
        r.nz = g.nz;
        r.v.assign(std::size_t(r.nx) * r.ny * r.nz * NVAR, 0.0);
        return r;
    }
    std::size_t zone_offset(int k, int j, int i) const {
        return ((std::size_t(k) * ny + j) * nx + i) * NVAR;
    }
    double& at(int k, int j, int i, int q) { return v[zone_offset(k, j, i) + q]; }
    double at(int k, int j, int i, int q) const { return v[zone_offset(k, j, i) + q]; }
    double* zone(int k, int j, int i) { return v.data() + zone_offset(k, j, i); }
    const double* zone(int k, int j, int i) const { return v.data() + zone_offset(k, j, i); }
};

struct TimeState {
    double dt = 0.0;
    double dt_next = 0.0;
    double cfl = 0.6;
    double t = 0.0;
};

// Copies skinny into mode 0 of modal at every zone (active and ghost);
// all other modes are untouched.
void skinny_to_modal(const SkinnyState& skinny, ModalState& modal);

// Copies mode 0 of modal back into skinny at every active zone. Ghost
// entries of skinny keep whatever the boundary fill last wrote.
void modal_to_skinny(const ModalState& modal, const PatchGeometry& g, SkinnyState& skinny);

void require_compatible(const SkinnyState& s, const ModalState& m);

}  // namespace hydro
