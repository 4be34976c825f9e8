#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hydro {

enum class Axis { x = 0, y = 1, z = 2 };

// Ghost-layer width needed by the stencils of a given spatial order.
inline int ghost_for_order(int order) {
    if (order == 2) return 2;
    if (order == 3) return 3;
    throw std::invalid_argument("unsupported order " + std::to_string(order));
}

// Number of per-zone modes carried at a given spatial order.
// Order 2: [avg, x, y, z, time].
// Order 3: [avg, x, y, z, xx, yy, zz, xy, yz, zx, time].
// The temporal mode is always the last one.
inline int modes_for_order(int order) {
    if (order == 2) return 5;
    if (order == 3) return 11;
    throw std::invalid_argument("unsupported order " + std::to_string(order));
}

constexpr int NVAR = 5;  // density, x/y/z-momentum, total energy

// Geometry of one structured patch: active zone counts, ghost width,
// zone extents and the physical coordinate of the low corner of the
// first active zone.
struct PatchGeometry {
    int nx = 0, ny = 0, nz = 0;
    int ghost = 2;
    double dx = 0.0, dy = 0.0, dz = 0.0;
    std::array<double, 3> origin = {0.0, 0.0, 0.0};

    int mx() const { return nx + 2 * ghost; }  // total zones along x
    int my() const { return ny + 2 * ghost; }
    int mz() const { return nz + 2 * ghost; }

    // Physical coordinates of the zone center; i/j/k are active indices
    // (0-based; ghosts use negative values or >= n).
    double xc(int i) const { return origin[0] + (i + 0.5) * dx; }
    double yc(int j) const { return origin[1] + (j + 0.5) * dy; }
    double zc(int k) const { return origin[2] + (k + 0.5) * dz; }

    double spacing(Axis a) const {
        return a == Axis::x ? dx : (a == Axis::y ? dy : dz);
    }
    int active(Axis a) const {
        return a == Axis::x ? nx : (a == Axis::y ? ny : nz);
    }

    void validate() const {
        if (nx < 4 || ny < 4 || nz < 4)
            throw std::invalid_argument("patch must have at least 4 zones per axis");
        if (dx <= 0.0 || dy <= 0.0 || dz <= 0.0)
            throw std::invalid_argument("zone extents must be positive");
        if (ghost < 2)
            throw std::invalid_argument("ghost width must be at least 2");
    }
};

inline PatchGeometry make_geometry(int nx, int ny, int nz, int order,
                                   std::array<double, 3> lo, std::array<double, 3> hi) {
    PatchGeometry g;
    g.nx = nx;
    g.ny = ny;
    g.nz = nz;
    g.ghost = ghost_for_order(order);
    g.dx = (hi[0] - lo[0]) / nx;
    g.dy = (hi[1] - lo[1]) / ny;
    g.dz = (hi[2] - lo[2]) / nz;
    g.origin = lo;
    g.validate();
    return g;
}

inline std::int64_t zone_count(const PatchGeometry& g, bool include_ghost) {
    if (include_ghost)
        return std::int64_t(g.mx()) * g.my() * g.mz();
    return std::int64_t(g.nx) * g.ny * g.nz;
}

}  // namespace hydro
